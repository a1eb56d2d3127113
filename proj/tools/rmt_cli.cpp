// Command-line front end: CSV/JSON tables for exact densities, asymptotic
// expansions, matching reports, moments, Monte Carlo histograms, and the
// soft-edge comparison figure data.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rmt/bulk.hpp"
#include "rmt/edge.hpp"
#include "rmt/exactdens.hpp"
#include "rmt/linstat.hpp"
#include "rmt/matching.hpp"
#include "rmt/mcsample.hpp"
#include "rmt/table.hpp"

namespace {

constexpr const char* kVersion = "rmtdens 1.0.0";

struct Grid {
    double start = -0.9;
    double stop = 0.9;
    int count = 101;
};

Grid parse_grid(const std::string& text) {
    Grid g;
    char c1, c2;
    std::istringstream in(text);
    if (!(in >> g.start >> c1 >> g.stop >> c2 >> g.count) || c1 != ':' ||
        c2 != ':' || g.count < 2 || !(g.start < g.stop))
        throw CLI::ValidationError(
            "grid", "expected start:stop:count with start < stop, count >= 2");
    return g;
}

struct Output {
    std::string path;     // empty = stdout
    std::string format;   // csv | json

    void write(const std::string& body) const {
        if (path.empty()) {
            std::cout << body;
            return;
        }
        std::ofstream os(path);
        if (!os) throw std::runtime_error("cannot open output file: " + path);
        os << body;
    }
};

std::string table_to_string(const rmt::DensityTable& t, const Output& out,
                            const nlohmann::json& config) {
    if (out.format == "csv") return t.to_csv();
    nlohmann::json j;
    j["tool_version"] = kVersion;
    j["config"] = config;
    nlohmann::json res;
    res["x"] = t.abscissae;
    res[t.exact_name] = t.exact;
    for (const auto& [name, vals] : t.columns) res[name] = vals;
    j["results"] = res;
    j["warnings"] = nlohmann::json::array();
    return j.dump(2) + "\n";
}

rmt::EnsembleSpec spec_from_flags(const std::string& ensemble, int n, double alpha,
                                  const std::string& scaling) {
    rmt::Scaling s = scaling == "raw"    ? rmt::Scaling::raw
                     : scaling == "bulk" ? rmt::Scaling::bulk
                                         : rmt::Scaling::edge;
    return rmt::make_spec(ensemble, n, alpha, s);
}

int run_density(const rmt::EnsembleSpec& spec, const Grid& grid, const Output& out,
                const nlohmann::json& config) {
    rmt::DensityTable t;
    t.spec = spec;
    t.abscissae = rmt::linspace(grid.start, grid.stop, grid.count);
    for (double x : t.abscissae)
        t.exact.push_back(rmt::exactdens::scaled_density(spec, x));
    out.write(table_to_string(t, out, config));
    return 0;
}

int run_bulk_compare(const rmt::EnsembleSpec& spec, const Grid& grid, int order,
                     const Output& out, const nlohmann::json& config) {
    rmt::EnsembleSpec bulk_spec = spec;
    bulk_spec.scaling = rmt::Scaling::bulk;
    rmt::DensityTable t;
    t.spec = bulk_spec;
    t.abscissae = rmt::linspace(grid.start, grid.stop, grid.count);
    std::vector<double> asym, resid;
    for (double x : t.abscissae) {
        double ex = rmt::exactdens::scaled_density(bulk_spec, x) / spec.N;
        rmt::bulk::ExpansionValue v = rmt::bulk::bulk_expansion(bulk_spec, x);
        double ap = order >= 0 ? v.order_sum(order) : v.total;
        t.exact.push_back(ex);
        asym.push_back(ap);
        resid.push_back(ex - ap);
    }
    t.add_column("asymptotic", asym);
    t.add_column("residual", resid);
    out.write(table_to_string(t, out, config));
    return 0;
}

int run_edge_compare(const rmt::EnsembleSpec& spec, const Grid& grid,
                     const Output& out, const nlohmann::json& config) {
    rmt::EnsembleSpec es = spec;
    es.scaling = rmt::Scaling::edge;
    rmt::DensityTable t;
    t.spec = es;
    t.abscissae = rmt::linspace(grid.start, grid.stop, grid.count);
    std::vector<double> asym, resid;
    for (double xi : t.abscissae) {
        double ex = rmt::exactdens::scaled_density(es, xi);
        double ap = rmt::edge::edge_expansion(es, xi).total;
        t.exact.push_back(ex);
        asym.push_back(ap);
        resid.push_back(ex - ap);
    }
    t.add_column("asymptotic", asym);
    t.add_column("residual", resid);
    out.write(table_to_string(t, out, config));
    return 0;
}

int run_fig1(const Output& out, const nlohmann::json& config) {
    // soft-edge comparison for the symplectic Laguerre ensemble, N=20, a=1/2
    rmt::EnsembleSpec spec = rmt::make_spec("lse", 20, 0.5, rmt::Scaling::edge);
    rmt::DensityTable t;
    t.spec = spec;
    t.exact_name = "exact";
    t.abscissae = rmt::linspace(-4.0, 4.0, 161);
    std::vector<double> asym;
    for (double xi : t.abscissae) {
        t.exact.push_back(rmt::exactdens::scaled_density(spec, xi));
        asym.push_back(rmt::edge::edge_expansion(spec, xi).total);
    }
    t.add_column("asymptotic", asym);
    std::string body = table_to_string(t, out, config);
    // fig1 uses the xi,exact,asymptotic header
    if (out.format == "csv") {
        body = t.to_csv();
        body.replace(0, body.find('\n'), "xi,exact,asymptotic");
    }
    out.write(body);
    return 0;
}

int run_match_report(const rmt::EnsembleSpec& spec, const Output& out) {
    std::vector<double> xis = {-4.0, -6.0, -8.0, -10.0};
    std::vector<int> ns = {64, 256, 1024};
    rmt::matching::MatchReport rep = rmt::matching::match_report(spec, xis, ns);
    out.write(rep.to_json() + "\n");
    return 0;
}

int run_moments(const rmt::EnsembleSpec& spec, const std::string& which,
                double rel_tol, const Output& out, const nlohmann::json& config) {
    int power = 2;
    if (which == "x0") power = 0;
    else if (which == "x1") power = 1;
    else if (which == "x2") power = 2;
    else if (which == "x4") power = 4;
    else throw CLI::ValidationError("a", "supported test functions: x0,x1,x2,x4");
    rmt::linstat::TestFunction a = rmt::linstat::monomial(power);
    double stat = rmt::linstat::linear_statistic(spec, a, rel_tol);
    nlohmann::json j;
    j["tool_version"] = kVersion;
    j["config"] = config;
    j["results"] = {{"statistic", stat}};
    if (spec.family == rmt::Family::gaussian)
        j["results"]["smoothed_prediction"] = rmt::linstat::smoothed_prediction(spec, a);
    j["warnings"] = nlohmann::json::array();
    if (out.format == "csv") {
        std::ostringstream ss;
        ss << "statistic\n" << rmt::format_double(stat) << "\n";
        out.write(ss.str());
    } else {
        out.write(j.dump(2) + "\n");
    }
    return 0;
}

int run_mc(const rmt::EnsembleSpec& spec, std::uint64_t seed, int samples, int bins,
           const Output& out, const nlohmann::json& config) {
    auto draws = rmt::mcsample::sample_many(spec, seed, samples);
    rmt::DensityTable t = rmt::mcsample::empirical_density(draws, bins);
    t.exact_name = "density";
    if (out.format == "csv") {
        // header x,count,density,stderr
        std::ostringstream ss;
        ss << "x,count,density,stderr\n";
        const auto& count = t.column("count");
        const auto& err = t.column("stderr");
        for (std::size_t i = 0; i < t.rows(); ++i)
            ss << rmt::format_double(t.abscissae[i]) << ','
               << rmt::format_double(count[i]) << ','
               << rmt::format_double(t.exact[i]) << ','
               << rmt::format_double(err[i]) << '\n';
        out.write(ss.str());
        return 0;
    }
    out.write(table_to_string(t, out, config));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact finite-N random-matrix eigenvalue densities and their "
                 "bulk/soft-edge asymptotics"};
    app.require_subcommand(1);

    std::string ensemble = "gue", scaling = "bulk", grid_text = "-0.9:0.9:181";
    std::string output_path, format = "csv", testfn = "x2";
    int n = 8, order = -1, samples = 1000, bins = 40;
    double alpha = 0.0, rel_tol = 1e-9;
    std::uint64_t seed = 20260809ull;

    auto add_common = [&](CLI::App* cmd, bool with_grid = true) {
        cmd->add_option("--ensemble", ensemble, "goe,gue,gse,loe,lue,lse")
            ->check(CLI::IsMember({"goe", "gue", "gse", "loe", "lue", "lse"}));
        cmd->add_option("--n", n, "matrix size N")->check(CLI::PositiveNumber);
        cmd->add_option("--alpha", alpha, "Laguerre parameter");
        cmd->add_option("--scaling", scaling, "raw,bulk,edge")
            ->check(CLI::IsMember({"raw", "bulk", "edge"}));
        if (with_grid) cmd->add_option("--grid", grid_text, "start:stop:count");
        cmd->add_option("--out", output_path, "output path (default stdout)");
        cmd->add_option("--format", format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
    };

    CLI::App* density = app.add_subcommand("density", "exact density table");
    add_common(density);
    CLI::App* bulkc = app.add_subcommand("bulk-compare",
                                         "exact vs bulk expansion (per N units)");
    add_common(bulkc);
    bulkc->add_option("--order", order, "truncate expansion at this 1/N order");
    CLI::App* edgec = app.add_subcommand("edge-compare",
                                         "edge-scaled exact vs Airy expansion");
    add_common(edgec);
    CLI::App* matchc = app.add_subcommand("match-report",
                                          "bulk-to-edge matching residual report");
    add_common(matchc, false);
    CLI::App* moments = app.add_subcommand("moments", "linear statistic of a test function");
    add_common(moments, false);
    moments->add_option("--a", testfn, "test function: x0,x1,x2,x4");
    moments->add_option("--rel-tol", rel_tol, "quadrature tolerance override")
        ->check(CLI::PositiveNumber);
    CLI::App* mc = app.add_subcommand("mc", "Monte Carlo spectra histogram");
    add_common(mc, false);
    mc->add_option("--seed", seed, "base RNG seed");
    mc->add_option("--samples", samples, "number of spectra")->check(CLI::PositiveNumber);
    mc->add_option("--bins", bins, "histogram bins")->check(CLI::Range(10, 100000));
    CLI::App* fig1 = app.add_subcommand(
        "fig1", "soft-edge comparison data for the N=20, alpha=1/2 symplectic "
                "Laguerre ensemble");
    fig1->add_option("--out", output_path, "output path (default stdout)");
    fig1->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    CLI11_PARSE(app, argc, argv);

    Output out;
    out.path = output_path;
    out.format = format;

    nlohmann::json config = {{"ensemble", ensemble}, {"n", n},     {"alpha", alpha},
                             {"scaling", scaling},   {"seed", seed}};

    try {
        if (fig1->parsed()) {
            config = {{"command", "fig1"}};
            return run_fig1(out, config);
        }
        Grid grid = parse_grid(grid_text);
        rmt::EnsembleSpec spec = spec_from_flags(ensemble, n, alpha, scaling);
        if (density->parsed()) {
            config["command"] = "density";
            return run_density(spec, grid, out, config);
        }
        if (bulkc->parsed()) {
            config["command"] = "bulk-compare";
            config["order"] = order;
            return run_bulk_compare(spec, grid, order, out, config);
        }
        if (edgec->parsed()) {
            config["command"] = "edge-compare";
            return run_edge_compare(spec, grid, out, config);
        }
        if (matchc->parsed()) {
            config["command"] = "match-report";
            return run_match_report(spec, out);
        }
        if (moments->parsed()) {
            config["command"] = "moments";
            config["a"] = testfn;
            config["rel_tol"] = rel_tol;
            rmt::EnsembleSpec ms = spec;
            ms.scaling = rmt::Scaling::bulk;
            return run_moments(ms, testfn, rel_tol, out, config);
        }
        if (mc->parsed()) {
            config["command"] = "mc";
            config["samples"] = samples;
            config["bins"] = bins;
            return run_mc(spec, seed, samples, bins, out, config);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid configuration: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid configuration: " << e.what() << "\n";
        return 2;
    } catch (const rmt::NumericsError& e) {
        std::cerr << "numerical non-convergence: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
