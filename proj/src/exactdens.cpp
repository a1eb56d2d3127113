#include "rmt/exactdens.hpp"

#include <cmath>
#include <stdexcept>

namespace rmt {

namespace sf = specfun;

void EnsembleSpec::validate() const {
    if (beta != 1 && beta != 2 && beta != 4)
        throw std::invalid_argument("EnsembleSpec: beta must be 1, 2 or 4");
    if (N < 1) throw std::invalid_argument("EnsembleSpec: N must be positive");
    if (beta == 1 && N % 2 != 0)
        throw std::invalid_argument(
            "EnsembleSpec: beta = 1 requires even N (the orthogonal-ensemble "
            "density formula assumes it)");
    if (family == Family::laguerre && alpha <= -1.0)
        throw std::invalid_argument("EnsembleSpec: alpha must be > -1");
    if (family == Family::gaussian && alpha != 0.0)
        throw std::invalid_argument("EnsembleSpec: alpha is a Laguerre parameter");
}

std::string EnsembleSpec::label() const {
    std::string mid = (beta == 1) ? "o" : (beta == 2) ? "u" : "s";
    return (family == Family::gaussian ? "g" : "l") + mid + std::string("e");
}

EnsembleSpec make_spec(const std::string& label, int N, double alpha, Scaling scaling) {
    EnsembleSpec s;
    s.N = N;
    s.scaling = scaling;
    if (label.size() != 3 || label[2] != 'e')
        throw std::invalid_argument("unknown ensemble label: " + label);
    if (label[0] == 'g')
        s.family = Family::gaussian;
    else if (label[0] == 'l') {
        s.family = Family::laguerre;
        s.alpha = alpha;
    } else
        throw std::invalid_argument("unknown ensemble label: " + label);
    s.beta = (label[1] == 'o') ? 1 : (label[1] == 'u') ? 2 : (label[1] == 's') ? 4 : 0;
    s.validate();
    return s;
}

namespace exactdens {

namespace {

constexpr double kPi = 3.14159265358979323846;

// int_0^x psi_{n}(t) dt with oscillation-aware panels.
double hermite_incomplete(int n, double x) {
    if (x == 0.0) return 0.0;
    sf::QuadratureSpec spec;
    spec.oscillation_scale = sf::hermite_wavelength(n);
    spec.max_subdivisions = 4000;
    double lo = std::min(0.0, x), hi = std::max(0.0, x);
    double v = sf::integrate([n](double t) { return sf::hermite_fn(n, t); }, lo, hi, spec);
    return x > 0 ? v : -v;
}

// int_a^b t^{-1/2} phi_n(t) dt, a >= 0, Laguerre-wavelength panels.
double laguerre_weighted_integral(int n, double alpha, double a, double b) {
    if (b <= a) return 0.0;
    auto f = [n, alpha](double t) {
        return t <= 0.0 ? 0.0 : sf::laguerre_fn(n, alpha, t) / std::sqrt(t);
    };
    // wavelength shrinks toward t = 0; split the head geometrically
    double head = std::min(b, 1.0);
    double total = 0.0;
    sf::QuadratureSpec spec;
    spec.max_subdivisions = 6000;
    if (a < head) {
        sf::QuadratureSpec hs = spec;
        hs.oscillation_scale = sf::laguerre_wavelength(n, alpha, head);
        total += sf::integrate(f, a, head, hs);
    }
    double lo = std::max(a, head);
    while (lo < b) {
        double wav = sf::laguerre_wavelength(n, alpha, lo);
        double hi = std::min(b, lo + std::max(200.0 * wav, 1.0));
        sf::QuadratureSpec ps = spec;
        ps.oscillation_scale = wav;
        total += sf::integrate(f, lo, hi, ps);
        lo = hi;
    }
    return total;
}

double gaussian_tail_bound(int n) {  // psi_n negligible beyond this
    return std::sqrt(2.0 * n + 1.0) + 10.0;
}

double laguerre_tail_bound(int n, double alpha) {
    double tp = 4.0 * n + 2.0 * alpha + 2.0;
    return tp + 12.0 * std::cbrt(std::max(tp, 1.0)) + 30.0;
}

} // namespace

double density_ue(const EnsembleSpec& spec, double x) {
    if (spec.family == Family::gaussian)
        return sf::hermite_run(spec.N - 1, x).sum_sq;
    if (x < 0.0) throw std::domain_error("density_ue: laguerre requires x >= 0");
    return sf::laguerre_run(spec.N - 1, spec.alpha, x).sum_sq;
}

double density_oe_gaussian(int N, double x) {
    if (N < 2 || N % 2 != 0)
        throw std::invalid_argument(
            "density_oe_gaussian: N must be even (formula assumes even N)");
    sf::OrthoRun run = sf::hermite_run(N - 1, x);
    double ue = run.sum_sq - run.last * run.last;  // UE_{N-1}
    double corr = std::sqrt((N - 1.0) / 2.0) * run.last * hermite_incomplete(N - 2, x);
    return ue + corr;
}

double density_se_gaussian(int N, double x) {
    if (N < 1) throw std::invalid_argument("density_se_gaussian: N >= 1");
    sf::OrthoRun run = sf::hermite_run(2 * N, x);
    double ue2n = run.sum_sq - run.last * run.last;
    double hi = gaussian_tail_bound(2 * N);
    double tail = 0.0;
    if (x < hi) {
        sf::QuadratureSpec spec;
        spec.oscillation_scale = sf::hermite_wavelength(2 * N - 1);
        spec.max_subdivisions = 4000;
        tail = sf::integrate([N](double t) { return sf::hermite_fn(2 * N - 1, t); },
                             x, hi, spec);
    }
    return 0.5 * ue2n - 0.5 * std::sqrt(double(N)) * run.last * tail;
}

double density_se_gaussian_halfline_form(int N, double x) {
    if (N < 1) throw std::invalid_argument("density_se_gaussian: N >= 1");
    sf::OrthoRun run = sf::hermite_run(2 * N, x);
    double ue2n = run.sum_sq - run.last * run.last;
    double K = 0.5 * std::sqrt(double(N)) * sf::hermite_halfline_orthonormal(2 * N - 1);
    double inc = hermite_incomplete(2 * N - 1, x);
    return 0.5 * ue2n - run.last * (K - 0.5 * std::sqrt(double(N)) * inc);
}

double density_oe_laguerre(int N, double alpha, double x) {
    if (N < 2 || N % 2 != 0)
        throw std::invalid_argument("density_oe_laguerre: N must be even");
    if (x <= 0.0) throw std::domain_error("density_oe_laguerre: x must be > 0");
    sf::OrthoRun run = sf::laguerre_run(N - 1, alpha, x);
    double ue = run.sum_sq - run.last * run.last;  // UE_{N-1}
    double C = 0.25 * std::sqrt((N - 1.0) * (N - 1.0 + alpha));
    double J = sf::laguerre_halfline_orthonormal(N - 2, alpha);
    double inc = laguerre_weighted_integral(N - 2, alpha, 0.0, x);
    return ue + C / std::sqrt(x) * run.last * (J - 2.0 * inc);
}

double density_se_laguerre(int N, double alpha, double x) {
    if (N < 1) throw std::invalid_argument("density_se_laguerre: N >= 1");
    if (x <= 0.0) throw std::domain_error("density_se_laguerre: x must be > 0");
    sf::OrthoRun run = sf::laguerre_run(2 * N, alpha, x);
    double ue2n = run.sum_sq - run.last * run.last;
    double C = 0.25 * std::sqrt(2.0 * N * (2.0 * N + alpha));
    double inc = laguerre_weighted_integral(2 * N - 1, alpha, 0.0, x);
    return 0.5 * ue2n - C / std::sqrt(x) * run.last * inc;
}

double density_se_laguerre_tail(int N, double alpha, double x) {
    if (N < 1) throw std::invalid_argument("density_se_laguerre: N >= 1");
    if (x <= 0.0) throw std::domain_error("density_se_laguerre: x must be > 0");
    sf::OrthoRun run = sf::laguerre_run(2 * N, alpha, x);
    double ue2n = run.sum_sq - run.last * run.last;
    double C = 0.25 * std::sqrt(2.0 * N * (2.0 * N + alpha));
    double hi = laguerre_tail_bound(2 * N, alpha);
    double tail = x < hi ? laguerre_weighted_integral(2 * N - 1, alpha, x, hi) : 0.0;
    return 0.5 * ue2n + C / std::sqrt(x) * run.last * tail;
}

double density_raw(const EnsembleSpec& spec, double x) {
    spec.validate();
    if (spec.family == Family::gaussian) {
        if (spec.beta == 2) return density_ue(spec, x);
        if (spec.beta == 1) return density_oe_gaussian(spec.N, x);
        return density_se_gaussian(spec.N, x);
    }
    if (spec.beta == 2) return density_ue(spec, x);
    if (spec.beta == 1) return density_oe_laguerre(spec.N, spec.alpha, x);
    return density_se_laguerre_tail(spec.N, spec.alpha, x);
}

double bulk_scale(const EnsembleSpec& spec) {
    if (spec.family == Family::gaussian)
        return spec.beta == 4 ? 2.0 * std::sqrt(double(spec.N))
                              : std::sqrt(2.0 * spec.N);
    return spec.beta == 4 ? 8.0 * spec.N : 4.0 * spec.N;
}

double edge_raw_abscissa(const EnsembleSpec& spec, double xi) {
    double N = spec.N;
    if (spec.family == Family::gaussian) {
        if (spec.beta == 4)
            return 2.0 * std::sqrt(N) * (1.0 + xi / (2.0 * std::pow(2.0 * N, 2.0 / 3.0)));
        return std::sqrt(2.0 * N) * (1.0 + xi / (2.0 * std::pow(N, 2.0 / 3.0)));
    }
    if (spec.beta == 4) return 8.0 * N + 2.0 * std::cbrt(4.0 * N) * xi;
    return 4.0 * N + 2.0 * std::cbrt(2.0 * N) * xi;
}

double edge_normalization(const EnsembleSpec& spec) {
    double N = spec.N;
    if (spec.family == Family::gaussian) {
        if (spec.beta == 4)
            return 2.0 * std::sqrt(N) / std::pow(2.0 * N, 2.0 / 3.0);
        return std::sqrt(2.0 * N) / (2.0 * std::pow(N, 2.0 / 3.0));
    }
    if (spec.beta == 4) return 2.0 * 8.0 * N / std::pow(4.0 * N, 2.0 / 3.0);
    return 4.0 * N / std::pow(2.0 * N, 2.0 / 3.0);
}

double scaled_density(const EnsembleSpec& spec, double X) {
    if (spec.scaling == Scaling::raw) return density_raw(spec, X);
    if (spec.scaling == Scaling::bulk) {
        double c = bulk_scale(spec);
        double x = c * X;
        if (spec.family == Family::laguerre && x <= 0.0) return 0.0;
        return c * density_raw(spec, x);
    }
    double x = edge_raw_abscissa(spec, X);
    if (spec.family == Family::laguerre && x <= 0.0) return 0.0;
    return edge_normalization(spec) * density_raw(spec, x);
}

double raw_support_bound(const EnsembleSpec& spec) {
    int deg = (spec.beta == 4) ? 2 * spec.N : spec.N;
    if (spec.family == Family::gaussian) return gaussian_tail_bound(deg);
    return laguerre_tail_bound(deg, spec.alpha);
}

double chiral_density(const EnsembleSpec& laguerre_spec, double X) {
    if (laguerre_spec.family != Family::laguerre)
        throw std::invalid_argument("chiral_density: needs a Laguerre spec");
    if (X <= 0.0) return 0.0;
    EnsembleSpec bulk = laguerre_spec;
    bulk.scaling = Scaling::bulk;
    return 2.0 * X * scaled_density(bulk, X * X);
}

} // namespace exactdens
} // namespace rmt
