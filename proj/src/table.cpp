#include "rmt/table.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace rmt {

void DensityTable::add_column(std::string name, std::vector<double> values) {
    if (values.size() != abscissae.size())
        throw std::invalid_argument("DensityTable: column length mismatch");
    columns.emplace_back(std::move(name), std::move(values));
}

const std::vector<double>& DensityTable::column(const std::string& name) const {
    for (const auto& [n, v] : columns)
        if (n == name) return v;
    throw std::out_of_range("DensityTable: no column named " + name);
}

double DensityTable::trapezoid_exact() const {
    double acc = 0.0;
    for (std::size_t i = 1; i < abscissae.size(); ++i)
        acc += 0.5 * (exact[i] + exact[i - 1]) * (abscissae[i] - abscissae[i - 1]);
    return acc;
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void DensityTable::write_csv(std::ostream& os) const {
    os << "x," << exact_name;
    for (const auto& [name, unused] : columns) os << ',' << name;
    os << '\n';
    for (std::size_t i = 0; i < abscissae.size(); ++i) {
        os << format_double(abscissae[i]) << ',' << format_double(exact[i]);
        for (const auto& [name, vals] : columns) os << ',' << format_double(vals[i]);
        os << '\n';
    }
}

std::string DensityTable::to_csv() const {
    std::ostringstream ss;
    write_csv(ss);
    return ss.str();
}

DensityTable DensityTable::from_csv(std::istream& is) {
    DensityTable out;
    std::string line;
    if (!std::getline(is, line)) throw std::invalid_argument("empty CSV");
    std::vector<std::string> names;
    {
        std::stringstream header(line);
        std::string cell;
        while (std::getline(header, cell, ',')) names.push_back(cell);
    }
    if (names.size() < 2 || (names[0] != "x" && names[0] != "xi"))
        throw std::invalid_argument("CSV header must start with an x column");
    out.exact_name = names[1];
    std::vector<std::vector<double>> extra(names.size() - 2);
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::stringstream row(line);
        std::string cell;
        std::size_t idx = 0;
        while (std::getline(row, cell, ',')) {
            double v = std::strtod(cell.c_str(), nullptr);
            if (idx == 0)
                out.abscissae.push_back(v);
            else if (idx == 1)
                out.exact.push_back(v);
            else if (idx - 2 < extra.size())
                extra[idx - 2].push_back(v);
            ++idx;
        }
        if (idx != names.size())
            throw std::invalid_argument("CSV row width mismatch");
    }
    for (std::size_t c = 0; c < extra.size(); ++c)
        out.columns.emplace_back(names[c + 2], std::move(extra[c]));
    return out;
}

std::vector<double> linspace(double start, double stop, int count) {
    if (count < 2) throw std::invalid_argument("linspace: count must be >= 2");
    if (!(start < stop)) throw std::invalid_argument("linspace: need start < stop");
    std::vector<double> out(count);
    for (int i = 0; i < count; ++i)
        out[i] = start + (stop - start) * i / (count - 1);
    out.back() = stop;
    return out;
}

} // namespace rmt
