#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "rmt/exactdens.hpp"

namespace rmt {

// Grid of abscissae with an exact density column plus named extra columns
// (asymptotic orders, residuals). Serializes to CSV with 17-significant-digit
// decimals so values round-trip bit-exactly.
struct DensityTable {
    EnsembleSpec spec;
    std::vector<double> abscissae;
    std::vector<double> exact;
    std::string exact_name = "exact";  // header label of the value column
    std::vector<std::pair<std::string, std::vector<double>>> columns;

    std::size_t rows() const { return abscissae.size(); }
    void add_column(std::string name, std::vector<double> values);
    const std::vector<double>& column(const std::string& name) const;

    // Trapezoid integral of the exact column over the stored grid.
    double trapezoid_exact() const;

    void write_csv(std::ostream& os) const;
    std::string to_csv() const;

    // Parses a table written by write_csv (spec metadata is not stored in the
    // file and is left default).
    static DensityTable from_csv(std::istream& is);
};

// Shortest decimal that round-trips an IEEE double (17 significant digits).
std::string format_double(double v);

std::vector<double> linspace(double start, double stop, int count);

} // namespace rmt
