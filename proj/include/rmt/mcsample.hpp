#pragma once

#include <cstdint>
#include <vector>

#include "rmt/table.hpp"

// Monte Carlo cross-validation: sample spectra from the matrix definitions and
// compare empirical densities and moments against the exact densities.
//
// Eigenvalues are emitted in the same raw-weight conventions as exactdens, so
// x / bulk_scale(spec) lands on the bulk-scaled support. Laguerre parameters
// must be realizable by a Wishart shape: integer alpha for beta = 1, 2 and
// even integer alpha for beta = 4.

namespace rmt::mcsample {

enum class Construction {
    dense_real,
    dense_complex,
    dense_quaternion_as_2x2,
    wishart_real,
    wishart_complex,
    wishart_quaternion,
};

struct SpectrumSample {
    EnsembleSpec spec;
    std::vector<double> eigenvalues;  // sorted ascending, length N
    std::uint64_t seed = 0;
    Construction construction = Construction::dense_real;
};

// Deterministic normal sampler (splitmix64 + Box-Muller), so fixed seeds give
// bit-identical spectra independent of the standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next_u64();
    double uniform();  // in (0, 1)
    double normal(double stddev = 1.0);

private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

SpectrumSample sample_spectrum(const EnsembleSpec& spec, std::uint64_t seed);

std::vector<SpectrumSample> sample_many(const EnsembleSpec& spec,
                                        std::uint64_t seed, int count);

// Histogram of bulk-scaled eigenvalues; integral of the density column equals
// N by construction. Columns: count, density, stderr; abscissae are bin
// centers. All samples must share the spec.
DensityTable empirical_density(const std::vector<SpectrumSample>& samples, int bins);

} // namespace rmt::mcsample
