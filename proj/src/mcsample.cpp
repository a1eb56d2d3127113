#include "rmt/mcsample.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace rmt::mcsample {

namespace {
constexpr double kPi = 3.14159265358979323846;

std::uint64_t splitmix(std::uint64_t& s) {
    s += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}
} // namespace

std::uint64_t Rng::next_u64() { return splitmix(state_); }

double Rng::uniform() {
    // 53-bit mantissa, strictly inside (0, 1)
    return (double(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double Rng::normal(double stddev) {
    if (have_spare_) {
        have_spare_ = false;
        return spare_ * stddev;
    }
    double u = uniform(), v = uniform();
    double r = std::sqrt(-2.0 * std::log(u));
    have_spare_ = true;
    spare_ = r * std::sin(2.0 * kPi * v);
    return r * std::cos(2.0 * kPi * v) * stddev;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    std::uint64_t s = base ^ (0x9e3779b97f4a7c15ull * (index + 1));
    splitmix(s);
    return s;
}

namespace {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using cpx = std::complex<double>;

std::vector<double> real_sym_eigenvalues(const MatrixXd& m) {
    Eigen::SelfAdjointEigenSolver<MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw NumericsError("sample_spectrum: eigensolver failed to converge");
    return {solver.eigenvalues().data(),
            solver.eigenvalues().data() + solver.eigenvalues().size()};
}

std::vector<double> hermitian_eigenvalues(const MatrixXcd& m) {
    Eigen::SelfAdjointEigenSolver<MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw NumericsError("sample_spectrum: eigensolver failed to converge");
    return {solver.eigenvalues().data(),
            solver.eigenvalues().data() + solver.eigenvalues().size()};
}

// Kramers pairing: collapse 2N doubled eigenvalues to N.
std::vector<double> dedup_pairs(const std::vector<double>& ev) {
    std::vector<double> out;
    out.reserve(ev.size() / 2);
    for (std::size_t i = 0; i + 1 < ev.size(); i += 2) {
        double a = ev[i], b = ev[i + 1];
        double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
        if (std::fabs(a - b) > 1e-8 * scale)
            throw NumericsError(
                "sample_spectrum: Kramers pair split beyond tolerance");
        out.push_back(0.5 * (a + b));
    }
    return out;
}

MatrixXd gaussian_real(Rng& rng, int n, int m, double sd) {
    MatrixXd a(n, m);
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < n; ++i) a(i, j) = rng.normal(sd);
    return a;
}

MatrixXcd gaussian_complex(Rng& rng, int n, int m, double sd) {
    MatrixXcd a(n, m);
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < n; ++i) {
            double re = rng.normal(sd);
            double im = rng.normal(sd);
            a(i, j) = cpx(re, im);
        }
    return a;
}

// 2x2 complex block of a quaternion q0 + q1 i + q2 j + q3 k.
void put_quaternion(MatrixXcd& m, int i, int j, double q0, double q1, double q2,
                    double q3) {
    m(2 * i, 2 * j) = cpx(q0, q1);
    m(2 * i, 2 * j + 1) = cpx(q2, q3);
    m(2 * i + 1, 2 * j) = cpx(-q2, q3);
    m(2 * i + 1, 2 * j + 1) = cpx(q0, -q1);
}

std::vector<double> sample_goe(Rng& rng, int N) {
    MatrixXd a = gaussian_real(rng, N, N, 1.0);
    MatrixXd m = 0.5 * (a + a.transpose());
    return real_sym_eigenvalues(m);  // OE_N(e^{-x^2/2})
}

std::vector<double> sample_gue(Rng& rng, int N) {
    MatrixXcd b = gaussian_complex(rng, N, N, 1.0 / std::sqrt(2.0));
    MatrixXcd m = 0.5 * (b + b.adjoint());
    return hermitian_eigenvalues(m);  // UE_N(e^{-x^2})
}

std::vector<double> sample_gse(Rng& rng, int N) {
    // quaternion-Hermitian: real diagonal, quaternion off-diagonal entries;
    // variances give Ev(M) = SE_N(e^{-2x^2}); rescaled to the e^{-x^2} weight.
    MatrixXcd m = MatrixXcd::Zero(2 * N, 2 * N);
    for (int i = 0; i < N; ++i)
        put_quaternion(m, i, i, rng.normal(0.5), 0.0, 0.0, 0.0);
    double sd = 0.5 / std::sqrt(2.0);
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) {
            double q0 = rng.normal(sd), q1 = rng.normal(sd);
            double q2 = rng.normal(sd), q3 = rng.normal(sd);
            put_quaternion(m, i, j, q0, q1, q2, q3);
            put_quaternion(m, j, i, q0, -q1, -q2, -q3);
        }
    std::vector<double> ev = dedup_pairs(hermitian_eigenvalues(m));
    for (double& x : ev) x *= std::sqrt(2.0);  // e^{-2x^2} -> e^{-x^2}
    return ev;
}

int wishart_rows(const EnsembleSpec& spec) {
    double shift = spec.beta == 4 ? spec.alpha / 2.0 : spec.alpha;
    int k = int(std::lround(shift));
    if (std::fabs(shift - k) > 1e-12 || k < 0)
        throw std::invalid_argument(
            "sample_spectrum: Laguerre alpha must be a nonnegative integer "
            "(even integer for beta = 4) to admit a Wishart construction");
    return spec.N + k;
}

std::vector<double> sample_loe(Rng& rng, const EnsembleSpec& spec) {
    int n = wishart_rows(spec);
    MatrixXd b = gaussian_real(rng, n, spec.N, 1.0);
    MatrixXd w = b.transpose() * b;  // OE_N(x^{(a-1)/2} e^{-x/2}), a = n - N
    return real_sym_eigenvalues(w);
}

std::vector<double> sample_lue(Rng& rng, const EnsembleSpec& spec) {
    int n = wishart_rows(spec);
    MatrixXcd a = gaussian_complex(rng, n, spec.N, 1.0 / std::sqrt(2.0));
    MatrixXcd w = a.adjoint() * a;  // UE_N(x^a e^{-x}), a = n - N
    return hermitian_eigenvalues(w);
}

std::vector<double> sample_lse(Rng& rng, const EnsembleSpec& spec) {
    int n = wishart_rows(spec);
    int N = spec.N;
    double sd = 1.0 / std::sqrt(2.0);
    MatrixXcd a(2 * n, 2 * N);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < N; ++j) {
            double q0 = rng.normal(sd), q1 = rng.normal(sd);
            double q2 = rng.normal(sd), q3 = rng.normal(sd);
            a(2 * i, 2 * j) = cpx(q0, q1);
            a(2 * i, 2 * j + 1) = cpx(q2, q3);
            a(2 * i + 1, 2 * j) = cpx(-q2, q3);
            a(2 * i + 1, 2 * j + 1) = cpx(q0, -q1);
        }
    MatrixXcd w = a.adjoint() * a;  // SE_N(x^{a+1} e^{-x}), a = 2(n - N)
    return dedup_pairs(hermitian_eigenvalues(w));
}

} // namespace

SpectrumSample sample_spectrum(const EnsembleSpec& spec, std::uint64_t seed) {
    spec.validate();
    if (spec.N > 512)
        throw std::invalid_argument("sample_spectrum: N > 512 is out of scope");
    Rng rng(seed);
    SpectrumSample out;
    out.spec = spec;
    out.seed = seed;
    if (spec.family == Family::gaussian) {
        if (spec.beta == 1) {
            out.construction = Construction::dense_real;
            out.eigenvalues = sample_goe(rng, spec.N);
        } else if (spec.beta == 2) {
            out.construction = Construction::dense_complex;
            out.eigenvalues = sample_gue(rng, spec.N);
        } else {
            out.construction = Construction::dense_quaternion_as_2x2;
            out.eigenvalues = sample_gse(rng, spec.N);
        }
    } else {
        if (spec.beta == 1) {
            out.construction = Construction::wishart_real;
            out.eigenvalues = sample_loe(rng, spec);
        } else if (spec.beta == 2) {
            out.construction = Construction::wishart_complex;
            out.eigenvalues = sample_lue(rng, spec);
        } else {
            out.construction = Construction::wishart_quaternion;
            out.eigenvalues = sample_lse(rng, spec);
        }
        for (double& x : out.eigenvalues) {
            if (x < -1e-10)
                throw NumericsError("sample_spectrum: negative Wishart eigenvalue");
            x = std::max(x, 0.0);
        }
    }
    std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
    return out;
}

std::vector<SpectrumSample> sample_many(const EnsembleSpec& spec,
                                        std::uint64_t seed, int count) {
    std::vector<SpectrumSample> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i)
        out.push_back(sample_spectrum(spec, derive_seed(seed, i)));
    return out;
}

DensityTable empirical_density(const std::vector<SpectrumSample>& samples, int bins) {
    if (samples.empty()) throw std::invalid_argument("empirical_density: no samples");
    if (bins < 10) throw std::invalid_argument("empirical_density: bins >= 10");
    const EnsembleSpec& spec = samples.front().spec;
    for (const auto& s : samples)
        if (s.spec.beta != spec.beta || s.spec.family != spec.family ||
            s.spec.N != spec.N || s.spec.alpha != spec.alpha)
            throw std::invalid_argument("empirical_density: mixed specs");
    double scale = exactdens::bulk_scale(spec);
    double lo = 1e300, hi = -1e300;
    for (const auto& s : samples)
        for (double x : s.eigenvalues) {
            lo = std::min(lo, x / scale);
            hi = std::max(hi, x / scale);
        }
    double width = (hi - lo) / bins;
    if (!(width > 0)) throw std::invalid_argument("empirical_density: degenerate data");
    std::vector<double> count(bins, 0.0);
    double total = 0.0;
    for (const auto& s : samples)
        for (double x : s.eigenvalues) {
            int b = std::min(bins - 1, int((x / scale - lo) / width));
            count[b] += 1.0;
            total += 1.0;
        }
    DensityTable t;
    t.spec = spec;
    t.spec.scaling = Scaling::bulk;
    double nsamp = double(samples.size());
    std::vector<double> density(bins), err(bins);
    for (int b = 0; b < bins; ++b) {
        t.abscissae.push_back(lo + (b + 0.5) * width);
        density[b] = count[b] / (nsamp * width);
        double p = count[b] / total;
        err[b] = std::sqrt(count[b] * (1.0 - p)) / (nsamp * width);
    }
    t.exact = density;  // histogram density in the exact column position
    t.add_column("count", count);
    t.add_column("stderr", err);
    return t;
}

} // namespace rmt::mcsample
