#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rmt/specfun.hpp"

using namespace rmt;
namespace sf = rmt::specfun;

namespace {
constexpr double kPi = 3.14159265358979323846;

double hermite_raw(int n, double x) {  // brute-force H_n for small n
    double h0 = 1.0, h1 = 2.0 * x;
    if (n == 0) return h0;
    for (int j = 1; j < n; ++j) {
        double h2 = 2.0 * x * h1 - 2.0 * j * h0;
        h0 = h1;
        h1 = h2;
    }
    return h1;
}

double laguerre_raw(int n, double a, double x) {
    double l0 = 1.0, l1 = 1.0 + a - x;
    if (n == 0) return l0;
    for (int j = 1; j < n; ++j) {
        double l2 = ((2.0 * j + 1.0 + a - x) * l1 - (j + a) * l0) / (j + 1.0);
        l0 = l1;
        l1 = l2;
    }
    return l1;
}
} // namespace

TEST_CASE("weighted Hermite values") {
    CHECK(sf::hermite_weighted(0, 1.3).full() ==
          doctest::Approx(std::exp(-0.845)).epsilon(1e-12));
    CHECK(sf::hermite_weighted(1, 0.0).full() == doctest::Approx(0.0).epsilon(1e-15));
    // H_4(x) = 16x^4 - 48x^2 + 12, expanded by hand at x = 2
    CHECK(sf::hermite_weighted(4, 2.0).full() ==
          doctest::Approx(76.0 * std::exp(-2.0)).epsilon(1e-12));
    // recombination reproduces the raw polynomial for small n
    for (int n = 0; n <= 10; ++n) {
        for (double x : {-2.3, 0.4, 1.9}) {
            double want = std::exp(-x * x / 2.0) * hermite_raw(n, x);
            CHECK(sf::hermite_weighted(n, x).full() ==
                  doctest::Approx(want).epsilon(1e-12));
        }
    }
    CHECK_THROWS_AS(sf::hermite_weighted(-1, 0.0), std::domain_error);
}

TEST_CASE("weighted Hermite stays finite at large degree and argument") {
    for (int n : {1000, 100000, 1000000}) {
        double x = 2.0 * std::sqrt(2.0 * n);
        auto v = sf::hermite_weighted(n, x);
        CHECK(std::isfinite(v.value));
        CHECK(std::isfinite(sf::hermite_fn(n, 0.5 * x)));
    }
    // relative accuracy at moderate degree: psi_n at n = 5000 against the
    // n-halving duplication-free check: orthonormality handled elsewhere;
    // here pin one value against a high-order quadrature-free recurrence in
    // long double.
    int n = 5000;
    double x = 17.0;
    long double vm = 0.0L, vc = 1.0L;
    long double ls = -0.5L * x * x - 0.25L * std::log((long double)kPi);
    for (int j = 0; j < n; ++j) {
        long double vn = x * std::sqrt(2.0L / (j + 1)) * vc -
                         std::sqrt((long double)j / (j + 1)) * vm;
        vm = vc;
        vc = vn;
        if (std::fabs((double)vc) > 1e200) {
            vm *= 1e-200L;
            vc *= 1e-200L;
            ls += std::log(1e200L);
        }
    }
    double want = (double)(vc * std::exp(ls));
    CHECK(sf::hermite_fn(n, x) == doctest::Approx(want).epsilon(1e-10));
}

TEST_CASE("weighted Laguerre values") {
    CHECK(sf::laguerre_weighted(0, 0.0, 0.7).full() ==
          doctest::Approx(std::exp(-0.35)).epsilon(1e-12));
    for (double a : {0.0, 0.5, 2.0})
        CHECK(sf::laguerre_weighted(1, a, a + 1.0).full() ==
              doctest::Approx(0.0).epsilon(1e-14));
    CHECK(sf::laguerre_weighted(2, 0.0, 1.0).full() ==
          doctest::Approx(-0.5 * std::exp(-0.5)).epsilon(1e-12));
    for (int n = 0; n <= 10; ++n) {
        for (double a : {0.0, 1.5}) {
            for (double x : {0.3, 2.0, 9.0}) {
                double want = std::pow(x, a / 2.0) * std::exp(-x / 2.0) *
                              laguerre_raw(n, a, x);
                CHECK(sf::laguerre_weighted(n, a, x).full() ==
                      doctest::Approx(want).epsilon(1e-11));
            }
        }
    }
    CHECK_THROWS_AS(sf::laguerre_weighted(2, 0.0, -1.0), std::domain_error);
    CHECK_THROWS_AS(sf::laguerre_weighted(2, -1.5, 1.0), std::domain_error);
    // large degree, argument across the whole oscillatory range
    for (double frac : {0.1, 0.5, 0.9}) {
        int n = 5000;
        CHECK(std::isfinite(sf::laguerre_fn(n, 0.5, frac * 8.0 * n)));
    }
}

TEST_CASE("weighted Laguerre accuracy at large degree") {
    // long-double reference recurrence with the same carried scaling
    int n = 5000;
    double alpha = 0.5;
    for (double frac : {0.2, 0.95}) {
        double x = frac * 8.0 * n;
        long double ls = 0.5L * alpha * std::log((long double)x) - 0.5L * x -
                         0.5L * std::lgamma(alpha + 1.0);
        long double v0 = 1.0L, v1 = (alpha + 1.0L - x) / std::sqrt(1.0L + alpha);
        for (int k = 1; k < n; ++k) {
            long double v2 = ((2.0L * k + 1.0L + alpha - x) * v1 -
                              std::sqrt((long double)k * (k + alpha)) * v0) /
                             std::sqrt((k + 1.0L) * (k + 1.0L + alpha));
            v0 = v1;
            v1 = v2;
            long double m = std::max(std::fabs((double)v0), std::fabs((double)v1));
            if (m > 1e200L) {
                v0 *= 1e-200L;
                v1 *= 1e-200L;
                ls += std::log(1e200L);
            } else if (m < 1e-200L && m > 0.0L) {
                v0 *= 1e200L;
                v1 *= 1e200L;
                ls -= std::log(1e200L);
            }
        }
        double want = (double)(v1 * std::exp(ls));
        CHECK(sf::laguerre_fn(n, alpha, x) == doctest::Approx(want).epsilon(1e-10));
    }
}

TEST_CASE("Hermite orthonormality (G1 normalization)") {
    double L = 2.0 * std::sqrt(2.0 * 30.0) + 10.0;
    sf::QuadratureSpec spec;
    spec.abs_tol = 1e-11;
    spec.rel_tol = 1e-11;
    spec.oscillation_scale = sf::hermite_wavelength(30);
    spec.max_subdivisions = 6000;
    for (int m = 0; m <= 30; m += 6) {
        for (int n = m; n <= 30; n += 3) {
            double got = sf::integrate(
                [&](double t) { return sf::hermite_fn(m, t) * sf::hermite_fn(n, t); },
                -L, L, spec);
            CHECK(got == doctest::Approx(m == n ? 1.0 : 0.0).epsilon(1e-8));
        }
    }
    // classical normalization: int (e^{-x^2/2} H_n)^2 = 2^n n! sqrt(pi)
    for (int n : {0, 3, 8}) {
        double got = sf::integrate(
            [&](double t) {
                double v = sf::hermite_weighted(n, t).full();
                return v * v;
            },
            -12.0, 12.0, spec);
        double want = std::exp(n * std::log(2.0) + std::lgamma(n + 1.0) +
                               0.5 * std::log(kPi));
        CHECK(got == doctest::Approx(want).epsilon(1e-10));
    }
}

TEST_CASE("Laguerre orthonormality (L1 normalization)") {
    double a = 0.7;
    double L = 4.0 * 30 + 2.0 * a + 2.0 + 40.0;
    sf::QuadratureSpec spec;
    spec.abs_tol = 1e-11;
    spec.rel_tol = 1e-11;
    spec.oscillation_scale = 1.0;
    spec.max_subdivisions = 8000;
    for (int m = 0; m <= 30; m += 10) {
        for (int n = m; n <= 30; n += 5) {
            double got = sf::integrate(
                [&](double t) {
                    return sf::laguerre_fn(m, a, t) * sf::laguerre_fn(n, a, t);
                },
                0.0, L, spec);
            CHECK(got == doctest::Approx(m == n ? 1.0 : 0.0).epsilon(1e-8));
        }
    }
    // classical normalization: int (x^{a/2} e^{-x/2} L_n^a)^2 = Gamma(n+a+1)/n!
    for (int n : {0, 4}) {
        double got = sf::integrate(
            [&](double t) {
                double v = sf::laguerre_weighted(n, a, t).full();
                return v * v;
            },
            0.0, 60.0, spec);
        double want = std::exp(std::lgamma(n + a + 1.0) - std::lgamma(n + 1.0));
        CHECK(got == doctest::Approx(want).epsilon(1e-10));
    }
}

TEST_CASE("Airy values and branch consistency") {
    CHECK(sf::airy_ai(0.0) == doctest::Approx(0.3550280538878172).epsilon(1e-13));
    CHECK(sf::airy_ai_prime(0.0) ==
          doctest::Approx(-0.2588194037928068).epsilon(1e-13));
    // positive-axis decay, monotone for xi >= 2
    double prev = sf::airy_ai(2.0);
    for (double x = 2.25; x <= 10.0; x += 0.25) {
        double cur = sf::airy_ai(x);
        CHECK(cur > 0.0);
        CHECK(cur < prev);
        prev = cur;
    }
    // the Maclaurin and asymptotic branches agree at the cutoff
    for (double s : {-1.0, 1.0}) {
        double c = s * sf::airy_branch_cutoff;
        CHECK(std::fabs(sf::airy_ai(c) - sf::airy_ai(c + s * 1e-12)) < 1e-9);
        CHECK(std::fabs(sf::airy_ai_prime(c) - sf::airy_ai_prime(c + s * 1e-12)) < 1e-9);
    }
}

TEST_CASE("Airy ODE residual via central differences") {
    double h = 2e-5;
    for (double xi : {-10.0, -1.0, 0.0, 1.0, 5.0}) {
        double app = (sf::airy_ai_prime(xi + h) - sf::airy_ai_prime(xi - h)) / (2.0 * h);
        CHECK(std::fabs(app - xi * sf::airy_ai(xi)) < 1e-8);
    }
}

TEST_CASE("airy_tail") {
    // int_0^inf Ai = 1/3 exactly
    CHECK(sf::airy_tail(0.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
    // deep in the oscillatory region the tail reaches 1 up to the asymptotic
    // envelope |xi|^{-3/4}/sqrt(pi)
    double envelope = std::pow(40.0, -0.75) / std::sqrt(kPi);
    CHECK(std::fabs(sf::airy_tail(-40.0) - 1.0) <= 1.05 * envelope);
    CHECK(sf::airy_tail(10.0) < 1e-9);
    // quadrature branch against an independent panel integral
    sf::QuadratureSpec spec;
    spec.abs_tol = 1e-12;
    spec.rel_tol = 1e-12;
    spec.oscillation_scale = 0.5;
    spec.max_subdivisions = 8000;
    for (double xi : {-8.0, -2.5, 1.5}) {
        double direct =
            sf::integrate([](double t) { return sf::airy_ai(t); }, xi, 12.0, spec);
        CHECK(sf::airy_tail(xi) == doctest::Approx(direct).epsilon(1e-9));
    }
}

TEST_CASE("Airy asymptotic series coefficients and truncation bound") {
    const auto& c = sf::airy_coefficients();
    CHECK(c[0] == 1.0);
    CHECK(c[1] == doctest::Approx(5.0 / 72.0).epsilon(1e-15));
    for (int k = 1; k <= 20; ++k) {
        double ratio = (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) /
                       (216.0 * k * (2.0 * k - 1.0));
        CHECK(c[k] / c[k - 1] == doctest::Approx(ratio).epsilon(1e-14));
    }
    // leading term only at z = 10
    double z = 10.0, zeta = 2.0 / 3.0 * std::pow(z, 1.5);
    double lead = std::sin(zeta + kPi / 4.0) / (std::sqrt(kPi) * std::pow(z, 0.25));
    CHECK(sf::airy_negative_asymptotic(z, 0).value ==
          doctest::Approx(lead).epsilon(1e-14));
    // error estimate bounds the true error
    for (double zz = 3.0; zz <= 30.0; zz += 1.5) {
        for (int kmax : {1, 2, 3}) {
            auto av = sf::airy_negative_asymptotic(zz, kmax);
            double truth = sf::airy_ai(-zz);
            CHECK(std::fabs(av.value - truth) <= av.error_estimate * 1.0000001);
        }
    }
    CHECK_THROWS_AS(sf::airy_negative_asymptotic(1.0, 2), std::domain_error);
}

TEST_CASE("adaptive quadrature") {
    sf::QuadratureSpec spec;
    spec.abs_tol = 1e-13;
    spec.rel_tol = 1e-13;
    CHECK(sf::integrate([](double t) { return std::sin(t); }, 0.0, kPi, spec) ==
          doctest::Approx(2.0).epsilon(1e-12));
    // erf-based closed form for int_0^1 e^{-t^2/2}
    double want = std::sqrt(kPi / 2.0) * std::erf(1.0 / std::sqrt(2.0));
    CHECK(sf::integrate([](double t) { return std::exp(-t * t / 2.0); }, 0.0, 1.0,
                        spec) == doctest::Approx(want).epsilon(1e-12));
    // exact on cubics per panel
    auto cubic = [](double t) { return ((2.0 * t - 3.0) * t + 0.5) * t - 1.0; };
    double got = sf::integrate(cubic, -1.0, 2.0, spec);
    CHECK(got == doctest::Approx(0.5 * (16 - 1) - (8 + 1) + 0.25 * (4 - 1) - 3.0)
                     .epsilon(1e-13));
    // oscillatory weighted-Hermite integral, stable under tolerance tightening
    int n = 38;
    double x = std::sqrt(2.0 * 40.0);
    sf::QuadratureSpec loose;
    loose.abs_tol = 1e-8;
    loose.rel_tol = 1e-8;
    loose.oscillation_scale = sf::hermite_wavelength(n);
    sf::QuadratureSpec tight = loose;
    tight.abs_tol = 1e-12;
    tight.rel_tol = 1e-12;
    auto f = [n](double t) { return sf::hermite_weighted(n, t).full(); };
    double a1 = sf::integrate(f, 0.0, x, loose);
    double a2 = sf::integrate(f, 0.0, x, tight);
    CHECK(std::fabs(a1 - a2) < loose.abs_tol);
    // non-convergence reporting
    sf::QuadratureSpec starved;
    starved.abs_tol = 1e-14;
    starved.rel_tol = 1e-14;
    starved.max_subdivisions = 2;
    CHECK_THROWS_AS(
        sf::integrate([](double t) { return std::cos(40.0 * t * t); }, 0.0, 9.0, starved),
        NumericsError);
    CHECK_THROWS_AS(sf::integrate([](double) { return 1.0; }, 1.0, 0.0), std::domain_error);
}

TEST_CASE("half-line Hermite integrals") {
    CHECK(sf::hermite_halfline_integral(0) ==
          doctest::Approx(std::sqrt(kPi / 2.0)).epsilon(1e-14));
    CHECK(sf::hermite_halfline_integral(2) ==
          doctest::Approx(std::sqrt(kPi / 2.0) / 2.0).epsilon(1e-14));
    CHECK_THROWS_AS(sf::hermite_halfline_integral(3), std::domain_error);
    // log-space vs direct factorials, n <= 20
    for (int n = 0; n <= 20; n += 2) {
        double fact = 1.0, half = 1.0;
        for (int j = 2; j <= n; ++j) fact *= j;
        for (int j = 2; j <= n / 2; ++j) half *= j;
        double direct = std::sqrt(kPi / 2.0) * fact / (std::pow(2.0, n) * half);
        CHECK(sf::hermite_halfline_integral(n) ==
              doctest::Approx(direct).epsilon(1e-12));
    }
    // orthonormal-units integrals against quadrature, both parities
    sf::QuadratureSpec spec;
    spec.abs_tol = 1e-12;
    spec.rel_tol = 1e-12;
    spec.oscillation_scale = 0.3;
    spec.max_subdivisions = 6000;
    for (int n : {0, 1, 2, 5, 12, 17}) {
        double direct = sf::integrate([n](double t) { return sf::hermite_fn(n, t); },
                                      0.0, std::sqrt(2.0 * n + 1.0) + 10.0, spec);
        CHECK(sf::hermite_halfline_orthonormal(n) ==
              doctest::Approx(direct).epsilon(1e-10));
    }
}

TEST_CASE("half-line Laguerre integrals") {
    CHECK(sf::laguerre_halfline_integral(0, 1.0) == doctest::Approx(2.0).epsilon(1e-14));
    // parity zero: index 2N-1 = 3 at alpha = 1
    CHECK(sf::laguerre_halfline_integral(3, 1.0) == 0.0);
    CHECK_THROWS_AS(sf::laguerre_halfline_integral(2, -1.0), std::domain_error);
    sf::QuadratureSpec spec;
    spec.abs_tol = 1e-12;
    spec.rel_tol = 1e-12;
    spec.oscillation_scale = 1.0;
    spec.max_subdivisions = 8000;
    for (auto [n, a] : {std::pair{2, 2.0}, {4, 0.7}, {6, 1.3}, {5, 0.4}}) {
        double direct = sf::integrate(
            [n = n, a = a](double t) {
                return t <= 0.0 ? 0.0
                                : sf::laguerre_weighted(n, a, t).full() /
                                      std::sqrt(t);
            },
            0.0, 4.0 * n + 2.0 * a + 110.0, spec);
        if (n % 2 == 1)
            CHECK(std::fabs(sf::laguerre_halfline_integral(n, a) - direct) < 1e-9);
        else
            CHECK(sf::laguerre_halfline_integral(n, a) ==
                  doctest::Approx(direct).epsilon(1e-10));
    }
}
