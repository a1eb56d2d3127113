#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rmt/linstat.hpp"
#include "rmt/specfun.hpp"

using namespace rmt;
namespace ls = rmt::linstat;
namespace sf = rmt::specfun;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("monomial moments match quadrature") {
    sf::QuadratureSpec q;
    q.abs_tol = 1e-12;
    q.rel_tol = 1e-12;
    q.max_subdivisions = 8000;
    for (int p : {0, 2, 4, 6}) {
        ls::TestFunction a = ls::monomial(p);
        double wig = sf::integrate(
            [&](double X) {
                return 2.0 / kPi * std::sqrt(1.0 - X * X) * a.evaluate(X);
            },
            -1.0, 1.0, q);
        CHECK(a.wigner_moment == doctest::Approx(wig).epsilon(1e-8));
        // u-substitution X = sin t removes the endpoint singularity
        double sing = sf::integrate(
            [&](double t) { return a.evaluate(std::sin(t)) / kPi; },
            -kPi / 2.0, kPi / 2.0, q);
        CHECK(a.singular_moment == doctest::Approx(sing).epsilon(1e-8));
    }
    CHECK(ls::monomial(2).wigner_moment == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(ls::monomial(2).singular_moment == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(ls::monomial(4).wigner_moment == doctest::Approx(0.125).epsilon(1e-14));
    CHECK(ls::monomial(4).singular_moment == doctest::Approx(0.375).epsilon(1e-14));
}

TEST_CASE("linear statistics against exact densities") {
    // a = 1: the normalization
    EnsembleSpec gue = make_spec("gue", 8, 0.0, Scaling::bulk);
    CHECK(ls::linear_statistic(gue, ls::monomial(0)) ==
          doctest::Approx(8.0).epsilon(1e-8));
    // GUE second moment: N/4
    CHECK(ls::linear_statistic(gue, ls::monomial(2)) ==
          doctest::Approx(2.0).epsilon(1e-8));
    // GOE second moment: (N+1)/4
    EnsembleSpec goe = make_spec("goe", 8, 0.0, Scaling::bulk);
    CHECK(ls::linear_statistic(goe, ls::monomial(2)) ==
          doctest::Approx(2.25).epsilon(1e-6));
    // Laguerre: LUE first moment (N + alpha)/4
    EnsembleSpec lue = make_spec("lue", 6, 1.0, Scaling::bulk);
    CHECK(ls::linear_statistic(lue, ls::monomial(1)) ==
          doctest::Approx((6.0 + 1.0) / 4.0).epsilon(1e-7));
    CHECK(ls::linear_statistic(lue, ls::monomial(0)) ==
          doctest::Approx(6.0).epsilon(1e-7));
}

TEST_CASE("smoothed predictions") {
    ls::TestFunction x2 = ls::monomial(2);
    // beta = 2: correction vanishes for any a
    for (int p : {0, 2, 4})
        CHECK(ls::smoothed_prediction(make_spec("gue", 8), ls::monomial(p)) ==
              doctest::Approx(8.0 * ls::monomial(p).wigner_moment).epsilon(1e-14));
    CHECK(ls::smoothed_prediction(make_spec("goe", 8), x2) ==
          doctest::Approx(8.0 / 4.0 + 0.25).epsilon(1e-14));
    CHECK(ls::smoothed_prediction(make_spec("gse", 8), x2) ==
          doctest::Approx(8.0 / 4.0 - 0.125).epsilon(1e-14));
    CHECK_THROWS_AS(ls::smoothed_prediction(make_spec("lue", 8, 1.0), x2),
                    std::invalid_argument);
}

TEST_CASE("statistic converges to the smoothed prediction, beta = 2") {
    // degree <= 2: the unitary statistics agree with the prediction exactly
    for (int p : {0, 2}) {
        ls::TestFunction a = ls::monomial(p);
        for (int N : {8, 16, 32}) {
            EnsembleSpec s = make_spec("gue", N, 0.0, Scaling::bulk);
            CHECK(std::fabs(ls::linear_statistic(s, a) -
                            ls::smoothed_prediction(s, a)) < 1e-7);
        }
    }
    // degree 4: the O(1) term matches and the remainder is exactly 1/(16N)
    ls::TestFunction x4 = ls::monomial(4);
    for (int N : {8, 16, 32}) {
        EnsembleSpec s = make_spec("gue", N, 0.0, Scaling::bulk);
        double diff = ls::linear_statistic(s, x4) - ls::smoothed_prediction(s, x4);
        CHECK(diff == doctest::Approx(1.0 / (16.0 * N)).epsilon(1e-5));
    }
}

TEST_CASE("odd statistics vanish by symmetry, beta = 2") {
    for (int p : {1, 3}) {
        EnsembleSpec s = make_spec("gue", 8, 0.0, Scaling::bulk);
        CHECK(std::fabs(ls::linear_statistic(s, ls::monomial(p))) < 1e-8);
        CHECK(ls::smoothed_prediction(s, ls::monomial(p)) == 0.0);
    }
}

TEST_CASE("Airy delta integrals both equal 1/2") {
    double lower = ls::airy_delta_integral_lower();
    double upper = ls::airy_delta_integral_upper();
    CHECK(lower == doctest::Approx(0.5).epsilon(1e-8));
    CHECK(upper == doctest::Approx(0.5).epsilon(1e-8));
    // their sum is the full Airy integral, 1
    CHECK(lower + upper == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("total-derivative identity behind the delta weights") {
    double h = 1e-4;
    for (double y : {-3.0, -0.5, 1.0}) {
        auto sq = [](double t) {
            double v = 1.0 - sf::airy_tail(t);
            return v * v;
        };
        double deriv = (sq(y + h) - sq(y - h)) / (2.0 * h);
        double want = 2.0 * sf::airy_ai(y) * (1.0 - sf::airy_tail(y));
        CHECK(std::fabs(deriv - want) < 1e-7);
    }
}

TEST_CASE("delta weight extraction, beta = 1 and 4") {
    ls::TestFunction x2 = ls::monomial(2);
    ls::TestFunction x4 = ls::monomial(4);
    {
        auto d = ls::delta_weight_extraction(1, x2, {8, 16, 32});
        // predicted: (1/2)(1 - 1/2) = 1/4; the GOE statistic is (N+1)/4 so the
        // extraction is essentially exact
        CHECK(d.predicted == doctest::Approx(0.25).epsilon(1e-14));
        CHECK(d.extrapolated == doctest::Approx(d.predicted).epsilon(0.1));
        CHECK(d.boundary_weight_per_edge == doctest::Approx(0.25).epsilon(0.1));
    }
    {
        auto d = ls::delta_weight_extraction(1, x4, {8, 16, 32});
        CHECK(d.predicted == doctest::Approx(0.3125).epsilon(1e-14));
        CHECK(d.extrapolated == doctest::Approx(d.predicted).epsilon(0.1));
    }
    {
        auto d = ls::delta_weight_extraction(4, x2, {8, 16, 32});
        CHECK(d.predicted == doctest::Approx(-0.125).epsilon(1e-14));
        CHECK(d.extrapolated == doctest::Approx(d.predicted).epsilon(0.1));
    }
    {
        auto d = ls::delta_weight_extraction(4, x4, {8, 16, 32});
        CHECK(d.predicted == doctest::Approx(-5.0 / 32.0).epsilon(1e-14));
        CHECK(d.extrapolated == doctest::Approx(d.predicted).epsilon(0.1));
    }
    CHECK_THROWS_AS(ls::delta_weight_extraction(1, x2, {8, 16}),
                    std::invalid_argument);
}

TEST_CASE("chiral ensembles") {
    // parameter mapping
    CHECK(ls::chiral_parameter(make_spec("lue", 6, 1.0)) == doctest::Approx(1.0));
    CHECK(ls::chiral_parameter(make_spec("loe", 6, 1.0)) == doctest::Approx(0.5));
    CHECK(ls::chiral_parameter(make_spec("lse", 6, 1.0)) == doctest::Approx(0.75));
    // chiral map consistency: the chiral statistic of X^2 equals the Laguerre
    // statistic of X, computed through two independent quadratures
    EnsembleSpec lue = make_spec("lue", 6, 1.0, Scaling::bulk);
    double via_chiral = ls::chiral_linear_statistic(lue, ls::monomial(2));
    double via_laguerre = ls::linear_statistic(lue, ls::monomial(1));
    CHECK(via_chiral == doctest::Approx(via_laguerre).epsilon(1e-9));
    // and the exact-density identity (1/2) rho_ch(X) = X rho_L(X^2) on a grid
    for (double X : {0.3, 0.6, 0.9}) {
        double lhs = 0.5 * exactdens::chiral_density(lue, X);
        double rhs = X * exactdens::scaled_density(lue, X * X);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
    }
    // smoothed prediction reproduces the exact first moment structure
    for (int N : {8, 16}) {
        EnsembleSpec s = make_spec("lue", N, 1.0, Scaling::bulk);
        double stat = ls::chiral_linear_statistic(s, ls::monomial(2));
        double pred = ls::chiral_smoothed_prediction(s, ls::monomial(2));
        // exact: N/4 + alpha/4; prediction matches to o(1)
        CHECK(stat == doctest::Approx((N + 1.0) / 4.0).epsilon(1e-6));
        CHECK(pred == doctest::Approx((N + 1.0) / 4.0).epsilon(1e-12));
    }
    // beta = 1, 4 chiral predictions converge as N grows
    for (const char* label : {"loe", "lse"}) {
        double prev = 1e9;
        for (int N : {8, 16, 32}) {
            EnsembleSpec s = make_spec(label, N, 1.0, Scaling::bulk);
            double gap = std::fabs(ls::chiral_linear_statistic(s, ls::monomial(2)) -
                                   ls::chiral_smoothed_prediction(s, ls::monomial(2)));
            CHECK(gap < std::max(prev, 0.02));
            prev = gap;
        }
        CHECK(prev < 0.01);
    }
}
