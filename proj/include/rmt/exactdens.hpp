#pragma once

#include <string>

#include "rmt/specfun.hpp"

// Exact finite-N eigenvalue densities for the Gaussian and Laguerre ensembles
// at beta = 1, 2, 4, via the orthogonal-polynomial formulas, in raw and scaled
// coordinates.
//
// Raw-coordinate weight conventions (the ones used by all asymptotic formulas):
//   GOE  OE_N(e^{-x^2/2})        GUE  UE_N(e^{-x^2})      GSE  SE_N(e^{-x^2})
//   LOE  OE_N(x^{(a-1)/2}e^{-x/2})  LUE  UE_N(x^a e^{-x})  LSE  SE_N(x^{a+1}e^{-x})
// Bulk scaling maps these onto support (-1,1) (Gaussian) or (0,1) (Laguerre).

namespace rmt {

enum class Family { gaussian, laguerre };
enum class Scaling { raw, bulk, edge };

struct EnsembleSpec {
    int beta = 2;              // 1, 2, or 4
    Family family = Family::gaussian;
    int N = 2;
    double alpha = 0.0;        // Laguerre parameter, ignored for Gaussian
    Scaling scaling = Scaling::raw;

    void validate() const;     // throws std::invalid_argument
    std::string label() const; // "goe", "gue", ...
};

EnsembleSpec make_spec(const std::string& label, int N, double alpha = 0.0,
                       Scaling scaling = Scaling::raw);

namespace exactdens {

// rho(x; UE_N(g_2)) with g_2 = e^{-x^2} (gaussian) or x^a e^{-x} (laguerre).
double density_ue(const EnsembleSpec& spec, double x);

// rho(x; OE_N(e^{-x^2/2})), N even.
double density_oe_gaussian(int N, double x);

// rho(x; SE_N(e^{-x^2})): tail-integral form and half-line-constant form.
// The two differ only in evaluation route and agree to ~1e-9.
double density_se_gaussian(int N, double x);
double density_se_gaussian_halfline_form(int N, double x);

// rho(x; OE_N(x^{(a-1)/2} e^{-x/2})), N even, x > 0.
double density_oe_laguerre(int N, double alpha, double x);

// rho(x; SE_N(x^{a+1} e^{-x})), x > 0: incomplete-integral and tail forms.
double density_se_laguerre(int N, double alpha, double x);
double density_se_laguerre_tail(int N, double alpha, double x);

// Raw density for any spec (dispatch on beta/family).
double density_raw(const EnsembleSpec& spec, double x);

// Bulk scaling factor c so that rho_bulk(X) = c * rho_raw(c X):
//   sqrt(2N) (Gaussian beta=1,2), 2 sqrt(N) (beta=4),
//   4N (Laguerre beta=1,2), 8N (beta=4).
double bulk_scale(const EnsembleSpec& spec);

// rho(X) in the requested scaling. For Scaling::edge the argument is the
// Airy variable xi and the value carries the soft-edge normalization used by
// the edge expansions.
double scaled_density(const EnsembleSpec& spec, double X);

// Soft-edge coordinate map: raw abscissa for Airy variable xi, and the
// normalization w so that edge density = w * rho_raw(raw_x(xi)).
double edge_raw_abscissa(const EnsembleSpec& spec, double xi);
double edge_normalization(const EnsembleSpec& spec);

// Upper integration bound beyond which the raw density is negligible.
double raw_support_bound(const EnsembleSpec& spec);

// Chiral companion density: rho(X; chME_N) = 2 X rho_M(X^2) under the map
// x^2 -> x, with rho_M the bulk-scaled Laguerre density of the same beta.
double chiral_density(const EnsembleSpec& laguerre_spec, double X);

} // namespace exactdens
} // namespace rmt
