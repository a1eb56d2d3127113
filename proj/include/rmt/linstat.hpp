#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rmt/exactdens.hpp"

// Linear statistics against the exact densities and the smoothed-density
// predictions with boundary delta functions.

namespace rmt::linstat {

// A test function in bulk-scaled coordinates together with its analytically
// known moments (checked against quadrature in the tests).
struct TestFunction {
    std::string label;
    std::function<double(double)> evaluate;
    double wigner_moment = 0.0;    // int rho_W(X) a(X) dX over (-1,1)
    double edge_value_plus = 0.0;  // a(1)
    double edge_value_minus = 0.0; // a(-1)
    double singular_moment = 0.0;  // int a(X)/(pi sqrt(1-X^2)) dX over (-1,1)
};

TestFunction monomial(int power);  // a(X) = X^power with closed-form moments

// <A> = int rho(X) a(X) dX over the bulk-scaled support plus an edge margin,
// to rel_tol relative accuracy.
double linear_statistic(const EnsembleSpec& spec, const TestFunction& a,
                        double rel_tol = 1e-9);

// Smoothed-density prediction for the Gaussian ensembles:
//   N int rho_W a + (1/beta - 1/2) [ (a(1)+a(-1))/2 - singular_moment ].
double smoothed_prediction(const EnsembleSpec& spec, const TestFunction& a);

// Chiral analogue on (0,1): the chiral companion of a bulk-scaled Laguerre
// ensemble (weight parameter a_chiral defined so the smoothed expansion reads
//   2 rho_W + (1/N)[a/(pi sqrt(1-X^2)) - (a/2) delta^+(X)
//                   + (1/beta-1/2)((1/2) delta(X-1) - 1/(pi sqrt(1-X^2)))] ).
double chiral_parameter(const EnsembleSpec& laguerre_spec);
double chiral_smoothed_prediction(const EnsembleSpec& laguerre_spec,
                                  const TestFunction& a);
double chiral_linear_statistic(const EnsembleSpec& laguerre_spec,
                               const TestFunction& a);

// The two Airy integrals behind the boundary delta weights; both equal 1/2.
double airy_delta_integral_lower();  // int Ai(y) (1 - int_y^inf Ai) dy
double airy_delta_integral_upper();  // int Ai(y) (int_y^inf Ai) dy

struct DeltaExtraction {
    std::vector<int> n_grid;
    std::vector<double> remainders;    // <A> - N int rho_W a - osc. correction
    double extrapolated = 0.0;         // Richardson limit of the remainders
    double predicted = 0.0;            // (1/beta-1/2)[(a(1)+a(-1))/2 - singular]
    double boundary_weight = 0.0;      // implied total delta mass contribution
    double boundary_weight_per_edge = 0.0;
};

// Extract the O(1) remainder of a's linear statistic over n_grid (>= 3 even
// values) and compare with the smoothed-density delta weights.
DeltaExtraction delta_weight_extraction(int beta, const TestFunction& a,
                                        const std::vector<int>& n_grid);

} // namespace rmt::linstat
