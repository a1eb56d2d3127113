#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

// Stable evaluation of weighted Hermite/Laguerre polynomials at large degree,
// Airy functions, and adaptive quadrature for oscillatory weighted-polynomial
// integrals. Everything here is a pure function of its arguments.

namespace rmt {

// Thrown when an iterative numerical procedure fails to reach its tolerance.
class NumericsError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace specfun {

// A weighted orthogonal-polynomial value held as value * exp(log_scale), so
// that magnitudes stay representable at degrees where the raw weighted
// polynomial (e.g. e^{-x^2/2} H_n(x)) overflows or underflows.
struct WeightedPolyValue {
    int n = 0;
    double alpha = 0.0;   // Laguerre parameter; unused for Hermite
    double x = 0.0;
    double value = 0.0;   // orthonormalized weighted polynomial, O(1) magnitude
    double log_scale = 0.0;

    // value * exp(log_scale): the classically normalized weighted polynomial.
    double full() const;
};

// e^{-x^2/2} H_n(x), carried as a scaled pair. `value` is the orthonormal
// Hermite function psi_n(x) = e^{-x^2/2} H_n(x) / sqrt(2^n n! sqrt(pi)).
WeightedPolyValue hermite_weighted(int n, double x);

// x^{alpha/2} e^{-x/2} L_n^{(alpha)}(x), carried as a scaled pair. `value` is
// the orthonormal Laguerre function phi_n = w(x) L_n^a sqrt(n!/Gamma(n+a+1)).
WeightedPolyValue laguerre_weighted(int n, double alpha, double x);

// Orthonormal functions directly (bounded for all arguments).
double hermite_fn(int n, double x);
double laguerre_fn(int n, double alpha, double x);

// One recurrence sweep: sum_{j=0}^{n} psi_j(x)^2 together with psi_n, psi_{n-1}.
struct OrthoRun {
    double sum_sq = 0.0;
    double last = 0.0;  // psi_n or phi_n
    double prev = 0.0;  // psi_{n-1} or phi_{n-1}
};
OrthoRun hermite_run(int n, double x);
OrthoRun laguerre_run(int n, double alpha, double x);

// ---------------------------------------------------------------------------
// Airy functions

// Ai and Ai' on the real line; Maclaurin series for |x| <= airy_branch_cutoff,
// asymptotic series beyond. Absolute accuracy ~1e-11 on [-40, 10].
double airy_ai(double xi);
double airy_ai_prime(double xi);

inline constexpr double airy_branch_cutoff = 6.0;

// int_xi^inf Ai(t) dt. Quadrature of the Maclaurin/asymptotic Ai for moderate
// xi, two-term oscillatory asymptotics for xi below airy_tail_asymptotic_cutoff.
double airy_tail(double xi);
inline constexpr double airy_tail_asymptotic_cutoff = -40.0;

// Coefficients c_k of the Airy asymptotic series:
// c_0 = 1, c_k = (2k+1)(2k+3)...(6k-1) / (216^k k!).
const std::vector<double>& airy_coefficients();

// Truncated oscillatory asymptotic series for Ai(-z), z >= 2, keeping the
// coefficients c_0..c_{k_max}. error_estimate is the magnitude of the first
// omitted term (envelope bound).
struct AsymptoticValue {
    double value = 0.0;
    double error_estimate = 0.0;
};
AsymptoticValue airy_negative_asymptotic(double z, int k_max);
AsymptoticValue airy_prime_negative_asymptotic(double z, int k_max);

// ---------------------------------------------------------------------------
// Quadrature

struct QuadratureSpec {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_subdivisions = 2000;
    // Estimated local wavelength of the integrand; 0 = unknown. Initial panels
    // are no wider than half this scale, so adaptivity never aliases.
    double oscillation_scale = 0.0;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int subdivisions = 0;
    bool converged = false;
};

// Adaptive Gauss-Kronrod (7,15) panel quadrature on [a, b].
QuadratureResult integrate_result(const std::function<double(double)>& f,
                                  double a, double b,
                                  const QuadratureSpec& spec = {});

// Same, but throws NumericsError when max_subdivisions is exhausted.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSpec& spec = {});

// ---------------------------------------------------------------------------
// Closed-form half-line integrals

// 2^{-n} int_0^inf e^{-t^2/2} H_n(t) dt = sqrt(pi/2) n! / (2^n (n/2)!), n even.
double hermite_halfline_integral(int n);

// int_0^inf psi_n(t) dt for the orthonormal Hermite function, any parity.
// Even n uses the closed form above; odd n uses the alternating
// central-binomial sum for int_0^inf e^{-t^2/2} H_{2m+1}.
double hermite_halfline_orthonormal(int n);

// int_0^inf L_n^a(t) t^{(a-1)/2} e^{-t/2} dt: closed Gamma-ratio form for even
// n, exactly 0 for odd n.
double laguerre_halfline_integral(int n, double a);

// Same integral with the orthonormal phi_n integrand: int_0^inf t^{-1/2} phi_n.
double laguerre_halfline_orthonormal(int n, double a);

// Local half-wavelength guides for pre-splitting oscillatory integrals over
// weighted polynomials of degree n at abscissa t.
double hermite_wavelength(int n);
double laguerre_wavelength(int n, double alpha, double t);

} // namespace specfun
} // namespace rmt
