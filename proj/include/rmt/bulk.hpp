#pragma once

#include <vector>

#include "rmt/exactdens.hpp"

// Closed-form bulk asymptotic expansions of the scaled densities, with
// per-order term access. All operations return the expansion of
// (1/N) rho(X; <scaled ensemble>) as a sum of terms
//   N^{-order} * (smooth + oscillatory).

namespace rmt::bulk {

// One expansion order: the contribution at this N (N^{-order} factors already
// applied), split into smooth and oscillatory parts.
struct ExpansionTerm {
    double order_num = 0;  // order = order_num / order_den, the power of 1/N
    double order_den = 1;
    double smooth = 0.0;
    double oscillatory = 0.0;
    double order() const { return order_num / order_den; }
};

struct ExpansionValue {
    double x = 0.0;
    std::vector<ExpansionTerm> terms;
    double total = 0.0;

    double order_sum(double max_order) const;  // sum of terms with order <= max_order
};

// Leading-order laws and their phase integrals.
double rho_w(double x);   // Wigner semicircle (2/pi) sqrt(1-x^2) on |x|<1
double p_w(double x);     // P_W(x) = 1 + (x/2) rho_w - acos(x)/pi
double rho_mp(double x);  // Marchenko-Pastur (2/pi) sqrt(1/x - 1) on 0<x<=1
double p_mp(double x);    // P_MP(x) = 1 + x rho_mp - (2/pi) acos(sqrt x)

// Reduced oscillation phases (integer multiples of 2 pi already removed, so
// they stay accurate near the spectrum edge and at large N).
double phase_gue(double X, int N);        // 2 N pi P_W(X) mod 2 pi N
double phase_lue(double X, int N, double alpha);  // 2 A_{N,alpha}(X)
double a_phase(double X, int N, double alpha);    // A_{N,alpha}(X) of the Laguerre family

// Plancherel-Rotach cosine/sine factors of the Hermite and Laguerre bulk
// asymptotics, in reduced-phase form.
double g_hermite(int m, int n, double X);
double g_hermite_tilde(int m, int n, double X);
double g_laguerre(int m, int n, double alpha, double X);
double g_laguerre_tilde(int m, int n, double alpha, double X);

// Bulk expansions. `guard` rejects |X| (or X) within 10 N^{-2/3} of the edge
// with a distinct error; the matching module evaluates inside that window on
// purpose and passes guard = false.
ExpansionValue bulk_gue(double X, int N, int max_order = 4, bool guard = true);
ExpansionValue bulk_lue(double X, int N, double alpha, int max_order = 2, bool guard = true);
ExpansionValue bulk_goe(double X, int N, bool guard = true);
ExpansionValue bulk_gse(double X, int N, bool guard = true);
ExpansionValue bulk_loe(double X, int N, double alpha, bool guard = true);
ExpansionValue bulk_lse(double X, int N, double alpha, bool guard = true);

ExpansionValue bulk_expansion(const EnsembleSpec& spec, double X, bool guard = true);

// Thrown (as std::domain_error subclass) when X falls in the edge window.
class EdgeRegimeError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace rmt::bulk
