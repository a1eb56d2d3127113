#include "rmt/bulk.hpp"

#include <cmath>
#include <stdexcept>

namespace rmt::bulk {

namespace {
constexpr double kPi = 3.14159265358979323846;

void check_open_interval(double X, int N, double lo, double hi, bool guard,
                         const char* who) {
    if (!(X > lo && X < hi))
        throw std::domain_error(std::string(who) + ": X outside the bulk support");
    if (guard) {
        // ten Airy widths, capped so the guard never swallows the whole
        // support at desk-scale N
        double margin =
            std::min(10.0 * std::pow(double(N), -2.0 / 3.0), 0.1 * (hi - lo));
        if (X > hi - margin || X < lo + margin)
            throw EdgeRegimeError(std::string(who) +
                                  ": X within the edge window; use the edge "
                                  "expansions there");
    }
}

ExpansionTerm term(double num, double den, double smooth, double osc) {
    ExpansionTerm t;
    t.order_num = num;
    t.order_den = den;
    t.smooth = smooth;
    t.oscillatory = osc;
    return t;
}

ExpansionValue finish(double X, std::vector<ExpansionTerm> terms) {
    ExpansionValue v;
    v.x = X;
    v.terms = std::move(terms);
    for (const auto& t : v.terms) v.total += t.smooth + t.oscillatory;
    return v;
}

} // namespace

double ExpansionValue::order_sum(double max_order) const {
    double acc = 0.0;
    for (const auto& t : terms)
        if (t.order() <= max_order + 1e-12) acc += t.smooth + t.oscillatory;
    return acc;
}

double rho_w(double x) {
    if (std::fabs(x) >= 1.0) return 0.0;
    return 2.0 / kPi * std::sqrt(1.0 - x * x);
}

double p_w(double x) { return 1.0 + 0.5 * x * rho_w(x) - std::acos(x) / kPi; }

double rho_mp(double x) {
    if (x <= 0.0) throw std::domain_error("rho_mp: needs x > 0");
    if (x >= 1.0) return 0.0;
    return 2.0 / kPi * std::sqrt(1.0 / x - 1.0);
}

double p_mp(double x) {
    return 1.0 + x * rho_mp(x) - 2.0 / kPi * std::acos(std::sqrt(x));
}

double phase_gue(double X, int N) {
    // 2 N pi (P_W(X) - 1); the dropped 2 pi N is an exact multiple of 2 pi.
    return 2.0 * N * (X * std::sqrt(1.0 - X * X) - std::acos(X));
}

double a_phase(double X, int N, double alpha) {
    double ac = std::acos(std::sqrt(X));
    return 2.0 * N * (std::sqrt(X * (1.0 - X)) - ac) - alpha * ac;
}

double phase_lue(double X, int N, double alpha) { return 2.0 * a_phase(X, N, alpha); }

double g_hermite(int m, int n, double X) {
    double ph = n * X * std::sqrt(1.0 - X * X) + (n + 0.5) * std::asin(X) -
                n * kPi / 2.0 - m * std::acos(X);
    return std::cos(ph);
}

double g_hermite_tilde(int m, int n, double X) {
    double ph = n * X * std::sqrt(1.0 - X * X) + (n + 0.5) * std::asin(X) -
                n * kPi / 2.0 - m * std::acos(X);
    return std::sin(ph);
}

double g_laguerre(int m, int n, double alpha, double X) {
    double ac = std::acos(std::sqrt(X));
    double ph = 2.0 * n * (std::sqrt(X * (1.0 - X)) - ac) -
                (2.0 * m + alpha + 1.0) * ac + 0.75 * kPi;
    return std::sin(ph);
}

double g_laguerre_tilde(int m, int n, double alpha, double X) {
    double ac = std::acos(std::sqrt(X));
    double ph = 2.0 * n * (std::sqrt(X * (1.0 - X)) - ac) -
                (2.0 * m + alpha + 1.0) * ac + 0.75 * kPi;
    return std::cos(ph);
}

ExpansionValue bulk_gue(double X, int N, int max_order, bool guard) {
    check_open_interval(X, N, -1.0, 1.0, guard, "bulk_gue");
    if (max_order < 0 || max_order > 4)
        throw std::invalid_argument("bulk_gue: max_order must be 0..4");
    double r = rho_w(X);
    double one_m = 1.0 - X * X;
    double ph = phase_gue(X, N);
    double c = std::cos(ph), s = std::sin(ph);
    std::vector<ExpansionTerm> t;
    t.push_back(term(0, 1, r, 0.0));
    if (max_order >= 1)
        t.push_back(term(1, 1, 0.0, -2.0 * c / (kPi * kPi * kPi * r * r * N)));
    if (max_order >= 2)
        t.push_back(term(2, 1, 1.0 / (16.0 * kPi * std::pow(one_m, 2.5) * N * N),
                         X * (15.0 + 2.0 * X * X) * s /
                             (48.0 * kPi * std::pow(one_m, 2.5) * N * N)));
    if (max_order >= 3)
        t.push_back(term(3, 1, 0.0,
                         (180.0 + 981.0 * X * X + 60.0 * std::pow(X, 4) +
                          4.0 * std::pow(X, 6)) *
                             c / (2304.0 * kPi * std::pow(one_m, 4) * N * N * N)));
    if (max_order >= 4)
        t.push_back(term(4, 1, 0.0,
                         -X *
                             (323190.0 + 647055.0 * X * X + 20358.0 * std::pow(X, 4) +
                              6084.0 * std::pow(X, 6) - 1112.0 * std::pow(X, 8)) *
                             s /
                             (829440.0 * std::pow(one_m, 5.5) * kPi * std::pow(double(N), 4))));
    return finish(X, std::move(t));
}

ExpansionValue bulk_lue(double X, int N, double alpha, int max_order, bool guard) {
    check_open_interval(X, N, 0.0, 1.0, guard, "bulk_lue");
    if (max_order < 0 || max_order > 2)
        throw std::invalid_argument("bulk_lue: max_order must be 0..2");
    double r = rho_mp(X);
    double ph = phase_lue(X, N, alpha);
    double c = std::cos(ph), s = std::sin(ph);
    std::vector<ExpansionTerm> t;
    t.push_back(term(0, 1, r, 0.0));
    if (max_order >= 1)
        t.push_back(term(1, 1, alpha / (kPi * kPi * X * r * N),
                         -c / (kPi * kPi * kPi * X * X * r * r * N)));
    if (max_order >= 2) {
        double om = 1.0 - X;
        double denom = 192.0 * kPi * std::pow(om, 2.5) * std::pow(X, 1.5);
        double osc = alpha / (8.0 * kPi * om * om) * c +
                     (-3.0 + 12.0 * X + 8.0 * X * X +
                      12.0 * (X - 1.0) * (2.0 * X - 1.0) * alpha * alpha) /
                         denom * s;
        double sm = (1.0 + 4.0 * (X - 1.0) * alpha * alpha) /
                    (64.0 * kPi * std::pow(om, 2.5) * std::pow(X, 1.5));
        t.push_back(term(2, 1, sm / (double(N) * N), osc / (double(N) * N)));
    }
    return finish(X, std::move(t));
}

ExpansionValue bulk_goe(double X, int N, bool guard) {
    if (N % 2 != 0) throw std::invalid_argument("bulk_goe: N must be even");
    check_open_interval(X, N, -1.0, 1.0, guard, "bulk_goe");
    double one_m = 1.0 - X * X;
    std::vector<ExpansionTerm> t;
    t.push_back(term(0, 1, rho_w(X), 0.0));
    // O(1/N): smooth only; the oscillatory pieces of the correction cancel the
    // unitary-ensemble oscillation exactly at this order.
    t.push_back(term(1, 1, -1.0 / (2.0 * kPi * N * std::sqrt(one_m)), 0.0));
    double ph = phase_gue(X, N) - std::asin(X);  // (2N-1) asin X + 2N X sqrt(1-X^2), N even
    t.push_back(term(2, 1,
                     (3.0 + 4.0 * X * X) / (16.0 * kPi * std::pow(one_m, 2.5) * N * N),
                     -std::cos(ph) / (8.0 * kPi * std::pow(one_m, 2.5) * N * N)));
    return finish(X, std::move(t));
}

ExpansionValue bulk_gse(double X, int N, bool guard) {
    check_open_interval(X, N, -1.0, 1.0, guard, "bulk_gse");
    double one_m = 1.0 - X * X;
    // g_{0,2N}^{(H)}(X) with the phase rewritten as
    // 2N(X sqrt(1-X^2) + asin X - pi/2) + asin(X)/2, an exact identity that
    // keeps the argument O(N (1-X)^{3/2}) near the edge.
    double ph = 2.0 * N * (X * std::sqrt(one_m) + std::asin(X) - kPi / 2.0) +
                0.5 * std::asin(X);
    double g = std::cos(ph);
    double parity = (N % 2 == 0) ? 1.0 : -1.0;
    std::vector<ExpansionTerm> t;
    t.push_back(term(0, 1, rho_w(X), 0.0));
    t.push_back(term(1, 2, 0.0,
                     -g / (std::sqrt(2.0 * kPi * N) * std::pow(one_m, 0.25))));
    t.push_back(term(1, 1, 1.0 / (4.0 * kPi * N * std::sqrt(one_m)),
                     -parity * g / (2.0 * kPi * N * std::pow(one_m, 0.25))));
    return finish(X, std::move(t));
}

ExpansionValue bulk_loe(double X, int N, double alpha, bool guard) {
    if (N % 2 != 0) throw std::invalid_argument("bulk_loe: N must be even");
    check_open_interval(X, N, 0.0, 1.0, guard, "bulk_loe");
    ExpansionValue ue = bulk_lue(X, N, alpha, 1, guard);
    // regrouping of the orthogonal-ensemble correction against the unitary
    // expansion: + (cos 2A / (4 pi X(1-X)) - 1/(2 pi sqrt(X(1-X)))) / N
    double c = std::cos(phase_lue(X, N, alpha));
    double diff_osc = c / (4.0 * kPi * X * (1.0 - X) * N);
    double diff_sm = -1.0 / (2.0 * kPi * std::sqrt(X * (1.0 - X)) * N);
    std::vector<ExpansionTerm> t;
    t.push_back(ue.terms[0]);
    t.push_back(term(1, 1, ue.terms[1].smooth + diff_sm,
                     ue.terms[1].oscillatory + diff_osc));
    return finish(X, std::move(t));
}

ExpansionValue bulk_lse(double X, int N, double alpha, bool guard) {
    check_open_interval(X, N, 0.0, 1.0, guard, "bulk_lse");
    double g = g_laguerre(0, 2 * N, alpha, X);
    std::vector<ExpansionTerm> t;
    t.push_back(term(0, 1, rho_mp(X), 0.0));
    t.push_back(term(1, 2, 0.0,
                     -g / (2.0 * std::sqrt(kPi * N) * std::pow(X, 0.75) *
                           std::pow(1.0 - X, 0.25))));
    t.push_back(term(1, 1,
                     (alpha + 1.0) / (4.0 * kPi * N * std::sqrt(X * (1.0 - X))),
                     0.0));
    return finish(X, std::move(t));
}

ExpansionValue bulk_expansion(const EnsembleSpec& spec, double X, bool guard) {
    spec.validate();
    if (spec.family == Family::gaussian) {
        if (spec.beta == 2) return bulk_gue(X, spec.N, 4, guard);
        if (spec.beta == 1) return bulk_goe(X, spec.N, guard);
        return bulk_gse(X, spec.N, guard);
    }
    if (spec.beta == 2) return bulk_lue(X, spec.N, spec.alpha, 2, guard);
    if (spec.beta == 1) return bulk_loe(X, spec.N, spec.alpha, guard);
    return bulk_lse(X, spec.N, spec.alpha, guard);
}

} // namespace rmt::bulk
