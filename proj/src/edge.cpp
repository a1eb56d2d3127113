#include "rmt/edge.hpp"

#include <cmath>
#include <stdexcept>

#include "rmt/specfun.hpp"

namespace rmt::edge {

namespace sf = specfun;

namespace {

struct AiryAt {
    double a, ap, tail;
};

AiryAt airy_at(double xi) {
    return {sf::airy_ai(xi), sf::airy_ai_prime(xi), sf::airy_tail(xi)};
}

EdgeTerm term(int num3, double v) {
    EdgeTerm t;
    t.order_num = num3;
    t.value = v;
    return t;
}

EdgeExpansion finish(double xi, std::vector<EdgeTerm> terms) {
    EdgeExpansion e;
    e.xi = xi;
    e.terms = std::move(terms);
    for (const auto& t : e.terms) e.total += t.value;
    return e;
}

} // namespace

double EdgeExpansion::order_sum(double max_order) const {
    double acc = 0.0;
    for (const auto& t : terms)
        if (t.order() <= max_order + 1e-12) acc += t.value;
    return acc;
}

EdgeExpansion edge_gue(double xi, int N) {
    if (N < 1) throw std::invalid_argument("edge_gue: N >= 1");
    AiryAt v = airy_at(xi);
    double a2 = v.a * v.a, ap2 = v.ap * v.ap, aap = v.a * v.ap;
    double n23 = std::pow(double(N), -2.0 / 3.0);
    std::vector<EdgeTerm> t;
    t.push_back(term(0, ap2 - xi * a2));
    t.push_back(term(2, -(3.0 * xi * xi * a2 - 2.0 * xi * ap2 - 3.0 * aap) / 20.0 * n23));
    t.push_back(term(3, ((-xi / 12.0 + 3.0 * std::pow(xi, 4) / 40.0 +
                          std::pow(xi, 7) / 48.0) *
                             a2 -
                         3.0 * xi * xi / 40.0 * aap +
                         (1.0 / 12.0 - std::pow(xi, 3) / 20.0 -
                          std::pow(xi, 6) / 48.0) *
                             ap2) /
                        N));
    return finish(xi, std::move(t));
}

EdgeExpansion edge_lue(double xi, int N, double alpha) {
    if (N < 1) throw std::invalid_argument("edge_lue: N >= 1");
    if (alpha < 0.0) throw std::invalid_argument("edge_lue: alpha >= 0");
    AiryAt v = airy_at(xi);
    double a2 = v.a * v.a, ap2 = v.ap * v.ap, aap = v.a * v.ap;
    double cbrt2 = std::cbrt(2.0);
    double n13 = std::cbrt(1.0 / N);
    std::vector<EdgeTerm> t;
    t.push_back(term(0, ap2 - xi * a2));
    t.push_back(term(1, alpha / cbrt2 * a2 * n13));
    t.push_back(term(2, cbrt2 / 10.0 *
                            (3.0 * xi * xi * a2 - 2.0 * xi * ap2 +
                             (2.0 - 5.0 * alpha * alpha) * aap) *
                            n13 * n13));
    t.push_back(term(3, alpha *
                            ((-7.0 * xi / 15.0 + alpha * alpha * xi / 6.0) * a2 -
                             xi * xi / 5.0 * aap +
                             (-1.0 / 6.0 + alpha * alpha / 6.0) * ap2) /
                            N));
    return finish(xi, std::move(t));
}

EdgeExpansion edge_goe(double xi, int N) {
    if (N < 1 || N % 2 != 0) throw std::invalid_argument("edge_goe: N must be even");
    AiryAt v = airy_at(xi);
    double one_m_tail = 1.0 - v.tail;
    std::vector<EdgeTerm> t;
    t.push_back(term(0, v.ap * v.ap - xi * v.a * v.a + 0.5 * v.a * one_m_tail));
    // The N^{-1/3} coefficient is (1/4)(Ai'(1-T) - Ai^2), the bracket of the
    // general orthogonal-symmetry edge formula. Coefficients fitted from the
    // exact density converge to it, and its |xi| -> -inf expansion reproduces
    // both the smooth and the oscillatory bulk-substitution terms at this
    // order; the fit rules out the (1/2)Ai'(1-T) form.
    t.push_back(term(1, 0.25 * (v.ap * one_m_tail - v.a * v.a) * std::cbrt(1.0 / N)));
    return finish(xi, std::move(t));
}

EdgeExpansion edge_gse(double xi, int N) {
    if (N < 1) throw std::invalid_argument("edge_gse: N >= 1");
    AiryAt v = airy_at(xi);
    std::vector<EdgeTerm> t;
    t.push_back(term(0, v.ap * v.ap - xi * v.a * v.a - 0.5 * v.a * v.tail));
    // (1/4)(Ai^2 + Ai' T) for the same reason as the orthogonal case: the
    // exact density demands it and only this form carries the half-frequency
    // oscillation the bulk substitution produces at O(N^{-1/3}).
    t.push_back(term(1, 0.25 * (v.a * v.a + v.ap * v.tail) *
                        std::cbrt(1.0 / (2.0 * N))));
    return finish(xi, std::move(t));
}

EdgeExpansion edge_loe(double xi, int N, double alpha) {
    if (N < 1 || N % 2 != 0) throw std::invalid_argument("edge_loe: N must be even");
    if (alpha < 0.0) throw std::invalid_argument("edge_loe: alpha >= 0");
    AiryAt v = airy_at(xi);
    double one_m_tail = 1.0 - v.tail;
    std::vector<EdgeTerm> t;
    t.push_back(term(0, v.ap * v.ap - xi * v.a * v.a + 0.5 * v.a * one_m_tail));
    t.push_back(term(1, -(alpha - 1.0) / 2.0 *
                            (v.ap * one_m_tail - v.a * v.a) *
                            std::cbrt(1.0 / (2.0 * N))));
    return finish(xi, std::move(t));
}

EdgeExpansion edge_lse(double xi, int N, double alpha) {
    if (N < 1) throw std::invalid_argument("edge_lse: N >= 1");
    if (alpha < 0.0) throw std::invalid_argument("edge_lse: alpha >= 0");
    AiryAt v = airy_at(xi);
    std::vector<EdgeTerm> t;
    t.push_back(term(0, v.ap * v.ap - xi * v.a * v.a - 0.5 * v.a * v.tail));
    t.push_back(term(1, (alpha + 1.0) / 2.0 * (v.a * v.a + v.ap * v.tail) *
                            std::cbrt(1.0 / (4.0 * N))));
    return finish(xi, std::move(t));
}

EdgeExpansion edge_expansion(const EnsembleSpec& spec, double xi) {
    spec.validate();
    if (spec.family == Family::gaussian) {
        if (spec.beta == 2) return edge_gue(xi, spec.N);
        if (spec.beta == 1) return edge_goe(xi, spec.N);
        return edge_gse(xi, spec.N);
    }
    if (spec.beta == 2) return edge_lue(xi, spec.N, spec.alpha);
    if (spec.beta == 1) return edge_loe(xi, spec.N, spec.alpha);
    return edge_lse(xi, spec.N, spec.alpha);
}

double edge_to_raw_factor(const EnsembleSpec& spec) {
    return exactdens::edge_normalization(spec);
}

} // namespace rmt::edge
