#pragma once

#include <vector>

#include "rmt/exactdens.hpp"

// Soft-edge asymptotic densities in Airy variables, with per-order term
// access. Each expansion approximates the edge-normalized quantity returned by
// exactdens::scaled_density with Scaling::edge, e.g. for the GUE
//   (1/(2 N^{2/3})) rho(1 + xi/(2 N^{2/3}); UE_N(e^{-2 N x^2})).

namespace rmt::edge {

struct EdgeTerm {
    double order_num = 0;  // power of 1/N as order_num / 3
    double value = 0.0;    // contribution at the given N
    double order() const { return order_num / 3.0; }
};

struct EdgeExpansion {
    double xi = 0.0;
    std::vector<EdgeTerm> terms;  // strictly increasing orders from {0,1/3,2/3,1}
    double total = 0.0;

    double order_sum(double max_order) const;
};

EdgeExpansion edge_gue(double xi, int N);
EdgeExpansion edge_lue(double xi, int N, double alpha);
EdgeExpansion edge_goe(double xi, int N);
EdgeExpansion edge_gse(double xi, int N);
EdgeExpansion edge_loe(double xi, int N, double alpha);
EdgeExpansion edge_lse(double xi, int N, double alpha);

EdgeExpansion edge_expansion(const EnsembleSpec& spec, double xi);

// Factor converting the edge-normalized expansion back to the raw density
// at edge_raw_abscissa(spec, xi): rho_raw = expansion / factor.
double edge_to_raw_factor(const EnsembleSpec& spec);

} // namespace rmt::edge
