#pragma once

#include <string>
#include <vector>

#include "mhbez/gadgets.hpp"

namespace mhbez::checks {

/// Outcome of one finite verification run.
struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// B(a) >= 4/3 B(n,n,n) for all block-size vectors a != (n,n,n), n <= max_n.
CheckResult gap_bound(unsigned max_n);

/// min Bez(A(K_3)^2) == multinomial(6; 3, 3) * 6^2, and the l == 1 identity
/// on `random_supports` random supports containing 0.
CheckResult product_identity(unsigned random_supports, unsigned long long seed);

/// For H = G x K_3 and every graph G on at most `max_vertices` vertices,
/// every partition I of V(H): d_j >= ceil(|I_j| / |G|) and
/// Bez(A(H); I) >= B(|I_1|, ..., |I_k|).
CheckResult pigeonhole_bound(unsigned max_vertices);

/// Balanced 3-colourings of G x K_3 exist iff G is 3-colourable, and every
/// 3-colouring of G x K_3 is balanced; all graphs on at most
/// `max_vertices` vertices.
CheckResult balanced_coloring(unsigned max_vertices);

/// Ceiling inequality (ceil(x/n) n/x)^x >= 1 + ((n - x) mod n),
/// exactly, for 1 <= x, n <= limit.
CheckResult ceiling_inequality(unsigned limit);

/// sqrt(2 pi) x^(x+1/2) e^-x < x! < sqrt(2 pi) x^(x+1/2) e^(-x+1/(12x)).
CheckResult stirling_bracket(unsigned max_x);

/// g_n(x) > 0 for x <= 3n/4, x <= max_x, (n, x) outside the exceptional set.
CheckResult stirling_positivity(unsigned max_x);

/// Number of labelled simple graphs on `vertices` vertices.
unsigned long long graph_count(unsigned vertices);

/// The labelled graph whose edge set is `mask` over the pairs
/// (0,1), (0,2), ..., (v-2, v-1) in that order.
Graph graph_from_mask(unsigned vertices, unsigned long long mask);

}  // namespace mhbez::checks
