#include "mhbez/checks.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "mhbez/analysis.hpp"
#include "mhbez/bezout.hpp"
#include "mhbez/optimizer.hpp"
#include "mhbez/reduction.hpp"

namespace mhbez::checks {

unsigned long long graph_count(unsigned vertices) {
    const unsigned pairs = vertices * (vertices - (vertices ? 1 : 0)) / 2;
    return 1ull << pairs;
}

Graph graph_from_mask(unsigned vertices, unsigned long long mask) {
    Graph g(vertices);
    unsigned bit = 0;
    for (unsigned u = 0; u < vertices; ++u)
        for (unsigned v = u + 1; v < vertices; ++v, ++bit)
            if (mask >> bit & 1u) g.add_edge(u, v);
    return g;
}

CheckResult gap_bound(unsigned max_n) {
    CheckResult r{"gap bound B(a) >= 4/3 B(n,n,n), n <= " + std::to_string(max_n), true, {}};
    std::size_t rows = 0;
    for (unsigned n = 1; n <= max_n; ++n) {
        const auto report = gap_check(n);
        rows += report.rows.size();
        for (const auto& row : report.rows) {
            if (row.meets_bound) continue;
            r.passed = false;
            std::ostringstream os;
            os << "n=" << n << " a=(";
            for (std::size_t j = 0; j < row.a.size(); ++j) os << (j ? "," : "") << row.a[j];
            os << ") ratio " << to_string(row.ratio) << "; ";
            r.detail += os.str();
        }
    }
    if (r.passed) r.detail = std::to_string(rows) + " block-size vectors checked";
    return r;
}

CheckResult product_identity(unsigned random_supports, unsigned long long seed) {
    CheckResult r{"min Bez(A^l) == multinomial(lm; m..m) * min Bez(A)^l", true, {}};
    const auto k3 = clique_support(complete_graph(3));
    const auto square = verify_product_theorem(k3, 2);
    std::ostringstream os;
    os << "A(K_3)^2: " << square.power_minimum << " vs " << square.predicted;
    if (!square.holds() || square.predicted != 720) r.passed = false;

    std::mt19937_64 rng(seed);
    unsigned failures = 0;
    for (unsigned t = 0; t < random_supports; ++t) {
        const std::size_t m = 1 + rng() % 4;
        std::set<ExponentVector> mons{ExponentVector(m, 0)};
        std::size_t box = 1;
        for (std::size_t i = 0; i < m; ++i) box *= 3;
        const std::size_t target = std::min<std::size_t>(1 + rng() % 8, box - 1);
        while (mons.size() < target + 1) {
            ExponentVector e(m);
            for (auto& x : e) x = static_cast<Exponent>(rng() % 3);
            mons.insert(e);
        }
        const Support a(m, {mons.begin(), mons.end()});
        if (!verify_product_theorem(a, 1).holds()) ++failures;
    }
    os << "; l=1 identity failed on " << failures << " of " << random_supports << " random supports";
    if (failures) r.passed = false;
    r.detail = os.str();
    return r;
}

CheckResult pigeonhole_bound(unsigned max_vertices) {
    CheckResult r{"Bez(A(G x K_3); I) >= B(a) and d_j >= ceil(a_j/|G|), |G| <= " + std::to_string(max_vertices),
                  true, {}};
    const Graph k3 = complete_graph(3);
    unsigned long long partitions = 0;
    for (unsigned n = 1; n <= max_vertices; ++n) {
        for (unsigned long long mask = 0; mask < graph_count(n); ++mask) {
            const auto a = clique_support(cartesian_product(graph_from_mask(n, mask), k3));
            PartitionEnumerator it(3 * n);
            do {
                const auto p = it.partition();
                const auto prof = block_profile(a, p);
                std::vector<unsigned> sizes;
                for (std::size_t j = 0; j < p.block_count(); ++j) {
                    const auto size = static_cast<unsigned>(p[j].size());
                    sizes.push_back(size);
                    if (prof.degrees[j] < (size + n - 1) / n) r.passed = false;
                }
                if (bezout_equal_support(a, p) < b_abstraction(n, sizes)) r.passed = false;
                ++partitions;
                if (!r.passed) {
                    r.detail = "violated for |G|=" + std::to_string(n) + " mask=" + std::to_string(mask) +
                               " partition " + p.to_string();
                    return r;
                }
            } while (it.next());
        }
    }
    r.detail = std::to_string(partitions) + " (graph, partition) pairs checked";
    return r;
}

CheckResult balanced_coloring(unsigned max_vertices) {
    CheckResult r{"balanced colouring of G x K_3 <=> G 3-colourable, |G| <= " + std::to_string(max_vertices), true,
                  {}};
    const Graph k3 = complete_graph(3);
    unsigned long long graphs = 0, colourings = 0;
    for (unsigned n = 1; n <= max_vertices; ++n) {
        for (unsigned long long mask = 0; mask < graph_count(n); ++mask) {
            const Graph g = graph_from_mask(n, mask);
            ++graphs;
            if (balanced_coloring_check(g) != is_three_colorable(g).colorable) {
                r.passed = false;
                r.detail = "equivalence fails for |G|=" + std::to_string(n) + " mask=" + std::to_string(mask);
                return r;
            }
            const Graph h = cartesian_product(g, k3);
            for_each_three_coloring(h, [&](const Coloring& c) {
                ++colourings;
                std::size_t count[3] = {0, 0, 0};
                for (auto x : c) ++count[x];
                if (count[0] != n || count[1] != n || count[2] != n) r.passed = false;
                return r.passed;
            });
            if (!r.passed) {
                r.detail = "unbalanced colouring of G x K_3 for |G|=" + std::to_string(n) + " mask=" +
                           std::to_string(mask);
                return r;
            }
        }
    }
    r.detail = std::to_string(graphs) + " graphs, " + std::to_string(colourings) + " colourings of G x K_3";
    return r;
}

CheckResult ceiling_inequality(unsigned limit) {
    CheckResult r{"(ceil(x/n) n/x)^x >= 1 + ((n-x) mod n), 1 <= x,n <= " + std::to_string(limit), true, {}};
    for (unsigned x = 1; x <= limit; ++x)
        for (unsigned n = 1; n <= limit; ++n) {
            const auto [lhs, rhs] = lemma_triv_check(x, n);
            if (lhs < rhs) {
                r.passed = false;
                r.detail = "fails at x=" + std::to_string(x) + " n=" + std::to_string(n);
                return r;
            }
        }
    r.detail = std::to_string(limit * limit) + " pairs checked exactly";
    return r;
}

CheckResult stirling_bracket(unsigned max_x) {
    CheckResult r{"Stirling bracket around x!, x <= " + std::to_string(max_x), true, {}};
    for (unsigned x = 1; x <= max_x; ++x) {
        const auto [lo, hi] = mhbez::stirling_bracket(x);
        const auto exact = factorial(x).convert_to<long double>();
        if (!(lo < exact && exact < hi)) {
            r.passed = false;
            r.detail = "fails at x=" + std::to_string(x);
            return r;
        }
    }
    r.detail = "all x in [1," + std::to_string(max_x) + "]";
    return r;
}

CheckResult stirling_positivity(unsigned max_x) {
    CheckResult r{"g_n(x) > 0 outside the exceptional pairs, x <= " + std::to_string(max_x), true, {}};
    const auto exceptional = exceptional_pairs();
    const std::set<std::pair<unsigned, unsigned>> skip(exceptional.begin(), exceptional.end());
    unsigned long long evaluated = 0;
    for (unsigned x = 1; x <= max_x; ++x)
        for (unsigned n = (4 * x + 2) / 3; n <= 4 * max_x; ++n) {
            if (4 * x > 3 * n || skip.count({n, x})) continue;
            ++evaluated;
            if (stirling_g(n, x) <= 0.0) {
                r.passed = false;
                r.detail = "g <= 0 at n=" + std::to_string(n) + " x=" + std::to_string(x);
                return r;
            }
        }
    r.detail = std::to_string(evaluated) + " pairs evaluated; exceptional set has " +
               std::to_string(exceptional.size()) + " pairs";
    return r;
}

}  // namespace mhbez::checks
