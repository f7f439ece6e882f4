#include <doctest.h>

#include <random>
#include <set>

#include "../support/oracles.hpp"
#include "mhbez/bezout.hpp"
#include "mhbez/checks.hpp"
#include "mhbez/gadgets.hpp"

using namespace mhbez;

namespace {

Graph figure_graph() { return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}); }

Graph random_graph(std::mt19937_64& rng, std::size_t m, double p) {
    Graph g(m);
    std::bernoulli_distribution coin(p);
    for (std::size_t u = 0; u < m; ++u)
        for (std::size_t v = u + 1; v < m; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

// Subsets of size <= 3 that are cliques, as 0/1 vectors, by bitmask scan.
std::set<ExponentVector> brute_clique_vectors(const Graph& h) {
    const std::size_t m = h.vertex_count();
    std::set<ExponentVector> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        if (__builtin_popcountll(mask) > 3) continue;
        bool clique = true;
        for (std::size_t u = 0; u < m && clique; ++u)
            for (std::size_t v = u + 1; v < m && clique; ++v)
                if ((mask >> u & 1) && (mask >> v & 1) && !h.adjacent(u, v)) clique = false;
        if (!clique) continue;
        ExponentVector e(m, 0);
        for (std::size_t u = 0; u < m; ++u) e[u] = mask >> u & 1;
        out.insert(e);
    }
    return out;
}

}  // namespace

TEST_CASE("graph construction and validation") {
    const auto k4 = complete_graph(4);
    CHECK(k4.edge_count() == 6);
    CHECK(path_graph(5).edge_count() == 4);
    CHECK(cycle_graph(5).edge_count() == 5);
    CHECK(complete_graph(1).edge_count() == 0);
    CHECK(k4.edges().front() == Graph::Edge{0, 1});
    CHECK(k4.degree(2) == 3);

    Graph g(3);
    CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 3), std::invalid_argument);
    g.add_edge(0, 1);
    CHECK_THROWS_AS(g.add_edge(1, 0), std::invalid_argument);
}

TEST_CASE("cartesian product follows the adjacency rule") {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 20; ++t) {
        const auto g1 = random_graph(rng, 1 + rng() % 5, 0.5);
        const auto g2 = random_graph(rng, 1 + rng() % 4, 0.5);
        const auto p = cartesian_product(g1, g2);
        const std::size_t m2 = g2.vertex_count();
        REQUIRE(p.vertex_count() == g1.vertex_count() * m2);
        CHECK(p.edge_count() == g1.edge_count() * m2 + g2.edge_count() * g1.vertex_count());
        for (std::size_t x = 0; x < p.vertex_count(); ++x)
            for (std::size_t y = x + 1; y < p.vertex_count(); ++y) {
                const auto a1 = x / m2, a2 = x % m2, b1 = y / m2, b2 = y % m2;
                const bool expected = (a1 == b1 && g2.adjacent(a2, b2)) || (a2 == b2 && g1.adjacent(a1, b1));
                CHECK(p.adjacent(x, y) == expected);
            }
    }
    // K_2 x K_2 is the 4-cycle.
    const auto c4 = cartesian_product(complete_graph(2), complete_graph(2));
    CHECK(c4.edge_count() == 4);
    for (std::size_t v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);
    CHECK_FALSE(c4.adjacent(0, 3));
}

TEST_CASE("triangles") {
    CHECK(triangles(complete_graph(4)).size() == 4);
    CHECK(triangles(cycle_graph(5)).empty());
    const auto t = triangles(figure_graph());
    REQUIRE(t.size() == 1);
    CHECK(t[0] == std::array<std::size_t, 3>{0, 1, 2});
}

TEST_CASE("clique support of the small example graph") {
    const Support expected(4, {{0, 0, 0, 0},
                               {1, 0, 0, 0},
                               {0, 1, 0, 0},
                               {0, 0, 1, 0},
                               {0, 0, 0, 1},
                               {1, 1, 0, 0},
                               {1, 0, 1, 0},
                               {0, 1, 1, 0},
                               {0, 0, 1, 1},
                               {1, 1, 1, 0}});
    CHECK(clique_support(figure_graph()) == expected);
    CHECK(clique_support(complete_graph(3)).size() == 8);
    CHECK(clique_support(Graph(5)).size() == 6);
}

TEST_CASE("clique support matches subset enumeration") {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 30; ++t) {
        const auto g = random_graph(rng, 1 + rng() % 9, 0.6);
        const auto a = clique_support(g);
        const auto brute = brute_clique_vectors(g);
        CHECK(a.size() == brute.size());
        for (const auto& e : brute) CHECK(a.contains(e));
        CHECK(a.contains_zero());
    }
}

TEST_CASE("clique support is never homogeneous in any block") {
    const auto a = clique_support(cartesian_product(path_graph(2), complete_graph(3)));
    const auto sys = SupportSystem::replicate(a);
    auto check = [&](const Partition& p) {
        const auto dims = projective_dimensions_unchecked(sys, p, degree_matrix(sys, p));
        for (bool h : dims.homogeneous) CHECK_FALSE(h);
    };
    check(Partition::singletons(6));
    check(Partition::single_block(6));
    check(parse_partition("1,2|3,4,5|6", 6));
}

TEST_CASE("power support") {
    const auto a = clique_support(complete_graph(3));
    CHECK(power_support(a, 1) == a);
    const auto sq = power_support(a, 2);
    CHECK(sq.variables() == 6);
    CHECK(sq.size() == 64);
    CHECK(sq.contains_zero());
    CHECK(sq.contains(ExponentVector{1, 1, 0, 0, 0, 1}));
    CHECK_FALSE(sq.contains(ExponentVector{1, 1, 0, 0, 0, 2}));
    CHECK_THROWS_AS(power_support(a, 7), SizeGuardError);
    CHECK_THROWS_AS(power_support(a, 3, 500), SizeGuardError);
    CHECK(power_support(a, 3, 512).size() == 512);
}

TEST_CASE("eigenvalue support") {
    const auto e = eigenvalue_support(3);
    CHECK(e.variables() == 3);
    CHECK(e.size() == 6);
    CHECK(e.contains(ExponentVector{1, 0, 1}));
    CHECK(e.max_total_degree() == 2);
    CHECK_THROWS(eigenvalue_support(1));
}

TEST_CASE("three-colouring") {
    auto yes = [](const Graph& g) {
        const auto r = is_three_colorable(g);
        if (r.colorable) {
            REQUIRE(r.witness);
            CHECK(is_proper_coloring(g, *r.witness));
        }
        return r.colorable;
    };
    CHECK(yes(complete_graph(3)));
    CHECK_FALSE(yes(complete_graph(4)));
    CHECK(yes(cycle_graph(6)));
    CHECK(yes(cycle_graph(7)));
    CHECK(yes(Graph(0)));
    CHECK(yes(cartesian_product(complete_graph(3), complete_graph(3))));
    // Wheel W_5: odd cycle plus hub needs 4 colours.
    Graph wheel = cycle_graph(5);
    Graph w(6, wheel.edges());
    for (std::size_t v = 0; v < 5; ++v) w.add_edge(v, 5);
    CHECK_FALSE(yes(w));
}

TEST_CASE("colouring decision matches brute force on small graphs") {
    for (unsigned m = 1; m <= 5; ++m) {
        for (unsigned long long mask = 0; mask < checks::graph_count(m); ++mask) {
            const auto g = checks::graph_from_mask(m, mask);
            bool brute = false;
            Coloring c(m, 0);
            unsigned codes = 1;
            for (unsigned v = 0; v < m; ++v) codes *= 3;
            for (unsigned code = 0; code < codes && !brute; ++code) {
                unsigned x = code;
                for (unsigned v = 0; v < m; ++v, x /= 3) c[v] = static_cast<std::uint8_t>(x % 3);
                brute = is_proper_coloring(g, c);
            }
            CHECK(is_three_colorable(g).colorable == brute);
            CHECK(balanced_coloring_check(g) == brute);
        }
    }
}

TEST_CASE("every colouring of G x K_3 is balanced") {
    for (const auto& g : {complete_graph(1), complete_graph(3), path_graph(3), cycle_graph(4)}) {
        const auto h = cartesian_product(g, complete_graph(3));
        std::size_t count = 0;
        for_each_three_coloring(h, [&](const Coloring& c) {
            CHECK(is_proper_coloring(h, c));
            const auto sizes = coloring_partition(c).block_sizes();
            CHECK(sizes == std::vector<std::size_t>(3, g.vertex_count()));
            ++count;
            return true;
        });
        CHECK(count > 0);
    }
}

TEST_CASE("colourings of the product give trilinear systems") {
    const auto g = path_graph(3);
    const auto h = cartesian_product(g, complete_graph(3));
    const auto sys = SupportSystem::replicate(clique_support(h));
    for_each_three_coloring(h, [&](const Coloring& c) {
        const auto d = degree_matrix(sys, coloring_partition(c));
        for (const auto& row : d.entries) CHECK(row == std::vector<Exponent>{1, 1, 1});
        return true;
    });
}

TEST_CASE("colouring enumeration can stop early") {
    int calls = 0;
    for_each_three_coloring(cycle_graph(6), [&](const Coloring&) { return ++calls < 2; });
    CHECK(calls == 2);
}
