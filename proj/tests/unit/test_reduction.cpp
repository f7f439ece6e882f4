#include <doctest.h>

#include <random>

#include "../support/oracles.hpp"
#include "mhbez/bezout.hpp"
#include "mhbez/gadgets.hpp"
#include "mhbez/optimizer.hpp"
#include "mhbez/reduction.hpp"

using namespace mhbez;

TEST_CASE("repetitions for a factor") {
    CHECK(repetitions_for_factor(Rational(16, 9)) == 1);
    CHECK(repetitions_for_factor(Rational(3, 2)) == 1);
    CHECK(repetitions_for_factor(Rational(256, 81)) == 2);
    CHECK(repetitions_for_factor(Rational(257, 81)) == 3);
    unsigned prev = 1;
    for (int k = 3; k <= 60; ++k) {
        const auto l = repetitions_for_factor(Rational(k, 2));
        CHECK(l >= prev);
        // (16/9)^(l-1) < C <= (16/9)^l
        CHECK(power(BigNat(16), l) * 2 >= power(BigNat(9), l) * k);
        CHECK(power(BigNat(16), l - 1) * 2 < power(BigNat(9), l - 1) * k);
        prev = l;
    }
    CHECK_THROWS_AS(repetitions_for_factor(1), std::invalid_argument);
}

TEST_CASE("gadget denominator") {
    CHECK(gadget_denominator(1, 1) == 6);
    CHECK(gadget_denominator(2, 1) == 90);
    CHECK(gadget_denominator(3, 1) == 1680);
    // multinomial(6; 3, 3) * 6^2
    CHECK(gadget_denominator(1, 2) == 720);
    CHECK_THROWS_AS(gadget_denominator(0, 1), std::invalid_argument);
}

TEST_CASE("reduction gadget shape") {
    const auto a = reduction_gadget(complete_graph(2), 1);
    CHECK(a.variables() == 6);
    CHECK(a == clique_support(cartesian_product(complete_graph(2), complete_graph(3))));
    CHECK(reduction_gadget(complete_graph(1), 2).size() == 64);
}

TEST_CASE("decision on small graphs with the exact oracle") {
    const auto cfg = ReductionConfig::with_exact_oracle(Rational(16, 9));
    CHECK(cfg.l == 1);
    CHECK(cfg.exact);

    const auto k3 = decide_three_coloring(complete_graph(3), cfg);
    CHECK(k3.yes);
    CHECK(k3.rho == 1);
    CHECK(k3.oracle_value == 1680);
    CHECK_FALSE(k3.advisory);

    CHECK(decide_three_coloring(complete_graph(2), cfg).yes);
    CHECK(decide_three_coloring(complete_graph(1), cfg).rho == 1);
    CHECK(decide_three_coloring(path_graph(3), cfg).yes);
}

TEST_CASE("heuristic oracle is advisory and never below the exact answer") {
    const auto cfg = ReductionConfig::with_heuristic_oracle(Rational(16, 9), 7, 10);
    CHECK_FALSE(cfg.exact);
    const auto out = decide_three_coloring(complete_graph(2), cfg);
    CHECK(out.advisory);
    CHECK(out.rho >= 1);
}

TEST_CASE("reduction preconditions") {
    auto cfg = ReductionConfig::with_exact_oracle(Rational(2));
    CHECK_THROWS_AS(decide_three_coloring(Graph(0), cfg), std::invalid_argument);
    cfg.factor = 1;
    CHECK_THROWS_AS(decide_three_coloring(complete_graph(1), cfg), std::invalid_argument);
}

TEST_CASE("product identity") {
    const auto k3 = clique_support(complete_graph(3));
    const auto sq = verify_product_theorem(k3, 2);
    CHECK(sq.base_minimum == 6);
    CHECK(sq.power_minimum == 720);
    CHECK(sq.predicted == 720);
    CHECK(sq.holds());

    const Support line(1, {{0}, {1}});
    const auto l2 = verify_product_theorem(line, 2);
    CHECK(l2.power_minimum == 2);
    CHECK(l2.holds());
    CHECK(verify_product_theorem(line, 5).power_minimum == 120);

    std::mt19937_64 rng(77);
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 1 + rng() % 5;
        const auto a = oracle::random_support(rng, n, 8, 2, true);
        if (a.max_total_degree() == 0) continue;
        CHECK(verify_product_theorem(a, 1).holds());
    }

    CHECK_THROWS_AS(verify_product_theorem(Support(1, {{1}, {2}}), 2), std::invalid_argument);
    CHECK_THROWS_AS(verify_product_theorem(k3, 6), SearchGuardError);
}

TEST_CASE("splitting a block across copies never helps") {
    // For A^2 with 0 in A, a block meeting both copies can be split along the
    // copy boundary without raising the Bezout number.
    const auto a = power_support(clique_support(complete_graph(3)), 2);
    auto it = enumerate_partitions(6);
    int straddling = 0;
    do {
        const auto p = it.partition();
        std::vector<Partition::Block> split;
        bool straddles = false;
        for (const auto& block : p.blocks()) {
            Partition::Block left, right;
            for (auto i : block) (i < 3 ? left : right).push_back(i);
            if (!left.empty() && !right.empty()) straddles = true;
            if (!left.empty()) split.push_back(left);
            if (!right.empty()) split.push_back(right);
        }
        if (!straddles) continue;
        ++straddling;
        CHECK(bezout_equal_support(a, Partition(6, split)) <= bezout_equal_support(a, p));
    } while (it.next());
    CHECK(straddling > 100);
}
