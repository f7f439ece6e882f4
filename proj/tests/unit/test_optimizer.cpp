#include <doctest.h>

#include <random>
#include <set>

#include "../support/oracles.hpp"
#include "mhbez/bezout.hpp"
#include "mhbez/gadgets.hpp"
#include "mhbez/optimizer.hpp"

using namespace mhbez;

namespace {

// Minimum by brute force over the insertion-built partitions, using the
// closed form directly.
BigNat brute_minimum(const Support& a) {
    bool found = false;
    BigNat best = 0;
    for (const auto& blocks : oracle::all_set_partitions(a.variables())) {
        try {
            const auto v = bezout_equal_support(a, Partition(a.variables(), blocks));
            if (!found || v < best) best = v;
            found = true;
        } catch (const DimensionMismatch&) {
        }
    }
    if (!found) throw DimensionMismatch("no feasible partition");
    return best;
}

}  // namespace

TEST_CASE("enumerator visits Bell(n) distinct partitions") {
    const auto bell = oracle::bell_numbers(10);
    for (std::size_t n = 1; n <= 10; ++n) {
        std::uint64_t count = 0;
        std::set<std::string> seen;
        auto it = enumerate_partitions(n);
        std::vector<std::uint8_t> prev;
        do {
            if (n <= 7) seen.insert(it.partition().to_string());
            if (!prev.empty()) CHECK(prev < it.rgs());
            prev = it.rgs();
            ++count;
        } while (it.next());
        CHECK(BigNat(count) == bell[n]);
        if (n <= 7) CHECK(BigNat(seen.size()) == bell[n]);
    }
}

TEST_CASE("enumerator reports block counts") {
    auto it = enumerate_partitions(4);
    do {
        CHECK(it.blocks() == it.partition().block_count());
    } while (it.next());
}

TEST_CASE("prefix ranges tile the full enumeration") {
    const auto bell = oracle::bell_numbers(9);
    for (std::size_t len = 1; len <= 4; ++len) {
        const auto prefixes = rgs_prefixes(len);
        CHECK(BigNat(prefixes.size()) == bell[len]);
        std::uint64_t total = 0;
        for (const auto& prefix : prefixes) {
            PartitionEnumerator it(9, prefix);
            do {
                CHECK(std::equal(prefix.begin(), prefix.end(), it.rgs().begin()));
                ++total;
            } while (it.next());
        }
        CHECK(BigNat(total) == bell[9]);
    }
}

TEST_CASE("enumerator guards") {
    CHECK_THROWS_AS(PartitionEnumerator(0), SearchGuardError);
    CHECK_THROWS_AS(PartitionEnumerator(kMaxExactVariables + 1), SearchGuardError);
    CHECK_THROWS(PartitionEnumerator(4, {0, 2}));
}

TEST_CASE("exact minimum on small examples") {
    const auto k3 = clique_support(complete_graph(3));
    const auto r = min_bezout_exact(k3);
    CHECK(r.value == 6);
    CHECK(r.argmin.to_string() == "1|2|3");
    CHECK(r.partitions_examined == 5);
    CHECK(r.exact);

    CHECK(min_bezout_exact(Support(1, {{0}, {1}})).value == 1);

    const Support simplex(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(min_bezout_exact(simplex).value == 1);

    CHECK(min_bezout_exact(Support(2, {{1, 0}, {0, 1}})).value == 2);
    CHECK_THROWS_AS(min_bezout_exact(Support(2, {{1, 1}})), DimensionMismatch);
    CHECK_THROWS_AS(min_bezout_exact(Support(16, {ExponentVector(16, 0)})), SearchGuardError);
}

TEST_CASE("exact minimum of the coloured triangle gadget") {
    const auto a = clique_support(cartesian_product(complete_graph(3), complete_graph(3)));
    const auto r = min_bezout_exact(a);
    CHECK(r.value == 1680);
    CHECK(r.value == brute_minimum(a));
    CHECK(r.argmin.block_sizes() == std::vector<std::size_t>{3, 3, 3});
    CHECK(bezout_equal_support(a, r.argmin) == r.value);
}

TEST_CASE("exact minimum agrees with brute force on random supports") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = 1 + rng() % 7;
        const auto a = oracle::random_support(rng, n, 25, 3, rng() % 4 != 0);
        try {
            const auto expected = brute_minimum(a);
            const auto r = min_bezout_exact(a);
            CHECK(r.value == expected);
            CHECK(bezout_equal_support(a, r.argmin) == r.value);
        } catch (const DimensionMismatch&) {
            CHECK_THROWS_AS(min_bezout_exact(a), DimensionMismatch);
        }
    }
}

TEST_CASE("overflowing fast path falls back to big integers") {
    // Degrees around 60 per variable push multinomial * prod d^a past 128 bits.
    const std::size_t n = 8;
    std::vector<ExponentVector> mons{ExponentVector(n, 0)};
    for (std::size_t i = 0; i < n; ++i) {
        ExponentVector e(n, 0);
        e[i] = 60;
        mons.push_back(e);
    }
    mons.push_back(ExponentVector(n, 60));
    const Support a(n, mons);
    CHECK(min_bezout_exact(a).value == brute_minimum(a));
}

TEST_CASE("worker count does not change the result") {
    const auto a = clique_support(cartesian_product(path_graph(3), complete_graph(3)));
    const auto one = min_bezout_exact(a, 1);
    for (unsigned w : {2u, 3u, 8u}) {
        const auto many = min_bezout_exact(a, w);
        CHECK(many.value == one.value);
        CHECK(many.argmin == one.argmin);
        CHECK(many.partitions_examined == one.partitions_examined);
    }
}

TEST_CASE("local search is an upper bound and deterministic") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = 2 + rng() % 6;
        const auto a = oracle::random_support(rng, n, 20, 3, true);
        if (a.max_total_degree() == 0) continue;
        const auto exact = min_bezout_exact(a);
        const auto first = local_search_min(a, 1234 + t, 5);
        const auto again = local_search_min(a, 1234 + t, 5);
        CHECK(first.value >= exact.value);
        CHECK_FALSE(first.exact);
        CHECK(bezout_equal_support(a, first.argmin) == first.value);
        CHECK(first.value == again.value);
        CHECK(first.argmin == again.argmin);
        CHECK(first.partitions_examined == again.partitions_examined);
    }
    const auto k3 = clique_support(complete_graph(3));
    CHECK(local_search_min(k3, 3, 20).value == 6);
}

TEST_CASE("approximation contract") {
    const Rational two(2);
    CHECK(within_factor(10, two, 10));
    CHECK(within_factor(10, two, 19));
    CHECK_FALSE(within_factor(10, two, 20));
    CHECK_FALSE(within_factor(10, two, 5));
    CHECK(within_factor(10, two, 6));
}
