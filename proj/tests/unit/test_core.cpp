#include <doctest.h>

#include <algorithm>
#include <random>

#include "../support/oracles.hpp"
#include "mhbez/core.hpp"

using namespace mhbez;

TEST_CASE("multinomial known values") {
    const std::vector<unsigned> two{2, 2, 2}, three{3, 3, 3}, one{5}, six{6, 6, 6, 6};
    CHECK(multinomial(6, two) == 90);
    CHECK(multinomial(9, three) == 1680);
    CHECK(multinomial(5, one) == 1);
    // 24!/(6!)^4
    CHECK(multinomial(24, six) == BigNat("2308743493056"));
    CHECK(multinomial(24, six) == factorial(24) / power(factorial(6), 4));
}

TEST_CASE("multinomial rejects parts that do not sum to the total") {
    const std::vector<unsigned> parts{2, 2};
    CHECK_THROWS_AS(multinomial(5, parts), std::invalid_argument);
    CHECK(multinomial(0, std::vector<unsigned>{}) == 1);
}

TEST_CASE("multinomial of all ones is n!") {
    for (unsigned n = 0; n <= 12; ++n) {
        const std::vector<unsigned> ones(n, 1);
        CHECK(multinomial(n, ones) == factorial(n));
    }
}

TEST_CASE("two-part multinomial equals the Pascal binomial") {
    for (unsigned a = 0; a <= 20; ++a)
        for (unsigned b = 0; b <= 20; ++b) {
            const std::vector<unsigned> parts{a, b};
            CHECK(multinomial(a + b, parts) == oracle::pascal_binomial(a + b, a));
        }
}

TEST_CASE("multinomial is invariant under permutation of parts") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
        std::vector<unsigned> parts(1 + rng() % 5);
        unsigned total = 0;
        for (auto& p : parts) total += (p = rng() % 6);
        const auto ref = multinomial(total, parts);
        std::shuffle(parts.begin(), parts.end(), rng);
        CHECK(multinomial(total, parts) == ref);
    }
}

TEST_CASE("support keeps a canonical set") {
    Support a(2, {{1, 0}, {0, 0}, {0, 1}});
    CHECK(a.size() == 3);
    CHECK(a[0] == ExponentVector{0, 0});
    CHECK(a.contains_zero());
    CHECK(a.contains(ExponentVector{0, 1}));
    CHECK_FALSE(a.contains(ExponentVector{1, 1}));
    CHECK(a == Support(2, {{0, 1}, {0, 0}, {1, 0}}));
    CHECK(a.max_total_degree() == 1);

    CHECK_THROWS_AS(Support(2, {}), std::invalid_argument);
    CHECK_THROWS_AS(Support(2, {{1, 0}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Support(2, {{1, 0, 0}}), std::invalid_argument);
    CHECK_FALSE(Support(1, {{1}}).contains_zero());
}

TEST_CASE("support system needs n rows over n variables") {
    Support a(2, {{0, 0}, {1, 1}});
    CHECK_NOTHROW(SupportSystem(2, {a, a}));
    CHECK_THROWS_AS(SupportSystem(2, {a}), std::invalid_argument);
    CHECK_THROWS_AS(SupportSystem(1, {a}), std::invalid_argument);
    CHECK(SupportSystem::replicate(a).rows().size() == 2);
}

TEST_CASE("parse_partition reads the grammar") {
    auto p = parse_partition("1,2|3", 3);
    REQUIRE(p.block_count() == 2);
    CHECK(p[0] == Partition::Block{0, 1});
    CHECK(p[1] == Partition::Block{2});

    // canonical order: blocks by smallest element
    CHECK(parse_partition("3|1,2", 3) == p);
    CHECK(parse_partition("2,1|3", 3).to_string() == "1,2|3");
    CHECK(parse_partition(" 3 | 2 , 1 ", 3) == p);
}

TEST_CASE("parse_partition errors carry positions") {
    auto position_of = [](std::string_view text, std::size_t n) -> std::size_t {
        try {
            parse_partition(text, n);
        } catch (const ParseError& e) {
            return e.position();
        }
        return 0;
    };
    CHECK_THROWS_WITH_AS(parse_partition("1|1,2", 2), doctest::Contains("duplicate index 1"), ParseError);
    CHECK(position_of("1|1,2", 2) == 3);
    CHECK_THROWS_WITH_AS(parse_partition("1,2", 3), doctest::Contains("missing index 3"), ParseError);
    CHECK_THROWS_WITH_AS(parse_partition("1,4|2,3", 3), doctest::Contains("out of range"), ParseError);
    CHECK(position_of("1,4|2,3", 3) == 3);
    CHECK_THROWS_WITH_AS(parse_partition("0|1,2", 2), doctest::Contains("out of range"), ParseError);
    CHECK_THROWS_WITH_AS(parse_partition("1||2", 2), doctest::Contains("empty block"), ParseError);
    CHECK(position_of("1||2", 2) == 3);
    CHECK_THROWS_WITH_AS(parse_partition("|1,2", 2), doctest::Contains("empty block"), ParseError);
    CHECK_THROWS_WITH_AS(parse_partition("1,2|", 2), doctest::Contains("empty block"), ParseError);
    CHECK_THROWS_WITH_AS(parse_partition("", 2), doctest::Contains("empty block"), ParseError);
    CHECK_THROWS_WITH_AS(parse_partition("1,,2", 2), doctest::Contains("expected an index"), ParseError);
    CHECK_THROWS_WITH_AS(parse_partition("1 2", 2), doctest::Contains("expected ','"), ParseError);
    CHECK_THROWS_WITH_AS(parse_partition("1;2", 2), doctest::Contains("unexpected character"), ParseError);
    CHECK_THROWS_AS(parse_partition("99999999999999999999999", 2), ParseError);
}

TEST_CASE("partition round trip: parse . to_string . parse == parse") {
    for (const auto& blocks : oracle::all_set_partitions(6)) {
        const Partition p(6, blocks);
        const auto again = parse_partition(p.to_string(), 6);
        CHECK(again == p);
        CHECK(parse_partition(again.to_string(), 6) == again);
    }
}

TEST_CASE("partition constructor validates and canonicalizes") {
    const Partition p(4, {{3, 1}, {2, 0}});
    CHECK(p.to_string() == "1,3|2,4");
    CHECK(p.block_of() == std::vector<std::size_t>{0, 1, 0, 1});
    CHECK(p.block_sizes() == std::vector<std::size_t>{2, 2});
    CHECK_THROWS_AS(Partition(3, {{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Partition(2, {{0, 1}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(Partition(2, {{0, 1, 1}}), std::invalid_argument);
    CHECK(Partition::single_block(3).to_string() == "1,2,3");
    CHECK(Partition::singletons(3).to_string() == "1|2|3");
    const std::vector<std::uint8_t> rgs{0, 1, 0, 2};
    CHECK(Partition::from_rgs(rgs).to_string() == "1,3|2|4");
    const std::vector<std::uint8_t> bad{0, 2};
    CHECK_THROWS_AS(Partition::from_rgs(bad), std::invalid_argument);
}
