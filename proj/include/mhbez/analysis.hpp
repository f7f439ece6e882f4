#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mhbez/core.hpp"

namespace mhbez {

// ---------------------------------------------------------------------------
// Block-size lower bound for G x K_3 gadgets
// ---------------------------------------------------------------------------

/// multinomial(3n; a) * prod_j ceil(a_j / n)^a_j.
/// Throws std::invalid_argument when n == 0 or sum(a) != 3n.
BigNat b_abstraction(unsigned n, std::span<const unsigned> a);

/// Integer partitions of `total` with parts >= 1, each non-increasing,
/// listed in reverse lexicographic order: (total), (total-1, 1), ...
std::vector<std::vector<unsigned>> integer_partitions(unsigned total);

/// The gap bound: every block-size vector other than (n, n, n) costs at
/// least 4/3 of the balanced one.
inline const Rational kGapFactor{4, 3};

struct GapRow {
    std::vector<unsigned> a;
    BigNat value;
    Rational ratio;  // value / B(n, n, n)
    bool balanced = false;
    bool meets_bound = false;  // balanced, or ratio >= 4/3
};

struct GapReport {
    unsigned n = 0;
    BigNat balanced_value;
    std::vector<GapRow> rows;

    bool holds() const;
    /// Smallest ratio over the unbalanced rows.
    Rational min_unbalanced_ratio() const;
};

/// Largest n accepted by gap_check.
inline constexpr unsigned kMaxGapN = 12;

/// Throws SearchGuardError when n is 0 or above kMaxGapN.
GapReport gap_check(unsigned n);

/// Both sides of (ceil(x/n) * n/x)^x >= 1 + ((n - x) mod n), exactly.
std::pair<Rational, Rational> lemma_triv_check(unsigned x, unsigned n);

// ---------------------------------------------------------------------------
// Stirling-side estimates (floating point)
// ---------------------------------------------------------------------------

/// log of n^x / (sqrt(2 pi) x^(x + 1/2)) * e^(-1/(12x)).
double stirling_g(double n, double x);

/// x log(4/3) - log(x)/2 - 1/(12x) - log(2 pi)/2, the n-free lower bound of
/// stirling_g when n/x >= 4/3.
double stirling_h(double x);

/// The two roots of h'(x) = 0, ascending.
std::pair<double, double> stirling_h_critical_points();

/// Threshold above which stirling_g(n, x) > 0, for 1 <= x <= 6.
/// Throws std::out_of_range otherwise.
double n_zero(unsigned x);

/// The sqrt(2 pi) x^(x+1/2) e^(-x) and sqrt(2 pi) x^(x+1/2) e^(-x+1/(12x))
/// brackets around x!.
std::pair<long double, long double> stirling_bracket(unsigned x);

struct CaseConstants {
    double case1;  // 2 pi / sqrt(3) * e^(-1/36)
    double case2;  // (2/3) sqrt(2 pi) e^(-1/6)
    double case3;  // 2 e^(-1/4)
};

CaseConstants case_constants();

/// Pairs (n, x) with 4x <= 3n and stirling_g(n, x) <= 0.
std::vector<std::pair<unsigned, unsigned>> exceptional_pairs();

// ---------------------------------------------------------------------------
// Table reproduction
// ---------------------------------------------------------------------------

struct Table1Row {
    unsigned n = 0;
    unsigned x = 0;                  // the exceptional part size
    std::vector<unsigned> a;         // non-increasing
    std::vector<unsigned> positions; // 1-based j >= 4 with a_j == x
    BigNat value;                    // B(a), recomputed
    BigNat balanced_value;           // B(n, n, n)
    Rational ratio;
    std::optional<BigNat> published_value;
    std::optional<Rational> published_ratio;

    bool matches_published() const;
};

/// Every block-size vector a of 3n, n in the exceptional set, whose entries
/// a_j (j >= 4) include the exceptional part. Rows are recomputed from the
/// definition and paired with the historically published figures.
std::vector<Table1Row> reproduce_table1();

struct Table2Row {
    unsigned x = 0;
    double lower = 0;                 // 4x/3
    double threshold = 0;             // n_zero(x)
    std::vector<unsigned> candidates; // integers n with 4x/3 <= n <= n_zero(x)
    double published_threshold = 0;
    std::vector<unsigned> published_candidates;

    bool candidates_match() const { return candidates == published_candidates; }
};

std::vector<Table2Row> reproduce_table2();

/// Exact p/q, or just p when q == 1.
std::string to_string(const Rational& r);

}  // namespace mhbez
