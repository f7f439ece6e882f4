#include "mhbez/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace mhbez {

namespace {

unsigned ceil_div(unsigned a, unsigned b) { return (a + b - 1) / b; }

void partitions_into(unsigned remaining, unsigned largest, std::vector<unsigned>& current,
                     std::vector<std::vector<unsigned>>& out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (unsigned part = std::min(remaining, largest); part >= 1; --part) {
        current.push_back(part);
        partitions_into(remaining - part, part, current, out);
        current.pop_back();
    }
}

const double kLogTwoPi = std::log(2.0 * std::numbers::pi);

}  // namespace

BigNat b_abstraction(unsigned n, std::span<const unsigned> a) {
    if (n == 0) throw std::invalid_argument("b_abstraction needs n >= 1");
    BigNat value = multinomial(3 * n, a);  // rejects sum(a) != 3n
    for (auto part : a) value *= power(BigNat(ceil_div(part, n)), part);
    return value;
}

std::vector<std::vector<unsigned>> integer_partitions(unsigned total) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> current;
    partitions_into(total, total, current, out);
    return out;
}

bool GapReport::holds() const {
    return std::all_of(rows.begin(), rows.end(), [](const GapRow& r) { return r.meets_bound; });
}

Rational GapReport::min_unbalanced_ratio() const {
    std::optional<Rational> best;
    for (const auto& r : rows)
        if (!r.balanced && (!best || r.ratio < *best)) best = r.ratio;
    return best.value_or(Rational(0));
}

GapReport gap_check(unsigned n) {
    if (n == 0 || n > kMaxGapN)
        throw SearchGuardError("gap_check needs 1 <= n <= " + std::to_string(kMaxGapN) + ", got " +
                               std::to_string(n));
    GapReport report;
    report.n = n;
    const std::vector<unsigned> balanced{n, n, n};
    report.balanced_value = b_abstraction(n, balanced);
    for (auto& a : integer_partitions(3 * n)) {
        GapRow row;
        row.value = b_abstraction(n, a);
        row.ratio = Rational(row.value, report.balanced_value);
        row.balanced = a == balanced;
        row.meets_bound = row.balanced || row.ratio >= kGapFactor;
        row.a = std::move(a);
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::pair<Rational, Rational> lemma_triv_check(unsigned x, unsigned n) {
    if (x == 0 || n == 0) throw std::invalid_argument("lemma_triv_check needs x, n >= 1");
    const Rational base(BigNat(ceil_div(x, n)) * n, BigNat(x));
    Rational lhs = 1;
    for (unsigned i = 0; i < x; ++i) lhs *= base;
    const long long diff = static_cast<long long>(n) - static_cast<long long>(x);
    const long long mod = ((diff % n) + n) % n;
    return {lhs, Rational(1 + mod)};
}

double stirling_g(double n, double x) {
    return x * std::log(n) - x * std::log(x) - 0.5 * std::log(x) - 1.0 / (12.0 * x) - 0.5 * kLogTwoPi;
}

double stirling_h(double x) {
    return x * std::log(4.0 / 3.0) - 0.5 * std::log(x) - 1.0 / (12.0 * x) - 0.5 * kLogTwoPi;
}

std::pair<double, double> stirling_h_critical_points() {
    // 12 log(4/3) x^2 - 6x + 1 = 0
    const double c = std::log(4.0 / 3.0);
    const double root = std::sqrt(1.0 - 4.0 / 3.0 * c);
    return {(1.0 - root) / (4.0 * c), (1.0 + root) / (4.0 * c)};
}

double n_zero(unsigned x) {
    if (x < 1 || x > 6) throw std::out_of_range("n_zero is tabulated for 1 <= x <= 6, got " + std::to_string(x));
    const double xd = x;
    return xd * std::exp(std::log(xd) / (2.0 * xd) + 1.0 / (12.0 * xd * xd) + kLogTwoPi / (2.0 * xd));
}

std::pair<long double, long double> stirling_bracket(unsigned x) {
    const long double xl = x;
    const long double core = std::sqrt(2.0L * std::numbers::pi_v<long double>) * std::pow(xl, xl + 0.5L);
    return {core * std::exp(-xl), core * std::exp(-xl + 1.0L / (12.0L * xl))};
}

CaseConstants case_constants() {
    const double pi = std::numbers::pi;
    return {2.0 * pi / std::sqrt(3.0) * std::exp(-1.0 / 36.0),
            2.0 / 3.0 * std::sqrt(2.0 * pi) * std::exp(-1.0 / 6.0), 2.0 * std::exp(-0.25)};
}

std::vector<std::pair<unsigned, unsigned>> exceptional_pairs() {
    // For x >= 7, g_n(x) >= h(x) >= h(7) > 0 whenever n/x >= 4/3; below
    // that, g_n(x) > 0 exactly when n > n_zero(x).
    std::vector<std::pair<unsigned, unsigned>> out;
    for (unsigned x = 1; x <= 6; ++x) {
        const auto top = static_cast<unsigned>(std::ceil(n_zero(x))) + 1;
        for (unsigned n = ceil_div(4 * x, 3); n <= top; ++n)
            if (4 * x <= 3 * n && stirling_g(n, x) <= 0.0) out.emplace_back(n, x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Tables
// ---------------------------------------------------------------------------

namespace {

struct PublishedRow {
    unsigned n;
    std::vector<unsigned> a;
    const char* value;
    Rational ratio;
};

// Reference values, kept for diffing only.
const std::vector<PublishedRow>& published_table1() {
    static const std::vector<PublishedRow> rows{
        {2, {1, 1, 1, 1, 1, 1}, "720", Rational(8)},
        {2, {2, 1, 1, 1, 1}, "360", Rational(4)},
        {2, {2, 2, 1, 1}, "180", Rational(2)},
        {2, {3, 1, 1, 1}, "120", Rational(4, 3)},
        {3, {2, 2, 2, 2, 1}, "22680", Rational(27, 2)},
        {3, {3, 2, 2, 2}, "7560", Rational(9, 2)},
        {4, {3, 3, 3, 3}, "369600", Rational(32, 3)},
        {6, {4, 4, 4, 4, 1, 1}, "19297278000", Rational(1125)},
        {6, {4, 4, 4, 4, 2}, "9648639000", Rational(1125, 2)},
        {6, {5, 4, 4, 4, 1}, "3859455600", Rational(225)},
        {6, {5, 5, 4, 4}, "771891120", Rational(45)},
        {6, {6, 4, 4, 4}, "643242600", Rational(75, 2)},
        {7, {5, 5, 5, 5, 1}, "246387645504", Rational(3087, 5)},
        {7, {6, 5, 5, 5}, "41064607584", Rational(1029, 10)},
        {8, {6, 6, 6, 6}, "2308743493056", Rational(10976, 45)},
    };
    return rows;
}

}  // namespace

bool Table1Row::matches_published() const {
    return published_value && published_ratio && *published_value == value && *published_ratio == ratio;
}

std::vector<Table1Row> reproduce_table1() {
    std::vector<Table1Row> out;
    for (const auto& [n, x] : exceptional_pairs()) {
        const std::vector<unsigned> balanced{n, n, n};
        const BigNat balanced_value = b_abstraction(n, balanced);
        auto all = integer_partitions(3 * n);
        std::sort(all.begin(), all.end());
        for (auto& a : all) {
            Table1Row row;
            for (std::size_t j = 3; j < a.size(); ++j)
                if (a[j] == x) row.positions.push_back(static_cast<unsigned>(j + 1));
            if (row.positions.empty()) continue;
            row.n = n;
            row.x = x;
            row.value = b_abstraction(n, a);
            row.balanced_value = balanced_value;
            row.ratio = Rational(row.value, balanced_value);
            for (const auto& p : published_table1()) {
                if (p.n == n && p.a == a) {
                    row.published_value = BigNat(p.value);
                    row.published_ratio = p.ratio;
                }
            }
            row.a = std::move(a);
            out.push_back(std::move(row));
        }
    }
    return out;
}

std::vector<Table2Row> reproduce_table2() {
    static const double published_threshold[] = {2.724464424, 3.844857634, 4.939610298,
                                                 6.016610872, 7.081620345, 8.137996302};
    static const unsigned published_candidate[] = {2, 3, 4, 5, 6, 8};

    std::vector<Table2Row> out;
    for (unsigned x = 1; x <= 6; ++x) {
        Table2Row row;
        row.x = x;
        row.lower = 4.0 * x / 3.0;
        row.threshold = n_zero(x);
        for (unsigned n = ceil_div(4 * x, 3); n <= row.threshold; ++n) row.candidates.push_back(n);
        row.published_threshold = published_threshold[x - 1];
        row.published_candidates = {published_candidate[x - 1]};
        out.push_back(std::move(row));
    }
    return out;
}

std::string to_string(const Rational& r) {
    const BigNat num = boost::multiprecision::numerator(r);
    const BigNat den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace mhbez
