#include "mhbez/core.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

namespace mhbez {

// ---------------------------------------------------------------------------
// Support
// ---------------------------------------------------------------------------

Support::Support(std::size_t n, std::vector<ExponentVector> monomials)
    : n_(n), monomials_(std::move(monomials)) {
    if (monomials_.empty())
        throw std::invalid_argument("support must contain at least one monomial");
    for (const auto& alpha : monomials_)
        if (alpha.size() != n_)
            throw std::invalid_argument("exponent vector of length " + std::to_string(alpha.size()) +
                                        " in a support over " + std::to_string(n_) + " variables");
    std::sort(monomials_.begin(), monomials_.end());
    auto dup = std::adjacent_find(monomials_.begin(), monomials_.end());
    if (dup != monomials_.end())
        throw std::invalid_argument("duplicate monomial in support");
}

bool Support::contains(std::span<const Exponent> alpha) const {
    if (alpha.size() != n_) return false;
    ExponentVector key(alpha.begin(), alpha.end());
    return std::binary_search(monomials_.begin(), monomials_.end(), key);
}

bool Support::contains_zero() const {
    // The zero vector is the lexicographic minimum.
    const auto& first = monomials_.front();
    return std::all_of(first.begin(), first.end(), [](Exponent e) { return e == 0; });
}

Exponent Support::max_total_degree() const {
    Exponent best = 0;
    for (const auto& alpha : monomials_)
        best = std::max(best, std::accumulate(alpha.begin(), alpha.end(), Exponent{0}));
    return best;
}

SupportSystem::SupportSystem(std::size_t n, std::vector<Support> rows) : n_(n), rows_(std::move(rows)) {
    if (rows_.size() != n_)
        throw std::invalid_argument("a system in " + std::to_string(n_) + " variables needs " +
                                    std::to_string(n_) + " rows, got " + std::to_string(rows_.size()));
    for (const auto& row : rows_)
        if (row.variables() != n_)
            throw std::invalid_argument("row support is over a different variable count");
}

SupportSystem SupportSystem::replicate(const Support& a) {
    return SupportSystem(a.variables(), std::vector<Support>(a.variables(), a));
}

// ---------------------------------------------------------------------------
// Partition
// ---------------------------------------------------------------------------

Partition::Partition(std::size_t n, std::vector<Block> blocks) : n_(n), blocks_(std::move(blocks)) {
    if (n_ == 0) throw std::invalid_argument("partition of an empty ground set");
    std::vector<bool> seen(n_, false);
    for (auto& block : blocks_) {
        if (block.empty()) throw std::invalid_argument("empty block in partition");
        for (auto i : block) {
            if (i >= n_) throw std::invalid_argument("index " + std::to_string(i + 1) + " out of range");
            if (seen[i]) throw std::invalid_argument("duplicate index " + std::to_string(i + 1));
            seen[i] = true;
        }
        std::sort(block.begin(), block.end());
    }
    auto missing = std::find(seen.begin(), seen.end(), false);
    if (missing != seen.end())
        throw std::invalid_argument("missing index " + std::to_string(missing - seen.begin() + 1));
    std::sort(blocks_.begin(), blocks_.end(),
              [](const Block& x, const Block& y) { return x.front() < y.front(); });
}

Partition Partition::from_rgs(std::span<const std::uint8_t> rgs) {
    std::vector<Block> blocks;
    for (std::size_t i = 0; i < rgs.size(); ++i) {
        std::size_t b = rgs[i];
        if (b > blocks.size()) throw std::invalid_argument("not a restricted growth string");
        if (b == blocks.size()) blocks.emplace_back();
        blocks[b].push_back(i);
    }
    return Partition(rgs.size(), std::move(blocks));
}

Partition Partition::single_block(std::size_t n) {
    Block all(n);
    std::iota(all.begin(), all.end(), std::size_t{0});
    return Partition(n, {std::move(all)});
}

Partition Partition::singletons(std::size_t n) {
    std::vector<Block> blocks;
    for (std::size_t i = 0; i < n; ++i) blocks.push_back({i});
    return Partition(n, std::move(blocks));
}

std::vector<std::size_t> Partition::block_of() const {
    std::vector<std::size_t> owner(n_);
    for (std::size_t j = 0; j < blocks_.size(); ++j)
        for (auto i : blocks_[j]) owner[i] = j;
    return owner;
}

std::vector<std::size_t> Partition::block_sizes() const {
    std::vector<std::size_t> sizes;
    sizes.reserve(blocks_.size());
    for (const auto& block : blocks_) sizes.push_back(block.size());
    return sizes;
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t j = 0; j < blocks_.size(); ++j) {
        if (j) out += '|';
        for (std::size_t t = 0; t < blocks_[j].size(); ++t) {
            if (t) out += ',';
            out += std::to_string(blocks_[j][t] + 1);
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

Partition parse_partition(std::string_view text, std::size_t n) {
    if (n == 0) throw ParseError("partition of an empty ground set", 1);

    std::vector<Partition::Block> blocks(1);
    std::vector<bool> seen(n, false);
    std::size_t block_start = 1;
    bool expect_number = true;

    auto fail_separator = [&](std::size_t at) {
        if (blocks.back().empty())
            throw ParseError("empty block at position " + std::to_string(block_start), block_start);
        throw ParseError("expected an index at position " + std::to_string(at), at);
    };

    std::size_t pos = 0;
    while (pos < text.size()) {
        const char c = text[pos];
        const std::size_t at = pos + 1;
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            ++pos;
        } else if (c >= '0' && c <= '9') {
            if (!expect_number) throw ParseError("expected ',' or '|' at position " + std::to_string(at), at);
            std::size_t value = 0;
            while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
                // saturate; anything above n is reported as out of range
                value = std::min(value * 10 + static_cast<std::size_t>(text[pos] - '0'), n + 1);
                ++pos;
            }
            const auto token = std::string(text.substr(at - 1, pos - at + 1));
            if (value < 1 || value > n)
                throw ParseError("index " + token + " out of range [1," + std::to_string(n) + "] at position " +
                                     std::to_string(at),
                                 at);
            if (seen[value - 1])
                throw ParseError("duplicate index " + token + " at position " + std::to_string(at), at);
            seen[value - 1] = true;
            blocks.back().push_back(value - 1);
            expect_number = false;
        } else if (c == ',' || c == '|') {
            if (expect_number) fail_separator(at);
            if (c == '|') {
                blocks.emplace_back();
                block_start = at + 1;
            }
            expect_number = true;
            ++pos;
        } else {
            throw ParseError(std::string("unexpected character '") + c + "' at position " + std::to_string(at), at);
        }
    }
    if (expect_number) fail_separator(text.size() + 1);
    for (std::size_t i = 0; i < n; ++i)
        if (!seen[i]) throw ParseError("missing index " + std::to_string(i + 1), text.size() + 1);
    return Partition(n, std::move(blocks));
}

// ---------------------------------------------------------------------------
// Combinatorics
// ---------------------------------------------------------------------------

BigNat factorial(unsigned x) {
    BigNat r = 1;
    for (unsigned i = 2; i <= x; ++i) r *= i;
    return r;
}

BigNat binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigNat r = 1;
    // r stays C(n-k+i, i) after step i, an integer at every step.
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

BigNat multinomial(unsigned total, std::span<const unsigned> parts) {
    unsigned long long sum = 0;
    for (auto p : parts) sum += p;
    if (sum != total)
        throw std::invalid_argument("multinomial parts sum to " + std::to_string(sum) + ", expected " +
                                    std::to_string(total));
    BigNat r = 1;
    unsigned running = 0;
    for (auto p : parts) {
        running += p;
        r *= binomial(running, p);
    }
    return r;
}

BigNat power(const BigNat& base, unsigned exponent) { return boost::multiprecision::pow(base, exponent); }

}  // namespace mhbez
