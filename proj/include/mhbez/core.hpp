#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mhbez {

/// Exact non-negative integer. Bezout numbers outgrow 64 bits quickly.
using BigNat = boost::multiprecision::cpp_int;
/// Exact rational, used wherever a comparison has to be sharp.
using Rational = boost::multiprecision::cpp_rational;

using Exponent = std::uint32_t;
/// One monomial z_1^e_1 ... z_n^e_n.
using ExponentVector = std::vector<Exponent>;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

/// Malformed text input. `position()` is a 1-based line or character offset,
/// depending on the format being read.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// The projective dimensions do not add up to the variable count.
class DimensionMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exhaustive search requested on an instance that is too large.
class SearchGuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A constructed object would exceed a configured size cap.
class SizeGuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Support
// ---------------------------------------------------------------------------

/// A finite, non-empty set of exponent vectors over a fixed number of
/// variables. Monomials are kept in lexicographic order, so two supports
/// holding the same set compare equal.
class Support {
public:
    /// Throws std::invalid_argument on an empty set, a length mismatch or
    /// a duplicate monomial.
    Support(std::size_t n, std::vector<ExponentVector> monomials);

    std::size_t variables() const noexcept { return n_; }
    std::size_t size() const noexcept { return monomials_.size(); }
    const std::vector<ExponentVector>& monomials() const noexcept { return monomials_; }
    const ExponentVector& operator[](std::size_t i) const { return monomials_[i]; }

    bool contains(std::span<const Exponent> alpha) const;
    bool contains_zero() const;

    /// Largest total degree over all monomials.
    Exponent max_total_degree() const;

    friend bool operator==(const Support&, const Support&) = default;

private:
    std::size_t n_;
    std::vector<ExponentVector> monomials_;
};

/// Supports A_1..A_n of a square system in n variables.
class SupportSystem {
public:
    SupportSystem(std::size_t n, std::vector<Support> rows);

    /// The system whose n rows all equal `a`.
    static SupportSystem replicate(const Support& a);

    std::size_t variables() const noexcept { return n_; }
    const std::vector<Support>& rows() const noexcept { return rows_; }

private:
    std::size_t n_;
    std::vector<Support> rows_;
};

// ---------------------------------------------------------------------------
// Partition
// ---------------------------------------------------------------------------

/// A set partition of {0..n-1} (printed 1-based). Always stored in
/// canonical form: elements ascending within a block, blocks ordered by
/// their smallest element.
class Partition {
public:
    using Block = std::vector<std::size_t>;

    /// Validates and canonicalizes. Throws std::invalid_argument when the
    /// blocks are not a partition of {0..n-1}.
    Partition(std::size_t n, std::vector<Block> blocks);

    /// From a restricted growth string: rgs[0] == 0 and
    /// rgs[i] <= 1 + max(rgs[0..i-1]).
    static Partition from_rgs(std::span<const std::uint8_t> rgs);

    /// The k == 1 partition.
    static Partition single_block(std::size_t n);
    /// The k == n partition.
    static Partition singletons(std::size_t n);

    std::size_t ground_size() const noexcept { return n_; }
    std::size_t block_count() const noexcept { return blocks_.size(); }
    const std::vector<Block>& blocks() const noexcept { return blocks_; }
    const Block& operator[](std::size_t j) const { return blocks_[j]; }

    /// block_of()[i] is the index of the block holding element i.
    std::vector<std::size_t> block_of() const;
    std::vector<std::size_t> block_sizes() const;

    /// The partition grammar form, e.g. "1,2|3".
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::size_t n_;
    std::vector<Block> blocks_;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// Reads `block ('|' block)*` with `block = int (',' int)*`, 1-based.
/// Whitespace is ignored. ParseError::position() is the 1-based character
/// offset of the offending token.
Partition parse_partition(std::string_view text, std::size_t n);

// ---------------------------------------------------------------------------
// Combinatorics
// ---------------------------------------------------------------------------

BigNat factorial(unsigned x);
BigNat binomial(unsigned n, unsigned k);

/// total! / (parts_1! ... parts_k!). Throws std::invalid_argument when the
/// parts do not sum to `total`.
BigNat multinomial(unsigned total, std::span<const unsigned> parts);

/// base^exponent, exact.
BigNat power(const BigNat& base, unsigned exponent);

}  // namespace mhbez
