#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "mhbez/core.hpp"

namespace mhbez {

/// Largest ground set the exhaustive search accepts. Bell(15) is about
/// 1.4e9 partitions.
inline constexpr std::size_t kMaxExactVariables = 15;

/// Walks the set partitions of {1..n} as restricted growth strings in
/// lexicographic order. Optionally restricted to the strings that start
/// with a fixed prefix, which is how the parallel search splits work.
///
///     PartitionEnumerator it(4);
///     do { use(it.partition()); } while (it.next());
class PartitionEnumerator {
public:
    /// Throws SearchGuardError unless 1 <= n <= kMaxExactVariables.
    explicit PartitionEnumerator(std::size_t n);
    /// `prefix` must itself be a restricted growth string of length <= n.
    PartitionEnumerator(std::size_t n, std::vector<std::uint8_t> prefix);

    const std::vector<std::uint8_t>& rgs() const noexcept { return rgs_; }
    /// Number of blocks of the current partition.
    std::size_t blocks() const noexcept { return prefix_max_.back() + 1u; }
    Partition partition() const { return Partition::from_rgs(rgs_); }

    /// Advances to the next string; false once the range is exhausted.
    bool next();

private:
    std::vector<std::uint8_t> rgs_;
    std::vector<std::uint8_t> prefix_max_;  // max(rgs_[0..i])
    std::size_t fixed_;
};

/// Every set partition of {1..n}, once each, in restricted-growth order.
PartitionEnumerator enumerate_partitions(std::size_t n);

/// All restricted growth strings of the given length (the distinct search
/// prefixes).
std::vector<std::vector<std::uint8_t>> rgs_prefixes(std::size_t length);

struct MinimizationResult {
    BigNat value;
    Partition argmin;
    std::uint64_t partitions_examined = 0;
    bool exact = false;
};

/// Minimum of bezout_equal_support over every partition of the variables.
/// Partitions whose projective dimensions do not sum to n are skipped;
/// DimensionMismatch is thrown when none qualifies. Ties go to the first
/// partition in restricted-growth order, for any worker count.
///
/// Throws SearchGuardError when n > kMaxExactVariables.
MinimizationResult min_bezout_exact(const Support& support, unsigned workers = 1);

/// Steepest descent over "move one variable to another block or to a new
/// singleton", restarted from uniformly random set partitions. The result
/// is an upper bound on the minimum and depends only on (support, seed,
/// restarts).
MinimizationResult local_search_min(const Support& support, std::uint64_t seed, unsigned restarts);

/// Approximation contract for a factor C > 1: estimate / C < min < estimate * C.
bool within_factor(const BigNat& estimate, const Rational& factor, const BigNat& exact_min);

}  // namespace mhbez
