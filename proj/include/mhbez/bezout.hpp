#pragma once

#include <vector>

#include "mhbez/core.hpp"

namespace mhbez {

/// d[i][j]: degree of equation i in the variables of block j.
struct DegreeMatrix {
    std::vector<std::vector<Exponent>> entries;

    std::size_t equations() const noexcept { return entries.size(); }
    std::size_t blocks() const noexcept { return entries.empty() ? 0 : entries.front().size(); }
    Exponent operator()(std::size_t i, std::size_t j) const { return entries[i][j]; }
};

/// Dimension of the projective factor attached to each block.
struct ProjectiveDims {
    std::vector<unsigned> dims;
    std::vector<bool> homogeneous;

    unsigned total() const;
};

/// Max over each row's monomials of the exponent sum inside each block.
/// Throws std::invalid_argument when the partition is over a different n.
DegreeMatrix degree_matrix(const SupportSystem& system, const Partition& partition);

/// Block j is homogeneous when every monomial of every row reaches d[i][j];
/// its dimension is then |I_j| - 1, otherwise |I_j|.
/// Throws DimensionMismatch when the dimensions do not add up to n.
ProjectiveDims projective_dimensions(const SupportSystem& system, const Partition& partition);

/// Same as above, but never throws on the dimension sum; the caller checks
/// `total()`.
ProjectiveDims projective_dimensions_unchecked(const SupportSystem& system, const Partition& partition,
                                               const DegreeMatrix& degrees);

/// The multi-homogeneous Bezout number of a general system: the coefficient
/// of prod_j zeta_j^a_j in prod_i (sum_j d_ij zeta_j).
///
/// Expanded one linear form at a time over a table of monomials in zeta
/// whose j-th degree is capped at a_j; terms that overshoot a cap can never
/// reach the target monomial and are dropped.
BigNat bezout_general(const SupportSystem& system, const Partition& partition);

/// Per-block degree d_j and dimension a_j of an equal-support system.
struct BlockProfile {
    std::vector<Exponent> degrees;
    std::vector<unsigned> dims;
    std::vector<bool> homogeneous;

    bool balanced(std::size_t n) const;
};

BlockProfile block_profile(const Support& support, const Partition& partition);

/// Equal-support closed form: multinomial(n; a) * prod_j d_j^a_j.
/// Throws DimensionMismatch when sum(a) != n.
BigNat bezout_equal_support(const Support& support, const Partition& partition);

}  // namespace mhbez
