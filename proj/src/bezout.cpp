#include "mhbez/bezout.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace mhbez {

namespace {

void require_same_n(std::size_t system_n, const Partition& partition) {
    if (partition.ground_size() != system_n)
        throw std::invalid_argument("partition is over " + std::to_string(partition.ground_size()) +
                                    " elements but the system has " + std::to_string(system_n) + " variables");
}

// Exponent sum of `alpha` restricted to each block.
void block_sums(const ExponentVector& alpha, const std::vector<std::size_t>& owner, std::vector<Exponent>& out) {
    std::fill(out.begin(), out.end(), 0);
    for (std::size_t l = 0; l < alpha.size(); ++l) out[owner[l]] += alpha[l];
}

std::string mismatch_message(unsigned total, std::size_t n) {
    return "projective dimensions sum to " + std::to_string(total) + ", expected " + std::to_string(n);
}

}  // namespace

unsigned ProjectiveDims::total() const { return std::accumulate(dims.begin(), dims.end(), 0u); }

DegreeMatrix degree_matrix(const SupportSystem& system, const Partition& partition) {
    require_same_n(system.variables(), partition);
    const auto owner = partition.block_of();
    const std::size_t k = partition.block_count();

    DegreeMatrix d;
    d.entries.assign(system.variables(), std::vector<Exponent>(k, 0));
    std::vector<Exponent> sums(k);
    for (std::size_t i = 0; i < system.variables(); ++i) {
        for (const auto& alpha : system.rows()[i].monomials()) {
            block_sums(alpha, owner, sums);
            for (std::size_t j = 0; j < k; ++j) d.entries[i][j] = std::max(d.entries[i][j], sums[j]);
        }
    }
    return d;
}

ProjectiveDims projective_dimensions_unchecked(const SupportSystem& system, const Partition& partition,
                                               const DegreeMatrix& degrees) {
    const auto owner = partition.block_of();
    const std::size_t k = partition.block_count();

    ProjectiveDims p;
    p.homogeneous.assign(k, true);
    std::vector<Exponent> sums(k);
    for (std::size_t i = 0; i < system.variables(); ++i) {
        for (const auto& alpha : system.rows()[i].monomials()) {
            block_sums(alpha, owner, sums);
            for (std::size_t j = 0; j < k; ++j)
                if (sums[j] != degrees(i, j)) p.homogeneous[j] = false;
        }
    }
    p.dims.resize(k);
    for (std::size_t j = 0; j < k; ++j) {
        const auto size = static_cast<unsigned>(partition[j].size());
        p.dims[j] = p.homogeneous[j] ? size - 1 : size;
    }
    return p;
}

ProjectiveDims projective_dimensions(const SupportSystem& system, const Partition& partition) {
    const auto degrees = degree_matrix(system, partition);
    auto p = projective_dimensions_unchecked(system, partition, degrees);
    if (p.total() != system.variables()) throw DimensionMismatch(mismatch_message(p.total(), system.variables()));
    return p;
}

BigNat bezout_general(const SupportSystem& system, const Partition& partition) {
    const auto degrees = degree_matrix(system, partition);
    const auto proj = projective_dimensions_unchecked(system, partition, degrees);
    const std::size_t n = system.variables();
    if (proj.total() != n) throw DimensionMismatch(mismatch_message(proj.total(), n));

    const std::size_t k = partition.block_count();
    const auto& cap = proj.dims;

    // Mixed-radix index over exponent vectors e with 0 <= e_j <= cap_j.
    std::vector<std::size_t> stride(k);
    std::size_t cells = 1;
    for (std::size_t j = 0; j < k; ++j) {
        stride[j] = cells;
        cells *= cap[j] + 1;
    }

    std::vector<BigNat> current(cells), next(cells);
    current[0] = 1;
    std::vector<unsigned> e(k);
    for (std::size_t i = 0; i < n; ++i) {
        std::fill(next.begin(), next.end(), BigNat(0));
        for (std::size_t idx = 0; idx < cells; ++idx) {
            if (current[idx].is_zero()) continue;
            std::size_t rest = idx;
            for (std::size_t j = 0; j < k; ++j) {
                e[j] = static_cast<unsigned>(rest % (cap[j] + 1));
                rest /= cap[j] + 1;
            }
            for (std::size_t j = 0; j < k; ++j) {
                if (e[j] == cap[j] || degrees(i, j) == 0) continue;
                next[idx + stride[j]] += current[idx] * degrees(i, j);
            }
        }
        current.swap(next);
    }
    return current[cells - 1];
}

bool BlockProfile::balanced(std::size_t n) const { return std::accumulate(dims.begin(), dims.end(), 0u) == n; }

BlockProfile block_profile(const Support& support, const Partition& partition) {
    require_same_n(support.variables(), partition);
    const auto owner = partition.block_of();
    const std::size_t k = partition.block_count();

    BlockProfile prof;
    prof.degrees.assign(k, 0);
    std::vector<Exponent> lowest(k, std::numeric_limits<Exponent>::max());
    std::vector<Exponent> sums(k);
    for (const auto& alpha : support.monomials()) {
        block_sums(alpha, owner, sums);
        for (std::size_t j = 0; j < k; ++j) {
            prof.degrees[j] = std::max(prof.degrees[j], sums[j]);
            lowest[j] = std::min(lowest[j], sums[j]);
        }
    }
    prof.homogeneous.resize(k);
    prof.dims.resize(k);
    for (std::size_t j = 0; j < k; ++j) {
        prof.homogeneous[j] = lowest[j] == prof.degrees[j];
        const auto size = static_cast<unsigned>(partition[j].size());
        prof.dims[j] = prof.homogeneous[j] ? size - 1 : size;
    }
    return prof;
}

BigNat bezout_equal_support(const Support& support, const Partition& partition) {
    const auto prof = block_profile(support, partition);
    const std::size_t n = support.variables();
    if (!prof.balanced(n))
        throw DimensionMismatch(
            mismatch_message(std::accumulate(prof.dims.begin(), prof.dims.end(), 0u), n));

    BigNat value = multinomial(static_cast<unsigned>(n), prof.dims);
    for (std::size_t j = 0; j < prof.degrees.size(); ++j) value *= power(BigNat(prof.degrees[j]), prof.dims[j]);
    return value;
}

}  // namespace mhbez
