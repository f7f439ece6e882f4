#pragma once

#include <functional>

#include "mhbez/core.hpp"
#include "mhbez/gadgets.hpp"

namespace mhbez {

/// Anything that returns a value for the minimum Bezout number of a support.
using BezoutOracle = std::function<BigNat(const Support&)>;

/// Exhaustive minimizer; exact, and guarded to kMaxExactVariables.
BezoutOracle exact_oracle(unsigned workers = 1);
/// Local search; an upper bound only.
BezoutOracle heuristic_oracle(std::uint64_t seed, unsigned restarts);

/// Smallest l with sqrt(C) <= (4/3)^l, i.e. C <= (16/9)^l. Computed
/// exactly. Throws std::invalid_argument unless C > 1.
unsigned repetitions_for_factor(const Rational& factor);

struct ReductionConfig {
    Rational factor;   // C > 1
    unsigned l = 1;    // repetitions_for_factor(factor)
    BezoutOracle oracle;
    bool exact = true;  // false: the answer is advisory only

    static ReductionConfig with_exact_oracle(const Rational& factor, unsigned workers = 1);
    static ReductionConfig with_heuristic_oracle(const Rational& factor, std::uint64_t seed, unsigned restarts);
};

/// multinomial(3nl; 3n, ..., 3n) * multinomial(3n; n, n, n)^l.
BigNat gadget_denominator(unsigned n, unsigned l);

/// A(G x K_3)^l.
Support reduction_gadget(const Graph& g, unsigned l, std::size_t cap = kDefaultPowerCap);

struct ReductionOutcome {
    bool yes = false;
    Rational rho;  // oracle value / gadget_denominator
    BigNat oracle_value;
    BigNat denominator;
    bool advisory = false;  // oracle was not exact
};

/// Answers 3-colourability of G from one oracle call on A(G x K_3)^l:
/// YES iff rho^2 < C.
ReductionOutcome decide_three_coloring(const Graph& g, const ReductionConfig& cfg);

struct ProductCheck {
    BigNat power_minimum;    // min over partitions of Bez(A^l)
    BigNat base_minimum;     // min over partitions of Bez(A)
    BigNat predicted;        // multinomial(lm; m, ..., m) * base_minimum^l
    bool holds() const { return power_minimum == predicted; }
};

/// Compares min Bez(A^l) with multinomial(lm; m, ..., m) * (min Bez(A))^l by
/// exhaustive search on both sides. Requires 0 in A (std::invalid_argument)
/// and l * m <= kMaxExactVariables (SearchGuardError).
ProductCheck verify_product_theorem(const Support& a, unsigned l, unsigned workers = 1);

}  // namespace mhbez
