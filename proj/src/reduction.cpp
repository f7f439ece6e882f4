#include "mhbez/reduction.hpp"

#include "mhbez/optimizer.hpp"

namespace mhbez {

BezoutOracle exact_oracle(unsigned workers) {
    return [workers](const Support& a) { return min_bezout_exact(a, workers).value; };
}

BezoutOracle heuristic_oracle(std::uint64_t seed, unsigned restarts) {
    return [seed, restarts](const Support& a) { return local_search_min(a, seed, restarts).value; };
}

unsigned repetitions_for_factor(const Rational& factor) {
    if (factor <= 1) throw std::invalid_argument("the approximation factor must exceed 1");
    const Rational step(16, 9);
    unsigned l = 1;
    Rational reach = step;
    while (reach < factor) {
        reach *= step;
        ++l;
    }
    return l;
}

ReductionConfig ReductionConfig::with_exact_oracle(const Rational& factor, unsigned workers) {
    return {factor, repetitions_for_factor(factor), mhbez::exact_oracle(workers), true};
}

ReductionConfig ReductionConfig::with_heuristic_oracle(const Rational& factor, std::uint64_t seed,
                                                       unsigned restarts) {
    return {factor, repetitions_for_factor(factor), heuristic_oracle(seed, restarts), false};
}

BigNat gadget_denominator(unsigned n, unsigned l) {
    if (n == 0 || l == 0) throw std::invalid_argument("gadget_denominator needs n, l >= 1");
    const std::vector<unsigned> copies(l, 3 * n);
    const std::vector<unsigned> colours{n, n, n};
    return multinomial(3 * n * l, copies) * power(multinomial(3 * n, colours), l);
}

Support reduction_gadget(const Graph& g, unsigned l, std::size_t cap) {
    return power_support(clique_support(cartesian_product(g, complete_graph(3))), l, cap);
}

ReductionOutcome decide_three_coloring(const Graph& g, const ReductionConfig& cfg) {
    if (cfg.factor <= 1) throw std::invalid_argument("the approximation factor must exceed 1");
    const auto n = static_cast<unsigned>(g.vertex_count());
    if (n == 0) throw std::invalid_argument("the reduction needs a non-empty graph");

    ReductionOutcome out;
    out.oracle_value = cfg.oracle(reduction_gadget(g, cfg.l));
    out.denominator = gadget_denominator(n, cfg.l);
    out.rho = Rational(out.oracle_value, out.denominator);
    out.yes = out.rho * out.rho < cfg.factor;
    out.advisory = !cfg.exact;
    return out;
}

ProductCheck verify_product_theorem(const Support& a, unsigned l, unsigned workers) {
    if (!a.contains_zero()) throw std::invalid_argument("the product identity needs 0 in the support");
    if (l == 0) throw std::invalid_argument("verify_product_theorem needs l >= 1");
    const std::size_t m = a.variables();
    if (l * m > kMaxExactVariables)
        throw SearchGuardError("A^l has " + std::to_string(l * m) + " variables, above the exact-search limit of " +
                               std::to_string(kMaxExactVariables));

    ProductCheck check;
    check.base_minimum = min_bezout_exact(a, workers).value;
    check.power_minimum = min_bezout_exact(power_support(a, l), workers).value;
    const std::vector<unsigned> copies(l, static_cast<unsigned>(m));
    check.predicted = multinomial(static_cast<unsigned>(l * m), copies) * power(check.base_minimum, l);
    return check;
}

}  // namespace mhbez
