#include "mhbez/optimizer.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <optional>
#include <random>
#include <thread>

#include "mhbez/bezout.hpp"

namespace mhbez {

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

PartitionEnumerator::PartitionEnumerator(std::size_t n) : PartitionEnumerator(n, {0}) {}

PartitionEnumerator::PartitionEnumerator(std::size_t n, std::vector<std::uint8_t> prefix)
    : rgs_(std::move(prefix)), fixed_(0) {
    if (n < 1 || n > kMaxExactVariables)
        throw SearchGuardError("partition enumeration needs 1 <= n <= " + std::to_string(kMaxExactVariables) +
                               ", got n = " + std::to_string(n));
    if (rgs_.empty()) rgs_.push_back(0);
    if (rgs_.size() > n) throw std::invalid_argument("prefix longer than the ground set");
    prefix_max_.resize(n);
    std::uint8_t top = 0;
    for (std::size_t i = 0; i < rgs_.size(); ++i) {
        if (i == 0 ? rgs_[i] != 0 : rgs_[i] > top + 1)
            throw std::invalid_argument("prefix is not a restricted growth string");
        top = std::max(top, rgs_[i]);
        prefix_max_[i] = top;
    }
    fixed_ = rgs_.size();
    for (std::size_t i = fixed_; i < n; ++i) {
        rgs_.push_back(0);
        prefix_max_[i] = top;
    }
}

bool PartitionEnumerator::next() {
    const std::size_t n = rgs_.size();
    const std::size_t floor = std::max<std::size_t>(fixed_, 1);
    for (std::size_t i = n; i-- > floor;) {
        if (rgs_[i] <= prefix_max_[i - 1]) {
            ++rgs_[i];
            prefix_max_[i] = std::max(prefix_max_[i - 1], rgs_[i]);
            for (std::size_t j = i + 1; j < n; ++j) {
                rgs_[j] = 0;
                prefix_max_[j] = prefix_max_[i];
            }
            return true;
        }
    }
    return false;
}

PartitionEnumerator enumerate_partitions(std::size_t n) { return PartitionEnumerator(n); }

std::vector<std::vector<std::uint8_t>> rgs_prefixes(std::size_t length) {
    std::vector<std::vector<std::uint8_t>> out;
    PartitionEnumerator it(length);
    do out.push_back(it.rgs());
    while (it.next());
    return out;
}

// ---------------------------------------------------------------------------
// Per-partition evaluation
// ---------------------------------------------------------------------------

namespace {

using u128 = unsigned __int128;

// Bezout value; stays in 128 bits unless a product overflows.
struct Value {
    bool big = false;
    u128 small = 0;
    BigNat large;

    BigNat to_big() const {
        if (big) return large;
        BigNat r = static_cast<std::uint64_t>(small >> 64);
        r <<= 64;
        r += static_cast<std::uint64_t>(small);
        return r;
    }
};

bool less(const Value& x, const Value& y) {
    if (!x.big && !y.big) return x.small < y.small;
    if (x.big != y.big) return y.big;  // a big value always exceeds every 128-bit one
    return x.large < y.large;
}

bool mul_checked(u128& acc, u128 factor) {
    u128 out;
    if (__builtin_mul_overflow(acc, factor, &out)) return false;
    acc = out;
    return true;
}

// Evaluates the equal-support Bezout number for many partitions given as
// block labels. Monomials are kept sparse since gadget supports touch at
// most three variables each. Not thread-safe: holds scratch buffers.
class FastEvaluator {
public:
    explicit FastEvaluator(const Support& support)
        : n_(support.variables()), monomials_(support.size()), terms_(support.size()) {
        for (std::size_t m = 0; m < support.size(); ++m)
            for (std::size_t v = 0; v < n_; ++v)
                if (support[m][v] != 0) terms_[m].push_back({static_cast<std::uint32_t>(v), support[m][v]});
        factorial_.assign(n_ + 1, 0);
        fits_u64_ = n_ <= 20;
        if (fits_u64_) {
            factorial_[0] = 1;
            for (std::size_t i = 1; i <= n_; ++i) factorial_[i] = factorial_[i - 1] * i;
        }
        const std::size_t cap = n_ + 1;
        sizes_.resize(cap);
        degree_.resize(cap);
        lowest_.resize(cap);
        touched_.resize(cap);
        scratch_.resize(cap);
        dims_.resize(cap);
    }

    std::size_t variables() const noexcept { return n_; }

    // Returns false when the projective dimensions do not add up to n.
    bool evaluate(std::span<const std::uint8_t> labels, std::size_t k, Value& out) {
        std::fill_n(sizes_.begin(), k, 0u);
        std::fill_n(degree_.begin(), k, 0u);
        std::fill_n(touched_.begin(), k, 0u);
        std::fill_n(lowest_.begin(), k, std::numeric_limits<std::uint64_t>::max());
        for (std::size_t v = 0; v < n_; ++v) ++sizes_[labels[v]];

        for (const auto& mono : terms_) {
            std::uint8_t hit[256];
            std::size_t hits = 0;
            for (const auto& t : mono) {
                const auto b = labels[t.var];
                if (scratch_[b] == 0) hit[hits++] = b;
                scratch_[b] += t.exp;
            }
            for (std::size_t h = 0; h < hits; ++h) {
                const auto b = hit[h];
                degree_[b] = std::max(degree_[b], scratch_[b]);
                lowest_[b] = std::min(lowest_[b], scratch_[b]);
                ++touched_[b];
                scratch_[b] = 0;
            }
        }

        std::size_t total = 0;
        for (std::size_t b = 0; b < k; ++b) {
            const std::uint64_t lo = touched_[b] < monomials_ ? 0 : lowest_[b];
            dims_[b] = sizes_[b] - (lo == degree_[b] ? 1u : 0u);
            total += dims_[b];
        }
        if (total != n_) return false;

        if (fits_u64_ && fast_value(k, out)) return true;
        out.big = true;
        out.large = multinomial(static_cast<unsigned>(n_), std::span<const unsigned>(dims_.data(), k));
        for (std::size_t b = 0; b < k; ++b) out.large *= power(BigNat(degree_[b]), dims_[b]);
        return true;
    }

private:
    bool fast_value(std::size_t k, Value& out) const {
        std::uint64_t denom = 1;
        for (std::size_t b = 0; b < k; ++b) denom *= factorial_[dims_[b]];
        u128 acc = factorial_[n_] / denom;
        for (std::size_t b = 0; b < k; ++b)
            for (unsigned e = 0; e < dims_[b]; ++e)
                if (!mul_checked(acc, degree_[b])) return false;
        out.big = false;
        out.small = acc;
        return true;
    }

    struct Term {
        std::uint32_t var;
        Exponent exp;
    };

    std::size_t n_;
    std::size_t monomials_;
    std::vector<std::vector<Term>> terms_;
    std::vector<std::uint64_t> factorial_;
    bool fits_u64_;

    std::vector<unsigned> sizes_;
    std::vector<std::uint64_t> degree_;
    std::vector<std::uint64_t> lowest_;
    std::vector<std::size_t> touched_;
    std::vector<std::uint64_t> scratch_;
    std::vector<unsigned> dims_;
};

struct Best {
    bool found = false;
    Value value;
    std::vector<std::uint8_t> rgs;
    std::uint64_t examined = 0;

    void offer(const Value& v, std::span<const std::uint8_t> labels) {
        if (found && !less(v, value)) return;
        found = true;
        value = v;
        rgs.assign(labels.begin(), labels.end());
    }

    void merge(const Best& other) {
        examined += other.examined;
        if (other.found) offer(other.value, other.rgs);
    }
};

Best search_range(FastEvaluator& eval, std::vector<std::uint8_t> prefix) {
    Best best;
    PartitionEnumerator it(eval.variables(), std::move(prefix));
    Value v;
    do {
        ++best.examined;
        if (eval.evaluate(it.rgs(), it.blocks(), v)) best.offer(v, it.rgs());
    } while (it.next());
    return best;
}

MinimizationResult finish(const Best& best, bool exact) {
    if (!best.found) throw DimensionMismatch("no partition has projective dimensions summing to n");
    return MinimizationResult{best.value.to_big(), Partition::from_rgs(best.rgs), best.examined, exact};
}

}  // namespace

// ---------------------------------------------------------------------------
// Exact search
// ---------------------------------------------------------------------------

MinimizationResult min_bezout_exact(const Support& support, unsigned workers) {
    const std::size_t n = support.variables();
    if (n > kMaxExactVariables)
        throw SearchGuardError("exact search over n = " + std::to_string(n) + " variables exceeds the limit of " +
                               std::to_string(kMaxExactVariables));
    FastEvaluator eval(support);
    if (workers <= 1 || n < 4) return finish(search_range(eval, {0}), true);

    // Shortest prefix that yields a few tasks per worker.
    std::size_t length = 1;
    std::size_t tasks = 1;
    while (length < n && tasks < 8ull * workers) {
        ++length;
        tasks = rgs_prefixes(length).size();
    }
    const auto prefixes = rgs_prefixes(length);
    std::vector<Best> partial(prefixes.size());
    std::atomic<std::size_t> cursor{0};
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&, local = eval]() mutable {
                for (std::size_t t; (t = cursor.fetch_add(1)) < prefixes.size();)
                    partial[t] = search_range(local, prefixes[t]);
            });
    }
    // Prefixes are in restricted-growth order, so folding in order keeps
    // the single-worker tie-break.
    Best best;
    for (const auto& p : partial) best.merge(p);
    return finish(best, true);
}

// ---------------------------------------------------------------------------
// Local search
// ---------------------------------------------------------------------------

namespace {

double unit_interval(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// Uniformly random set partition of {0..n-1} as a restricted growth
// string. completions[i][m] counts the ways to finish a string whose first
// i entries use m blocks.
std::vector<std::uint8_t> random_rgs(std::size_t n, std::mt19937_64& rng) {
    std::vector<std::vector<long double>> completions(n + 1, std::vector<long double>(n + 2, 0.0L));
    for (std::size_t m = 0; m <= n + 1; ++m) completions[n][m] = 1.0L;
    for (std::size_t i = n; i-- > 1;)
        for (std::size_t m = 1; m <= i; ++m)
            completions[i][m] = m * completions[i + 1][m] + completions[i + 1][m + 1];

    std::vector<std::uint8_t> rgs(n, 0);
    std::size_t used = 1;
    for (std::size_t i = 1; i < n; ++i) {
        const long double stay = completions[i + 1][used];
        const long double open = completions[i + 1][used + 1];
        const long double pick = unit_interval(rng) * (used * stay + open);
        const auto slot = static_cast<std::size_t>(pick / stay);
        if (slot < used) {
            rgs[i] = static_cast<std::uint8_t>(slot);
        } else {
            rgs[i] = static_cast<std::uint8_t>(used);
            ++used;
        }
    }
    return rgs;
}

// Relabels blocks by first occurrence; returns the block count.
std::size_t normalize(std::vector<std::uint8_t>& labels) {
    std::uint8_t map[256];
    std::fill(std::begin(map), std::end(map), 0xff);
    std::uint8_t next = 0;
    for (auto& l : labels) {
        if (map[l] == 0xff) map[l] = next++;
        l = map[l];
    }
    return next;
}

}  // namespace

MinimizationResult local_search_min(const Support& support, std::uint64_t seed, unsigned restarts) {
    if (restarts < 1) throw std::invalid_argument("local search needs at least one restart");
    const std::size_t n = support.variables();
    if (n > 255) throw SearchGuardError("local search supports at most 255 variables");

    FastEvaluator eval(support);
    Best overall;
    Value v;
    for (unsigned r = 0; r < restarts; ++r) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(r)};
        std::mt19937_64 rng(seq);

        std::vector<std::uint8_t> current = random_rgs(n, rng);
        std::size_t k = normalize(current);
        Best here;
        ++overall.examined;
        if (eval.evaluate(current, k, v)) here.offer(v, current);

        for (;;) {
            Best step;
            std::vector<std::uint8_t> candidate;
            const auto sizes = Partition::from_rgs(current).block_sizes();
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t b = 0; b <= k; ++b) {
                    if (b == current[i]) continue;
                    if (b == k && sizes[current[i]] == 1) continue;  // already a singleton
                    candidate = current;
                    candidate[i] = static_cast<std::uint8_t>(b);
                    const std::size_t kc = normalize(candidate);
                    ++overall.examined;
                    if (eval.evaluate(candidate, kc, v)) step.offer(v, candidate);
                }
            }
            if (!step.found || (here.found && !less(step.value, here.value))) break;
            here.offer(step.value, step.rgs);
            current = step.rgs;
            k = normalize(current);
        }
        if (here.found) overall.offer(here.value, here.rgs);
    }
    return finish(overall, false);
}

bool within_factor(const BigNat& estimate, const Rational& factor, const BigNat& exact_min) {
    const Rational b(estimate), m(exact_min);
    return b / factor < m && m < b * factor;
}

}  // namespace mhbez
