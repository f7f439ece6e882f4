// mhbez: multi-homogeneous Bezout numbers from the command line.
//
// Exit codes: 0 ok, 1 failed verification or internal error, 2 parse error,
// 3 dimension mismatch, 4 exact-search guard, 5 size guard.

#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mhbez/analysis.hpp"
#include "mhbez/bezout.hpp"
#include "mhbez/checks.hpp"
#include "mhbez/io.hpp"
#include "mhbez/optimizer.hpp"
#include "mhbez/reduction.hpp"

namespace {

using namespace mhbez;

enum ExitCode : int { kOk = 0, kFailed = 1, kParse = 2, kDimension = 3, kSearchGuard = 4, kSizeGuard = 5 };

// Exact-oracle reductions stay within this many gadget variables.
constexpr std::size_t kReduceExactVariables = 12;

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    auto digits = [&](const std::string& s) {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("expected a rational p/q, got '" + text + "'", 1);
        return BigNat(s);
    };
    if (slash == std::string::npos) return Rational(digits(text));
    const BigNat q = digits(text.substr(slash + 1));
    if (q == 0) throw ParseError("zero denominator in '" + text + "'", slash + 2);
    return Rational(digits(text.substr(0, slash)), q);
}

std::string join(const std::vector<unsigned>& xs, const char* sep = " ") {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + std::to_string(xs[i]);
    return out;
}

// ---------------------------------------------------------------------------

int cmd_bezout(const std::string& support_file, const std::string& partition_text) {
    const auto a = read_support_file(support_file);
    const auto p = parse_partition(partition_text, a.variables());
    const auto prof = block_profile(a, p);
    const auto value = bezout_equal_support(a, p);
    std::vector<unsigned> degrees(prof.degrees.begin(), prof.degrees.end());
    std::cout << value << '\n';
    std::cout << "degrees " << join(degrees) << '\n';
    std::cout << "dims " << join(prof.dims) << '\n';
    return kOk;
}

int cmd_minimize(const std::string& support_file, bool heuristic, std::uint64_t seed, unsigned restarts,
                 unsigned workers) {
    const auto a = read_support_file(support_file);
    const auto result = heuristic ? local_search_min(a, seed, restarts) : min_bezout_exact(a, workers);
    std::cout << result.value << "  " << result.argmin << "  " << result.partitions_examined << '\n';
    return kOk;
}

int cmd_gadget(const std::string& graph_file, unsigned l, bool raw) {
    const auto g = read_graph_file(graph_file);
    const auto support =
        raw ? power_support(clique_support(g), l) : reduction_gadget(g, l);
    write_support(std::cout, support);
    return kOk;
}

void print_table1(bool tsv) {
    const auto rows = reproduce_table1();
    if (tsv) {
        std::cout << "n\tx\ta\tj\tB(a)\tB(n,n,n)\tratio\tpublished_B\tpublished_ratio\tstatus\n";
        for (const auto& r : rows)
            std::cout << r.n << '\t' << r.x << '\t' << join(r.a) << '\t' << join(r.positions, ",") << '\t'
                      << r.value << '\t' << r.balanced_value << '\t' << to_string(r.ratio) << '\t'
                      << (r.published_value ? r.published_value->str() : "-") << '\t'
                      << (r.published_ratio ? to_string(*r.published_ratio) : "-") << '\t'
                      << (r.matches_published() ? "ok" : "DISCREPANCY") << '\n';
        return;
    }
    std::cout << std::left << std::setw(3) << "n" << std::setw(3) << "x" << std::setw(14) << "a" << std::setw(8)
              << "j" << std::right << std::setw(15) << "B(a)" << std::setw(12) << "B(n,n,n)" << std::setw(10)
              << "ratio"
              << "  DISCREPANCY\n";
    for (const auto& r : rows) {
        std::cout << std::left << std::setw(3) << r.n << std::setw(3) << r.x << std::setw(14) << join(r.a)
                  << std::setw(8) << join(r.positions, ",") << std::right << std::setw(15) << r.value
                  << std::setw(12) << r.balanced_value << std::setw(10) << to_string(r.ratio);
        if (!r.matches_published()) {
            std::cout << "  published B=" << (r.published_value ? r.published_value->str() : "-")
                      << " ratio=" << (r.published_ratio ? to_string(*r.published_ratio) : "-");
        }
        std::cout << '\n';
    }
}

void print_table2(bool tsv) {
    const auto rows = reproduce_table2();
    if (tsv) {
        std::cout << "x\t4x/3\tn0\tcandidates\tpublished_n0\tpublished_candidates\tstatus\n";
        for (const auto& r : rows) {
            std::cout << r.x << '\t' << std::fixed << std::setprecision(9) << r.lower << '\t' << r.threshold << '\t'
                      << join(r.candidates, ",") << '\t' << r.published_threshold << '\t'
                      << join(r.published_candidates, ",") << '\t' << (r.candidates_match() ? "ok" : "DISCREPANCY")
                      << '\n';
        }
        return;
    }
    std::cout << std::left << std::setw(4) << "x" << std::setw(14) << "4x/3" << std::setw(14) << "n0(x)"
              << "possible n\n";
    for (const auto& r : rows) {
        std::cout << std::left << std::setw(4) << r.x << std::fixed << std::setprecision(9) << std::setw(14)
                  << r.lower << std::setw(14) << r.threshold << join(r.candidates, ",");
        if (!r.candidates_match()) std::cout << "  DISCREPANCY published n=" << join(r.published_candidates, ",");
        std::cout << '\n';
    }
}

int cmd_tables(unsigned which, bool tsv) {
    if (which == 1)
        print_table1(tsv);
    else
        print_table2(tsv);
    return kOk;
}

int cmd_reduce(const std::string& graph_file, const std::string& factor_text, bool heuristic, std::uint64_t seed,
               unsigned restarts, unsigned workers) {
    const auto g = read_graph_file(graph_file);
    const Rational factor = parse_rational(factor_text);
    if (factor <= 1) throw ParseError("the factor C must exceed 1", 1);

    auto cfg = heuristic ? ReductionConfig::with_heuristic_oracle(factor, seed, restarts)
                         : ReductionConfig::with_exact_oracle(factor, workers);
    const std::size_t variables = 3 * g.vertex_count() * cfg.l;
    if (!heuristic && variables > kReduceExactVariables)
        throw SearchGuardError("the gadget has " + std::to_string(variables) +
                               " variables; the exact oracle is limited to " +
                               std::to_string(kReduceExactVariables));

    const auto out = decide_three_coloring(g, cfg);
    std::cout << (out.yes ? "YES" : "NO") << '\n';
    std::cout << "rho " << to_string(out.rho) << '\n';
    std::cout << "l " << cfg.l << '\n';
    std::cout << "oracle " << out.oracle_value << '\n';
    std::cout << "denominator " << out.denominator << '\n';
    if (out.advisory) std::cout << "advisory heuristic oracle; no correctness guarantee\n";
    return kOk;
}

int cmd_verify(unsigned prop1, bool prop2, bool lemma4, bool lemma2, bool stirling) {
    std::vector<checks::CheckResult> results;
    if (prop1) results.push_back(checks::gap_bound(prop1));
    if (prop2) results.push_back(checks::product_identity(20, 2005));
    if (lemma4) results.push_back(checks::pigeonhole_bound(3));
    if (lemma2) results.push_back(checks::balanced_coloring(5));
    if (stirling) {
        results.push_back(checks::ceiling_inequality(60));
        results.push_back(checks::stirling_bracket(30));
        results.push_back(checks::stirling_positivity(50));
    }
    bool all = true;
    for (const auto& r : results) {
        std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.name << "  [" << r.detail << "]\n";
        all = all && r.passed;
    }
    return all ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multi-homogeneous Bezout numbers: evaluation, minimization and hardness gadgets"};
    app.require_subcommand(1);

    std::string support_file, graph_file, partition_text, factor_text;
    std::uint64_t seed = 1;
    unsigned restarts = 8, workers = 1, l = 1, which = 1, prop1 = 0;
    bool exact = false, heuristic = false, raw = false, tsv = false;
    bool prop2 = false, lemma4 = false, lemma2 = false, stirling = false;

    auto* bezout = app.add_subcommand("bezout", "Bezout number of a support for one partition");
    bezout->add_option("--support", support_file, "Support file")->required();
    bezout->add_option("--partition", partition_text, "Partition, e.g. 1,2|3")->required();

    auto* minimize = app.add_subcommand("minimize", "Minimize the Bezout number over all partitions");
    minimize->add_option("--support", support_file, "Support file")->required();
    auto* exact_flag = minimize->add_flag("--exact", exact, "Exhaustive search (default)");
    auto* heur_flag = minimize->add_flag("--heuristic", heuristic, "Local search with random restarts");
    exact_flag->excludes(heur_flag);
    minimize->add_option("--seed", seed, "Local search seed");
    minimize->add_option("--restarts", restarts, "Local search restarts")->check(CLI::PositiveNumber);
    minimize->add_option("--workers", workers, "Threads for the exhaustive search")->check(CLI::PositiveNumber);

    auto* gadget = app.add_subcommand("gadget", "Emit the support A(G x K_3)^l");
    gadget->add_option("--graph", graph_file, "Graph file")->required();
    gadget->add_option("--l", l, "Number of disjoint copies")->check(CLI::PositiveNumber);
    gadget->add_flag("--raw", raw, "Use A(G)^l, skipping the product with K_3");

    auto* tables = app.add_subcommand("tables", "Reproduce the gap tables");
    tables->add_option("--which", which, "1 or 2")->required()->check(CLI::IsMember({1u, 2u}));
    tables->add_flag("--tsv", tsv, "Tab-separated rows instead of aligned text");

    auto* reduce = app.add_subcommand("reduce", "Decide 3-colourability through a Bezout oracle");
    reduce->add_option("--graph", graph_file, "Graph file")->required();
    reduce->add_option("--C", factor_text, "Approximation factor p/q > 1")->required();
    reduce->add_flag("--heuristic", heuristic, "Use the local-search oracle (advisory)");
    reduce->add_option("--seed", seed, "Local search seed");
    reduce->add_option("--restarts", restarts, "Local search restarts")->check(CLI::PositiveNumber);
    reduce->add_option("--workers", workers, "Threads for the exact oracle")->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify", "Run the finite verification suites");
    verify->add_option("--prop1", prop1, "Check the 4/3 gap for n up to N");
    verify->add_flag("--prop2", prop2, "Check the product identity for A^l");
    verify->add_flag("--lemma4", lemma4, "Check the pigeonhole lower bound on G x K_3 gadgets");
    verify->add_flag("--lemma2", lemma2, "Check the balanced colouring equivalence");
    verify->add_flag("--stirling", stirling, "Check the Stirling-side inequalities");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParse;
    }

    try {
        if (*bezout) return cmd_bezout(support_file, partition_text);
        if (*minimize) return cmd_minimize(support_file, heuristic, seed, restarts, workers);
        if (*gadget) return cmd_gadget(graph_file, l, raw);
        if (*tables) return cmd_tables(which, tsv);
        if (*reduce) return cmd_reduce(graph_file, factor_text, heuristic, seed, restarts, workers);
        if (*verify) {
            if (!prop1 && !prop2 && !lemma4 && !lemma2 && !stirling) {
                prop1 = 8;
                prop2 = lemma4 = lemma2 = stirling = true;
            }
            return cmd_verify(prop1, prop2, lemma4, lemma2, stirling);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const DimensionMismatch& e) {
        std::cerr << "dimension mismatch: " << e.what() << '\n';
        return kDimension;
    } catch (const SearchGuardError& e) {
        std::cerr << "search guard: " << e.what() << '\n';
        return kSearchGuard;
    } catch (const SizeGuardError& e) {
        std::cerr << "size guard: " << e.what() << '\n';
        return kSizeGuard;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailed;
    }
    return kFailed;
}
