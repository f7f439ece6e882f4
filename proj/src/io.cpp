#include "mhbez/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <set>

namespace mhbez {

namespace {

// Reads non-blank lines and splits them into unsigned integers.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    // False at end of input.
    bool next(std::vector<unsigned long long>& fields) {
        std::string text;
        while (std::getline(in_, text)) {
            ++line_;
            if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
            fields.clear();
            const char* p = text.data();
            const char* end = p + text.size();
            while (p < end) {
                if (*p == ' ' || *p == '\t' || *p == '\r') {
                    ++p;
                    continue;
                }
                unsigned long long value = 0;
                auto [q, ec] = std::from_chars(p, end, value);
                if (ec != std::errc() || (q < end && *q != ' ' && *q != '\t' && *q != '\r')) {
                    const char* stop = p;
                    while (stop < end && *stop != ' ' && *stop != '\t' && *stop != '\r') ++stop;
                    fail("expected a non-negative integer, got '" + std::string(p, stop) + "'");
                }
                fields.push_back(value);
                p = q;
            }
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError("line " + std::to_string(line_) + ": " + message, line_);
    }

    std::size_t line() const noexcept { return line_; }

private:
    std::istream& in_;
    std::size_t line_ = 0;
};

std::ifstream open(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'", 0);
    return in;
}

}  // namespace

Support read_support(std::istream& in) {
    LineReader reader(in);
    std::vector<unsigned long long> fields;
    if (!reader.next(fields)) throw ParseError("empty support file", 1);
    if (fields.size() != 2) reader.fail("header must be 'n m'");
    const auto n = fields[0];
    const auto m = fields[1];
    if (n == 0) reader.fail("variable count must be positive");
    if (m == 0) reader.fail("a support needs at least one monomial");

    std::vector<ExponentVector> monomials;
    std::set<ExponentVector> seen;
    for (unsigned long long r = 0; r < m; ++r) {
        if (!reader.next(fields))
            throw ParseError("expected " + std::to_string(m) + " monomials, found " + std::to_string(r),
                             reader.line() + 1);
        if (fields.size() != n)
            reader.fail("expected " + std::to_string(n) + " exponents, got " + std::to_string(fields.size()));
        ExponentVector alpha;
        for (auto v : fields) {
            if (v > std::numeric_limits<Exponent>::max()) reader.fail("exponent too large");
            alpha.push_back(static_cast<Exponent>(v));
        }
        if (!seen.insert(alpha).second) reader.fail("duplicate monomial");
        monomials.push_back(std::move(alpha));
    }
    if (reader.next(fields)) reader.fail("unexpected data after " + std::to_string(m) + " monomials");
    return Support(static_cast<std::size_t>(n), std::move(monomials));
}

Support read_support_file(const std::string& path) {
    auto in = open(path);
    return read_support(in);
}

void write_support(std::ostream& out, const Support& support) {
    out << support.variables() << ' ' << support.size() << '\n';
    for (const auto& alpha : support.monomials()) {
        for (std::size_t i = 0; i < alpha.size(); ++i) out << (i ? " " : "") << alpha[i];
        out << '\n';
    }
}

Graph read_graph(std::istream& in) {
    LineReader reader(in);
    std::vector<unsigned long long> fields;
    if (!reader.next(fields)) throw ParseError("empty graph file", 1);
    if (fields.size() != 2) reader.fail("header must be 'm e'");
    const auto m = fields[0];
    const auto e = fields[1];
    if (m > 1'000'000) reader.fail("vertex count too large");
    if (e > (m == 0 ? 0 : m * (m - 1) / 2))
        reader.fail("more edges than a simple graph on " + std::to_string(m) + " vertices allows");

    Graph g(static_cast<std::size_t>(m));
    for (unsigned long long r = 0; r < e; ++r) {
        if (!reader.next(fields))
            throw ParseError("expected " + std::to_string(e) + " edges, found " + std::to_string(r),
                             reader.line() + 1);
        if (fields.size() != 2) reader.fail("edge line must be 'u v'");
        const auto u = fields[0], v = fields[1];
        if (u == v) reader.fail("loop at vertex " + std::to_string(u));
        if (u < 1 || v < 1 || u > m || v > m)
            reader.fail("vertex out of range [1," + std::to_string(m) + "]");
        if (u > v) reader.fail("edge must be written with u < v");
        if (g.adjacent(u - 1, v - 1)) reader.fail("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        g.add_edge(u - 1, v - 1);
    }
    if (reader.next(fields)) reader.fail("unexpected data after " + std::to_string(e) + " edges");
    return g;
}

Graph read_graph_file(const std::string& path) {
    auto in = open(path);
    return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
}

}  // namespace mhbez
