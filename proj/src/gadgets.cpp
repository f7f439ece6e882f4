#include "mhbez/gadgets.hpp"

#include <algorithm>
#include <numeric>

namespace mhbez {

// ---------------------------------------------------------------------------
// Graph
// ---------------------------------------------------------------------------

Graph::Graph(std::size_t vertices, const std::vector<Edge>& edges) : adjacency_(vertices) {
    for (const auto& [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(std::size_t u, std::size_t v) {
    const std::size_t m = vertex_count();
    if (u >= m || v >= m)
        throw std::invalid_argument("edge {" + std::to_string(u + 1) + "," + std::to_string(v + 1) +
                                    "} leaves the vertex range [1," + std::to_string(m) + "]");
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u + 1));
    if (adjacent(u, v))
        throw std::invalid_argument("repeated edge {" + std::to_string(std::min(u, v) + 1) + "," +
                                    std::to_string(std::max(u, v) + 1) + "}");
    adjacency_[u].insert(std::upper_bound(adjacency_[u].begin(), adjacency_[u].end(), v), v);
    adjacency_[v].insert(std::upper_bound(adjacency_[v].begin(), adjacency_[v].end(), u), u);
    edges_.emplace_back(std::min(u, v), std::max(u, v));
}

std::vector<Graph::Edge> Graph::edges() const {
    auto out = edges_;
    std::sort(out.begin(), out.end());
    return out;
}

bool Graph::adjacent(std::size_t u, std::size_t v) const {
    if (u >= vertex_count() || v >= vertex_count()) return false;
    return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

Graph complete_graph(std::size_t s) {
    Graph g(s);
    for (std::size_t u = 0; u < s; ++u)
        for (std::size_t v = u + 1; v < s; ++v) g.add_edge(u, v);
    return g;
}

Graph path_graph(std::size_t s) {
    Graph g(s);
    for (std::size_t v = 1; v < s; ++v) g.add_edge(v - 1, v);
    return g;
}

Graph cycle_graph(std::size_t s) {
    Graph g = path_graph(s);
    if (s >= 3) g.add_edge(0, s - 1);
    return g;
}

Graph cartesian_product(const Graph& g1, const Graph& g2) {
    const std::size_t m2 = g2.vertex_count();
    Graph g(g1.vertex_count() * m2);
    for (std::size_t v1 = 0; v1 < g1.vertex_count(); ++v1)
        for (const auto& [a, b] : g2.edges()) g.add_edge(v1 * m2 + a, v1 * m2 + b);
    for (const auto& [a, b] : g1.edges())
        for (std::size_t v2 = 0; v2 < m2; ++v2) g.add_edge(a * m2 + v2, b * m2 + v2);
    return g;
}

std::vector<std::array<std::size_t, 3>> triangles(const Graph& g) {
    // Edge-centric: for each edge (u, v) with u < v, the common neighbours
    // w > v close a triangle counted exactly once.
    std::vector<std::array<std::size_t, 3>> out;
    for (const auto& [u, v] : g.edges()) {
        const auto& nu = g.neighbours(u);
        const auto& nv = g.neighbours(v);
        auto iu = std::upper_bound(nu.begin(), nu.end(), v);
        auto iv = std::upper_bound(nv.begin(), nv.end(), v);
        while (iu != nu.end() && iv != nv.end()) {
            if (*iu < *iv) {
                ++iu;
            } else if (*iv < *iu) {
                ++iv;
            } else {
                out.push_back({u, v, *iu});
                ++iu;
                ++iv;
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Support clique_support(const Graph& h) {
    const std::size_t m = h.vertex_count();
    std::vector<ExponentVector> monomials;
    monomials.emplace_back(m, 0);
    for (std::size_t v = 0; v < m; ++v) {
        ExponentVector e(m, 0);
        e[v] = 1;
        monomials.push_back(std::move(e));
    }
    for (const auto& [u, v] : h.edges()) {
        ExponentVector e(m, 0);
        e[u] = e[v] = 1;
        monomials.push_back(std::move(e));
    }
    for (const auto& t : triangles(h)) {
        ExponentVector e(m, 0);
        for (auto v : t) e[v] = 1;
        monomials.push_back(std::move(e));
    }
    return Support(m, std::move(monomials));
}

Support power_support(const Support& a, std::size_t l, std::size_t cap) {
    if (l < 1) throw std::invalid_argument("power_support needs l >= 1");
    std::size_t count = 1;
    for (std::size_t s = 0; s < l; ++s) {
        if (count > cap / a.size())
            throw SizeGuardError("power support would hold " + std::to_string(a.size()) + "^" + std::to_string(l) +
                                 " monomials, above the cap of " + std::to_string(cap));
        count *= a.size();
    }
    const std::size_t m = a.variables();
    std::vector<ExponentVector> out;
    out.reserve(count);
    std::vector<std::size_t> digit(l, 0);
    for (std::size_t c = 0; c < count; ++c) {
        ExponentVector e;
        e.reserve(l * m);
        for (std::size_t s = 0; s < l; ++s) e.insert(e.end(), a[digit[s]].begin(), a[digit[s]].end());
        out.push_back(std::move(e));
        for (std::size_t s = l; s-- > 0;) {
            if (++digit[s] < a.size()) break;
            digit[s] = 0;
        }
    }
    return Support(l * m, std::move(out));
}

Support eigenvalue_support(std::size_t n) {
    if (n < 2) throw std::invalid_argument("eigenvalue support needs n >= 2");
    std::vector<ExponentVector> monomials;
    monomials.emplace_back(n, 0);
    ExponentVector lambda(n, 0);
    lambda[0] = 1;
    monomials.push_back(lambda);
    for (std::size_t i = 1; i < n; ++i) {
        ExponentVector u(n, 0);
        u[i] = 1;
        monomials.push_back(u);
        u[0] = 1;
        monomials.push_back(std::move(u));
    }
    return Support(n, std::move(monomials));
}

// ---------------------------------------------------------------------------
// 3-colouring
// ---------------------------------------------------------------------------

namespace {

// Backtracking 3-colourer. Colours are opened in first-use order so each
// partition into colour classes is visited once. `cap` bounds the size of
// every colour class.
class Colorer {
public:
    Colorer(const Graph& g, std::size_t cap) : g_(g), cap_(cap), order_(g.vertex_count()) {
        std::iota(order_.begin(), order_.end(), std::size_t{0});
        std::stable_sort(order_.begin(), order_.end(),
                         [&](std::size_t a, std::size_t b) { return g.degree(a) > g.degree(b); });
        allowed_.assign(g.vertex_count(), 0b111);
        colour_.assign(g.vertex_count(), kNone);
    }

    void run(const std::function<bool(const Coloring&)>& visit) {
        visit_ = &visit;
        expand(0, 0);
    }

private:
    static constexpr std::uint8_t kNone = 0xff;

    // Returns false to abort the whole search.
    bool expand(std::size_t depth, std::uint8_t opened) {
        if (depth == order_.size()) return (*visit_)(colour_);
        const std::size_t v = order_[depth];
        const std::uint8_t limit = std::min<std::uint8_t>(opened + 1, 3);
        for (std::uint8_t c = 0; c < limit; ++c) {
            if (!(allowed_[v] & (1u << c)) || used_[c] == cap_) continue;

            colour_[v] = c;
            ++used_[c];
            std::vector<std::size_t> pruned;
            bool wiped = false;
            for (auto w : g_.neighbours(v)) {
                if (colour_[w] != kNone || !(allowed_[w] & (1u << c))) continue;
                allowed_[w] &= static_cast<std::uint8_t>(~(1u << c));
                pruned.push_back(w);
                if (allowed_[w] == 0) {
                    wiped = true;
                    break;
                }
            }
            bool keep_going = true;
            if (!wiped) keep_going = expand(depth + 1, std::max<std::uint8_t>(opened, c + 1));
            for (auto w : pruned) allowed_[w] |= static_cast<std::uint8_t>(1u << c);
            --used_[c];
            colour_[v] = kNone;
            if (!keep_going) return false;
        }
        return true;
    }

    const Graph& g_;
    std::size_t cap_;
    std::vector<std::size_t> order_;
    std::vector<std::uint8_t> allowed_;
    Coloring colour_;
    std::array<std::size_t, 3> used_{};
    const std::function<bool(const Coloring&)>* visit_ = nullptr;
};

}  // namespace

void for_each_three_coloring(const Graph& g, const std::function<bool(const Coloring&)>& visit) {
    Colorer(g, g.vertex_count()).run(visit);
}

ColoringResult is_three_colorable(const Graph& g) {
    ColoringResult result;
    for_each_three_coloring(g, [&](const Coloring& c) {
        result.colorable = true;
        result.witness = c;
        return false;
    });
    return result;
}

bool is_proper_coloring(const Graph& g, const Coloring& colour) {
    if (colour.size() != g.vertex_count()) return false;
    if (std::any_of(colour.begin(), colour.end(), [](std::uint8_t c) { return c > 2; })) return false;
    for (const auto& [u, v] : g.edges())
        if (colour[u] == colour[v]) return false;
    return true;
}

bool balanced_coloring_check(const Graph& g) {
    const Graph h = cartesian_product(g, complete_graph(3));
    bool found = false;
    Colorer(h, g.vertex_count()).run([&](const Coloring&) {
        found = true;
        return false;
    });
    return found;
}

Partition coloring_partition(const Coloring& colour) {
    std::vector<Partition::Block> blocks(3);
    for (std::size_t v = 0; v < colour.size(); ++v) blocks.at(colour[v]).push_back(v);
    std::erase_if(blocks, [](const Partition::Block& b) { return b.empty(); });
    return Partition(colour.size(), std::move(blocks));
}

}  // namespace mhbez
