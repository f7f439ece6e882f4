#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "mhbez/core.hpp"

namespace mhbez {

/// Undirected simple graph on vertices {0..m-1} (printed 1-based).
class Graph {
public:
    using Edge = std::pair<std::size_t, std::size_t>;

    explicit Graph(std::size_t vertices = 0) : adjacency_(vertices) {}
    /// Throws std::invalid_argument on a loop, a repeated edge or a vertex
    /// out of range.
    Graph(std::size_t vertices, const std::vector<Edge>& edges);

    void add_edge(std::size_t u, std::size_t v);

    std::size_t vertex_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    /// Edges as (u, v) with u < v, sorted.
    std::vector<Edge> edges() const;
    bool adjacent(std::size_t u, std::size_t v) const;
    const std::vector<std::size_t>& neighbours(std::size_t v) const { return adjacency_[v]; }
    std::size_t degree(std::size_t v) const { return adjacency_[v].size(); }

private:
    std::vector<std::vector<std::size_t>> adjacency_;  // sorted
    std::vector<Edge> edges_;
};

Graph complete_graph(std::size_t s);
Graph path_graph(std::size_t s);
Graph cycle_graph(std::size_t s);

/// Vertex (v1, v2) becomes v1 * |V2| + v2; adjacent when equal in one
/// coordinate and adjacent in the other.
Graph cartesian_product(const Graph& g1, const Graph& g2);

/// Triangles {u, v, w} with u < v < w, in lexicographic order.
std::vector<std::array<std::size_t, 3>> triangles(const Graph& g);

/// 0/1 exponent vectors of every vertex set inducing K_0, K_1, K_2 or K_3.
Support clique_support(const Graph& h);

/// Default cap on |A|^l for power_support.
inline constexpr std::size_t kDefaultPowerCap = 1'000'000;

/// All concatenations (alpha_1, ..., alpha_l) with alpha_s in A, over l*m
/// variables; copy s occupies variables [s*m, (s+1)*m).
/// Throws SizeGuardError when |A|^l exceeds `cap`.
Support power_support(const Support& a, std::size_t l, std::size_t cap = kDefaultPowerCap);

/// Support of the eigenproblem M u = lambda u with u_n = 1, over the
/// variables (lambda, u_1, ..., u_{n-1}): {0, e_lambda, e_ui, e_lambda + e_ui}.
/// Requires n >= 2.
Support eigenvalue_support(std::size_t n);

/// colour[v] in {0, 1, 2}.
using Coloring = std::vector<std::uint8_t>;

struct ColoringResult {
    bool colorable = false;
    std::optional<Coloring> witness;
};

/// Exact 3-colourability by backtracking with forward checking, vertices in
/// order of decreasing degree.
ColoringResult is_three_colorable(const Graph& g);

/// Calls `visit` on every proper 3-colouring with colours assigned in
/// first-use order (colour classes as a set partition, each once). Stops
/// early when `visit` returns false.
void for_each_three_coloring(const Graph& g, const std::function<bool(const Coloring&)>& visit);

bool is_proper_coloring(const Graph& g, const Coloring& colour);

/// Whether G x K_3 has a 3-colouring whose three classes all have |G|
/// vertices. Searched directly on the product with class-size caps.
bool balanced_coloring_check(const Graph& g);

/// Colour classes of a colouring as a partition of the vertex set. Classes
/// that are empty are dropped.
Partition coloring_partition(const Coloring& colour);

}  // namespace mhbez
