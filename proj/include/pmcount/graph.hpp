#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pmcount {

using Vertex = std::size_t;

/// Undirected edge stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Edges are kept sorted, so two graphs built from the same edge set in any
/// order compare equal and serialize identically.
class Graph {
public:
    Graph() = default;

    /// Throws Error(invalid_graph) on self-loops, parallel edges or endpoints
    /// out of range. Endpoint order within an edge does not matter.
    Graph(std::size_t vertex_count, std::vector<Edge> edges);

    std::size_t vertex_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    bool empty() const noexcept { return adjacency_.empty(); }

    std::span<const Edge> edges() const noexcept { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
    std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

    bool has_edge(Vertex a, Vertex b) const;
    /// Position of {a, b} in edges(), if present.
    std::optional<std::size_t> edge_index(Vertex a, Vertex b) const;

    /// Degree sequence sorted ascending.
    std::vector<std::size_t> degree_sequence() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
    }

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
};

/// A graph known to be connected and acyclic, with a rooted parent array.
class Tree {
public:
    static constexpr Vertex no_parent = std::numeric_limits<Vertex>::max();

    const Graph& graph() const noexcept { return graph_; }
    std::size_t vertex_count() const noexcept { return graph_.vertex_count(); }
    Vertex root() const noexcept { return root_; }
    /// no_parent for the root.
    Vertex parent(Vertex v) const { return parent_.at(v); }
    std::span<const Vertex> parents() const noexcept { return parent_; }

    friend bool operator==(const Tree& a, const Tree& b) { return a.graph_ == b.graph_; }

private:
    Tree(Graph graph, Vertex root, std::vector<Vertex> parent)
        : graph_(std::move(graph)), root_(root), parent_(std::move(parent)) {}

    friend Tree validate_tree(const Graph& g);

    Graph graph_;
    Vertex root_ = 0;
    std::vector<Vertex> parent_;
};

/// Closed walk c0 c1 ... c(k-1) c0 over distinct vertices.
struct Cycle {
    std::vector<Vertex> vertices;

    std::size_t length() const noexcept { return vertices.size(); }
    friend bool operator==(const Cycle&, const Cycle&) = default;
};

/// Default vertex limit for the exponential cycle enumeration.
inline constexpr std::size_t default_cycle_guard = 24;

Tree path_graph(std::size_t m);
Graph cycle_graph(std::size_t m);

/// Vertex (i, j) of g x h is numbered i * |h| + j: one copy of h per vertex
/// of g, copies laid out consecutively.
Graph cartesian_product(const Graph& g, const Graph& h);

/// Accepts exactly the connected acyclic graphs. Rooted at vertex 0.
Tree validate_tree(const Graph& g);

/// Some cycle of g, if any. Used to explain why validate_tree rejected g.
std::optional<Cycle> find_cycle(const Graph& g);

bool is_connected(const Graph& g);

/// Uniform labeled tree on n vertices, decoded from a Pruefer sequence drawn
/// with std::mt19937_64 seeded by `seed`. Bounded draws use rejection
/// sampling on the raw 64-bit output, so the result depends only on the
/// mt19937_64 stream and not on the standard library's distributions.
Tree random_tree(std::size_t n, std::uint64_t seed);

/// Unbiased draw in [0, bound) from a raw 64-bit generator (bound > 0).
template <typename Engine>
std::uint64_t uniform_below(Engine& engine, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x = engine();
    while (x >= limit) x = engine();
    return x % bound;
}

/// One representative of every unlabeled tree on n vertices (1 <= n <= 16),
/// ordered by canonical encoding.
std::vector<Tree> all_trees(std::size_t n);

/// Canonical string of a tree; equal iff the trees are isomorphic.
std::string canonical_form(const Tree& t);

/// Calls `visit` once per simple cycle of g (up to rotation and reflection).
/// Each cycle starts at its smallest vertex, and its second vertex is smaller
/// than its last. Throws Error(size_limit) if g has more than max_vertices
/// vertices.
void for_each_cycle(const Graph& g, std::size_t max_vertices,
                    const std::function<void(std::span<const Vertex>)>& visit);

std::vector<Cycle> enumerate_cycles(const Graph& g,
                                    std::size_t max_vertices = default_cycle_guard);

/// Throws Error(invalid_cycle) unless c is a cycle of g.
void require_cycle(const Graph& g, const Cycle& c);

/// g with the listed vertices removed; survivors keep their relative order.
Graph remove_vertices(const Graph& g, std::span<const Vertex> removed);

}  // namespace pmcount
