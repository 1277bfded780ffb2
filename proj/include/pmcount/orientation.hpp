#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pmcount/graph.hpp"

namespace pmcount {

class IntMatrix;

struct Arc {
    Vertex tail = 0;
    Vertex head = 0;

    friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// An orientation of a simple graph: exactly one arc per base edge.
class OrientedGraph {
public:
    OrientedGraph() = default;

    /// Every edge {u, v} with u < v directed u -> v.
    explicit OrientedGraph(Graph base);

    /// Throws Error(invalid_graph) if the arcs do not form a simple graph.
    static OrientedGraph from_arcs(std::size_t vertex_count, std::span<const Arc> arcs);

    const Graph& base() const noexcept { return base_; }
    std::size_t vertex_count() const noexcept { return base_.vertex_count(); }

    /// Arcs listed in the base graph's edge order.
    std::vector<Arc> arcs() const;
    Arc arc(std::size_t edge_index) const;

    bool has_arc(Vertex tail, Vertex head) const;
    /// Flip the arc on base edge {a, b}.
    void reverse(Vertex a, Vertex b);

    friend bool operator==(const OrientedGraph&, const OrientedGraph&) = default;

private:
    Graph base_;
    // reversed_[i] set means edge i (stored u < v) points v -> u.
    std::vector<bool> reversed_;
};

/// A set of pairwise disjoint edges of a host graph.
class Matching {
public:
    /// Throws Error(invalid_graph) if an edge is missing from host or two
    /// edges share an endpoint.
    Matching(const Graph& host, std::vector<Edge> edges);

    std::span<const Edge> edges() const noexcept { return edges_; }
    std::size_t size() const noexcept { return edges_.size(); }
    bool is_perfect() const noexcept { return perfect_; }
    bool contains(Vertex a, Vertex b) const;

private:
    std::vector<Edge> edges_;
    bool perfect_ = false;
};

struct PfaffianReport {
    bool pass = true;
    std::size_t cycles_examined = 0;
    std::size_t nice_even_cycles = 0;
    std::vector<Cycle> violations;
};

OrientedGraph orient_lexicographic(const Graph& g);

/// Each edge gets a direction from one fair coin flip of mt19937_64(seed).
OrientedGraph orient_random(const Graph& g, std::uint64_t seed);

OrientedGraph converse(const OrientedGraph& d);

/// Orientation of P2 x G: vertices 0..n-1 (left half) carry d, vertices
/// n..2n-1 (right half) carry converse(d), and every rung j -> n + j.
OrientedGraph orient_double(const OrientedGraph& d);

/// Orientation of Pm x T: layer i (1-based, vertices (i-1)n..in-1) carries d
/// when i is odd and converse(d) when i is even; rungs point from layer i to
/// layer i + 1. Throws Error(not_a_tree) unless base(d) is a tree.
OrientedGraph orient_layered(const OrientedGraph& d, std::size_t layers);

/// orient_double applied twice: layers (0,0) (0,1) (1,0) (1,1) carry
/// d, converse, converse, d. The skew adjacency is the 4x4 block matrix
/// [[A, I, I, 0], [-I, -A, 0, I], [-I, 0, -A, -I], [0, -I, I, A]].
OrientedGraph orient_c4_tree(const OrientedGraph& d);

IntMatrix skew_adjacency(const OrientedGraph& d);

/// Whether g minus the vertices of c has a perfect matching.
bool is_nice_cycle(const Graph& g, const Cycle& c);

/// Even cycles only: Error(parity) on odd length.
bool is_oddly_oriented(const OrientedGraph& d, const Cycle& c);

/// Checks that every nice cycle of even length is oddly oriented.
PfaffianReport check_pfaffian(const OrientedGraph& d,
                              std::size_t max_vertices = default_cycle_guard);

}  // namespace pmcount
