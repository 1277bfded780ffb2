#include "pmcount/orientation.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

#include "mask_graph.hpp"
#include "pmcount/error.hpp"
#include "pmcount/linalg.hpp"

namespace pmcount {

OrientedGraph::OrientedGraph(Graph base)
    : base_(std::move(base)), reversed_(base_.edge_count(), false) {}

OrientedGraph OrientedGraph::from_arcs(std::size_t vertex_count, std::span<const Arc> arcs) {
    std::vector<Edge> edges;
    edges.reserve(arcs.size());
    for (const Arc& a : arcs) edges.push_back({a.tail, a.head});
    OrientedGraph d{Graph(vertex_count, std::move(edges))};
    for (const Arc& a : arcs) {
        if (a.tail > a.head) d.reversed_[*d.base_.edge_index(a.tail, a.head)] = true;
    }
    return d;
}

Arc OrientedGraph::arc(std::size_t edge_index) const {
    const Edge& e = base_.edges()[edge_index];
    return reversed_[edge_index] ? Arc{e.v, e.u} : Arc{e.u, e.v};
}

std::vector<Arc> OrientedGraph::arcs() const {
    std::vector<Arc> out;
    out.reserve(base_.edge_count());
    for (std::size_t i = 0; i < base_.edge_count(); ++i) out.push_back(arc(i));
    return out;
}

bool OrientedGraph::has_arc(Vertex tail, Vertex head) const {
    auto idx = base_.edge_index(tail, head);
    return idx && arc(*idx).tail == tail;
}

void OrientedGraph::reverse(Vertex a, Vertex b) {
    auto idx = base_.edge_index(a, b);
    if (!idx) throw Error(ErrorKind::invalid_graph, "no such edge to reverse");
    reversed_[*idx] = !reversed_[*idx];
}

Matching::Matching(const Graph& host, std::vector<Edge> edges) : edges_(std::move(edges)) {
    std::vector<bool> covered(host.vertex_count(), false);
    for (Edge& e : edges_) {
        if (!host.has_edge(e.u, e.v)) {
            throw Error(ErrorKind::invalid_graph, "matching edge not in host graph");
        }
        if (e.u > e.v) std::swap(e.u, e.v);
        if (covered[e.u] || covered[e.v]) {
            throw Error(ErrorKind::invalid_graph, "matching edges share an endpoint");
        }
        covered[e.u] = covered[e.v] = true;
    }
    std::sort(edges_.begin(), edges_.end());
    perfect_ = std::all_of(covered.begin(), covered.end(), [](bool c) { return c; });
}

bool Matching::contains(Vertex a, Vertex b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{a, b});
}

OrientedGraph orient_lexicographic(const Graph& g) { return OrientedGraph(g); }

OrientedGraph orient_random(const Graph& g, std::uint64_t seed) {
    std::mt19937_64 engine(seed);
    OrientedGraph d(g);
    for (const Edge& e : g.edges()) {
        if (engine() >> 63) d.reverse(e.u, e.v);
    }
    return d;
}

OrientedGraph converse(const OrientedGraph& d) {
    OrientedGraph out = d;
    for (const Edge& e : d.base().edges()) out.reverse(e.u, e.v);
    return out;
}

namespace {

void require_tree_base(const OrientedGraph& d) { validate_tree(d.base()); }

}  // namespace

OrientedGraph orient_double(const OrientedGraph& d) {
    const std::size_t n = d.vertex_count();
    std::vector<Arc> arcs;
    arcs.reserve(2 * d.base().edge_count() + n);
    for (const Arc& a : d.arcs()) {
        arcs.push_back(a);
        arcs.push_back({n + a.head, n + a.tail});
    }
    for (Vertex j = 0; j < n; ++j) arcs.push_back({j, n + j});
    return OrientedGraph::from_arcs(2 * n, arcs);
}

OrientedGraph orient_layered(const OrientedGraph& d, std::size_t layers) {
    require_tree_base(d);
    if (layers == 0) throw Error(ErrorKind::invalid_size, "need at least one layer");
    const std::size_t n = d.vertex_count();
    const auto tree_arcs = d.arcs();
    std::vector<Arc> arcs;
    arcs.reserve(layers * tree_arcs.size() + (layers - 1) * n);
    for (std::size_t layer = 0; layer < layers; ++layer) {
        const Vertex offset = layer * n;
        // 0-based even layers are the odd-numbered copies T_1, T_3, ...
        const bool keep = layer % 2 == 0;
        for (const Arc& a : tree_arcs) {
            arcs.push_back(keep ? Arc{offset + a.tail, offset + a.head}
                                : Arc{offset + a.head, offset + a.tail});
        }
        if (layer + 1 < layers) {
            for (Vertex j = 0; j < n; ++j) arcs.push_back({offset + j, offset + n + j});
        }
    }
    return OrientedGraph::from_arcs(layers * n, arcs);
}

OrientedGraph orient_c4_tree(const OrientedGraph& d) {
    require_tree_base(d);
    return orient_double(orient_double(d));
}

IntMatrix skew_adjacency(const OrientedGraph& d) {
    IntMatrix a(d.vertex_count());
    for (const Arc& arc : d.arcs()) {
        a(arc.tail, arc.head) = 1;
        a(arc.head, arc.tail) = -1;
    }
    return a;
}

bool is_nice_cycle(const Graph& g, const Cycle& c) {
    require_cycle(g, c);
    const detail::MaskGraph mask(g);
    std::uint64_t alive = mask.all();
    for (Vertex v : c.vertices) alive &= ~detail::MaskGraph::bit(v);
    return mask.has_perfect_matching(alive);
}

namespace {

std::size_t forward_arcs(const OrientedGraph& d, std::span<const Vertex> c) {
    std::size_t forward = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (d.has_arc(c[i], c[(i + 1) % c.size()])) ++forward;
    }
    return forward;
}

}  // namespace

bool is_oddly_oriented(const OrientedGraph& d, const Cycle& c) {
    require_cycle(d.base(), c);
    if (c.length() % 2 != 0) {
        throw Error(ErrorKind::parity, "odd orientation is only defined for even cycles");
    }
    // The reverse traversal sees length - forward co-directed arcs, which has
    // the same parity on an even cycle.
    return forward_arcs(d, c.vertices) % 2 == 1;
}

PfaffianReport check_pfaffian(const OrientedGraph& d, std::size_t max_vertices) {
    const Graph& g = d.base();
    if (g.vertex_count() > max_vertices) {
        throw Error(ErrorKind::size_limit,
                    "Pfaffian check limited to " + std::to_string(max_vertices) + " vertices");
    }
    const detail::MaskGraph mask(g);
    std::unordered_map<std::uint64_t, bool> nice_cache;
    PfaffianReport report;
    for_each_cycle(g, max_vertices, [&](std::span<const Vertex> c) {
        ++report.cycles_examined;
        if (c.size() % 2 != 0) return;
        std::uint64_t alive = mask.all();
        for (Vertex v : c) alive &= ~detail::MaskGraph::bit(v);
        auto [it, inserted] = nice_cache.try_emplace(alive, false);
        if (inserted) it->second = mask.has_perfect_matching(alive);
        if (!it->second) return;
        ++report.nice_even_cycles;
        if (forward_arcs(d, c) % 2 == 0) report.violations.push_back(Cycle{{c.begin(), c.end()}});
    });
    report.pass = report.violations.empty();
    return report;
}

}  // namespace pmcount
