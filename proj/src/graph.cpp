#include "pmcount/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>

#include "pmcount/error.hpp"

namespace pmcount {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::invalid_size: return "invalid-size";
        case ErrorKind::invalid_graph: return "invalid-graph";
        case ErrorKind::not_a_tree: return "not-a-tree";
        case ErrorKind::invalid_cycle: return "invalid-cycle";
        case ErrorKind::parity: return "parity";
        case ErrorKind::size_limit: return "size-limit";
        case ErrorKind::domain: return "domain";
        case ErrorKind::not_perfect_square: return "not-a-perfect-square";
        case ErrorKind::not_pfaffian: return "not-pfaffian";
        case ErrorKind::not_squarish: return "not-squarish";
        case ErrorKind::precondition: return "precondition";
        case ErrorKind::structure: return "structure";
        case ErrorKind::numerical_consistency: return "numerical-consistency";
        case ErrorKind::parse: return "parse";
        case ErrorKind::internal: return "internal";
    }
    return "unknown";
}

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges)
    : edges_(std::move(edges)), adjacency_(vertex_count) {
    for (Edge& e : edges_) {
        if (e.u == e.v) {
            throw Error(ErrorKind::invalid_graph,
                        "self-loop at vertex " + std::to_string(e.u));
        }
        if (e.u >= vertex_count || e.v >= vertex_count) {
            throw Error(ErrorKind::invalid_graph,
                        "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            "} out of range for " + std::to_string(vertex_count) +
                            " vertices");
        }
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) {
        throw Error(ErrorKind::invalid_graph,
                    "parallel edge {" + std::to_string(dup->u) + "," +
                        std::to_string(dup->v) + "}");
    }
    for (const Edge& e : edges_) {
        adjacency_[e.u].push_back(e.v);
        adjacency_[e.v].push_back(e.u);
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

bool Graph::has_edge(Vertex a, Vertex b) const {
    return edge_index(a, b).has_value();
}

std::optional<std::size_t> Graph::edge_index(Vertex a, Vertex b) const {
    if (a > b) std::swap(a, b);
    const Edge key{a, b};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
}

std::vector<std::size_t> Graph::degree_sequence() const {
    std::vector<std::size_t> degrees;
    degrees.reserve(vertex_count());
    for (const auto& list : adjacency_) degrees.push_back(list.size());
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

Tree path_graph(std::size_t m) {
    if (m == 0) throw Error(ErrorKind::invalid_size, "path needs at least one vertex");
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < m; ++i) edges.push_back({i, i + 1});
    return validate_tree(Graph(m, std::move(edges)));
}

Graph cycle_graph(std::size_t m) {
    if (m < 3) throw Error(ErrorKind::invalid_size, "cycle needs at least three vertices");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < m; ++i) edges.push_back({i, (i + 1) % m});
    return Graph(m, std::move(edges));
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    if (g.empty() || h.empty()) {
        throw Error(ErrorKind::invalid_size, "cartesian product of an empty graph");
    }
    const std::size_t hn = h.vertex_count();
    std::vector<Edge> edges;
    edges.reserve(g.vertex_count() * h.edge_count() + hn * g.edge_count());
    for (Vertex i = 0; i < g.vertex_count(); ++i) {
        for (const Edge& e : h.edges()) edges.push_back({i * hn + e.u, i * hn + e.v});
    }
    for (const Edge& e : g.edges()) {
        for (Vertex j = 0; j < hn; ++j) edges.push_back({e.u * hn + j, e.v * hn + j});
    }
    return Graph(g.vertex_count() * hn, std::move(edges));
}

bool is_connected(const Graph& g) {
    if (g.empty()) return true;
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == g.vertex_count();
}

std::optional<Cycle> find_cycle(const Graph& g) {
    constexpr Vertex none = Tree::no_parent;
    std::vector<Vertex> parent(g.vertex_count(), none);
    std::vector<std::size_t> depth(g.vertex_count(), 0);
    std::vector<bool> seen(g.vertex_count(), false);
    for (Vertex start = 0; start < g.vertex_count(); ++start) {
        if (seen[start]) continue;
        seen[start] = true;
        std::vector<Vertex> stack{start};
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v)) {
                if (w == parent[v]) continue;
                if (!seen[w]) {
                    seen[w] = true;
                    parent[w] = v;
                    depth[w] = depth[v] + 1;
                    stack.push_back(w);
                    continue;
                }
                // Non-tree edge v-w closes a cycle through their common ancestor.
                std::vector<Vertex> left{v}, right{w};
                Vertex a = v, b = w;
                while (depth[a] > depth[b]) left.push_back(a = parent[a]);
                while (depth[b] > depth[a]) right.push_back(b = parent[b]);
                while (a != b) {
                    left.push_back(a = parent[a]);
                    right.push_back(b = parent[b]);
                }
                right.pop_back();
                std::reverse(left.begin(), left.end());
                left.insert(left.end(), right.rbegin(), right.rend());
                // Rotate to the smallest vertex and pick the direction with the
                // smaller successor, matching for_each_cycle's convention.
                auto min_it = std::min_element(left.begin(), left.end());
                std::rotate(left.begin(), min_it, left.end());
                if (left[1] > left.back()) std::reverse(left.begin() + 1, left.end());
                return Cycle{std::move(left)};
            }
        }
    }
    return std::nullopt;
}

namespace {

std::string join_vertices(std::span<const Vertex> vs) {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += '-';
        out += std::to_string(vs[i]);
    }
    return out;
}

}  // namespace

Tree validate_tree(const Graph& g) {
    if (g.empty()) throw Error(ErrorKind::not_a_tree, "empty graph is not a tree");
    if (auto cycle = find_cycle(g)) {
        throw Error(ErrorKind::not_a_tree,
                    "graph contains cycle " + join_vertices(cycle->vertices));
    }
    if (!is_connected(g)) throw Error(ErrorKind::not_a_tree, "graph is disconnected");

    std::vector<Vertex> parent(g.vertex_count(), Tree::no_parent);
    std::vector<bool> seen(g.vertex_count(), false);
    std::queue<Vertex> queue;
    queue.push(0);
    seen[0] = true;
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop();
        for (Vertex w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = true;
                parent[w] = v;
                queue.push(w);
            }
        }
    }
    return Tree(g, 0, std::move(parent));
}

Tree random_tree(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw Error(ErrorKind::invalid_size, "tree needs at least one vertex");
    if (n == 1) return validate_tree(Graph(1, {}));
    std::mt19937_64 engine(seed);
    std::vector<Vertex> pruefer(n - 2);
    for (Vertex& x : pruefer) x = uniform_below(engine, n);

    std::vector<std::size_t> degree(n, 1);
    for (Vertex x : pruefer) ++degree[x];
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
    for (Vertex v = 0; v < n; ++v) {
        if (degree[v] == 1) leaves.push(v);
    }
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    for (Vertex x : pruefer) {
        Vertex leaf = leaves.top();
        leaves.pop();
        edges.push_back({leaf, x});
        if (--degree[x] == 1) leaves.push(x);
    }
    Vertex a = leaves.top();
    leaves.pop();
    edges.push_back({a, leaves.top()});
    return validate_tree(Graph(n, std::move(edges)));
}

namespace {

std::string rooted_encoding(const Graph& g, Vertex v, Vertex parent) {
    std::vector<std::string> children;
    for (Vertex w : g.neighbors(v)) {
        if (w != parent) children.push_back(rooted_encoding(g, w, v));
    }
    std::sort(children.begin(), children.end());
    std::string out = "(";
    for (const auto& c : children) out += c;
    out += ')';
    return out;
}

std::vector<Vertex> tree_centers(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n <= 2) {
        std::vector<Vertex> all(n);
        std::iota(all.begin(), all.end(), Vertex{0});
        return all;
    }
    std::vector<std::size_t> degree(n);
    std::vector<Vertex> layer;
    for (Vertex v = 0; v < n; ++v) {
        degree[v] = g.degree(v);
        if (degree[v] <= 1) layer.push_back(v);
    }
    std::size_t remaining = n;
    while (remaining > 2) {
        remaining -= layer.size();
        std::vector<Vertex> next;
        for (Vertex v : layer) {
            for (Vertex w : g.neighbors(v)) {
                if (--degree[w] == 1) next.push_back(w);
            }
        }
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

}  // namespace

std::string canonical_form(const Tree& t) {
    const Graph& g = t.graph();
    std::string best;
    for (Vertex c : tree_centers(g)) {
        std::string enc = rooted_encoding(g, c, Tree::no_parent);
        if (best.empty() || enc < best) best = std::move(enc);
    }
    return best;
}

std::vector<Tree> all_trees(std::size_t n) {
    if (n == 0 || n > 16) {
        throw Error(ErrorKind::invalid_size, "all_trees supports 1..16 vertices");
    }
    std::map<std::string, Tree> current;
    {
        Tree single = validate_tree(Graph(1, {}));
        current.emplace(canonical_form(single), std::move(single));
    }
    for (std::size_t size = 2; size <= n; ++size) {
        std::map<std::string, Tree> next;
        for (const auto& [key, tree] : current) {
            const Graph& g = tree.graph();
            for (Vertex attach = 0; attach < g.vertex_count(); ++attach) {
                std::vector<Edge> edges(g.edges().begin(), g.edges().end());
                edges.push_back({attach, g.vertex_count()});
                Tree grown = validate_tree(Graph(size, std::move(edges)));
                std::string form = canonical_form(grown);
                next.try_emplace(std::move(form), std::move(grown));
            }
        }
        current = std::move(next);
    }
    std::vector<Tree> out;
    out.reserve(current.size());
    for (auto& [key, tree] : current) out.push_back(std::move(tree));
    return out;
}

void for_each_cycle(const Graph& g, std::size_t max_vertices,
                    const std::function<void(std::span<const Vertex>)>& visit) {
    const std::size_t n = g.vertex_count();
    if (n > max_vertices) {
        throw Error(ErrorKind::size_limit,
                    "cycle enumeration limited to " + std::to_string(max_vertices) +
                        " vertices (graph has " + std::to_string(n) +
                        "); use the brute-force route only");
    }
    std::vector<bool> on_path(n, false);
    std::vector<Vertex> path;
    path.reserve(n);
    // Iterative DFS over simple paths that start at `start` and only visit
    // larger vertices; closing back to `start` yields each cycle twice, once
    // per direction, and the path[1] < path.back() test keeps one.
    struct Frame {
        Vertex v;
        std::size_t next;
    };
    std::vector<Frame> stack;
    for (Vertex start = 0; start < n; ++start) {
        path.assign(1, start);
        on_path[start] = true;
        stack.assign(1, Frame{start, 0});
        while (!stack.empty()) {
            Frame& top = stack.back();
            auto nbrs = g.neighbors(top.v);
            if (top.next == nbrs.size()) {
                on_path[top.v] = false;
                path.pop_back();
                stack.pop_back();
                continue;
            }
            Vertex w = nbrs[top.next++];
            if (w == start) {
                if (path.size() >= 3 && path[1] < path.back()) visit(path);
                continue;
            }
            if (w < start || on_path[w]) continue;
            on_path[w] = true;
            path.push_back(w);
            stack.push_back(Frame{w, 0});
        }
    }
}

std::vector<Cycle> enumerate_cycles(const Graph& g, std::size_t max_vertices) {
    std::vector<Cycle> out;
    for_each_cycle(g, max_vertices, [&](std::span<const Vertex> c) {
        out.push_back(Cycle{{c.begin(), c.end()}});
    });
    return out;
}

void require_cycle(const Graph& g, const Cycle& c) {
    const auto& vs = c.vertices;
    if (vs.size() < 3) throw Error(ErrorKind::invalid_cycle, "cycle needs at least 3 vertices");
    std::set<Vertex> distinct;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (vs[i] >= g.vertex_count()) {
            throw Error(ErrorKind::invalid_cycle, "cycle vertex out of range");
        }
        if (!distinct.insert(vs[i]).second) {
            throw Error(ErrorKind::invalid_cycle, "cycle repeats vertex " + std::to_string(vs[i]));
        }
        Vertex next = vs[(i + 1) % vs.size()];
        if (!g.has_edge(vs[i], next)) {
            throw Error(ErrorKind::invalid_cycle, "cycle step " + std::to_string(vs[i]) +
                                                      "-" + std::to_string(next) +
                                                      " is not an edge");
        }
    }
}

Graph remove_vertices(const Graph& g, std::span<const Vertex> removed) {
    constexpr Vertex gone = Tree::no_parent;
    std::vector<Vertex> relabel(g.vertex_count(), 0);
    for (Vertex v : removed) relabel.at(v) = gone;
    Vertex next = 0;
    for (Vertex& r : relabel) {
        if (r != gone) r = next++;
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        if (relabel[e.u] != gone && relabel[e.v] != gone) {
            edges.push_back({relabel[e.u], relabel[e.v]});
        }
    }
    return Graph(next, std::move(edges));
}

}  // namespace pmcount
