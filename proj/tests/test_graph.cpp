#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "pmcount/error.hpp"
#include "pmcount/graph.hpp"

using namespace pmcount;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected pmcount::Error");
    return ErrorKind::internal;
}

std::map<std::size_t, std::uint64_t> histogram(const std::vector<Cycle>& cycles) {
    std::map<std::size_t, std::uint64_t> h;
    for (const auto& c : cycles) ++h[c.length()];
    return h;
}

}  // namespace

TEST_CASE("graph rejects loops, parallel edges and bad endpoints") {
    CHECK(kind_of([] { Graph(3, {{1, 1}}); }) == ErrorKind::invalid_graph);
    CHECK(kind_of([] { Graph(3, {{0, 1}, {1, 0}}); }) == ErrorKind::invalid_graph);
    CHECK(kind_of([] { Graph(3, {{0, 3}}); }) == ErrorKind::invalid_graph);
    Graph g(3, {{2, 0}, {1, 0}});
    CHECK(g.edges()[0] == Edge{0, 1});
    CHECK(g.edges()[1] == Edge{0, 2});
    CHECK(g.has_edge(2, 0));
    CHECK_FALSE(g.has_edge(1, 2));
}

TEST_CASE("path_graph") {
    CHECK(kind_of([] { path_graph(0); }) == ErrorKind::invalid_size);
    CHECK(path_graph(1).graph().edge_count() == 0);
    CHECK(path_graph(2).graph() == Graph(2, {{0, 1}}));
    CHECK(path_graph(4).graph() == Graph(4, {{0, 1}, {1, 2}, {2, 3}}));
}

TEST_CASE("cycle_graph") {
    CHECK(kind_of([] { cycle_graph(2); }) == ErrorKind::invalid_size);
    CHECK(cycle_graph(3).edge_count() == 3);
    CHECK(cycle_graph(4).edge_count() == 4);
    CHECK(cycle_graph(6).edge_count() == 6);
    CHECK(cycle_graph(4).has_edge(3, 0));
}

TEST_CASE("cartesian_product counts and layer-major numbering") {
    const Graph p2 = path_graph(2).graph();
    const Graph square = cartesian_product(p2, p2);
    CHECK(square.vertex_count() == 4);
    CHECK(square.edge_count() == 4);
    // Isomorphic to C4: same degree sequence and a single 4-cycle.
    CHECK(square.degree_sequence() == cycle_graph(4).degree_sequence());
    CHECK(enumerate_cycles(square).size() == 1);

    const Graph cube = cartesian_product(cycle_graph(4), p2);
    CHECK(cube.vertex_count() == 8);
    CHECK(cube.edge_count() == 12);

    const Graph grid = cartesian_product(path_graph(3).graph(), path_graph(4).graph());
    CHECK(grid.vertex_count() == 12);
    CHECK(grid.edge_count() == 17);
    CHECK(grid.has_edge(1 * 4 + 2, 1 * 4 + 3));  // inside copy 1
    CHECK(grid.has_edge(0 * 4 + 2, 1 * 4 + 2));  // between copies 0 and 1

    CHECK(kind_of([] { cartesian_product(Graph(), cycle_graph(3)); }) == ErrorKind::invalid_size);
}

TEST_CASE("cartesian_product size identity on random inputs") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const Graph g = random_tree(1 + seed % 7, seed).graph();
        const Graph h = seed % 2 ? cycle_graph(3 + seed % 4) : random_tree(1 + seed % 5, seed * 7).graph();
        const Graph p = cartesian_product(g, h);
        CHECK(p.vertex_count() == g.vertex_count() * h.vertex_count());
        CHECK(p.edge_count() == g.vertex_count() * h.edge_count() + h.vertex_count() * g.edge_count());
    }
}

TEST_CASE("validate_tree") {
    CHECK_NOTHROW(validate_tree(path_graph(5).graph()));
    try {
        validate_tree(cycle_graph(4));
        FAIL("cycle accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::not_a_tree);
        CHECK(std::string(e.what()).find("0-1-2-3") != std::string::npos);
    }
    CHECK(find_cycle(cycle_graph(4)) == Cycle{{0, 1, 2, 3}});
    try {
        validate_tree(Graph(4, {{0, 1}, {2, 3}}));
        FAIL("forest accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::not_a_tree);
        CHECK(std::string(e.what()).find("disconnected") != std::string::npos);
    }
    CHECK(kind_of([] { validate_tree(Graph()); }) == ErrorKind::not_a_tree);
}

TEST_CASE("validated tree parent array reproduces the edges") {
    const Tree t = random_tree(9, 17);
    std::set<Edge> from_parents;
    for (Vertex v = 0; v < t.vertex_count(); ++v) {
        if (t.parent(v) != Tree::no_parent) from_parents.insert({std::min(v, t.parent(v)), std::max(v, t.parent(v))});
    }
    CHECK(from_parents == std::set<Edge>(t.graph().edges().begin(), t.graph().edges().end()));
}

TEST_CASE("random_tree") {
    CHECK(random_tree(1, 99).vertex_count() == 1);
    CHECK(random_tree(2, 5).graph() == Graph(2, {{0, 1}}));
    CHECK(random_tree(8, 1234).graph() == random_tree(8, 1234).graph());
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const Tree t = random_tree(1 + seed % 15, seed);
        CHECK(t.graph().edge_count() + 1 == t.vertex_count());
        CHECK_NOTHROW(validate_tree(t.graph()));
    }
}

TEST_CASE("random_tree covers all labeled trees on 4 vertices") {
    // Cayley: 16 labeled trees on 4 vertices.
    std::set<std::vector<Edge>> seen;
    for (std::uint64_t seed = 0; seed < 2000; ++seed) {
        const Tree t = random_tree(4, seed);
        seen.emplace(t.graph().edges().begin(), t.graph().edges().end());
    }
    CHECK(seen.size() == 16);
}

TEST_CASE("all_trees matches the unlabeled tree counts") {
    const std::vector<std::size_t> expected{1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
    for (std::size_t n = 1; n <= expected.size(); ++n) {
        const auto trees = all_trees(n);
        CHECK(trees.size() == expected[n - 1]);
        std::set<std::string> forms;
        for (const auto& t : trees) forms.insert(canonical_form(t));
        CHECK(forms.size() == trees.size());
    }
}

TEST_CASE("enumerate_cycles") {
    CHECK(enumerate_cycles(cycle_graph(4)) == std::vector<Cycle>{{{0, 1, 2, 3}}});
    const Graph cube = cartesian_product(cycle_graph(4), path_graph(2).graph());
    const auto h = histogram(enumerate_cycles(cube));
    CHECK(h == std::map<std::size_t, std::uint64_t>{{4, 6}, {6, 16}, {8, 6}});
    CHECK(h == oracle::cycles_by_length(cube));
    CHECK(enumerate_cycles(random_tree(10, 3).graph()).empty());
    CHECK(kind_of([] { enumerate_cycles(cycle_graph(30)); }) == ErrorKind::size_limit);
    CHECK(enumerate_cycles(cycle_graph(30), 30).size() == 1);
}

TEST_CASE("enumerate_cycles agrees with the subset oracle") {
    const std::vector<Graph> graphs{
        cartesian_product(path_graph(3).graph(), path_graph(4).graph()),
        cartesian_product(cycle_graph(4), path_graph(3).graph()),
        cartesian_product(cycle_graph(3), cycle_graph(3)),
        Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}),
    };
    for (const auto& g : graphs) {
        const auto cycles = enumerate_cycles(g);
        CHECK(histogram(cycles) == oracle::cycles_by_length(g));
        std::set<std::set<Edge>> distinct;
        for (const auto& c : cycles) {
            CHECK_NOTHROW(require_cycle(g, c));
            std::set<Edge> edges;
            for (std::size_t i = 0; i < c.length(); ++i) {
                Vertex a = c.vertices[i], b = c.vertices[(i + 1) % c.length()];
                edges.insert({std::min(a, b), std::max(a, b)});
            }
            distinct.insert(edges);
        }
        CHECK(distinct.size() == cycles.size());
    }
}

TEST_CASE("require_cycle and remove_vertices") {
    const Graph g = cycle_graph(5);
    CHECK(kind_of([&] { require_cycle(g, Cycle{{0, 1, 3}}); }) == ErrorKind::invalid_cycle);
    CHECK(kind_of([&] { require_cycle(g, Cycle{{0, 1}}); }) == ErrorKind::invalid_cycle);
    CHECK(kind_of([&] { require_cycle(g, Cycle{{0, 1, 2, 1, 0}}); }) == ErrorKind::invalid_cycle);
    const std::vector<Vertex> gone{0, 2};
    CHECK(remove_vertices(g, gone) == Graph(3, {{1, 2}}));
}
