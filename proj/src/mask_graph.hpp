#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "pmcount/error.hpp"
#include "pmcount/graph.hpp"

namespace pmcount::detail {

// Adjacency as 64-bit vertex sets, for the exhaustive searches.
class MaskGraph {
public:
    explicit MaskGraph(const Graph& g) : adjacency_(g.vertex_count(), 0) {
        if (g.vertex_count() > 64) {
            throw Error(ErrorKind::size_limit, "exhaustive search supports at most 64 vertices");
        }
        for (const Edge& e : g.edges()) {
            adjacency_[e.u] |= bit(e.v);
            adjacency_[e.v] |= bit(e.u);
        }
    }

    static constexpr std::uint64_t bit(Vertex v) { return std::uint64_t{1} << v; }

    std::uint64_t all() const noexcept {
        const auto n = adjacency_.size();
        return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    }

    std::uint64_t neighbors(Vertex v) const { return adjacency_[v]; }

    // Perfect matchings of the subgraph induced by `alive`: the lowest alive
    // vertex is matched against each alive neighbour in turn.
    std::uint64_t count_perfect_matchings(std::uint64_t alive) const {
        if (alive == 0) return 1;
        if (std::popcount(alive) % 2 != 0) return 0;
        const auto v = static_cast<Vertex>(std::countr_zero(alive));
        const std::uint64_t rest = alive & ~bit(v);
        std::uint64_t candidates = adjacency_[v] & rest;
        std::uint64_t total = 0;
        while (candidates) {
            const auto w = static_cast<Vertex>(std::countr_zero(candidates));
            candidates &= candidates - 1;
            total += count_perfect_matchings(rest & ~bit(w));
        }
        return total;
    }

    bool has_perfect_matching(std::uint64_t alive) const {
        if (alive == 0) return true;
        if (std::popcount(alive) % 2 != 0) return false;
        const auto v = static_cast<Vertex>(std::countr_zero(alive));
        const std::uint64_t rest = alive & ~bit(v);
        std::uint64_t candidates = adjacency_[v] & rest;
        while (candidates) {
            const auto w = static_cast<Vertex>(std::countr_zero(candidates));
            candidates &= candidates - 1;
            if (has_perfect_matching(rest & ~bit(w))) return true;
        }
        return false;
    }

    // Largest matching inside `alive`: the lowest vertex is either left
    // unmatched or matched to a neighbour.
    std::size_t maximum_matching(std::uint64_t alive) const {
        if (alive == 0) return 0;
        const auto v = static_cast<Vertex>(std::countr_zero(alive));
        const std::uint64_t rest = alive & ~bit(v);
        std::size_t best = maximum_matching(rest);
        std::uint64_t candidates = adjacency_[v] & rest;
        while (candidates) {
            const auto w = static_cast<Vertex>(std::countr_zero(candidates));
            candidates &= candidates - 1;
            best = std::max(best, 1 + maximum_matching(rest & ~bit(w)));
        }
        return best;
    }

private:
    std::vector<std::uint64_t> adjacency_;
};

}  // namespace pmcount::detail
