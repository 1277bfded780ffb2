#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pmcount/graph.hpp"
#include "pmcount/linalg.hpp"
#include "pmcount/orientation.hpp"

namespace pmcount {

enum class CountMethod {
    brute,
    pfaffian,
    formula_c4t,
    formula_p3t,
    formula_p4t,
    narumi_hosoya,
    kasteleyn_grid,
};

std::string_view to_string(CountMethod m) noexcept;

struct CountResult {
    BigInt count;
    CountMethod method = CountMethod::brute;
    std::optional<std::size_t> matrix_dimension;
    std::optional<BigInt> determinant;
    std::string notes;
};

/// value == factor * root^2 with factor 1 (a square) or 2 (double a square).
struct SquarishDecomposition {
    int factor = 1;
    BigInt root;

    friend bool operator==(const SquarishDecomposition&, const SquarishDecomposition&) = default;
};

inline constexpr std::size_t default_brute_guard = 40;

CountResult count_brute(const Graph& g, std::size_t max_vertices = default_brute_guard);
bool has_perfect_matching(const Graph& g);
/// Size of a largest matching, by exhaustive search (at most 64 vertices).
std::size_t maximum_matching_size(const Graph& g);

/// Pm(G) = sqrt(det A(G^e)) for a Pfaffian orientation d of g. Throws
/// Error(not_pfaffian) when the determinant is not a perfect square.
CountResult count_pfaffian(const Graph& g, const OrientedGraph& d);

/// det(2I + A(T)^2) = prod over the spectrum of T of (2 + theta^2).
CountResult count_c4_tree(const Tree& t);
/// sqrt(det(I + 3A(T)^2 + A(T)^4)); the spectrum of a tree is symmetric, so
/// this is the product over its non-negative eigenvalues.
CountResult count_p4_tree(const Tree& t);
/// sqrt(det(2I + A(T)^2)); requires t to have a perfect matching.
CountResult count_p3_tree(const Tree& t);

/// Trigonometric product for the 2 x 2 x n lattice, checked against the
/// exact count_c4_tree(P_n).
CountResult count_c4_path(std::size_t n);

/// Trigonometric product for the m x n grid.
CountResult count_grid_dimer(std::size_t m, std::size_t n);

SquarishDecomposition squarish_decompose(const BigInt& v);

enum class ClauseStatus { pass, fail, skipped };

struct IdentityClause {
    std::string name;
    ClauseStatus status = ClauseStatus::skipped;
    std::string detail;
};

struct IdentityReport {
    BigInt c4_count;
    std::optional<SquarishDecomposition> squarish;
    bool tree_has_perfect_matching = false;
    std::vector<IdentityClause> clauses;

    bool ok() const;
};

/// Squarish property of Pm(C4 x T), [Pm(P3 x T)]^2 = Pm(C4 x T) when T has
/// a perfect matching, and agreement with brute force on C4 x T, P3 x T and
/// P4 x T for products of at most brute_guard vertices.
IdentityReport verify_identities(const Tree& t, std::size_t brute_guard = 24);

}  // namespace pmcount
