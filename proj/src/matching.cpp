#include "pmcount/matching.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "mask_graph.hpp"
#include "pmcount/error.hpp"

namespace pmcount {

std::string_view to_string(CountMethod m) noexcept {
    switch (m) {
        case CountMethod::brute: return "brute";
        case CountMethod::pfaffian: return "pfaffian";
        case CountMethod::formula_c4t: return "formula-c4t";
        case CountMethod::formula_p3t: return "formula-p3t";
        case CountMethod::formula_p4t: return "formula-p4t";
        case CountMethod::narumi_hosoya: return "narumi-hosoya";
        case CountMethod::kasteleyn_grid: return "kasteleyn-grid";
    }
    return "unknown";
}

CountResult count_brute(const Graph& g, std::size_t max_vertices) {
    if (g.vertex_count() > max_vertices) {
        throw Error(ErrorKind::size_limit,
                    "brute-force counting limited to " + std::to_string(max_vertices) +
                        " vertices (graph has " + std::to_string(g.vertex_count()) + ")");
    }
    CountResult r;
    r.method = CountMethod::brute;
    if (g.vertex_count() % 2 != 0) {
        r.count = 0;
        r.notes = "odd vertex count";
        return r;
    }
    const detail::MaskGraph mask(g);
    r.count = mask.count_perfect_matchings(mask.all());
    return r;
}

bool has_perfect_matching(const Graph& g) {
    const detail::MaskGraph mask(g);
    return mask.has_perfect_matching(mask.all());
}

std::size_t maximum_matching_size(const Graph& g) {
    const detail::MaskGraph mask(g);
    return mask.maximum_matching(mask.all());
}

CountResult count_pfaffian(const Graph& g, const OrientedGraph& d) {
    if (!(d.base() == g)) {
        throw Error(ErrorKind::precondition, "orientation is not over the given graph");
    }
    CountResult r;
    r.method = CountMethod::pfaffian;
    r.matrix_dimension = g.vertex_count();
    if (g.vertex_count() % 2 != 0) {
        r.count = 0;
        r.notes = "odd vertex count";
        return r;
    }
    BigInt det = det_bareiss(skew_adjacency(d));
    r.determinant = det;
    try {
        r.count = integer_sqrt_exact(det);
    } catch (const Error&) {
        throw Error(ErrorKind::not_pfaffian, "skew adjacency determinant " + det.str() +
                                                 " is not a perfect square; orientation is not Pfaffian");
    }
    return r;
}

namespace {

IntMatrix tree_matrix_poly(const Tree& t, std::initializer_list<long long> coeffs) {
    return eval_matrix_poly(adjacency_matrix(t.graph()), coeffs);
}

}  // namespace

CountResult count_c4_tree(const Tree& t) {
    CountResult r;
    r.method = CountMethod::formula_c4t;
    r.matrix_dimension = t.vertex_count();
    r.count = det_bareiss(tree_matrix_poly(t, {2, 0, 1}));
    r.determinant = r.count;
    return r;
}

CountResult count_p4_tree(const Tree& t) {
    CountResult r;
    r.method = CountMethod::formula_p4t;
    r.matrix_dimension = t.vertex_count();
    BigInt det = det_bareiss(tree_matrix_poly(t, {1, 0, 3, 0, 1}));
    r.determinant = det;
    try {
        r.count = integer_sqrt_exact(det);
    } catch (const Error& e) {
        throw Error(ErrorKind::internal,
                    "det(I + 3A^2 + A^4) = " + det.str() +
                        " is not a square, contradicting the symmetric tree spectrum");
    }
    return r;
}

CountResult count_p3_tree(const Tree& t) {
    if (!has_perfect_matching(t.graph())) {
        throw Error(ErrorKind::precondition,
                    "the P3 x T product formula needs a tree with a perfect matching; "
                    "no closed form is known otherwise (use --method brute)");
    }
    CountResult r;
    r.method = CountMethod::formula_p3t;
    r.matrix_dimension = t.vertex_count();
    BigInt det = det_bareiss(tree_matrix_poly(t, {2, 0, 1}));
    r.determinant = det;
    try {
        r.count = integer_sqrt_exact(det);
    } catch (const Error&) {
        throw Error(ErrorKind::internal, "det(2I + A^2) = " + det.str() +
                                             " is not a square for a tree with a perfect matching");
    }
    return r;
}

namespace {

using Real = long double;

// Rounding error bound for exp(sum of `terms` logarithms whose total is
// log_value): each log and the final exp contribute a few ulps.
Real relative_error_bound(std::size_t terms, Real log_value) {
    return 4 * (static_cast<Real>(terms) + std::fabs(log_value) + 1) *
           std::numeric_limits<Real>::epsilon();
}

std::string describe(Real v) {
    std::ostringstream out;
    out.precision(std::numeric_limits<Real>::digits10);
    out << v;
    return out.str();
}

Real to_real(const BigInt& v) { return v.convert_to<Real>(); }

}  // namespace

CountResult count_c4_path(std::size_t n) {
    if (n == 0) throw Error(ErrorKind::invalid_size, "lattice length must be positive");
    const Real pi = std::numbers::pi_v<Real>;
    Real log_value = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        const Real c = std::cos(static_cast<Real>(k) * pi / static_cast<Real>(n + 1));
        log_value += std::log(2 + 4 * c * c);
    }
    const Real approx = std::exp(log_value);

    const BigInt exact = count_c4_tree(path_graph(n)).count;
    const Real exact_real = to_real(exact);
    const Real relative = std::fabs(approx - exact_real) / exact_real;
    if (relative > 1e-9L) {
        throw Error(ErrorKind::numerical_consistency,
                    "trigonometric product " + describe(approx) + " differs from exact " +
                        exact.str() + " by relative " + describe(relative));
    }
    // Where the floating value pins down a unique integer, it must round to
    // the exact count.
    if (approx * relative_error_bound(n, log_value) < 0.25L) {
        const BigInt rounded{std::llround(approx)};
        if (rounded != exact) {
            throw Error(ErrorKind::numerical_consistency,
                        "trigonometric product rounds to " + rounded.str() + ", exact is " +
                            exact.str());
        }
    }
    CountResult r;
    r.method = CountMethod::narumi_hosoya;
    r.count = exact;
    r.notes = "floating product " + describe(approx) + ", relative error " + describe(relative);
    return r;
}

CountResult count_grid_dimer(std::size_t m, std::size_t n) {
    if (m == 0 || n == 0) throw Error(ErrorKind::invalid_size, "grid sides must be positive");
    CountResult r;
    r.method = CountMethod::kasteleyn_grid;
    if ((m * n) % 2 != 0) {
        r.count = 0;
        r.notes = "odd number of cells";
        return r;
    }
    // With m*n even at most one of the two cosines can vanish, so every
    // factor is strictly positive.
    const Real pi = std::numbers::pi_v<Real>;
    Real log_value = static_cast<Real>(m * n) / 2 * std::numbers::ln2_v<Real>;
    for (std::size_t k = 1; k <= m; ++k) {
        const Real ck = std::cos(pi * static_cast<Real>(k) / static_cast<Real>(m + 1));
        for (std::size_t l = 1; l <= n; ++l) {
            const Real cl = std::cos(pi * static_cast<Real>(l) / static_cast<Real>(n + 1));
            log_value += std::log(ck * ck + cl * cl) / 4;
        }
    }
    const Real approx = std::exp(log_value);
    if (approx * relative_error_bound(m * n, log_value) >= 0.25L) {
        throw Error(ErrorKind::numerical_consistency,
                    "grid count " + describe(approx) +
                        " exceeds what the floating product can resolve to an integer");
    }
    const Real nearest = std::round(approx);
    const Real distance = std::fabs(approx - nearest);
    if (distance > 1e-6L * std::max<Real>(approx, 1)) {
        throw Error(ErrorKind::numerical_consistency,
                    "grid product " + describe(approx) + " is not close to an integer");
    }
    r.count = BigInt(std::llround(approx));
    r.notes = "floating product " + describe(approx);
    return r;
}

SquarishDecomposition squarish_decompose(const BigInt& v) {
    if (v < 1) throw Error(ErrorKind::domain, "squarish decomposition needs a positive integer");
    BigInt root = boost::multiprecision::sqrt(v);
    if (root * root == v) return {1, root};
    if (v % 2 == 0) {
        const BigInt half = v / 2;
        root = boost::multiprecision::sqrt(half);
        if (root * root == half) return {2, root};
    }
    throw Error(ErrorKind::not_squarish, v.str() + " is neither a square nor double a square");
}

bool IdentityReport::ok() const {
    for (const auto& c : clauses) {
        if (c.status == ClauseStatus::fail) return false;
    }
    return true;
}

namespace {

void brute_clause(IdentityReport& report, const std::string& name, const Graph& factor,
                  const Tree& t, std::size_t guard, const std::optional<BigInt>& formula) {
    IdentityClause clause{name, ClauseStatus::skipped, {}};
    const std::size_t size = factor.vertex_count() * t.vertex_count();
    if (!formula) {
        clause.detail = "no formula value";
    } else if (size > guard) {
        clause.detail = "product has " + std::to_string(size) + " vertices, above guard " +
                        std::to_string(guard);
    } else {
        const BigInt brute = count_brute(cartesian_product(factor, t.graph()), guard).count;
        clause.status = brute == *formula ? ClauseStatus::pass : ClauseStatus::fail;
        clause.detail = "formula " + formula->str() + ", brute force " + brute.str();
    }
    report.clauses.push_back(std::move(clause));
}

}  // namespace

IdentityReport verify_identities(const Tree& t, std::size_t brute_guard) {
    IdentityReport report;
    report.tree_has_perfect_matching = has_perfect_matching(t.graph());
    report.c4_count = count_c4_tree(t).count;

    IdentityClause squarish{"squarish", ClauseStatus::fail, {}};
    try {
        auto dec = squarish_decompose(report.c4_count);
        report.squarish = dec;
        const bool factor_ok = !report.tree_has_perfect_matching || dec.factor == 1;
        squarish.status = factor_ok ? ClauseStatus::pass : ClauseStatus::fail;
        squarish.detail = report.c4_count.str() + " = " + (dec.factor == 2 ? "2*" : "") +
                          dec.root.str() + "^2";
        if (!factor_ok) squarish.detail += ", but a tree with a perfect matching needs a square";
    } catch (const Error& e) {
        squarish.detail = e.what();
    }
    report.clauses.push_back(std::move(squarish));

    std::optional<BigInt> p3;
    IdentityClause squared{"p3-squared", ClauseStatus::skipped, {}};
    if (report.tree_has_perfect_matching) {
        p3 = count_p3_tree(t).count;
        squared.status = *p3 * *p3 == report.c4_count ? ClauseStatus::pass : ClauseStatus::fail;
        squared.detail = p3->str() + "^2 vs " + report.c4_count.str();
    } else {
        squared.detail = "tree has no perfect matching";
    }
    report.clauses.push_back(std::move(squared));

    const BigInt p4 = count_p4_tree(t).count;
    brute_clause(report, "brute-c4", cycle_graph(4), t, brute_guard, report.c4_count);
    brute_clause(report, "brute-p3", path_graph(3).graph(), t, brute_guard, p3);
    brute_clause(report, "brute-p4", path_graph(4).graph(), t, brute_guard, p4);
    return report;
}

}  // namespace pmcount
