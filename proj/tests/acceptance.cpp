// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pmcount/error.hpp"
#include "pmcount/matching.hpp"

using namespace pmcount;

namespace {

constexpr long double lattice_tolerance = 1e-9L;
constexpr long double grid_tolerance = 1e-6L;
constexpr std::size_t brute_guard = 24;

// Collects the first few mismatches; a criterion passes when none were seen.
class Checker {
public:
    void expect(bool ok, const std::string& what) {
        ++checks_;
        if (ok) return;
        if (failures_.size() < 5) failures_.push_back(what);
        ++failed_;
    }
    std::size_t checks() const { return checks_; }
    bool ok() const { return failed_ == 0; }
    std::string summary() const {
        std::ostringstream out;
        out << failed_ << " of " << checks_ << " checks failed";
        for (const auto& f : failures_) out << "\n      " << f;
        return out.str();
    }

private:
    std::size_t checks_ = 0;
    std::size_t failed_ = 0;
    std::vector<std::string> failures_;
};

std::string show(const Tree& t) { return "tree " + canonical_form(t); }

Graph product_with(const Graph& factor, const Tree& t) { return cartesian_product(factor, t.graph()); }

void c4_formula(Checker& c) {
    std::vector<Tree> trees;
    for (std::size_t n = 1; n <= 5; ++n) {
        for (Tree& t : all_trees(n)) trees.push_back(std::move(t));
    }
    for (std::uint64_t seed = 0; seed < 50; ++seed) trees.push_back(random_tree(1 + seed % 6, seed));
    for (const Tree& t : trees) {
        const BigInt formula = count_c4_tree(t).count;
        const BigInt brute = count_brute(product_with(cycle_graph(4), t), brute_guard).count;
        c.expect(formula == brute, show(t) + ": formula " + formula.str() + ", brute " + brute.str());
    }
}

void c4_lattice(Checker& c) {
    for (std::size_t n = 1; n <= 30; ++n) {
        const BigInt exact = count_c4_tree(path_graph(n)).count;
        c.expect(count_c4_path(n).count == exact, "n = " + std::to_string(n) + ": count differs");
        long double product = 1;
        for (std::size_t k = 1; k <= n; ++k) {
            const long double cs = std::cos(static_cast<long double>(k) * std::numbers::pi_v<long double> /
                                            static_cast<long double>(n + 1));
            product *= 2 + 4 * cs * cs;
        }
        const long double exact_real = exact.convert_to<long double>();
        const long double relative = std::fabs(product - exact_real) / exact_real;
        c.expect(relative <= lattice_tolerance,
                 "n = " + std::to_string(n) + ": relative error " + std::to_string(static_cast<double>(relative)));
    }
    c.expect(count_c4_path(1).count == 2, "n = 1 should give 2");
    c.expect(count_c4_path(2).count == 9, "n = 2 should give 9");
    c.expect(count_c4_path(3).count == 32, "n = 3 should give 32");
}

void p4_formula(Checker& c) {
    for (std::size_t n = 1; n <= 6; ++n) {
        for (const Tree& t : all_trees(n)) {
            const BigInt formula = count_p4_tree(t).count;
            const BigInt brute = count_brute(product_with(path_graph(4).graph(), t), brute_guard).count;
            c.expect(formula == brute, show(t) + ": formula " + formula.str() + ", brute " + brute.str());
        }
    }
    c.expect(count_p4_tree(path_graph(2)).count == 5, "K2 should give 5");
    c.expect(count_p4_tree(path_graph(4)).count == 36, "P4 should give 36");
}

void p3_formula(Checker& c) {
    std::size_t found = 0;
    for (std::uint64_t seed = 0; found < 50; ++seed) {
        const Tree t = random_tree(2 * (1 + seed % 4), seed);
        if (!has_perfect_matching(t.graph())) continue;
        ++found;
        const BigInt p3 = count_p3_tree(t).count;
        const BigInt c4 = count_c4_tree(t).count;
        c.expect(p3 * p3 == c4, show(t) + ": " + p3.str() + "^2 vs " + c4.str());
        const BigInt brute = count_brute(product_with(path_graph(3).graph(), t), brute_guard).count;
        c.expect(p3 == brute, show(t) + ": formula " + p3.str() + ", brute " + brute.str());
    }
    c.expect(count_p3_tree(path_graph(4)).count == 11, "P4 should give 11");
}

void squarish(Checker& c) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const Tree t = random_tree(1 + seed % 12, seed + 500);
        const BigInt c4 = count_c4_tree(t).count;
        try {
            const auto dec = squarish_decompose(c4);
            const std::size_t nullity = t.vertex_count() - 2 * maximum_matching_size(t.graph());
            c.expect(dec.factor * dec.root * dec.root == c4, show(t) + ": decomposition does not multiply back");
            c.expect((dec.factor == 1) == (nullity % 2 == 0),
                     show(t) + ": factor " + std::to_string(dec.factor) + " with nullity " + std::to_string(nullity));
        } catch (const Error& e) {
            c.expect(false, show(t) + ": " + e.what());
        }
    }
    c.expect(squarish_decompose(count_c4_tree(path_graph(3)).count) == SquarishDecomposition{2, 4},
             "P3 should give (2, 4)");
    c.expect(squarish_decompose(count_c4_tree(path_graph(4)).count) == SquarishDecomposition{1, 11},
             "P4 should give (1, 11)");
}

void skew_spectrum(Checker& c) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const Tree t = random_tree(1 + seed % 12, seed + 2000);
        const std::size_t n = t.vertex_count();
        const IntPolynomial phi = char_poly_tree(t);
        const auto matchings = oracle::matchings_by_size(t.graph());
        for (std::uint64_t o = 0; o < 5; ++o) {
            const IntPolynomial skew = skew_char_poly(orient_random(t.graph(), seed * 5 + o));
            c.expect(skew.degree() == phi.degree(), show(t) + ": degree differs");
            for (std::size_t k = 0; k <= n; ++k) {
                c.expect(skew.coefficient(k) == abs(phi.coefficient(k)),
                         show(t) + ": coefficient of x^" + std::to_string(k));
            }
            // det(xI - A(T^e)) = sum_i m_i(T) x^(n - 2i).
            for (std::size_t i = 0; 2 * i <= n; ++i) {
                c.expect(skew.coefficient(n - 2 * i) == matchings[i],
                         show(t) + ": " + std::to_string(i) + "-matchings");
            }
        }
    }
}

struct Labelled {
    std::string label;
    OrientedGraph d;
};

// Every orientation the Pfaffian criteria are checked on. Each tree is tried
// with its lexicographic orientation and one random orientation.
const std::vector<Labelled>& constructed_orientations() {
    static const std::vector<Labelled> all = [] {
        std::vector<Labelled> out;
        for (std::size_t n = 1; n <= 6; ++n) {
            for (const Tree& t : all_trees(n)) {
                const std::vector<OrientedGraph> bases{orient_lexicographic(t.graph()),
                                                       orient_random(t.graph(), n * 100 + out.size())};
                for (std::size_t b = 0; b < bases.size(); ++b) {
                    const std::string tag = show(t) + (b == 0 ? " lex" : " random");
                    out.push_back({"double " + tag, orient_double(bases[b])});
                    out.push_back({"c4 " + tag, orient_c4_tree(bases[b])});
                    if (n <= 5) out.push_back({"layered-4 " + tag, orient_layered(bases[b], 4)});
                    if (has_perfect_matching(t.graph())) {
                        out.push_back({"layered-3 " + tag, orient_layered(bases[b], 3)});
                    }
                }
            }
        }
        return out;
    }();
    return all;
}

void pfaffian_orientations(Checker& c) {
    for (const auto& [label, d] : constructed_orientations()) {
        const auto report = check_pfaffian(d);
        c.expect(report.pass, label + ": " + std::to_string(report.violations.size()) + " violations");
    }
    // In P2 x T every cycle uses exactly two rungs and leaves a matchable rest.
    for (std::size_t n = 1; n <= 6; ++n) {
        for (const Tree& t : all_trees(n)) {
            const Graph ladder = product_with(path_graph(2).graph(), t);
            for (const Cycle& cycle : enumerate_cycles(ladder)) {
                const auto& vs = cycle.vertices;
                std::size_t rungs = 0;
                for (std::size_t i = 0; i < vs.size(); ++i) {
                    const Vertex a = vs[i], b = vs[(i + 1) % vs.size()];
                    if ((a < n) != (b < n)) ++rungs;
                }
                c.expect(rungs == 2, show(t) + ": cycle with " + std::to_string(rungs) + " rungs");
                c.expect(is_nice_cycle(ladder, cycle), show(t) + ": cycle is not nice");
            }
        }
    }
}

void pfaffian_counts(Checker& c) {
    for (const auto& [label, d] : constructed_orientations()) {
        const auto r = count_pfaffian(d.base(), d);
        const BigInt brute = count_brute(d.base(), brute_guard).count;
        c.expect(r.count == brute, label + ": pfaffian " + r.count.str() + ", brute " + brute.str());
        c.expect(r.determinant && *r.determinant == r.count * r.count, label + ": determinant is not a square");
    }
}

void grid_dimers(Checker& c) {
    for (std::size_t m = 1; m <= 36; ++m) {
        for (std::size_t n = m; m * n <= 36; ++n) {
            if ((m * n) % 2 != 0) continue;
            const std::uint64_t expected = oracle::grid_dimers_profile(m, n);
            const std::string where = std::to_string(m) + " x " + std::to_string(n);
            c.expect(count_grid_dimer(m, n).count == expected && count_grid_dimer(n, m).count == expected,
                     where + ": expected " + std::to_string(expected));
            long double product = 1;
            for (std::size_t k = 1; k <= m; ++k) {
                for (std::size_t l = 1; l <= n; ++l) {
                    const long double a = std::cos(std::numbers::pi_v<long double> * k / (m + 1));
                    const long double b = std::cos(std::numbers::pi_v<long double> * l / (n + 1));
                    product *= std::pow(4 * a * a + 4 * b * b, 0.25L);
                }
            }
            const long double slack = std::fabs(product - static_cast<long double>(expected));
            c.expect(slack <= grid_tolerance * static_cast<long double>(expected),
                     where + ": floating product off by " + std::to_string(static_cast<double>(slack)));
        }
    }
    const std::vector<std::tuple<std::size_t, std::size_t, std::uint64_t>> spots{
        {2, 2, 2}, {2, 4, 5}, {3, 4, 11}, {4, 4, 36}, {6, 6, 6728}};
    for (const auto& [m, n, v] : spots) {
        c.expect(oracle::grid_dimers_profile(m, n) == v && count_grid_dimer(m, n).count == v,
                 std::to_string(m) + " x " + std::to_string(n) + " should give " + std::to_string(v));
    }
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Checker&)>>> criteria{
        {"C4 x T formula matches brute force", c4_formula},
        {"2 x 2 x n lattice product matches the exact count", c4_lattice},
        {"P4 x T formula matches brute force", p4_formula},
        {"P3 x T formula squares to C4 x T and matches brute force", p3_formula},
        {"C4 x T counts are squarish with the nullity parity", squarish},
        {"skew characteristic polynomial counts tree matchings", skew_spectrum},
        {"constructed orientations are Pfaffian", pfaffian_orientations},
        {"Pfaffian counts match brute force", pfaffian_counts},
        {"grid dimer product matches the profile DP", grid_dimers},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Checker c;
        const auto start = std::chrono::steady_clock::now();
        std::string error;
        try {
            criteria[i].second(c);
        } catch (const std::exception& e) {
            error = e.what();
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        const bool ok = error.empty() && c.ok();
        if (!ok) ++failed;
        std::printf("%s  %zu  %s (%zu checks, %lld ms)\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    c.checks(), static_cast<long long>(ms));
        if (!error.empty()) std::printf("      exception: %s\n", error.c_str());
        if (!c.ok()) std::printf("      %s\n", c.summary().c_str());
    }
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
