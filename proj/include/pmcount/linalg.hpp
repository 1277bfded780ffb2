#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pmcount/graph.hpp"

namespace pmcount {

using BigInt = boost::multiprecision::cpp_int;

class OrientedGraph;

/// Dense square matrix of arbitrary-precision integers, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t n) : n_(n), entries_(n * n) {}
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t size() const noexcept { return n_; }

    BigInt& operator()(std::size_t r, std::size_t c) { return entries_[r * n_ + c]; }
    const BigInt& operator()(std::size_t r, std::size_t c) const {
        return entries_[r * n_ + c];
    }

    IntMatrix transpose() const;

    IntMatrix& operator+=(const IntMatrix& rhs);
    IntMatrix& operator*=(const BigInt& scalar);

    friend IntMatrix operator+(IntMatrix lhs, const IntMatrix& rhs) { return lhs += rhs; }
    friend IntMatrix operator-(const IntMatrix& m);
    friend IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<BigInt> entries_;
};

/// Integer polynomial, coefficients stored constant term first. The
/// coefficient vector never has a trailing zero, so the zero polynomial is
/// the empty vector.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coefficients);
    IntPolynomial(std::initializer_list<long long> coefficients);

    static IntPolynomial monomial(std::size_t degree);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    /// Zero past the degree.
    BigInt coefficient(std::size_t power) const;
    std::span<const BigInt> coefficients() const noexcept { return coeffs_; }

    BigInt evaluate(const BigInt& x) const;

    IntPolynomial shifted(std::size_t powers) const;  // times x^powers

    IntPolynomial& operator+=(const IntPolynomial& rhs);
    IntPolynomial& operator-=(const IntPolynomial& rhs);
    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    /// e.g. "x^4 - 3x^2".
    std::string to_string() const;

private:
    void trim();

    std::vector<BigInt> coeffs_;
};

/// Determinant by fraction-free (Bareiss) elimination with row swaps on
/// zero pivots. Every division in the elimination is exact.
BigInt det_bareiss(const IntMatrix& m);

/// det(xI - m) for any square integer matrix (Faddeev-LeVerrier; the
/// divisions by k are exact).
IntPolynomial characteristic_polynomial(const IntMatrix& m);

/// 0/1 adjacency matrix.
IntMatrix adjacency_matrix(const Graph& g);

/// det(xI - A(T)) by the leaf-deletion recurrence
///   phi(F) = x phi(F - v) - phi(F - v - u)   (v a leaf, u its neighbour)
/// carried out bottom-up over the rooted tree.
IntPolynomial char_poly_tree(const Tree& t);

/// det(xI - A(T^e)) for an orientation of a tree. Throws Error(not_a_tree)
/// for any other base graph.
IntPolynomial skew_char_poly(const OrientedGraph& d);

/// sum_k coeffs[k] * a^k, with a^0 the identity.
IntMatrix eval_matrix_poly(const IntMatrix& a, std::span<const BigInt> coeffs);
IntMatrix eval_matrix_poly(const IntMatrix& a, std::initializer_list<long long> coeffs);

/// k with k * k == v. Error(domain) for v < 0, Error(not_perfect_square)
/// otherwise when no such k exists.
BigInt integer_sqrt_exact(const BigInt& v);

}  // namespace pmcount
