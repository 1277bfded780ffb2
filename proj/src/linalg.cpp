#include "pmcount/linalg.hpp"

#include <algorithm>
#include <sstream>

#include "pmcount/error.hpp"
#include "pmcount/orientation.hpp"

namespace pmcount {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : n_(rows.size()), entries_() {
    entries_.reserve(n_ * n_);
    for (const auto& row : rows) {
        if (row.size() != n_) throw Error(ErrorKind::invalid_size, "matrix must be square");
        for (long long v : row) entries_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(n_);
    for (std::size_t r = 0; r < n_; ++r)
        for (std::size_t c = 0; c < n_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& rhs) {
    if (rhs.n_ != n_) throw Error(ErrorKind::invalid_size, "matrix size mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
    return *this;
}

IntMatrix& IntMatrix::operator*=(const BigInt& scalar) {
    for (BigInt& e : entries_) e *= scalar;
    return *this;
}

IntMatrix operator-(const IntMatrix& m) {
    IntMatrix out = m;
    for (BigInt& e : out.entries_) e = -e;
    return out;
}

IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs) {
    if (lhs.n_ != rhs.n_) throw Error(ErrorKind::invalid_size, "matrix size mismatch");
    const std::size_t n = lhs.n_;
    IntMatrix out(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t k = 0; k < n; ++k) {
            const BigInt& a = lhs(r, k);
            if (a.is_zero()) continue;
            for (std::size_t c = 0; c < n; ++c) {
                const BigInt& b = rhs(k, c);
                if (!b.is_zero()) out(r, c) += a * b;
            }
        }
    }
    return out;
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long long> coefficients) {
    for (long long c : coefficients) coeffs_.emplace_back(c);
    trim();
}

IntPolynomial IntPolynomial::monomial(std::size_t degree) {
    std::vector<BigInt> c(degree + 1);
    c.back() = 1;
    return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

BigInt IntPolynomial::coefficient(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : BigInt(0);
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPolynomial IntPolynomial::shifted(std::size_t powers) const {
    if (is_zero()) return {};
    std::vector<BigInt> c(powers);
    c.insert(c.end(), coeffs_.begin(), coeffs_.end());
    return IntPolynomial(std::move(c));
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const BigInt& c = coeffs_[k];
        if (c.is_zero()) continue;
        BigInt mag = abs(c);
        if (first) {
            if (c < 0) out << '-';
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0 || mag != 1) out << mag;
        if (k >= 1) out << 'x';
        if (k >= 2) out << '^' << k;
    }
    return out.str();
}

BigInt det_bareiss(const IntMatrix& input) {
    const std::size_t n = input.size();
    if (n == 0) return 1;
    IntMatrix m = input;
    BigInt previous_pivot = 1;
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m(swap_row, k).is_zero()) ++swap_row;
            if (swap_row == n) return 0;
            for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(swap_row, c));
            negate = !negate;
        }
        const BigInt& pivot = m(k, k);
        for (std::size_t r = k + 1; r < n; ++r) {
            for (std::size_t c = k + 1; c < n; ++c) {
                BigInt v = m(r, c) * pivot - m(r, k) * m(k, c);
                m(r, c) = v / previous_pivot;  // exact by Sylvester's identity
            }
            m(r, k) = 0;
        }
        previous_pivot = pivot;
    }
    BigInt det = m(n - 1, n - 1);
    return negate ? BigInt(-det) : det;
}

IntPolynomial characteristic_polynomial(const IntMatrix& a) {
    const std::size_t n = a.size();
    std::vector<BigInt> c(n + 1);
    c[n] = 1;
    IntMatrix m(n);  // M_0 = 0
    for (std::size_t k = 1; k <= n; ++k) {
        IntMatrix next = a * m;
        for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
        IntMatrix am = a * next;
        BigInt trace = 0;
        for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
        if (trace % k != 0) {
            throw Error(ErrorKind::internal, "inexact Faddeev-LeVerrier division");
        }
        c[n - k] = -trace / k;
        m = std::move(next);
    }
    return IntPolynomial(std::move(c));
}

IntMatrix adjacency_matrix(const Graph& g) {
    IntMatrix a(g.vertex_count());
    for (const Edge& e : g.edges()) {
        a(e.u, e.v) = 1;
        a(e.v, e.u) = 1;
    }
    return a;
}

IntPolynomial char_poly_tree(const Tree& t) {
    const Graph& g = t.graph();
    const std::size_t n = g.vertex_count();

    // Children before parents: reverse BFS order from the root.
    std::vector<Vertex> order{t.root()};
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (Vertex w : g.neighbors(order[i])) {
            if (w != t.parent(order[i])) order.push_back(w);
        }
    }

    // with_root[v] = phi(T_v), without_root[v] = phi(T_v - v), T_v the
    // subtree hanging from v. Deleting the leaf-side edge v-c of each child
    // in turn gives
    //   phi(T_v) = x prod_c phi(T_c) - sum_c phi(T_c - c) prod_{c' != c} phi(T_c').
    std::vector<IntPolynomial> with_root(n), without_root(n);
    const IntPolynomial x = IntPolynomial::monomial(1);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const Vertex v = *it;
        std::vector<Vertex> children;
        for (Vertex w : g.neighbors(v)) {
            if (w != t.parent(v)) children.push_back(w);
        }
        const std::size_t k = children.size();
        // prefix[i] = prod_{j < i} phi(T_cj), suffix[i] = prod_{j >= i}.
        std::vector<IntPolynomial> prefix(k + 1, IntPolynomial{1}), suffix(k + 1, IntPolynomial{1});
        for (std::size_t i = 0; i < k; ++i) prefix[i + 1] = prefix[i] * with_root[children[i]];
        for (std::size_t i = k; i-- > 0;) suffix[i] = suffix[i + 1] * with_root[children[i]];

        IntPolynomial phi = x * prefix[k];
        for (std::size_t i = 0; i < k; ++i) {
            phi -= without_root[children[i]] * prefix[i] * suffix[i + 1];
        }
        without_root[v] = prefix[k];
        with_root[v] = std::move(phi);
    }
    return with_root[t.root()];
}

IntPolynomial skew_char_poly(const OrientedGraph& d) {
    validate_tree(d.base());
    return characteristic_polynomial(skew_adjacency(d));
}

IntMatrix eval_matrix_poly(const IntMatrix& a, std::span<const BigInt> coeffs) {
    const std::size_t n = a.size();
    IntMatrix acc(n);
    // Horner: acc = acc * a + c_k I, highest power first.
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = acc * a;
        for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
    }
    return acc;
}

IntMatrix eval_matrix_poly(const IntMatrix& a, std::initializer_list<long long> coeffs) {
    std::vector<BigInt> big(coeffs.begin(), coeffs.end());
    return eval_matrix_poly(a, big);
}

BigInt integer_sqrt_exact(const BigInt& v) {
    if (v < 0) throw Error(ErrorKind::domain, "square root of a negative integer");
    BigInt root = boost::multiprecision::sqrt(v);
    if (root * root != v) {
        throw Error(ErrorKind::not_perfect_square, v.str() + " is not a perfect square");
    }
    return root;
}

}  // namespace pmcount
