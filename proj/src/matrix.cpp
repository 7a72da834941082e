#include "ckforms/matrix.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>

namespace ckforms::linalg {

void RationalMatrix::set_column(std::size_t c, const Vec& v) {
    if (v.size() != rows_) throw std::invalid_argument("set_column: size mismatch");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Vec RationalMatrix::apply(const Vec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("apply: size mismatch");
    Vec out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Rational acc;
        for (std::size_t c = 0; c < cols_; ++c) acc += (*this)(r, c) * v[c];
        out[r] = std::move(acc);
    }
    return out;
}

std::size_t rank(const RationalMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    if (rows == 0 || cols == 0) return 0;

    // Row-scale to integers first; rank is invariant under row scaling and
    // the Bareiss recurrence then stays in mpz with exact divisions only.
    std::vector<mpz_class> a(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
        mpz_class l = 1;
        for (std::size_t c = 0; c < cols; ++c)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
        for (std::size_t c = 0; c < cols; ++c) {
            mpz_class scale;
            mpz_divexact(scale.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
            a[r * cols + c] = mpz_class(m(r, c).get_num()) * scale;
        }
    }

    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p * cols + c] == 0) ++p;
        if (p == rows) continue;  // no pivot in this column
        if (p != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(a[p * cols + j], a[r * cols + j]);

        const mpz_class& piv = a[r * cols + c];
#pragma omp parallel for schedule(static)
        for (std::size_t i = r + 1; i < rows; ++i) {
            // Every row below the pivot is rescaled by piv/prev, including
            // rows whose leading entry is already zero; skipping them breaks
            // the exact-division invariant of the recurrence.
            for (std::size_t j = c + 1; j < cols; ++j) {
                mpz_class t = a[i * cols + j] * piv - a[i * cols + c] * a[r * cols + j];
                // Exact by the Sylvester identity behind one-step Bareiss.
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[i * cols + j] = std::move(t);
            }
            a[i * cols + c] = 0;
        }
        prev = piv;
        ++r;
    }
    return r;
}

namespace {

struct Rref {
    RationalMatrix m;
    std::vector<std::size_t> pivot_cols;
};

Rref reduced_row_echelon(RationalMatrix a) {
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && is_zero(a(p, c))) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(a(p, j), a(r, j));

        const Rational piv = a(r, c);
        a(r, c) = 1;
        for (std::size_t j = c + 1; j < cols; ++j) a(r, j) /= piv;

#pragma omp parallel for schedule(static)
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || is_zero(a(i, c))) continue;
            const Rational f = a(i, c);
            a(i, c) = 0;
            for (std::size_t j = c + 1; j < cols; ++j) a(i, j) -= f * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(a), std::move(pivots)};
}

}  // namespace

std::vector<Vec> kernel_basis(const RationalMatrix& m) {
    const std::size_t cols = m.cols();
    Rref e = reduced_row_echelon(m);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = true;

    std::vector<Vec> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vec x(cols);
        x[f] = 1;
        for (std::size_t k = 0; k < e.pivot_cols.size(); ++k) x[e.pivot_cols[k]] = -e.m(k, f);
        basis.push_back(std::move(x));
    }
    return basis;
}

std::vector<std::size_t> pivot_columns(const RationalMatrix& m) {
    return reduced_row_echelon(m).pivot_cols;
}

std::optional<Vec> solve(const RationalMatrix& a, const Vec& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve: size mismatch");
    RationalMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
        aug(r, a.cols()) = b[r];
    }
    Rref e = reduced_row_echelon(std::move(aug));
    for (std::size_t c : e.pivot_cols)
        if (c == a.cols()) return std::nullopt;  // pivot in the rhs column: inconsistent
    Vec x(a.cols());
    for (std::size_t k = 0; k < e.pivot_cols.size(); ++k) x[e.pivot_cols[k]] = e.m(k, a.cols());
    return x;
}

Rational dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
    Rational acc;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

Vec orthogonal_project(const Vec& v, const std::vector<Vec>& basis, const Inner& inner) {
    const std::size_t n = basis.size();
    if (n == 0) return Vec(v.size());
    RationalMatrix gram(n, n);
    Vec rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) gram(i, j) = inner(basis[i], basis[j]);
        rhs[i] = inner(v, basis[i]);
    }
    if (rank(gram) < n) throw std::invalid_argument("orthogonal_project: degenerate Gram matrix");
    Vec c = *solve(gram, rhs);
    Vec out(v.size());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < v.size(); ++k) out[k] += c[i] * basis[i][k];
    return out;
}

Vec normalize_first_nonzero(Vec v) {
    for (const Rational& q : v) {
        if (!is_zero(q)) {
            const Rational lead = q;
            for (Rational& x : v) x /= lead;
            break;
        }
    }
    return v;
}

}  // namespace ckforms::linalg
