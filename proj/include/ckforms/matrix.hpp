#ifndef CKFORMS_MATRIX_HPP
#define CKFORMS_MATRIX_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "ckforms/rational.hpp"

namespace ckforms::linalg {

using Vec = std::vector<Rational>;

class RationalMatrix {
  public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RationalMatrix identity(std::size_t n) {
        RationalMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void set_column(std::size_t c, const Vec& v);
    Vec apply(const Vec& v) const;  // matrix * vector

    bool operator==(const RationalMatrix&) const = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

// Rank by fraction-free (Bareiss) elimination over the integers after
// clearing row denominators. Row updates run under OpenMP.
std::size_t rank(const RationalMatrix& m);

// Null-space basis in the canonical reduced-row-echelon parameterization:
// one vector per free column f, with entry 1 at f and -rref(r, f) at each
// pivot column. Deterministic, so golden tests can compare exactly.
std::vector<Vec> kernel_basis(const RationalMatrix& m);

// One exact solution of a*x = b (free variables set to 0), or nullopt when
// the system is inconsistent.
std::optional<Vec> solve(const RationalMatrix& a, const Vec& b);

// Pivot columns of the reduced row-echelon form: the lexicographically first
// maximal independent subset of the columns. |pivot_columns(m)| == rank(m)
// by construction of either routine; tests pin the agreement.
std::vector<std::size_t> pivot_columns(const RationalMatrix& m);

using Inner = std::function<Rational(const Vec&, const Vec&)>;

Rational dot(const Vec& a, const Vec& b);

// Orthogonal projection of v onto span(basis) with respect to the given
// inner product, via the normal equations. Throws std::invalid_argument if
// the Gram matrix is singular (linearly dependent basis).
Vec orthogonal_project(const Vec& v, const std::vector<Vec>& basis, const Inner& inner = dot);

// Scales a vector so its first nonzero entry is 1; the zero vector is
// returned unchanged.
Vec normalize_first_nonzero(Vec v);

// Plain serial rational Gauss-Jordan elimination, kept as an independent
// reference for the OpenMP/Bareiss kernels above. Used by tests and by the
// benchmark tool; not by the production code paths.
namespace reference {
std::size_t rank(const RationalMatrix& m);
std::vector<Vec> kernel_basis(const RationalMatrix& m);
}  // namespace reference

}  // namespace ckforms::linalg

#endif
