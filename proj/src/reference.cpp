// Textbook serial rational elimination. This is the reference the OpenMP and
// fraction-free kernels in matrix.cpp are tested against, so it deliberately
// shares no code with them.

#include <cstddef>
#include <utility>
#include <vector>

#include "ckforms/matrix.hpp"

namespace ckforms::linalg::reference {

namespace {

// Gauss-Jordan over the rationals; returns pivot columns, leaves `a` in
// reduced row-echelon form.
std::vector<std::size_t> eliminate(RationalMatrix& a) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t p = row;
        while (p < a.rows() && is_zero(a(p, col))) ++p;
        if (p == a.rows()) continue;
        for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
        const Rational piv = a(row, col);
        for (std::size_t j = 0; j < a.cols(); ++j) a(row, j) /= piv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || is_zero(a(i, col))) continue;
            const Rational f = a(i, col);
            for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t rank(const RationalMatrix& m) {
    RationalMatrix a = m;
    return eliminate(a).size();
}

std::vector<Vec> kernel_basis(const RationalMatrix& m) {
    RationalMatrix a = m;
    const std::vector<std::size_t> pivots = eliminate(a);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec x(m.cols());
        x[f] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = -a(k, f);
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace ckforms::linalg::reference
