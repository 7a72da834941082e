#include "ckforms/form.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <stdexcept>

namespace ckforms {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

void require_dim(int dim) { require(dim == 7 || dim == 8, "dimension must be 7 or 8"); }

}  // namespace

std::vector<int> mask_indices(Mask m) {
    std::vector<int> out;
    unsigned rest = m;
    while (rest != 0) {
        out.push_back(std::countr_zero(rest));
        rest &= rest - 1;
    }
    return out;
}

bool lex_less(Mask a, Mask b) {
    unsigned x = a, y = b;
    while (x != 0 && y != 0) {
        const int i = std::countr_zero(x);
        const int j = std::countr_zero(y);
        if (i != j) return i < j;
        x &= x - 1;
        y &= y - 1;
    }
    return x == 0 && y != 0;
}

Form::Form(int dim, int degree) : dim_(dim), degree_(degree) {
    require_dim(dim);
    require(degree >= 0 && degree <= 2 * dim, "degree out of range");
}

Form Form::blade(int dim, Mask m, const Rational& coeff) {
    require((m & ~full_mask(dim)) == 0, "blade outside the index set");
    Form f(dim, degree_of(m));
    f.add_term(m, coeff);
    return f;
}

Form Form::covector(int dim, int index) {
    require(index >= first_index(dim) && index <= 7, "covector index out of range");
    return blade(dim, static_cast<Mask>(1u << index));
}

Form Form::volume(int dim) { return blade(dim, full_mask(dim)); }

Rational Form::coeff(Mask m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Form::add_term(Mask m, const Rational& c) {
    require((m & ~full_mask(dim_)) == 0, "blade outside the index set");
    require(degree_of(m) == degree_, "blade degree does not match the form degree");
    if (ckforms::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (ckforms::is_zero(it->second)) terms_.erase(it);
    }
}

Form add(const Form& a, const Form& b) {
    require(a.dim() == b.dim(), "add: dimension mismatch");
    require(a.degree() == b.degree(), "add: degree mismatch");
    Form out = a;
    for (const auto& [m, c] : b.terms()) out.add_term(m, c);
    return out;
}

Form sub(const Form& a, const Form& b) { return add(a, scale(Rational(-1), b)); }

Form scale(const Rational& c, const Form& a) {
    Form out(a.dim(), a.degree());
    if (is_zero(c)) return out;
    for (const auto& [m, q] : a.terms()) out.add_term(m, c * q);
    return out;
}

Form wedge(const Form& a, const Form& b) {
    require(a.dim() == b.dim(), "wedge: dimension mismatch");
    Form out(a.dim(), a.degree() + b.degree());
    if (a.degree() + b.degree() > a.dim()) return out;
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            if ((ma & mb) != 0) continue;
            out.add_term(static_cast<Mask>(ma | mb), merge_sign(ma, mb) * ca * cb);
        }
    }
    return out;
}

Form interior(const Form& x, const Form& a) {
    require(x.dim() == a.dim(), "interior: dimension mismatch");
    require(x.degree() == 1, "interior: contraction argument must be a covector");
    require(a.degree() >= 1, "interior: cannot contract a scalar");
    Form out(a.dim(), a.degree() - 1);
    for (const auto& [mx, cx] : x.terms()) {
        // lowest set bit is the only bit of a covector blade mask
        const Mask bit = mx;
        for (const auto& [m, c] : a.terms()) {
            if ((m & bit) == 0) continue;
            // sign (-1)^position of k within the sorted index list of m
            const int below = std::popcount(static_cast<unsigned>(m) & (bit - 1u));
            const int sign = (below & 1) == 0 ? 1 : -1;
            out.add_term(static_cast<Mask>(m & ~bit), sign * cx * c);
        }
    }
    return out;
}

Form hodge(const Form& a) {
    require(a.degree() <= a.dim(), "hodge: degree exceeds dimension");
    Form out(a.dim(), a.dim() - a.degree());
    const Mask full = full_mask(a.dim());
    for (const auto& [m, c] : a.terms()) {
        const Mask comp = static_cast<Mask>(full & ~m);
        out.add_term(comp, merge_sign(m, comp) * c);
    }
    return out;
}

Rational form_inner(const Form& a, const Form& b) {
    require(a.dim() == b.dim(), "form_inner: dimension mismatch");
    require(a.degree() == b.degree(), "form_inner: degree mismatch");
    Rational acc;
    const auto& bt = b.terms();
    for (const auto& [m, c] : a.terms()) {
        auto it = bt.find(m);
        if (it != bt.end()) acc += c * it->second;
    }
    return acc;
}

const std::vector<Mask>& basis_blades(int dim, int degree) {
    require_dim(dim);
    require(degree >= 0 && degree <= dim, "basis_blades: degree out of range");
    static std::array<std::array<std::vector<Mask>, 9>, 2> cache;
    static std::once_flag built;
    std::call_once(built, [] {
        for (int d : {7, 8}) {
            std::vector<std::vector<Mask>> by_degree(d + 1);
            const Mask full = full_mask(d);
            for (Mask m = 0;; ++m) {
                if ((m & ~full) == 0 && degree_of(m) <= d) by_degree[degree_of(m)].push_back(m);
                if (m == 0xFF) break;
            }
            for (int p = 0; p <= d; ++p) {
                auto& slot = cache[d - 7][p];
                slot = by_degree[p];
                std::sort(slot.begin(), slot.end(), lex_less);
            }
        }
    });
    return cache[dim - 7][degree];
}

linalg::Vec to_coords(const Form& f) {
    const auto& basis = basis_blades(f.dim(), f.degree());
    linalg::Vec out(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) out[i] = f.coeff(basis[i]);
    return out;
}

Form from_coords(int dim, int degree, const linalg::Vec& coords) {
    const auto& basis = basis_blades(dim, degree);
    require(coords.size() == basis.size(), "from_coords: size mismatch");
    Form f(dim, degree);
    for (std::size_t i = 0; i < basis.size(); ++i) f.add_term(basis[i], coords[i]);
    return f;
}

}  // namespace ckforms
