#include "ckforms/tensor.hpp"

#include <stdexcept>

#include "ckforms/expr.hpp"

namespace ckforms {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

CotangentValuedForm::CotangentValuedForm(int dim, int degree)
    : dim_(dim), degree_(degree), comps_(dim, Form(dim, degree)) {}

CotangentValuedForm CotangentValuedForm::decomposable(const Form& gamma, const Form& value) {
    require(gamma.dim() == value.dim(), "decomposable: dimension mismatch");
    require(gamma.degree() == 1, "decomposable: first factor must be a covector");
    CotangentValuedForm out(value.dim(), value.degree());
    for (int k = first_index(value.dim()); k <= 7; ++k) {
        const Rational gk = gamma.coeff(static_cast<Mask>(1u << k));
        if (!ckforms::is_zero(gk)) out.component(k) = scale(gk, value);
    }
    return out;
}

Form& CotangentValuedForm::component(int index) {
    require(index >= first_index(dim_) && index <= 7, "component index out of range");
    return comps_[index - first_index(dim_)];
}

const Form& CotangentValuedForm::component(int index) const {
    return const_cast<CotangentValuedForm*>(this)->component(index);
}

bool CotangentValuedForm::is_zero() const {
    for (const Form& f : comps_)
        if (!f.is_zero()) return false;
    return true;
}

CotangentValuedForm add(const CotangentValuedForm& a, const CotangentValuedForm& b) {
    require(a.dim() == b.dim() && a.degree() == b.degree(), "add: tensor shape mismatch");
    CotangentValuedForm out(a.dim(), a.degree());
    for (int k = first_index(a.dim()); k <= 7; ++k)
        out.component(k) = add(a.component(k), b.component(k));
    return out;
}

CotangentValuedForm scale(const Rational& c, const CotangentValuedForm& a) {
    CotangentValuedForm out(a.dim(), a.degree());
    for (int k = first_index(a.dim()); k <= 7; ++k) out.component(k) = scale(c, a.component(k));
    return out;
}

linalg::Vec to_coords(const CotangentValuedForm& a) {
    const std::size_t block = basis_blades(a.dim(), a.degree()).size();
    linalg::Vec out;
    out.reserve(a.dim() * block);
    for (int k = first_index(a.dim()); k <= 7; ++k) {
        linalg::Vec c = to_coords(a.component(k));
        out.insert(out.end(), c.begin(), c.end());
    }
    return out;
}

CotangentValuedForm cvf_from_coords(int dim, int degree, const linalg::Vec& coords) {
    const std::size_t block = basis_blades(dim, degree).size();
    require(coords.size() == static_cast<std::size_t>(dim) * block,
            "cvf_from_coords: size mismatch");
    CotangentValuedForm out(dim, degree);
    for (int k = first_index(dim); k <= 7; ++k) {
        const std::size_t off = static_cast<std::size_t>(k - first_index(dim)) * block;
        out.component(k) =
            from_coords(dim, degree, linalg::Vec(coords.begin() + off, coords.begin() + off + block));
    }
    return out;
}

Bilinear2Tensor::Bilinear2Tensor(int dim) : dim_(dim), entries_(dim * dim) {}

Bilinear2Tensor Bilinear2Tensor::metric(int dim) {
    Bilinear2Tensor g(dim);
    for (int i = first_index(dim); i <= 7; ++i) g.at(i, i) = 1;
    return g;
}

Rational& Bilinear2Tensor::at(int i, int j) {
    require(i >= first_index(dim_) && i <= 7 && j >= first_index(dim_) && j <= 7,
            "tensor index out of range");
    return entries_[(i - first_index(dim_)) * dim_ + (j - first_index(dim_))];
}

const Rational& Bilinear2Tensor::at(int i, int j) const {
    return const_cast<Bilinear2Tensor*>(this)->at(i, j);
}

Rational Bilinear2Tensor::trace() const {
    Rational t;
    for (int i = first_index(dim_); i <= 7; ++i) t += at(i, i);
    return t;
}

bool Bilinear2Tensor::is_zero() const {
    for (const Rational& q : entries_)
        if (!ckforms::is_zero(q)) return false;
    return true;
}

Bilinear2Tensor add(const Bilinear2Tensor& a, const Bilinear2Tensor& b) {
    require(a.dim() == b.dim(), "add: dimension mismatch");
    Bilinear2Tensor out(a.dim());
    for (int i = first_index(a.dim()); i <= 7; ++i)
        for (int j = first_index(a.dim()); j <= 7; ++j) out.at(i, j) = a.at(i, j) + b.at(i, j);
    return out;
}

Bilinear2Tensor scale(const Rational& c, const Bilinear2Tensor& a) {
    Bilinear2Tensor out(a.dim());
    for (int i = first_index(a.dim()); i <= 7; ++i)
        for (int j = first_index(a.dim()); j <= 7; ++j) out.at(i, j) = c * a.at(i, j);
    return out;
}

linalg::Vec to_coords(const Bilinear2Tensor& b) {
    linalg::Vec out;
    out.reserve(b.dim() * b.dim());
    for (int i = first_index(b.dim()); i <= 7; ++i)
        for (int j = first_index(b.dim()); j <= 7; ++j) out.push_back(b.at(i, j));
    return out;
}

std::string to_string(const CotangentValuedForm& a) {
    std::string out;
    for (int k = first_index(a.dim()); k <= 7; ++k) {
        if (a.component(k).is_zero()) continue;
        if (!out.empty()) out += "+";
        out += "e" + std::to_string(k) + "⊗(" + to_string(a.component(k)) + ")";
    }
    return out.empty() ? "0" : out;
}

std::string to_string(const Bilinear2Tensor& b) {
    std::string out;
    for (int i = first_index(b.dim()); i <= 7; ++i) {
        for (int j = first_index(b.dim()); j <= 7; ++j) {
            const Rational& q = b.at(i, j);
            if (is_zero(q)) continue;
            const bool neg = sgn(q) < 0;
            if (!out.empty())
                out += neg ? "-" : "+";
            else if (neg)
                out += "-";
            const Rational mag = abs(q);
            if (mag != 1) out += mag.get_str() + "*";
            out += "e" + std::to_string(i) + "⊗e" + std::to_string(j);
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace ckforms
