#ifndef CKFORMS_TENSOR_HPP
#define CKFORMS_TENSOR_HPP

#include <string>
#include <vector>

#include "ckforms/form.hpp"

namespace ckforms {

// An element of T* tensor Lambda^p: one degree-p form per coordinate
// covector. Components are addressed by coordinate index (1..7 in dimension
// 7, 0..7 in dimension 8).
class CotangentValuedForm {
  public:
    CotangentValuedForm(int dim, int degree);

    // gamma (x) value, componentwise gamma_k * value
    static CotangentValuedForm decomposable(const Form& gamma, const Form& value);

    int dim() const { return dim_; }
    int degree() const { return degree_; }
    Form& component(int index);
    const Form& component(int index) const;
    bool is_zero() const;

    bool operator==(const CotangentValuedForm&) const = default;

  private:
    int dim_;
    int degree_;
    std::vector<Form> comps_;
};

CotangentValuedForm add(const CotangentValuedForm& a, const CotangentValuedForm& b);
CotangentValuedForm scale(const Rational& c, const CotangentValuedForm& a);

inline CotangentValuedForm operator+(const CotangentValuedForm& a, const CotangentValuedForm& b) {
    return add(a, b);
}
inline CotangentValuedForm operator*(const Rational& c, const CotangentValuedForm& a) {
    return scale(c, a);
}
inline CotangentValuedForm operator-(const CotangentValuedForm& a) {
    return scale(Rational(-1), a);
}
inline CotangentValuedForm operator-(const CotangentValuedForm& a, const CotangentValuedForm& b) {
    return add(a, -b);
}

// Component-major coordinates: component index outer, lex blade order inner.
linalg::Vec to_coords(const CotangentValuedForm& a);
CotangentValuedForm cvf_from_coords(int dim, int degree, const linalg::Vec& coords);

// A bilinear form B(e_i, e_j) on the model space, indexed like the forms.
// Used for the T* tensor T* image of the 3-form machinery.
class Bilinear2Tensor {
  public:
    explicit Bilinear2Tensor(int dim);

    static Bilinear2Tensor metric(int dim);

    int dim() const { return dim_; }
    Rational& at(int i, int j);
    const Rational& at(int i, int j) const;
    Rational trace() const;
    bool is_zero() const;

    bool operator==(const Bilinear2Tensor&) const = default;

  private:
    int dim_;
    std::vector<Rational> entries_;
};

Bilinear2Tensor add(const Bilinear2Tensor& a, const Bilinear2Tensor& b);
Bilinear2Tensor scale(const Rational& c, const Bilinear2Tensor& a);
linalg::Vec to_coords(const Bilinear2Tensor& b);

std::string to_string(const CotangentValuedForm& a);
std::string to_string(const Bilinear2Tensor& b);

}  // namespace ckforms

#endif
