#ifndef CKFORMS_FORM_HPP
#define CKFORMS_FORM_HPP

#include <bit>
#include <cstdint>
#include <map>
#include <vector>

#include "ckforms/matrix.hpp"
#include "ckforms/rational.hpp"

namespace ckforms {

// A basis blade is a bitmask: bit k set means the covector e^k is a factor.
// Dimension 7 uses indices 1..7 (bit 0 never set), dimension 8 uses 0..7,
// so in both cases the highest legal index is 7.
using Mask = std::uint16_t;

inline int first_index(int dim) { return dim == 7 ? 1 : 0; }

inline Mask full_mask(int dim) { return dim == 7 ? Mask{0b11111110} : Mask{0b11111111}; }

inline int degree_of(Mask m) { return std::popcount(static_cast<unsigned>(m)); }

// Sign of e^a ^ e^b relative to e^(a|b): parity of the crossing pairs
// (i in a, j in b, i > j), counted with shifted popcounts. pre: a & b == 0.
inline int merge_sign(Mask a, Mask b) {
    unsigned crossings = 0;
    unsigned rest = b;
    while (rest != 0) {
        const int j = std::countr_zero(rest);
        crossings += std::popcount(static_cast<unsigned>(a) >> (j + 1));
        rest &= rest - 1;
    }
    return (crossings & 1u) == 0 ? 1 : -1;
}

std::vector<int> mask_indices(Mask m);

// Ascending lexicographic order on index sequences (e147 < e156 < e345),
// the canonical order for printing and for coordinate bases.
bool lex_less(Mask a, Mask b);

// A degree-homogeneous exterior form with exact rational coefficients.
// Zero coefficients are never stored, so operator== is exact value equality.
class Form {
  public:
    Form(int dim, int degree);

    static Form blade(int dim, Mask m, const Rational& coeff = 1);
    static Form covector(int dim, int index);
    static Form volume(int dim);

    int dim() const { return dim_; }
    int degree() const { return degree_; }
    const std::map<Mask, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(Mask m) const;

    // Accumulates c onto blade m, dropping the entry if it cancels to zero.
    void add_term(Mask m, const Rational& c);

    bool operator==(const Form&) const = default;

  private:
    int dim_;
    int degree_;
    std::map<Mask, Rational> terms_;
};

Form add(const Form& a, const Form& b);
Form sub(const Form& a, const Form& b);
Form scale(const Rational& c, const Form& a);
Form wedge(const Form& a, const Form& b);

// First-slot contraction i_x a for a covector x, extended linearly in x.
Form interior(const Form& x, const Form& a);
inline Form interior(int k, const Form& a) {
    return interior(Form::covector(a.dim(), k), a);
}

// Hodge star for the orthonormal metric, with sign fixed by
// blade ^ hodge(blade) = +volume.
Form hodge(const Form& a);

// Determinant inner product; basis blades are orthonormal.
Rational form_inner(const Form& a, const Form& b);

inline Form operator+(const Form& a, const Form& b) { return add(a, b); }
inline Form operator-(const Form& a, const Form& b) { return sub(a, b); }
inline Form operator*(const Rational& c, const Form& a) { return scale(c, a); }
inline Form operator*(long c, const Form& a) { return scale(Rational(c), a); }
inline Form operator-(const Form& a) { return scale(Rational(-1), a); }

// All degree-p blades of the given dimension in lex order.
const std::vector<Mask>& basis_blades(int dim, int degree);

linalg::Vec to_coords(const Form& f);
Form from_coords(int dim, int degree, const linalg::Vec& coords);

}  // namespace ckforms

#endif
