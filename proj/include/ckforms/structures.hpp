#ifndef CKFORMS_STRUCTURES_HPP
#define CKFORMS_STRUCTURES_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "ckforms/form.hpp"
#include "ckforms/tensor.hpp"

namespace ckforms {

// The model G2 structure on R^7 (indices 1..7) and its Hodge dual. The
// constructor cross-checks the computed dual against its literal seven-term
// expansion and throws if they ever disagree.
struct G2Model {
    Form phi0;       // 3-form
    Form star_phi0;  // 4-form
};
const G2Model& g2_model();

// The model Spin7 structure psi0 = e0 ^ phi0 + *phi0 on R^8 (indices 0..7),
// together with the probe 4-form alpha0 = i_{e0}psi0 ^ e1 - i_{e1}psi0 ^ e0.
// psi0 is checked self-dual with psi0 ^ psi0 = 14 vol at construction.
struct Spin7Model {
    Form psi0;    // 4-form
    Form alpha0;  // 4-form
};
const Spin7Model& spin7_model();

// Reinterprets a form on R^7 as a form on R^8 through the inclusion that
// keeps indices 1..7 fixed (masks are unchanged).
Form promote_to_dim8(const Form& f);

// Splitting of a 2-form on R^7 into the eigenspaces of L(b) = *7(b ^ phi0):
// beta7 = (L(b) + b)/3 with L = 2, beta14 = (2b - L(b))/3 with L = -1.
struct Lambda2Split {
    Form beta7;
    Form beta14;
};
Lambda2Split lambda2_split(const Form& beta);

// Eigenspace dimensions of L computed by exact rank of the two projector
// matrices on the 21 basis 2-forms.
std::pair<std::size_t, std::size_t> lambda2_dims();

// The isomorphism b -> *7(b ^ phi0) from the 7-dimensional 3-form component
// onto covectors, and its inverse a -> -(1/4) *7(a ^ phi0).
Form lambda37_iso(const Form& beta);
Form lambda37_iso_inv(const Form& alpha);

// Splitting of a bilinear form on R^7 into skew part (as a 2-form with
// coefficients B_ij - B_ji, no 1/2), traceless symmetric part, and the
// trace coefficient against the metric (tr B / 7).
struct BilinearSplit {
    Form skew2form;
    Bilinear2Tensor sym0;
    Rational trace_part;
};
BilinearSplit split_bilinear(const Bilinear2Tensor& b);

// The eight 3-forms J(e^k) = *8(psi0 ^ e^k) spanning the 8-dimensional
// component of Lambda^3(R^8).
const std::vector<Form>& lambda38_generators();

// Splitting of a 3-form on R^8: beta8 is the orthogonal projection onto
// span{J(e^k)}, beta48 the complement, characterized by beta48 ^ psi0 = 0.
struct Lambda3Split8 {
    Form beta8;
    Form beta48;
};
Lambda3Split8 lambda3_split8(const Form& beta);

// Component dimensions (8, 48) by exact rank computations.
std::pair<std::size_t, std::size_t> lambda3_dims8();

// A basis of the rank-7 component of Lambda^4(R^8), obtained by rank-
// filtering the 28 generators e^i ^ i_{e_j}psi - e^j ^ i_{e_i}psi, i < j.
std::vector<Form> lambda47_basis(const Form& psi);

}  // namespace ckforms

#endif
