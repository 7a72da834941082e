#ifndef CKFORMS_CK_OPS_HPP
#define CKFORMS_CK_OPS_HPP

#include <vector>

#include "ckforms/matrix.hpp"
#include "ckforms/structures.hpp"
#include "ckforms/tensor.hpp"

namespace ckforms {

// Algebraic conformal-Killing residual on A in T* tensor Lambda^p:
//   T(A)(X) = A(X) - 1/(p+1) i_X(sum_k e^k ^ A_k)
//                  - 1/(n-p+1) X ^ (sum_k i_{e_k} A_k).
// On decomposables gamma (x) beta this reduces to
//   p/(p+1) gamma(X) beta + 1/(p+1) gamma ^ i_X beta - 1/(n-p+1) X ^ i_gamma beta,
// i.e. coefficients 3/4, 1/4, -1/5 for (n,p) = (7,3) and 4/5, 1/5, -1/5 for
// (n,p) = (8,4).
CotangentValuedForm ck_residual(const CotangentValuedForm& a);

// Scalar component of A in T* tensor Lambda^3(R^7) along the phi0 line:
// sum_k *7(e^k ^ A_k ^ phi0).
Rational pr_rphi(const CotangentValuedForm& a);

// The bilinear form B(e_i, e_j) = coefficient of e^j in *7(A_i ^ phi0),
// the composition of the componentwise Lambda^3_7 -> Lambda^1 isomorphism.
Bilinear2Tensor extinsa_map(const CotangentValuedForm& a);

// p(b)(X, Y) = <psi0, i_X b ^ Y - i_Y b ^ X> for a 4-form b on R^8.
Form p_map(const Form& beta);

// P(A) = sum_k e^k ^ p(A_k), a 3-form on R^8.
Form big_p_map(const CotangentValuedForm& a);

// Canonical domain bases: e^i (x) *7(e^j ^ phi0) for T* tensor Lambda^3_7
// (49 elements, i outer), and e^i (x) c_j over the rank-filtered
// Lambda^4_7 basis (56 elements, i outer).
const std::vector<CotangentValuedForm>& cotangent_lambda37_basis();
const std::vector<CotangentValuedForm>& cotangent_lambda47_basis();

// Exact operator matrices over the canonical bases, columns assembled in
// parallel. Row index: component-major coordinates of the codomain.
linalg::RationalMatrix t3_matrix();                // 245 x 49
linalg::RationalMatrix t4_matrix();                // 560 x 56
linalg::RationalMatrix extinsa_matrix();           // 49 x 49
linalg::RationalMatrix inner_contraction_matrix(); // 56 x 56, X (x) a -> i_X a

}  // namespace ckforms

#endif
