#ifndef CKFORMS_RATIONAL_HPP
#define CKFORMS_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace ckforms {

// Exact rational scalar. mpq_class keeps arithmetic results in lowest terms
// with a positive denominator, which is the invariant the printers and the
// exact-equality checks rely on. Only the two-argument constructors skip
// canonicalization, so raw num/den pairs must go through make_rational.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace ckforms

#endif
