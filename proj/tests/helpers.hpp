#ifndef CKFORMS_TESTS_HELPERS_HPP
#define CKFORMS_TESTS_HELPERS_HPP

#include <random>

#include "ckforms/expr.hpp"
#include "ckforms/form.hpp"

namespace helpers {

// Expansions of the model forms, frozen as golden strings so the structure
// constructors can be tested against independent literals.
inline constexpr const char* kPhi0 = "e123+e145+e167+e246-e257-e347-e356";
inline constexpr const char* kStarPhi0 = "e4567+e2367+e2345+e1357-e1346-e1256-e1247";
inline constexpr const char* kPsi0 =
    "e0123+e0145+e0167+e0246-e0257-e0347-e0356"
    "+e4567+e2367+e2345+e1357-e1346-e1256-e1247";
inline constexpr const char* kAlpha0 = "-e1246+e1257+e1347+e1356+e0357-e0346-e0256-e0247";

inline ckforms::Form parse(const char* text, int dim) { return ckforms::parse_form(text, dim); }

inline ckforms::Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    return ckforms::make_rational(num(rng), den(rng));
}

inline ckforms::Form random_form(std::mt19937_64& rng, int dim, int degree, int max_terms = 4) {
    const auto& blades = ckforms::basis_blades(dim, degree);
    std::uniform_int_distribution<std::size_t> pick(0, blades.size() - 1);
    std::uniform_int_distribution<int> count(1, max_terms);
    ckforms::Form f(dim, degree);
    const int n = count(rng);
    for (int i = 0; i < n; ++i) f.add_term(blades[pick(rng)], random_rational(rng));
    return f;
}

}  // namespace helpers

#endif
