#include <algorithm>
#include <random>
#include <vector>

#include "ckforms/form.hpp"
#include "doctest.h"
#include "helpers.hpp"

using ckforms::basis_blades;
using ckforms::Form;
using ckforms::form_inner;
using ckforms::hodge;
using ckforms::interior;
using ckforms::Mask;
using ckforms::mask_indices;
using ckforms::merge_sign;
using ckforms::Rational;
using ckforms::wedge;
using helpers::parse;

namespace {

// Sign oracle: concatenate the two index lists and bubble-sort, counting
// transpositions. Independent of the shifted-popcount implementation.
int sign_by_sorting(Mask a, Mask b) {
    std::vector<int> idx = mask_indices(a);
    for (int j : mask_indices(b)) idx.push_back(j);
    int swaps = 0;
    for (std::size_t i = 0; i + 1 < idx.size(); ++i)
        for (std::size_t j = 0; j + 1 < idx.size() - i; ++j)
            if (idx[j] > idx[j + 1]) {
                std::swap(idx[j], idx[j + 1]);
                ++swaps;
            }
    return swaps % 2 == 0 ? 1 : -1;
}

std::vector<Mask> all_masks(int dim) {
    std::vector<Mask> out;
    for (unsigned m = 0; m <= 0xFF; ++m)
        if ((m & ~ckforms::full_mask(dim)) == 0) out.push_back(static_cast<Mask>(m));
    return out;
}

}  // namespace

TEST_CASE("merge_sign agrees with the sorting oracle on all disjoint pairs") {
    for (int dim : {7, 8})
        for (Mask a : all_masks(dim))
            for (Mask b : all_masks(dim)) {
                if ((a & b) != 0) continue;
                CHECK(merge_sign(a, b) == sign_by_sorting(a, b));
            }
}

TEST_CASE("wedge basics") {
    const Form e1 = Form::covector(7, 1);
    const Form e2 = Form::covector(7, 2);
    CHECK(wedge(e1, e1).is_zero());
    CHECK(wedge(e2, e1) == -parse("e12", 7));
    CHECK(wedge(e1, parse(helpers::kStarPhi0, 7)) == parse("e14567+e12367+e12345", 7));

    // degree sum beyond the dimension collapses to zero
    const Form top = parse("e1234567", 7);
    CHECK(wedge(top, e1).is_zero());
    CHECK(wedge(top, e1).degree() == 8);
}

TEST_CASE("wedge is graded-commutative and associative") {
    std::mt19937_64 rng(0xF0A1);
    for (int trial = 0; trial < 200; ++trial) {
        const int dim = trial % 2 == 0 ? 7 : 8;
        std::uniform_int_distribution<int> deg(0, 4);
        const int p = deg(rng), q = deg(rng);
        const Form a = helpers::random_form(rng, dim, p);
        const Form b = helpers::random_form(rng, dim, q);
        const int sign = (p * q) % 2 == 0 ? 1 : -1;
        CHECK(wedge(a, b) == ckforms::scale(Rational(sign), wedge(b, a)));
        const Form c = helpers::random_form(rng, dim, deg(rng) % 2);
        if (p + q + c.degree() <= dim) CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
    }
}

TEST_CASE("wedge is bilinear") {
    std::mt19937_64 rng(0xF0A2);
    for (int trial = 0; trial < 50; ++trial) {
        const Form a = helpers::random_form(rng, 7, 2);
        const Form b = helpers::random_form(rng, 7, 2);
        const Form c = helpers::random_form(rng, 7, 3);
        const Rational s = helpers::random_rational(rng);
        CHECK(wedge(a + s * b, c) == wedge(a, c) + s * wedge(b, c));
    }
}

TEST_CASE("interior product examples") {
    CHECK(interior(Form::covector(7, 2), parse("e123", 7)) == -parse("e13", 7));
    CHECK(interior(Form::covector(7, 4), parse("e123", 7)).is_zero());
    // first-slot convention on the model 4-form
    CHECK(interior(Form::covector(8, 0), parse(helpers::kAlpha0, 8)) ==
          parse("e357-e346-e256-e247", 8));
}

TEST_CASE("interior product is an anti-derivation and adjoint to wedge") {
    std::mt19937_64 rng(0xF0A3);
    for (int trial = 0; trial < 200; ++trial) {
        const int dim = trial % 2 == 0 ? 7 : 8;
        std::uniform_int_distribution<int> deg(1, 3);
        const int p = deg(rng);
        const Form x = helpers::random_form(rng, dim, 1);
        const Form a = helpers::random_form(rng, dim, p);
        const Form b = helpers::random_form(rng, dim, deg(rng));
        const int sign = p % 2 == 0 ? 1 : -1;
        CHECK(interior(x, wedge(a, b)) ==
              wedge(interior(x, a), b) + ckforms::scale(Rational(sign), wedge(a, interior(x, b))));
        // adjointness <i_x a, c> = <a, x ^ c>
        const Form c = helpers::random_form(rng, dim, p - 1);
        CHECK(form_inner(interior(x, a), c) == form_inner(a, wedge(x, c)));
    }
}

TEST_CASE("Euler identity: sum_k e^k ^ i_{e_k} b = deg(b) * b, all blades") {
    for (int dim : {7, 8})
        for (int p = 1; p <= dim; ++p)
            for (Mask m : basis_blades(dim, p)) {
                const Form b = Form::blade(dim, m);
                Form acc(dim, p);
                for (int k = ckforms::first_index(dim); k <= 7; ++k) {
                    const Form ek = Form::covector(dim, k);
                    acc = acc + wedge(ek, interior(ek, b));
                }
                CHECK(acc == ckforms::scale(Rational(p), b));
            }
}

TEST_CASE("hodge star examples") {
    CHECK(hodge(parse("e123", 7)) == parse("e4567", 7));
    CHECK(hodge(parse(helpers::kPhi0, 7)) == parse(helpers::kStarPhi0, 7));
    CHECK(hodge(Form::volume(7)) == parse("1", 7));
    CHECK(hodge(parse("1", 7)) == Form::volume(7));
    CHECK(hodge(parse(helpers::kPsi0, 8)) == parse(helpers::kPsi0, 8));
}

TEST_CASE("hodge involution sign over every blade") {
    for (int dim : {7, 8})
        for (int p = 0; p <= dim; ++p)
            for (Mask m : basis_blades(dim, p)) {
                const Form b = Form::blade(dim, m);
                const int sign = (p * (dim - p)) % 2 == 0 ? 1 : -1;
                CHECK(hodge(hodge(b)) == ckforms::scale(Rational(sign), b));
            }
}

TEST_CASE("a ^ hodge(b) = <a,b> vol over every blade pair of equal degree") {
    for (int dim : {7, 8})
        for (int p = 0; p <= dim; ++p)
            for (Mask ma : basis_blades(dim, p))
                for (Mask mb : basis_blades(dim, p)) {
                    const Form a = Form::blade(dim, ma);
                    const Form b = Form::blade(dim, mb);
                    CHECK(wedge(a, hodge(b)) ==
                          ckforms::scale(form_inner(a, b), Form::volume(dim)));
                }
}

TEST_CASE("form_inner is the determinant inner product") {
    CHECK(form_inner(parse("e12", 7), parse("e12", 7)) == Rational(1));
    CHECK(form_inner(parse("e12", 7), parse("e13", 7)) == Rational(0));
    CHECK(form_inner(parse("e21", 7), parse("e12", 7)) == Rational(-1));
    CHECK(form_inner(parse(helpers::kPsi0, 8), parse(helpers::kPsi0, 8)) == Rational(14));
}

TEST_CASE("coordinate round trip") {
    std::mt19937_64 rng(0xF0A4);
    for (int trial = 0; trial < 40; ++trial) {
        const int dim = trial % 2 == 0 ? 7 : 8;
        std::uniform_int_distribution<int> deg(0, dim);
        const int p = deg(rng);
        const Form f = helpers::random_form(rng, dim, p);
        CHECK(ckforms::from_coords(dim, p, ckforms::to_coords(f)) == f);
    }
    CHECK(basis_blades(7, 2).size() == 21);
    CHECK(basis_blades(8, 3).size() == 56);
    CHECK(basis_blades(8, 4).size() == 70);
}

TEST_CASE("degree and dimension mismatches are rejected") {
    CHECK_THROWS_AS(ckforms::add(parse("e12", 7), parse("e123", 7)), std::invalid_argument);
    CHECK_THROWS_AS(wedge(parse("e12", 7), parse("e12", 8)), std::invalid_argument);
    CHECK_THROWS_AS(interior(parse("e12", 7), parse("e123", 7)), std::invalid_argument);
    CHECK_THROWS_AS(form_inner(parse("e12", 7), parse("e123", 7)), std::invalid_argument);
}
