#include <random>
#include <utility>

#include "ckforms/expr.hpp"
#include "ckforms/matrix.hpp"
#include "ckforms/structures.hpp"
#include "doctest.h"
#include "helpers.hpp"

using ckforms::Bilinear2Tensor;
using ckforms::Form;
using ckforms::form_inner;
using ckforms::g2_model;
using ckforms::hodge;
using ckforms::interior;
using ckforms::lambda2_dims;
using ckforms::lambda2_split;
using ckforms::lambda37_iso;
using ckforms::lambda37_iso_inv;
using ckforms::lambda38_generators;
using ckforms::lambda3_dims8;
using ckforms::lambda3_split8;
using ckforms::lambda47_basis;
using ckforms::make_rational;
using ckforms::promote_to_dim8;
using ckforms::Rational;
using ckforms::spin7_model;
using ckforms::split_bilinear;
using ckforms::wedge;
using helpers::parse;

TEST_CASE("model forms match their frozen expansions") {
    const auto& g2 = g2_model();
    CHECK(g2.phi0 == parse(helpers::kPhi0, 7));
    CHECK(g2.star_phi0 == parse(helpers::kStarPhi0, 7));
    CHECK(to_string(g2.phi0) == "e123+e145+e167+e246-e257-e347-e356");
    CHECK(to_string(g2.star_phi0) == "-e1247-e1256-e1346+e1357+e2345+e2367+e4567");

    const auto& s7 = spin7_model();
    CHECK(s7.psi0 == parse(helpers::kPsi0, 8));
    CHECK(to_string(s7.psi0) ==
          "e0123+e0145+e0167+e0246-e0257-e0347-e0356"
          "-e1247-e1256-e1346+e1357+e2345+e2367+e4567");
    CHECK(s7.alpha0 == parse(helpers::kAlpha0, 8));
    CHECK(to_string(s7.alpha0) == "-e0247-e0256-e0346+e0357-e1246+e1257+e1347+e1356");

    CHECK(hodge(s7.psi0) == s7.psi0);
    CHECK(wedge(s7.psi0, s7.psi0) == 14 * Form::volume(8));
}

TEST_CASE("promote_to_dim8 keeps masks and coefficients") {
    Form f = parse("3e12-1/2*e47", 7);
    Form g = promote_to_dim8(f);
    CHECK(g.dim() == 8);
    CHECK(g == parse("3e12-1/2*e47", 8));
    const auto& s7 = spin7_model();
    CHECK(s7.psi0 == wedge(Form::covector(8, 0), promote_to_dim8(g2_model().phi0)) +
                         promote_to_dim8(g2_model().star_phi0));
}

TEST_CASE("lambda2 split of e12, with the contraction oracle") {
    const Form e12 = parse("e12", 7);
    auto s = lambda2_split(e12);

    // independent route: i_{e3}phi0 spans the same eigenline through e12
    Form oracle = interior(3, g2_model().phi0);
    CHECK(oracle == parse("e12-e47-e56", 7));
    CHECK(s.beta7 == make_rational(1, 3) * oracle);

    CHECK(s.beta7 == parse("1/3*(e12-e47-e56)", 7));
    CHECK(s.beta14 == parse("1/3*(2e12+e47+e56)", 7));
    CHECK(s.beta7 + s.beta14 == e12);
}

TEST_CASE("lambda2 eigen identities, exhaustively over the 21 basis 2-forms") {
    const Form& phi = g2_model().phi0;
    for (ckforms::Mask m : ckforms::basis_blades(7, 2)) {
        Form b = Form::blade(7, m);
        auto s = lambda2_split(b);
        CHECK(wedge(s.beta7, phi) == 2 * hodge(s.beta7));
        CHECK(wedge(s.beta14, phi) == -hodge(s.beta14));
        CHECK(s.beta7 + s.beta14 == b);
        // projectors are idempotent and complementary
        CHECK(lambda2_split(s.beta7).beta14.is_zero());
        CHECK(lambda2_split(s.beta14).beta7.is_zero());
    }
}

TEST_CASE("pure lambda2_7 elements have no 14-part") {
    // *7(e1 ^ *7(phi0)) recovers the contraction i_{e1}phi0 exactly
    Form via_hodge = hodge(wedge(Form::covector(7, 1), hodge(g2_model().phi0)));
    Form via_interior = interior(1, g2_model().phi0);
    CHECK(via_hodge == via_interior);
    CHECK(via_interior == parse("e23+e45+e67", 7));
    CHECK(lambda2_split(via_hodge).beta14.is_zero());
}

TEST_CASE("lambda2 component dimensions are 7 and 14") {
    auto dims = lambda2_dims();
    CHECK(dims.first == 7);
    CHECK(dims.second == 14);
}

TEST_CASE("lambda37 isomorphism and its inverse") {
    const Form& phi = g2_model().phi0;
    for (int j = 1; j <= 7; ++j) {
        Form ej = Form::covector(7, j);
        Form bj = hodge(wedge(ej, phi));
        // the -4 constant in the double-dual identity
        CHECK(hodge(wedge(hodge(wedge(ej, phi)), phi)) == -4 * ej);
        CHECK(lambda37_iso(bj) == -4 * ej);
        CHECK(lambda37_iso_inv(lambda37_iso(bj)) == bj);
        CHECK(lambda37_iso(lambda37_iso_inv(ej)) == ej);
    }
    std::mt19937_64 rng(0x5EED5);
    for (int trial = 0; trial < 50; ++trial) {
        Form alpha = helpers::random_form(rng, 7, 1, 5);
        CHECK(lambda37_iso(lambda37_iso_inv(alpha)) == alpha);
    }
}

TEST_CASE("split_bilinear on the metric and on e1 (x) e2") {
    auto m = split_bilinear(Bilinear2Tensor::metric(7));
    CHECK(m.skew2form.is_zero());
    CHECK(m.sym0.is_zero());
    CHECK(m.trace_part == Rational(1));

    Bilinear2Tensor b(7);
    b.at(1, 2) = 1;
    auto s = split_bilinear(b);
    CHECK(s.skew2form == parse("e12", 7));
    CHECK(s.sym0.at(1, 2) == make_rational(1, 2));
    CHECK(s.sym0.at(2, 1) == make_rational(1, 2));
    CHECK(s.trace_part == Rational(0));
}

TEST_CASE("split_bilinear parts recompose the tensor") {
    std::mt19937_64 rng(0x5EED6);
    for (int trial = 0; trial < 60; ++trial) {
        Bilinear2Tensor b(7);
        for (int i = 1; i <= 7; ++i)
            for (int j = 1; j <= 7; ++j) b.at(i, j) = helpers::random_rational(rng);
        auto s = split_bilinear(b);
        CHECK(s.sym0.trace() == Rational(0));
        for (int i = 1; i <= 7; ++i)
            for (int j = 1; j <= 7; ++j) {
                CHECK(s.sym0.at(i, j) == s.sym0.at(j, i));
                // skew coefficient convention carries B_ij - B_ji, no 1/2
                Rational skew_ij(0);
                if (i < j)
                    skew_ij = s.skew2form.coeff((ckforms::Mask(1) << i) | (ckforms::Mask(1) << j));
                else if (i > j)
                    skew_ij = -s.skew2form.coeff((ckforms::Mask(1) << j) | (ckforms::Mask(1) << i));
                Rational diag = i == j ? s.trace_part : Rational(0);
                CHECK(b.at(i, j) == s.sym0.at(i, j) + diag + skew_ij / 2);
            }
    }
}

TEST_CASE("lambda38 generators have Gram matrix 7*I") {
    const auto& J = lambda38_generators();
    REQUIRE(J.size() == 8);
    const Form vol = Form::volume(8);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
            const Rational expected = i == j ? Rational(7) : Rational(0);
            CHECK(form_inner(J[i], J[j]) == expected);
            CHECK(wedge(J[i], hodge(J[j])) == expected * vol);
        }
}

TEST_CASE("lambda3 split on R^8: recompose, characterization, orthogonality") {
    const auto& s7 = spin7_model();
    const auto& J = lambda38_generators();
    std::mt19937_64 rng(0x5EED7);
    for (int trial = 0; trial < 40; ++trial) {
        Form beta = helpers::random_form(rng, 8, 3, 6);
        auto s = lambda3_split8(beta);
        CHECK(s.beta8 + s.beta48 == beta);
        CHECK(wedge(s.beta48, s7.psi0).is_zero());
        // Gram = 7*I makes the projection formula explicit
        Form proj(8, 3);
        for (const Form& jk : J) proj = proj + (form_inner(beta, jk) / 7) * jk;
        CHECK(s.beta8 == proj);
        for (const Form& jk : J) CHECK(form_inner(s.beta48, jk) == Rational(0));
    }
}

TEST_CASE("the 48-dimensional kernel of wedging with psi0 is orthogonal to span J") {
    // columns: 3-form basis; rows: 7-form coordinates of beta ^ psi0
    const auto& blades3 = ckforms::basis_blades(8, 3);
    const auto& s7 = spin7_model();
    ckforms::linalg::RationalMatrix w(8, 56);
    for (std::size_t c = 0; c < 56; ++c)
        w.set_column(c, to_coords(wedge(Form::blade(8, blades3[c]), s7.psi0)));
    auto kernel = ckforms::linalg::kernel_basis(w);
    REQUIRE(kernel.size() == 48);
    const auto& J = lambda38_generators();
    for (const auto& v : kernel) {
        Form k48 = ckforms::from_coords(8, 3, v);
        for (const Form& jk : J) CHECK(form_inner(k48, jk) == Rational(0));
    }
}

TEST_CASE("lambda3 component dimensions are 8 and 48") {
    auto dims = lambda3_dims8();
    CHECK(dims.first == 8);
    CHECK(dims.second == 48);
}

TEST_CASE("lambda47 basis spans the same rank-7 space as all 28 generators") {
    const auto& s7 = spin7_model();
    auto basis = lambda47_basis(s7.psi0);
    REQUIRE(basis.size() == 7);

    auto generator = [&](int i, int j) {
        return wedge(Form::covector(8, i), interior(j, s7.psi0)) -
               wedge(Form::covector(8, j), interior(i, s7.psi0));
    };
    CHECK(s7.alpha0 == generator(0, 1));

    auto span_rank_with = [&](const Form& extra) {
        ckforms::linalg::RationalMatrix m(70, basis.size() + 1);
        for (std::size_t c = 0; c < basis.size(); ++c) m.set_column(c, to_coords(basis[c]));
        m.set_column(basis.size(), to_coords(extra));
        return ckforms::linalg::rank(m);
    };
    for (int i = 0; i <= 7; ++i)
        for (int j = i + 1; j <= 7; ++j) CHECK(span_rank_with(generator(i, j)) == 7);
    CHECK(span_rank_with(s7.alpha0) == 7);
}
