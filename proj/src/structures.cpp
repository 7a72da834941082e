#include "ckforms/structures.hpp"

#include <initializer_list>
#include <stdexcept>

#include "ckforms/matrix.hpp"

namespace ckforms {

namespace {

Mask mk(std::initializer_list<int> indices) {
    Mask m = 0;
    for (int i : indices) m |= static_cast<Mask>(1u << i);
    return m;
}

Form build_phi0() {
    Form f(7, 3);
    f.add_term(mk({1, 2, 3}), 1);
    f.add_term(mk({1, 4, 5}), 1);
    f.add_term(mk({1, 6, 7}), 1);
    f.add_term(mk({2, 4, 6}), 1);
    f.add_term(mk({2, 5, 7}), -1);
    f.add_term(mk({3, 4, 7}), -1);
    f.add_term(mk({3, 5, 6}), -1);
    return f;
}

Form star_phi0_literal() {
    Form f(7, 4);
    f.add_term(mk({4, 5, 6, 7}), 1);
    f.add_term(mk({2, 3, 6, 7}), 1);
    f.add_term(mk({2, 3, 4, 5}), 1);
    f.add_term(mk({1, 3, 5, 7}), 1);
    f.add_term(mk({1, 3, 4, 6}), -1);
    f.add_term(mk({1, 2, 5, 6}), -1);
    f.add_term(mk({1, 2, 4, 7}), -1);
    return f;
}

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

const G2Model& g2_model() {
    static const G2Model model = [] {
        G2Model m{build_phi0(), hodge(build_phi0())};
        if (m.star_phi0 != star_phi0_literal())
            throw std::logic_error("g2_model: Hodge dual disagrees with its literal expansion");
        return m;
    }();
    return model;
}

Form promote_to_dim8(const Form& f) {
    require(f.dim() == 7, "promote_to_dim8: expected a form on R^7");
    Form out(8, f.degree());
    for (const auto& [m, c] : f.terms()) out.add_term(m, c);
    return out;
}

const Spin7Model& spin7_model() {
    static const Spin7Model model = [] {
        const G2Model& g2 = g2_model();
        const Form psi = wedge(Form::covector(8, 0), promote_to_dim8(g2.phi0)) +
                         promote_to_dim8(g2.star_phi0);
        if (hodge(psi) != psi) throw std::logic_error("spin7_model: psi0 is not self-dual");
        if (wedge(psi, psi) != 14 * Form::volume(8))
            throw std::logic_error("spin7_model: psi0 ^ psi0 != 14 vol");
        const Form alpha = wedge(interior(Form::covector(8, 0), psi), Form::covector(8, 1)) -
                           wedge(interior(Form::covector(8, 1), psi), Form::covector(8, 0));
        return Spin7Model{psi, alpha};
    }();
    return model;
}

Lambda2Split lambda2_split(const Form& beta) {
    require(beta.dim() == 7 && beta.degree() == 2, "lambda2_split: expected a 2-form on R^7");
    const Form l = hodge(wedge(beta, g2_model().phi0));
    const Rational third = make_rational(1, 3);
    return {third * (l + beta), third * (2 * beta - l)};
}

std::pair<std::size_t, std::size_t> lambda2_dims() {
    const auto& blades = basis_blades(7, 2);
    linalg::RationalMatrix p7(blades.size(), blades.size());
    linalg::RationalMatrix p14(blades.size(), blades.size());
    for (std::size_t c = 0; c < blades.size(); ++c) {
        const Lambda2Split split = lambda2_split(Form::blade(7, blades[c]));
        p7.set_column(c, to_coords(split.beta7));
        p14.set_column(c, to_coords(split.beta14));
    }
    return {linalg::rank(p7), linalg::rank(p14)};
}

Form lambda37_iso(const Form& beta) {
    require(beta.dim() == 7 && beta.degree() == 3, "lambda37_iso: expected a 3-form on R^7");
    return hodge(wedge(beta, g2_model().phi0));
}

Form lambda37_iso_inv(const Form& alpha) {
    require(alpha.dim() == 7 && alpha.degree() == 1, "lambda37_iso_inv: expected a covector");
    return make_rational(-1, 4) * hodge(wedge(alpha, g2_model().phi0));
}

BilinearSplit split_bilinear(const Bilinear2Tensor& b) {
    require(b.dim() == 7, "split_bilinear: expected a bilinear form on R^7");
    Form skew(7, 2);
    for (int i = 1; i <= 7; ++i)
        for (int j = i + 1; j <= 7; ++j)
            skew.add_term(static_cast<Mask>((1u << i) | (1u << j)), b.at(i, j) - b.at(j, i));
    const Rational trace_part = b.trace() / 7;
    Bilinear2Tensor sym0(7);
    const Rational half = make_rational(1, 2);
    for (int i = 1; i <= 7; ++i)
        for (int j = 1; j <= 7; ++j) {
            sym0.at(i, j) = half * (b.at(i, j) + b.at(j, i));
            if (i == j) sym0.at(i, j) -= trace_part;
        }
    return {std::move(skew), std::move(sym0), trace_part};
}

const std::vector<Form>& lambda38_generators() {
    static const std::vector<Form> gens = [] {
        std::vector<Form> out;
        for (int k = 0; k <= 7; ++k)
            out.push_back(hodge(wedge(spin7_model().psi0, Form::covector(8, k))));
        return out;
    }();
    return gens;
}

Lambda3Split8 lambda3_split8(const Form& beta) {
    require(beta.dim() == 8 && beta.degree() == 3, "lambda3_split8: expected a 3-form on R^8");
    std::vector<linalg::Vec> basis;
    for (const Form& j : lambda38_generators()) basis.push_back(to_coords(j));
    const linalg::Vec proj = linalg::orthogonal_project(to_coords(beta), basis);
    const Form beta8 = from_coords(8, 3, proj);
    return {beta8, beta - beta8};
}

std::pair<std::size_t, std::size_t> lambda3_dims8() {
    const auto& blades = basis_blades(8, 3);
    linalg::RationalMatrix gens(blades.size(), 8);
    for (std::size_t c = 0; c < 8; ++c) gens.set_column(c, to_coords(lambda38_generators()[c]));

    // kernel of the wedge-against-psi0 map Lambda^3 -> Lambda^7
    linalg::RationalMatrix wedge_psi(basis_blades(8, 7).size(), blades.size());
    for (std::size_t c = 0; c < blades.size(); ++c)
        wedge_psi.set_column(c, to_coords(wedge(Form::blade(8, blades[c]), spin7_model().psi0)));
    return {linalg::rank(gens), linalg::kernel_basis(wedge_psi).size()};
}

std::vector<Form> lambda47_basis(const Form& psi) {
    require(psi.dim() == 8 && psi.degree() == 4, "lambda47_basis: expected a 4-form on R^8");
    std::vector<Form> gens;
    for (int i = 0; i <= 7; ++i)
        for (int j = i + 1; j <= 7; ++j)
            gens.push_back(wedge(Form::covector(8, i), interior(Form::covector(8, j), psi)) -
                           wedge(Form::covector(8, j), interior(Form::covector(8, i), psi)));
    linalg::RationalMatrix m(basis_blades(8, 4).size(), gens.size());
    for (std::size_t c = 0; c < gens.size(); ++c) m.set_column(c, to_coords(gens[c]));
    std::vector<Form> basis;
    for (std::size_t c : linalg::pivot_columns(m)) basis.push_back(gens[c]);
    return basis;
}

}  // namespace ckforms
