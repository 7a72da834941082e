#include "ckforms/ck_ops.hpp"

#include <stdexcept>
#include <utility>

namespace ckforms {

CotangentValuedForm ck_residual(const CotangentValuedForm& a) {
    const int n = a.dim();
    const int p = a.degree();
    const int lo = first_index(n);

    Form sigma(n, p + 1);  // sum_k e^k ^ A_k
    Form tau(n, p - 1);    // sum_k i_{e_k} A_k
    for (int k = lo; k <= 7; ++k) {
        sigma = sigma + wedge(Form::covector(n, k), a.component(k));
        tau = tau + interior(k, a.component(k));
    }

    const Rational c1 = make_rational(1, p + 1);
    const Rational c2 = make_rational(1, n - p + 1);

    CotangentValuedForm out(n, p);
    for (int k = lo; k <= 7; ++k) {
        out.component(k) = a.component(k) - c1 * interior(k, sigma)
                         - c2 * wedge(Form::covector(n, k), tau);
    }
    return out;
}

Rational pr_rphi(const CotangentValuedForm& a) {
    if (a.dim() != 7 || a.degree() != 3)
        throw std::invalid_argument("pr_rphi expects T* tensor Lambda^3 on R^7");
    const Form& phi = g2_model().phi0;
    Rational s(0);
    for (int k = 1; k <= 7; ++k) {
        Form top = wedge(wedge(Form::covector(7, k), a.component(k)), phi);
        s += hodge(top).coeff(0);
    }
    return s;
}

Bilinear2Tensor extinsa_map(const CotangentValuedForm& a) {
    if (a.dim() != 7 || a.degree() != 3)
        throw std::invalid_argument("extinsa_map expects T* tensor Lambda^3 on R^7");
    const Form& phi = g2_model().phi0;
    Bilinear2Tensor b(7);
    for (int i = 1; i <= 7; ++i) {
        Form row = hodge(wedge(a.component(i), phi));
        for (int j = 1; j <= 7; ++j)
            b.at(i, j) = row.coeff(Mask(1) << j);
    }
    return b;
}

Form p_map(const Form& beta) {
    if (beta.dim() != 8 || beta.degree() != 4)
        throw std::invalid_argument("p_map expects a 4-form on R^8");
    const Form& psi = spin7_model().psi0;
    Form out(8, 2);
    for (int i = 0; i <= 7; ++i) {
        Form ib = interior(i, beta);
        for (int j = i + 1; j <= 7; ++j) {
            Rational c = form_inner(psi, wedge(ib, Form::covector(8, j)))
                       - form_inner(psi, wedge(interior(j, beta), Form::covector(8, i)));
            out.add_term((Mask(1) << i) | (Mask(1) << j), c);
        }
    }
    return out;
}

Form big_p_map(const CotangentValuedForm& a) {
    if (a.dim() != 8 || a.degree() != 4)
        throw std::invalid_argument("big_p_map expects T* tensor Lambda^4 on R^8");
    Form out(8, 3);
    for (int k = 0; k <= 7; ++k)
        out = out + wedge(Form::covector(8, k), p_map(a.component(k)));
    return out;
}

const std::vector<CotangentValuedForm>& cotangent_lambda37_basis() {
    static const std::vector<CotangentValuedForm> basis = [] {
        const Form& phi = g2_model().phi0;
        std::vector<CotangentValuedForm> out;
        out.reserve(49);
        for (int i = 1; i <= 7; ++i)
            for (int j = 1; j <= 7; ++j)
                out.push_back(CotangentValuedForm::decomposable(
                    Form::covector(7, i), hodge(wedge(Form::covector(7, j), phi))));
        return out;
    }();
    return basis;
}

const std::vector<CotangentValuedForm>& cotangent_lambda47_basis() {
    static const std::vector<CotangentValuedForm> basis = [] {
        std::vector<Form> c = lambda47_basis(spin7_model().psi0);
        std::vector<CotangentValuedForm> out;
        out.reserve(8 * c.size());
        for (int i = 0; i <= 7; ++i)
            for (const Form& cj : c)
                out.push_back(CotangentValuedForm::decomposable(Form::covector(8, i), cj));
        return out;
    }();
    return basis;
}

namespace {

// Columns are images of domain elements; each is independent work.
template <typename MapCoords>
linalg::RationalMatrix assemble(const std::vector<CotangentValuedForm>& domain,
                                std::size_t rows, MapCoords&& map_coords) {
    const std::size_t cols = domain.size();
    std::vector<linalg::Vec> image(cols);
#pragma omp parallel for schedule(dynamic)
    for (long long k = 0; k < static_cast<long long>(cols); ++k)
        image[static_cast<std::size_t>(k)] = map_coords(domain[static_cast<std::size_t>(k)]);
    linalg::RationalMatrix m(rows, cols);
    for (std::size_t k = 0; k < cols; ++k) {
        if (image[k].size() != rows)
            throw std::logic_error("operator image has unexpected coordinate length");
        m.set_column(k, image[k]);
    }
    return m;
}

}  // namespace

linalg::RationalMatrix t3_matrix() {
    return assemble(cotangent_lambda37_basis(), 7 * 35,
                    [](const CotangentValuedForm& a) { return to_coords(ck_residual(a)); });
}

linalg::RationalMatrix t4_matrix() {
    return assemble(cotangent_lambda47_basis(), 8 * 70,
                    [](const CotangentValuedForm& a) { return to_coords(ck_residual(a)); });
}

linalg::RationalMatrix extinsa_matrix() {
    return assemble(cotangent_lambda37_basis(), 49,
                    [](const CotangentValuedForm& a) { return to_coords(extinsa_map(a)); });
}

linalg::RationalMatrix inner_contraction_matrix() {
    return assemble(cotangent_lambda47_basis(), 56, [](const CotangentValuedForm& a) {
        Form c(8, 3);
        for (int k = 0; k <= 7; ++k)
            c = c + interior(k, a.component(k));
        return to_coords(c);
    });
}

}  // namespace ckforms
