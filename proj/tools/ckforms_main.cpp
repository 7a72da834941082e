#include <cctype>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ckforms/ck_ops.hpp"
#include "ckforms/expr.hpp"
#include "ckforms/structures.hpp"
#include "ckforms/verify.hpp"
#include "json.hpp"

namespace {

using namespace ckforms;
using nlohmann::ordered_json;

const NameTable& constant_table() {
    static const NameTable table = {{"phi0", g2_model().phi0},
                                    {"star_phi0", g2_model().star_phi0},
                                    {"psi0", spin7_model().psi0},
                                    {"alpha0", spin7_model().alpha0}};
    return table;
}

// 8 when any expression mentions index 0 or a dimension-8 constant, 7 for
// the dimension-7 constants, 7 by default; mixed evidence is a hard error.
int infer_dim(const std::vector<std::string>& exprs) {
    bool ev7 = false, ev8 = false;
    for (const std::string& text : exprs) {
        ExprScan scan = scan_expression(text);
        if (scan.indices.count(0)) ev8 = true;
        for (const std::string& name : scan.names) {
            if (name == "phi0" || name == "star_phi0") ev7 = true;
            if (name == "psi0" || name == "alpha0") ev8 = true;
        }
    }
    if (ev7 && ev8)
        throw SemanticError("expression mixes dimension-7 and dimension-8 evidence");
    return ev8 ? 8 : 7;
}

int parse_interior_index(const std::string& arg, int dim) {
    if (arg.size() != 2 || arg[0] != 'e' ||
        !std::isdigit(static_cast<unsigned char>(arg[1])))
        throw ParseError("expected a basis covector like e3", 0);
    const int k = arg[1] - '0';
    if (k < first_index(dim) || k > 7)
        throw SemanticError("index " + std::to_string(k) + " is not valid in dimension " +
                            std::to_string(dim));
    return k;
}

std::uint64_t seed_from_env() {
    const char* env = std::getenv("CKFORMS_SEED");
    if (env == nullptr || *env == '\0') return kDefaultSeed;
    return std::strtoull(env, nullptr, 0);
}

int cmd_verify(const std::string& suite, const std::string& format) {
    VerificationReport report =
        suite == "g2"      ? run_g2_suite()
        : suite == "spin7" ? run_spin7_suite()
        : suite == "axioms" ? run_axiom_suite(seed_from_env())
                            : run_all_suites(seed_from_env());
    std::cout << (format == "json" ? render_json(report) : render_text(report));
    return report.overall_pass() ? 0 : 1;
}

struct EvalOp {
    enum Kind { wedge_with, star, interior_with } kind;
    std::string arg;
};

int cmd_eval(const std::string& expr, const std::vector<EvalOp>& ops, const std::string& format) {
    std::vector<std::string> texts{expr};
    for (const EvalOp& op : ops)
        if (op.kind != EvalOp::star) texts.push_back(op.arg);
    const int dim = infer_dim(texts);

    Form acc = parse_form(expr, dim, constant_table());
    for (const EvalOp& op : ops) {
        switch (op.kind) {
            case EvalOp::wedge_with:
                acc = wedge(acc, parse_form(op.arg, dim, constant_table()));
                break;
            case EvalOp::star: acc = hodge(acc); break;
            case EvalOp::interior_with:
                acc = interior(parse_interior_index(op.arg, dim), acc);
                break;
        }
    }

    if (format == "json") {
        ordered_json j{{"expression", expr}, {"dim", dim}, {"result", to_string(acc)}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << to_string(acc) << "\n";
    }
    return 0;
}

int cmd_decompose(const std::string& expr, const std::string& space, const std::string& format) {
    const int dim = space == "lambda2-g2" ? 7 : 8;
    const int degree = space == "lambda2-g2" ? 2 : 3;

    Form input = parse_form(expr, dim, constant_table());
    if (input.is_zero())
        input = Form(dim, degree);
    else if (input.degree() != degree)
        throw SemanticError("space " + space + " takes a " + std::to_string(degree) +
                            "-form, got degree " + std::to_string(input.degree()));

    struct Component {
        std::string name;
        Form value;
        Form residual;  // membership characterization, identically zero
    };
    std::vector<Component> comps;
    if (dim == 7) {
        const Form& phi = g2_model().phi0;
        Lambda2Split s = lambda2_split(input);
        comps.push_back({"lambda2_7", s.beta7, wedge(s.beta7, phi) - 2 * hodge(s.beta7)});
        comps.push_back({"lambda2_14", s.beta14, wedge(s.beta14, phi) + hodge(s.beta14)});
    } else {
        const Form& psi = spin7_model().psi0;
        Lambda3Split8 s = lambda3_split8(input);
        comps.push_back({"lambda3_8", s.beta8, lambda3_split8(s.beta8).beta48});
        comps.push_back({"lambda3_48", s.beta48, wedge(s.beta48, psi)});
    }

    if (format == "json") {
        ordered_json j{{"space", space}, {"input", to_string(input)}};
        j["components"] = ordered_json::array();
        for (const Component& c : comps)
            j["components"].push_back({{"name", c.name},
                                       {"value", to_string(c.value)},
                                       {"residual", to_string(c.residual)}});
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "space: " << space << "\n";
        std::cout << "input: " << to_string(input) << "\n";
        for (const Component& c : comps) {
            std::cout << c.name << ": " << to_string(c.value) << "\n";
            std::cout << c.name << " residual: " << to_string(c.residual) << "\n";
        }
    }
    return 0;
}

int cmd_rank(const std::string& op, const std::string& format) {
    const bool is_t3 = op == "t3";
    linalg::RationalMatrix m = is_t3 ? t3_matrix() : t4_matrix();
    const auto& basis = is_t3 ? cotangent_lambda37_basis() : cotangent_lambda47_basis();

    const std::size_t rk = linalg::rank(m);
    std::vector<linalg::Vec> kernel = linalg::kernel_basis(m);
    for (linalg::Vec& v : kernel) v = linalg::normalize_first_nonzero(v);

    // render a kernel vector as a tensor through the operator's domain basis
    auto as_tensor = [&](const linalg::Vec& v) {
        CotangentValuedForm acc(basis[0].dim(), basis[0].degree());
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!is_zero(v[i])) acc = acc + v[i] * basis[i];
        return acc;
    };

    if (format == "json") {
        ordered_json j{{"operator", op},
                       {"rows", m.rows()},
                       {"cols", m.cols()},
                       {"rank", rk},
                       {"kernel_dim", kernel.size()}};
        j["kernel"] = ordered_json::array();
        for (const linalg::Vec& v : kernel) {
            ordered_json coords = ordered_json::array();
            for (const Rational& c : v) coords.push_back(to_string(c));
            j["kernel"].push_back(
                {{"coordinates", coords}, {"tensor", to_string(as_tensor(v))}});
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "operator: " << op << "\n";
        std::cout << "matrix: " << m.rows() << "x" << m.cols() << "\n";
        std::cout << "rank: " << rk << "\n";
        std::cout << "kernel_dim: " << kernel.size() << "\n";
        for (std::size_t i = 0; i < kernel.size(); ++i)
            std::cout << "kernel_" << i + 1 << ": " << to_string(as_tensor(kernel[i])) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact exterior-algebra calculator for the 7- and 8-dimensional model spaces"};
    app.require_subcommand(1);

    std::string format = "text";

    CLI::App* ver = app.add_subcommand("verify", "run a verification suite and report verdicts");
    std::string suite = "all";
    ver->add_option("--suite", suite, "suite to run (default all)")
        ->check(CLI::IsMember({"g2", "spin7", "axioms", "all"}));
    ver->add_option("--format", format, "output format (default text)")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* ev = app.add_subcommand("eval", "evaluate a form expression");
    std::string expr;
    ev->add_option("expression", expr, "form expression; constants phi0, star_phi0, psi0, alpha0")
        ->required();
    std::vector<std::string> wedge_args, interior_args;
    CLI::Option* wopt =
        ev->add_option("--wedge", wedge_args, "wedge with an expression, applied in flag order");
    CLI::Option* sopt = ev->add_flag("--star", "apply the Hodge star, applied in flag order");
    CLI::Option* iopt = ev->add_option("--interior", interior_args,
                                       "contract with a basis covector e<k>, in flag order");
    ev->add_option("--format", format, "output format (default text)")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* dec = app.add_subcommand("decompose", "split a form into irreducible components");
    std::string dexpr, space;
    dec->add_option("expression", dexpr, "form expression")->required();
    dec->add_option("--space", space, "decomposition to apply")
        ->required()
        ->check(CLI::IsMember({"lambda2-g2", "lambda3-spin7"}));
    dec->add_option("--format", format, "output format (default text)")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* rk = app.add_subcommand("rank", "rank and kernel of an operator matrix");
    std::string op;
    rk->add_option("operator", op, "t3 or t4")->required()->check(CLI::IsMember({"t3", "t4"}));
    rk->add_option("--format", format, "output format (default text)")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (ver->parsed()) return cmd_verify(suite, format);
        if (ev->parsed()) {
            std::vector<EvalOp> ops;
            std::size_t next_wedge = 0, next_interior = 0;
            for (const CLI::Option* o : ev->parse_order()) {
                if (o == wopt) ops.push_back({EvalOp::wedge_with, wedge_args[next_wedge++]});
                if (o == sopt) ops.push_back({EvalOp::star, ""});
                if (o == iopt)
                    ops.push_back({EvalOp::interior_with, interior_args[next_interior++]});
            }
            return cmd_eval(expr, ops, format);
        }
        if (dec->parsed()) return cmd_decompose(dexpr, space, format);
        if (rk->parsed()) return cmd_rank(op, format);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const SemanticError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
