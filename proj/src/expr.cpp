#include "ckforms/expr.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <utility>

namespace ckforms {

ParseError::ParseError(const std::string& msg, std::size_t position)
    : std::runtime_error(msg + " (at position " + std::to_string(position) + ")"),
      position_(position) {}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

struct Parser {
    std::string_view text;
    int dim;
    const NameTable& names;
    std::size_t pos = 0;

    char peek() const { return pos < text.size() ? text[pos] : '\0'; }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    Rational parse_rational() {
        const std::size_t start = pos;
        std::string num;
        while (std::isdigit(static_cast<unsigned char>(peek()))) num.push_back(text[pos++]);
        std::string den;
        const std::size_t before_slash = pos;
        skip_ws();
        if (eat('/')) {
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                throw ParseError("expected digits after '/'", pos);
            while (std::isdigit(static_cast<unsigned char>(peek()))) den.push_back(text[pos++]);
            if (mpz_class(den) == 0) throw ParseError("zero denominator", start);
        } else {
            pos = before_slash;  // the whitespace we skipped belongs to what follows
        }
        Rational q(den.empty() ? num : num + "/" + den);
        q.canonicalize();
        return q;
    }

    Form parse_blade(std::string_view digits, std::size_t at) {
        Mask mask = 0;
        int inversions = 0;
        std::vector<int> seen;
        for (char ch : digits) {
            const int idx = ch - '0';
            if (idx < first_index(dim) || idx > 7)
                throw SemanticError("index " + std::string(1, ch) + " is not valid in dimension " +
                                    std::to_string(dim));
            const Mask bit = static_cast<Mask>(1u << idx);
            if ((mask & bit) != 0) throw ParseError("repeated blade index", at);
            for (int prev : seen)
                if (prev > idx) ++inversions;
            seen.push_back(idx);
            mask |= bit;
        }
        return Form::blade(dim, mask, (inversions & 1) == 0 ? 1 : -1);
    }

    Form parse_atom() {
        skip_ws();
        const std::size_t at = pos;
        if (eat('(')) {
            Form inner = parse_expr();
            skip_ws();
            if (!eat(')')) throw ParseError("expected ')'", pos);
            return inner;
        }
        if (!ident_start(peek())) throw ParseError("expected a blade, name, or '('", pos);
        std::size_t end = pos;
        while (end < text.size() && ident_char(text[end])) ++end;
        std::string_view id = text.substr(pos, end - pos);
        pos = end;
        if (id.size() > 1 && id[0] == 'e') {
            bool all_digits = true;
            for (char c : id.substr(1))
                if (!std::isdigit(static_cast<unsigned char>(c))) all_digits = false;
            if (all_digits) return parse_blade(id.substr(1), at);
        }
        auto it = names.find(id);
        if (it == names.end()) throw ParseError("unknown name '" + std::string(id) + "'", at);
        if (it->second.dim() != dim)
            throw SemanticError("name '" + std::string(id) + "' lives in dimension " +
                                std::to_string(it->second.dim()) + ", expression is in dimension " +
                                std::to_string(dim));
        return it->second;
    }

    Form parse_term() {
        skip_ws();
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            Rational coeff = parse_rational();
            skip_ws();
            if (eat('*')) return scale(coeff, parse_atom());
            if (ident_start(peek()) || peek() == '(') return scale(coeff, parse_atom());
            Form scalar(dim, 0);
            scalar.add_term(0, coeff);
            return scalar;
        }
        return parse_atom();
    }

    Form parse_expr() {
        skip_ws();
        int sign = 1;
        if (eat('-'))
            sign = -1;
        else
            eat('+');
        Form acc(dim, 0);
        std::optional<int> degree;
        for (;;) {
            Form t = parse_term();
            if (!t.is_zero()) {
                if (degree && *degree != t.degree())
                    throw SemanticError("mixed degrees in expression: " + std::to_string(*degree) +
                                        " and " + std::to_string(t.degree()));
                if (!degree) {
                    degree = t.degree();
                    acc = Form(dim, t.degree());
                }
                acc = add(acc, sign < 0 ? -t : t);
            }
            skip_ws();
            if (pos >= text.size() || peek() == ')') return acc;
            if (eat('+'))
                sign = 1;
            else if (eat('-'))
                sign = -1;
            else
                throw ParseError("expected '+' or '-'", pos);
        }
    }
};

}  // namespace

Form parse_form(std::string_view text, int dim, const NameTable& names) {
    Parser p{text, dim, names};
    Form f = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) throw ParseError("unexpected trailing input", p.pos);
    return f;
}

std::string to_string(const Form& f) {
    if (f.is_zero()) return "0";
    if (f.degree() == 0) return to_string(f.coeff(0));
    std::vector<std::pair<Mask, Rational>> terms(f.terms().begin(), f.terms().end());
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
    std::string out;
    for (const auto& [m, q] : terms) {
        const bool neg = sgn(q) < 0;
        if (!out.empty())
            out += neg ? '-' : '+';
        else if (neg)
            out += '-';
        const Rational mag = abs(q);
        if (mag != 1) out += mag.get_str() + "*";
        out += 'e';
        for (int idx : mask_indices(m)) out += static_cast<char>('0' + idx);
    }
    return out;
}

ExprScan scan_expression(std::string_view text) {
    ExprScan scan;
    std::size_t i = 0;
    while (i < text.size()) {
        if (!ident_start(text[i])) {
            ++i;
            continue;
        }
        std::size_t end = i;
        while (end < text.size() && ident_char(text[end])) ++end;
        std::string_view id = text.substr(i, end - i);
        i = end;
        bool blade = id.size() > 1 && id[0] == 'e';
        if (blade)
            for (char c : id.substr(1))
                if (!std::isdigit(static_cast<unsigned char>(c))) blade = false;
        if (blade)
            for (char c : id.substr(1)) scan.indices.insert(c - '0');
        else
            scan.names.insert(std::string(id));
    }
    return scan;
}

}  // namespace ckforms
