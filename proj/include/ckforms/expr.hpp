#ifndef CKFORMS_EXPR_HPP
#define CKFORMS_EXPR_HPP

#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ckforms/form.hpp"

namespace ckforms {

// Lexical/syntactic failure, with the 0-based character offset of the
// offending token.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& msg, std::size_t position);
    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

// Violation of the algebra's typing rules inside a well-formed expression
// (mixed degrees, an index outside the dimension's index set, ...).
class SemanticError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

using NameTable = std::map<std::string, Form, std::less<>>;

// Parses the form-expression grammar
//   expr := [+|-] term ((+|-) term)*
//   term := rational [*] atom | rational | atom
//   atom := 'e' digits | name | '(' expr ')'
// Whitespace is insignificant. Blade indices are written as 1 to 4 distinct
// digits in any order; the sign of the written permutation is absorbed into
// the coefficient (e21 parses as -e12). Coefficients distribute over
// parenthesized groups. A value with no surviving blade term parses as the
// degree-0 zero form.
Form parse_form(std::string_view text, int dim, const NameTable& names = {});

// Canonical rendering: terms in ascending lexicographic blade order, unit
// coefficients elided, no whitespace. parse_form inverts it exactly.
std::string to_string(const Form& f);

// Lexical pre-scan used for dimension inference: collects every blade index
// digit and every identifier that appears. Never throws; malformed input is
// diagnosed later by parse_form.
struct ExprScan {
    std::set<int> indices;
    std::set<std::string> names;
};
ExprScan scan_expression(std::string_view text);

}  // namespace ckforms

#endif
