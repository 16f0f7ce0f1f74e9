#pragma once

#include "z3qg/algebra.hpp"
#include "z3qg/localization.hpp"
#include "z3qg/tensor.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace z3qg {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, size_t position);
    size_t position() const { return pos_; }

private:
    size_t pos_;
};

// Result of evaluating an expression: an algebra element, a tensor, or an
// element of Mq2[Dq^-1].
using Value = std::variant<Poly, TensorPoly, LocalizedElement>;

// Grammar, loosest first:
//   sum    := ['+'|'-'] tensor { ('+'|'-') tensor }
//   tensor := prod { 'ox' prod }
//   prod   := unary { ('*'|'/') unary }      division only by nonzero scalars
//   unary  := '-' unary | power
//   power  := atom [ '^' ['-'] int ]
//   atom   := rational | 'q' | name | fn '(' sum ')' | '(' sum ')'
// Names are generators of `p`, then the catalog elements Dq, vartheta and
// lambda (translated into `p` by generator names). Functions: delta, epsilon,
// antipode, star, deltaL, deltaR.
Value parse_expr(const std::string& text, const PresentationPtr& p);
// Same, but the result must be an element of `p` (ParseError otherwise).
Poly parse_poly(const std::string& text, const PresentationPtr& p);

std::vector<std::string> map_names();
// Applies a named structure map. Throws std::invalid_argument when the map is
// unknown or not defined on the preset.
Value apply_map(const std::string& map, const Value& x, const PresentationPtr& p);

std::string render_value(const Value& v, const PresentationPtr& p);
// Z3 grade; nullopt for inhomogeneous values.
std::optional<int> value_grade(const Value& v, const PresentationPtr& p);
bool value_equal(const Value& x, const Value& y);

}  // namespace z3qg
