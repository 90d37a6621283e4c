#pragma once

#include <string>

#include "ellfib/field.hpp"
#include "ellfib/homog.hpp"

namespace ellfib {

// expressions over s, t and the generator a: integers, p/q, + - * / ^, parentheses;
// division only by nonzero constants
HomogPoly parse_homog(const std::string& text, const Field& f);
FieldElem parse_constant(const std::string& text, const Field& f);
// univariate polynomial over Q in the given variable (extension moduli use x)
QPoly parse_univariate(const std::string& text, char var = 'x');
// "rationals" or "extension: <poly in x>"
Field parse_field(const std::string& text);

}  // namespace ellfib
