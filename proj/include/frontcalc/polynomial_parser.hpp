#pragma once

// Parser for polynomial expressions with exact rational coefficients, e.g.
//   3*x^4 + 1/2*x^2*y1 - (x + y2)^2
// Supported: + - * ^ (non-negative integer exponents), parentheses, division
// by nonzero constants, integer and decimal literals (0.25 is read as 1/4).

#include <frontcalc/jet.hpp>

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace frontcalc {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t column)
      : std::runtime_error(what), column_(column) {}
  /// 1-based column of the offending character.
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

/// Untruncated polynomial: exponent vector (one slot per variable name) to
/// nonzero coefficient.
using Polynomial = std::map<Exponents, Rational>;

Polynomial parse_polynomial(std::string_view text,
                            const std::vector<std::string>& variable_names);
/// `aliases` maps extra identifiers to variable indices.
Polynomial parse_polynomial(std::string_view text,
                            const std::vector<std::string>& variable_names,
                            const std::map<std::string, std::size_t>& aliases);

/// Parses over x, y1..yn (plus "y" for y1 when n == 1) and truncates to
/// `order`.
Jet parse_jet(std::string_view text, std::size_t num_params, int order);

/// Evaluates a polynomial at a real point; used for numeric curve specs.
double evaluate(const Polynomial& p, const std::vector<double>& point);

}  // namespace frontcalc
