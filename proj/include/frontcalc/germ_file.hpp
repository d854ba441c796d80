#pragma once

// One germ per file, `key = value` lines, '#' starts a comment:
//
//   params = 1
//   order = 10
//   phi1 = 3*x^4 + x^2*y1
//   phi2 = -4*x^3 - 2*x*y1
//
// Instead of phi1/phi2 a pedal-type germ may be given by its factors
// `n = ...` and `p = ...`, meaning (n*p, p, y).

#include <frontcalc/germ_calculus.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace frontcalc {

class GermFileError : public std::runtime_error {
 public:
  GermFileError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what), line_(line), column_(column) {}
  /// 1-based; 0 for whole-file problems.
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct GermFile {
  std::size_t params = 1;
  int order = Jet::kDefaultOrder;
  MapGerm germ;
  /// Present when the file used the n/p form.
  std::optional<PedalFactorization> factors;
};

/// Throws GermFileError, including for a germ whose first two components
/// both vanish identically.
GermFile parse_germ_file(std::string_view text);
GermFile read_germ_file(const std::string& path);

std::string emit_germ_file(const MapGerm& germ);

}  // namespace frontcalc
