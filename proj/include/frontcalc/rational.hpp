#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace frontcalc {

using Rational = mpq_class;

/// Canonical text form: "p" or "p/q" with q > 0.
inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed text.
Rational parse_rational(std::string_view text);

inline int sign(const Rational& r) { return sgn(r); }

}  // namespace frontcalc
