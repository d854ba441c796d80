#pragma once

#include <frontcalc/germ_calculus.hpp>
#include <frontcalc/polynomial_parser.hpp>

#include <random>
#include <string>

namespace testing {

inline frontcalc::Jet J(const std::string& text, std::size_t n = 1,
                        int order = frontcalc::Jet::kDefaultOrder) {
  return frontcalc::parse_jet(text, n, order);
}

inline frontcalc::MapGerm germ(const std::string& phi1, const std::string& phi2,
                               std::size_t n = 1,
                               int order = frontcalc::Jet::kDefaultOrder) {
  return frontcalc::MapGerm::unfolding(J(phi1, n, order), J(phi2, n, order));
}

// Dense reference multiplication over untruncated polynomials.
inline frontcalc::Polynomial reference_product(const frontcalc::Jet& a,
                                               const frontcalc::Jet& b) {
  frontcalc::Polynomial out;
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      frontcalc::Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  }
  return out;
}

inline frontcalc::Jet random_jet(std::mt19937_64& rng, std::size_t n, int order,
                                 std::size_t terms, unsigned min_degree = 0) {
  frontcalc::Jet j(n, order);
  for (std::size_t t = 0; t < terms; ++t) {
    frontcalc::Exponents e(n + 1, 0);
    const unsigned deg =
        min_degree + static_cast<unsigned>(rng() % (unsigned(order) - min_degree + 1));
    for (unsigned k = 0; k < deg; ++k) ++e[rng() % (n + 1)];
    const long num = static_cast<long>(rng() % 11) - 5;
    const long den = 1 + static_cast<long>(rng() % 4);
    frontcalc::Rational c(num, den);
    c.canonicalize();
    j.add_term(e, c);
  }
  return j;
}

}  // namespace testing
