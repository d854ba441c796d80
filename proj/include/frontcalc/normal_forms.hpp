#pragma once

// Model germs used throughout the classifier, the verify suites and the
// tests. All are built at an explicit truncation order.

#include <frontcalc/germ_calculus.hpp>

#include <span>

namespace frontcalc {

/// Legendrian A_{k+1} normal form G_k:
///   ((k+1) x^{k+2} + sum_{j=1}^{k-1} j x^{j+1} y_j,
///    -(k+2) x^{k+1} - sum_{j=1}^{k-1} (j+1) x^j y_j, y).
/// Requires k <= n+1 (it uses y_1..y_{k-1}); throws std::invalid_argument
/// otherwise.
MapGerm legendrian_a_normal_form(unsigned k, std::size_t num_params,
                                 int order = Jet::kDefaultOrder);

/// Expected n and p of D(G_k): n = -x,
/// p = -(k+2)(k+1) x^k - sum_{j=1}^{k-1} j(j+1) x^{j-1} y_j.
PedalFactorization legendrian_a_differential_factors(unsigned k,
                                                     std::size_t num_params,
                                                     int order);

/// S_k normal form (x(x^2 +- y^{k+1}), x^2 +- y^{k+1}, y) with n = 1.
MapGerm s_k_normal_form(unsigned k, int sign, int order = Jet::kDefaultOrder);

/// Legendrian S_k normal form
/// (x^4/4 +- x^2 y^{k+1}/2, x^3/3 +- x y^{k+1}, y) with n = 1.
MapGerm legendrian_s_k_normal_form(unsigned k, int sign,
                                   int order = Jet::kDefaultOrder);

/// (3x^4 + x^2 y1, -4x^3 - 2x y1, y).
MapGerm swallowtail_normal_form(std::size_t num_params,
                                int order = Jet::kDefaultOrder);

/// (a x^4 + x^2 sum b_i y_i, c x^3 + x sum d_i y_i, y).
MapGerm quartic_family(const Rational& a, std::span<const Rational> b,
                       const Rational& c, std::span<const Rational> d,
                       int order = Jet::kDefaultOrder);

}  // namespace frontcalc
