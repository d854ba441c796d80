#pragma once

/**
 * Truncated multivariate power series ("jets") over exact rationals.
 *
 * A Jet lives in the variables (x, y1, ..., yn); variable index 0 is x and
 * index i >= 1 is y_i. Coefficients are stored sparsely, keyed by exponent
 * vectors of length n+1, and every stored monomial has total degree at most
 * the truncation order. Zero coefficients are never stored, so two jets are
 * equal exactly when their coefficient maps agree.
 *
 * The truncation order records how much of the underlying germ is known:
 * a jet of order N stands for a germ modulo the monomials of degree N+1.
 * Binary operations on jets of different orders keep the smaller one.
 */

#include <frontcalc/rational.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace frontcalc {

using Exponents = std::vector<unsigned>;

unsigned total_degree(const Exponents& e);

/// Total degree first; within a degree, higher powers of earlier variables
/// come first (x^2 < x*y1 < y1^2). The first stored term is the "lowest".
struct GradedOrder {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

class JetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands disagree on the number of parameters.
class DimensionError : public JetError {
 public:
  using JetError::JetError;
};

/// Substitution of a jet with a nonzero constant term.
class NotAGermError : public JetError {
 public:
  using JetError::JetError;
};

class DivisionByZeroError : public JetError {
 public:
  using JetError::JetError;
};

class Jet {
 public:
  using Terms = std::map<Exponents, Rational, GradedOrder>;

  static constexpr int kDefaultOrder = 10;

  Jet(std::size_t num_params, int order);

  static Jet constant(std::size_t num_params, int order, const Rational& c);
  /// The coordinate function for variable `var` (0 = x, i = y_i).
  static Jet variable(std::size_t num_params, int order, std::size_t var);
  static Jet monomial(std::size_t num_params, int order, Exponents exps,
                      const Rational& c);

  std::size_t num_params() const { return num_params_; }
  std::size_t num_vars() const { return num_params_ + 1; }
  int order() const { return order_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Exponents& e) const;

  /// Adds c to the coefficient of e; ignored when deg(e) exceeds the order.
  void add_term(const Exponents& e, const Rational& c);

  Jet truncated(int order) const;
  Jet homogeneous_part(unsigned degree) const;
  /// Smallest total degree among stored terms; nullopt for the zero jet.
  std::optional<unsigned> lowest_degree() const;
  /// Keeps only terms that do not involve x.
  Jet restricted_to_x_zero() const;

  Jet operator-() const;
  Jet& operator+=(const Jet& b);
  Jet& operator-=(const Jet& b);
  Jet& operator*=(const Rational& c);

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(Jet a, const Rational& c) { return a *= c; }
  friend Jet operator*(const Rational& c, Jet a) { return a *= c; }
  friend Jet operator*(const Jet& a, const Jet& b);

  /// Coefficient-map equality; truncation orders are not compared.
  friend bool operator==(const Jet& a, const Jet& b);

 private:
  void require_same_params(const Jet& b, const char* op) const;

  std::size_t num_params_;
  int order_;
  Terms terms_;
};

Jet add(const Jet& a, const Jet& b);
Jet mul(const Jet& a, const Jet& b);
Jet scale(const Jet& a, const Rational& c);
/// Product truncated to an explicit order instead of min(order_a, order_b).
Jet mul_to_order(const Jet& a, const Jet& b, int order);
Jet power(const Jet& a, unsigned e);

Jet partial_derivative(const Jet& a, std::size_t var);
/// Antiderivative in x vanishing on {x = 0}; the order rises by one.
Jet integrate_in_x(const Jet& a);

/// Quotient q with a = q*b up to truncation, or nullopt when no truncated
/// power series quotient exists. Throws DivisionByZeroError for b = 0.
std::optional<Jet> divide(const Jet& a, const Jet& b);

/// Simultaneous substitution var <- jet. Every substituted jet must vanish at
/// the origin (composition of germs); otherwise NotAGermError.
Jet substitute(const Jet& a,
               const std::vector<std::pair<std::size_t, Jet>>& assignments);

Rational value_at_origin(const Jet& a);
/// Coefficients of x, y1, ..., yn.
std::vector<Rational> gradient_at_origin(const Jet& a);
/// d^k a / dvar^k at the origin, i.e. k! times the coefficient of var^k.
Rational derivative_at_origin(const Jet& a, std::size_t var, unsigned k);

/// Lowest power of `var` among nonzero monomials that involve no other
/// variable; nullopt means "zero up to truncation", not proven flat.
std::optional<unsigned> order_in(const Jet& a, std::size_t var);
/// Lowest total degree; nullopt means zero up to truncation.
std::optional<unsigned> total_order(const Jet& a);

/// Default variable names: x, y1, ..., yn.
std::vector<std::string> default_variable_names(std::size_t num_params);
std::string to_string(const Jet& a);
std::string to_string(const Jet& a, const std::vector<std::string>& names);

}  // namespace frontcalc
