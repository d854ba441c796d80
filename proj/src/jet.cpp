#include <frontcalc/jet.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace frontcalc {

Rational parse_rational(std::string_view text) {
  Rational r;
  if (text.empty() || r.set_str(std::string(text), 10) != 0) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) +
                                "'");
  }
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator");
  r.canonicalize();
  return r;
}

unsigned total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

bool GradedOrder::operator()(const Exponents& a, const Exponents& b) const {
  const unsigned da = total_degree(a);
  const unsigned db = total_degree(b);
  if (da != db) return da < db;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return a.size() < b.size();
}

Jet::Jet(std::size_t num_params, int order)
    : num_params_(num_params), order_(std::max(order, -1)) {}

Jet Jet::constant(std::size_t num_params, int order, const Rational& c) {
  Jet j(num_params, order);
  j.add_term(Exponents(num_params + 1, 0), c);
  return j;
}

Jet Jet::variable(std::size_t num_params, int order, std::size_t var) {
  if (var > num_params) throw DimensionError("variable index out of range");
  Exponents e(num_params + 1, 0);
  e[var] = 1;
  return monomial(num_params, order, std::move(e), Rational(1));
}

Jet Jet::monomial(std::size_t num_params, int order, Exponents exps,
                  const Rational& c) {
  if (exps.size() != num_params + 1) {
    throw DimensionError("exponent vector has wrong length");
  }
  Jet j(num_params, order);
  j.add_term(exps, c);
  return j;
}

Rational Jet::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Jet::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  if (static_cast<int>(total_degree(e)) > order_) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Jet Jet::truncated(int order) const {
  Jet out(num_params_, std::min(order, order_));
  for (const auto& [e, c] : terms_) {
    if (static_cast<int>(total_degree(e)) > out.order_) break;
    out.terms_.emplace_hint(out.terms_.end(), e, c);
  }
  return out;
}

Jet Jet::homogeneous_part(unsigned degree) const {
  Jet out(num_params_, order_);
  for (const auto& [e, c] : terms_) {
    const unsigned d = total_degree(e);
    if (d == degree) out.terms_.emplace_hint(out.terms_.end(), e, c);
    if (d > degree) break;
  }
  return out;
}

std::optional<unsigned> Jet::lowest_degree() const {
  if (terms_.empty()) return std::nullopt;
  return total_degree(terms_.begin()->first);
}

Jet Jet::restricted_to_x_zero() const {
  Jet out(num_params_, order_);
  for (const auto& [e, c] : terms_) {
    if (e[0] == 0) out.terms_.emplace_hint(out.terms_.end(), e, c);
  }
  return out;
}

Jet Jet::operator-() const {
  Jet out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

void Jet::require_same_params(const Jet& b, const char* op) const {
  if (num_params_ != b.num_params_) {
    throw DimensionError(std::string(op) + ": jets have " +
                         std::to_string(num_params_) + " and " +
                         std::to_string(b.num_params_) + " parameters");
  }
}

Jet& Jet::operator+=(const Jet& b) {
  require_same_params(b, "add");
  if (b.order_ < order_) *this = truncated(b.order_);
  for (const auto& [e, c] : b.terms_) add_term(e, c);
  return *this;
}

Jet& Jet::operator-=(const Jet& b) {
  require_same_params(b, "subtract");
  if (b.order_ < order_) *this = truncated(b.order_);
  for (const auto& [e, c] : b.terms_) add_term(e, -c);
  return *this;
}

Jet& Jet::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Jet mul_to_order(const Jet& a, const Jet& b, int order) {
  if (a.num_params() != b.num_params()) {
    throw DimensionError("multiply: jets have different parameter counts");
  }
  Jet out(a.num_params(), order);
  if (a.is_zero() || b.is_zero()) return out;
  Exponents e(a.num_vars());
  for (const auto& [ea, ca] : a.terms()) {
    const int da = static_cast<int>(total_degree(ea));
    if (da > order) break;
    for (const auto& [eb, cb] : b.terms()) {
      if (da + static_cast<int>(total_degree(eb)) > order) break;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Jet operator*(const Jet& a, const Jet& b) {
  return mul_to_order(a, b, std::min(a.order(), b.order()));
}

bool operator==(const Jet& a, const Jet& b) {
  return a.num_params_ == b.num_params_ && a.terms_ == b.terms_;
}

Jet add(const Jet& a, const Jet& b) { return a + b; }
Jet mul(const Jet& a, const Jet& b) { return a * b; }
Jet scale(const Jet& a, const Rational& c) { return a * c; }

Jet power(const Jet& a, unsigned e) {
  Jet out = Jet::constant(a.num_params(), a.order(), Rational(1));
  for (unsigned i = 0; i < e; ++i) out = out * a;
  return out;
}

Jet partial_derivative(const Jet& a, std::size_t var) {
  if (var > a.num_params()) throw DimensionError("variable index out of range");
  Jet out(a.num_params(), a.order() - 1);
  for (const auto& [e, c] : a.terms()) {
    if (e[var] == 0) continue;
    Exponents d = e;
    --d[var];
    out.add_term(d, c * e[var]);
  }
  return out;
}

Jet integrate_in_x(const Jet& a) {
  Jet out(a.num_params(), a.order() + 1);
  for (const auto& [e, c] : a.terms()) {
    Exponents d = e;
    ++d[0];
    out.add_term(d, c / Rational(d[0]));
  }
  return out;
}

namespace {

bool divides(const Exponents& small, const Exponents& big) {
  for (std::size_t i = 0; i < small.size(); ++i) {
    if (small[i] > big[i]) return false;
  }
  return true;
}

// Exact division of a homogeneous polynomial by a homogeneous polynomial,
// cancelling leading terms (first in GradedOrder) one at a time.
std::optional<Jet> divide_homogeneous(Jet r, const Jet& h, int order) {
  Jet q(r.num_params(), order);
  const auto& [lead_exp, lead_coef] = *h.terms().begin();
  while (!r.is_zero()) {
    const auto& [re, rc] = *r.terms().begin();
    if (!divides(lead_exp, re)) return std::nullopt;
    Exponents t = re;
    for (std::size_t i = 0; i < t.size(); ++i) t[i] -= lead_exp[i];
    const Rational tc = rc / lead_coef;
    q.add_term(t, tc);
    Jet step = Jet::monomial(r.num_params(), r.order(), t, tc);
    r -= mul_to_order(step, h, r.order());
  }
  return q;
}

}  // namespace

std::optional<Jet> divide(const Jet& a, const Jet& b) {
  if (a.num_params() != b.num_params()) {
    throw DimensionError("divide: jets have different parameter counts");
  }
  if (b.is_zero()) throw DivisionByZeroError("divide: divisor is zero");

  const int known = std::min(a.order(), b.order());
  const unsigned d = *b.lowest_degree();
  const int q_order = known - static_cast<int>(d);
  const Jet pivot_part = b.homogeneous_part(d);

  Jet residual = a.truncated(known);
  if (auto low = residual.lowest_degree(); low && *low < d) return std::nullopt;

  Jet q(a.num_params(), q_order);
  for (int k = 0; k <= q_order; ++k) {
    const Jet r = residual.homogeneous_part(d + static_cast<unsigned>(k));
    if (r.is_zero()) continue;
    auto qk = divide_homogeneous(r, pivot_part, known);
    if (!qk) return std::nullopt;
    q += qk->truncated(q_order);
    residual -= mul_to_order(*qk, b, known);
  }
  if (!residual.is_zero()) return std::nullopt;
  if (!(mul_to_order(q, b, known) == a.truncated(known))) return std::nullopt;
  return q;
}

Jet substitute(const Jet& a,
               const std::vector<std::pair<std::size_t, Jet>>& assignments) {
  const std::size_t nv = a.num_vars();
  std::vector<std::optional<Jet>> images(nv);
  int order = a.order();
  for (const auto& [var, image] : assignments) {
    if (var >= nv) throw DimensionError("substitute: variable out of range");
    if (image.num_params() != a.num_params()) {
      throw DimensionError("substitute: image has wrong parameter count");
    }
    if (value_at_origin(image) != 0) {
      throw NotAGermError("substitute: image of variable " +
                          std::to_string(var) +
                          " has a nonzero constant term");
    }
    images[var] = image;
    order = std::min(order, image.order());
  }
  for (std::size_t v = 0; v < nv; ++v) {
    if (!images[v]) images[v] = Jet::variable(a.num_params(), order, v);
  }

  // powers[v][k] = images[v]^k, built lazily.
  std::vector<std::vector<Jet>> powers(nv);
  auto pow_of = [&](std::size_t v, unsigned k) -> const Jet& {
    auto& list = powers[v];
    if (list.empty()) list.push_back(Jet::constant(a.num_params(), order, 1));
    while (list.size() <= k) {
      list.push_back(mul_to_order(list.back(), *images[v], order));
    }
    return list[k];
  };

  Jet out(a.num_params(), order);
  for (const auto& [e, c] : a.terms()) {
    if (static_cast<int>(total_degree(e)) > order) break;
    Jet term = Jet::constant(a.num_params(), order, c);
    for (std::size_t v = 0; v < nv && !term.is_zero(); ++v) {
      if (e[v] > 0) term = mul_to_order(term, pow_of(v, e[v]), order);
    }
    out += term;
  }
  return out;
}

Rational value_at_origin(const Jet& a) {
  return a.coefficient(Exponents(a.num_vars(), 0));
}

std::vector<Rational> gradient_at_origin(const Jet& a) {
  std::vector<Rational> g(a.num_vars());
  for (std::size_t v = 0; v < a.num_vars(); ++v) {
    Exponents e(a.num_vars(), 0);
    e[v] = 1;
    g[v] = a.coefficient(e);
  }
  return g;
}

Rational derivative_at_origin(const Jet& a, std::size_t var, unsigned k) {
  Exponents e(a.num_vars(), 0);
  e[var] = k;
  Rational f = 1;
  for (unsigned i = 2; i <= k; ++i) f *= i;
  return f * a.coefficient(e);
}

std::optional<unsigned> order_in(const Jet& a, std::size_t var) {
  for (const auto& [e, c] : a.terms()) {
    bool pure = true;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (v != var && e[v] != 0) pure = false;
    }
    if (pure) return e[var];
  }
  return std::nullopt;
}

std::optional<unsigned> total_order(const Jet& a) { return a.lowest_degree(); }

std::vector<std::string> default_variable_names(std::size_t num_params) {
  std::vector<std::string> names{"x"};
  for (std::size_t i = 1; i <= num_params; ++i) {
    names.push_back("y" + std::to_string(i));
  }
  return names;
}

std::string to_string(const Jet& a) {
  return to_string(a, default_variable_names(a.num_params()));
}

std::string to_string(const Jet& a, const std::vector<std::string>& names) {
  if (a.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : a.terms()) {
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;

    bool wrote = false;
    const bool is_const = total_degree(e) == 0;
    if (mag != 1 || is_const) {
      out << mag.get_str();
      wrote = true;
    }
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (wrote) out << "*";
      out << names.at(v);
      if (e[v] > 1) out << "^" << e[v];
      wrote = true;
    }
  }
  return out.str();
}

}  // namespace frontcalc
