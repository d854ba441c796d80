#include <frontcalc/polynomial_parser.hpp>

#include <cctype>
#include <cmath>

namespace frontcalc {

namespace {

struct Poly {
  std::size_t nv;
  Polynomial terms;

  static Poly constant(std::size_t nv, const Rational& c) {
    Poly p{nv, {}};
    if (c != 0) p.terms.emplace(Exponents(nv, 0), c);
    return p;
  }

  void add(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }

  Poly operator+(const Poly& b) const {
    Poly out = *this;
    for (const auto& [e, c] : b.terms) out.add(e, c);
    return out;
  }
  Poly operator-() const {
    Poly out = *this;
    for (auto& [e, c] : out.terms) c = -c;
    return out;
  }
  Poly operator*(const Poly& b) const {
    Poly out{nv, {}};
    Exponents e(nv);
    for (const auto& [ea, ca] : terms) {
      for (const auto& [eb, cb] : b.terms) {
        for (std::size_t i = 0; i < nv; ++i) e[i] = ea[i] + eb[i];
        out.add(e, ca * cb);
      }
    }
    return out;
  }
  bool is_constant() const {
    return terms.empty() ||
           (terms.size() == 1 && total_degree(terms.begin()->first) == 0);
  }
  Rational constant_value() const {
    return terms.empty() ? Rational(0) : terms.begin()->second;
  }
};

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& names,
         const std::map<std::string, std::size_t>& aliases)
      : text_(text), names_(names), aliases_(aliases) {}

  Polynomial run() {
    skip_space();
    if (at_end()) fail("empty expression");
    Poly p = expr();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + peek() + "'");
    return p.terms;
  }

 private:
  Poly expr() {
    Poly acc = term();
    for (;;) {
      skip_space();
      if (match('+')) {
        acc = acc + term();
      } else if (match('-')) {
        acc = acc + -term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = factor();
    for (;;) {
      skip_space();
      if (match('*')) {
        acc = acc * factor();
      } else if (peek() == '/') {
        const std::size_t at = pos_;
        ++pos_;
        Poly d = factor();
        if (!d.is_constant()) fail_at("division by a non-constant", at);
        if (d.constant_value() == 0) fail_at("division by zero", at);
        acc = acc * Poly::constant(names_.size(), 1 / d.constant_value());
      } else {
        return acc;
      }
    }
  }

  Poly factor() {
    skip_space();
    if (match('-')) return -factor();
    if (match('+')) return factor();
    Poly base = primary();
    skip_space();
    if (match('^')) {
      skip_space();
      const std::size_t at = pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) {
        fail("exponent must be a non-negative integer");
      }
      unsigned long e = 0;
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        e = e * 10 + static_cast<unsigned long>(text_[pos_++] - '0');
        if (e > 10000) fail_at("exponent too large", at);
      }
      Poly out = Poly::constant(names_.size(), 1);
      for (unsigned long i = 0; i < e; ++i) out = out * base;
      return out;
    }
    return base;
  }

  Poly primary() {
    skip_space();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      skip_space();
      if (!match(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      return Poly::constant(names_.size(), number());
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t at = pos_;
      std::string id;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') {
        id.push_back(text_[pos_++]);
      }
      std::size_t var = names_.size();
      for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == id) var = i;
      }
      if (auto it = aliases_.find(id); var == names_.size() && it != aliases_.end()) {
        var = it->second;
      }
      if (var == names_.size()) fail_at("unknown variable '" + id + "'", at);
      Poly p{names_.size(), {}};
      Exponents e(names_.size(), 0);
      e[var] = 1;
      p.terms.emplace(std::move(e), Rational(1));
      return p;
    }
    if (at_end()) fail("unexpected end of expression");
    fail(std::string("unexpected '") + c + "'");
  }

  Rational number() {
    std::string digits;
    std::size_t frac = 0;
    bool dot = false;
    const std::size_t at = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.') {
      if (peek() == '.') {
        if (dot) fail("malformed number");
        dot = true;
      } else {
        digits.push_back(peek());
        if (dot) ++frac;
      }
      ++pos_;
    }
    if (digits.empty()) fail_at("malformed number", at);
    mpz_class num(digits, 10);
    mpz_class den = 1;
    for (std::size_t i = 0; i < frac; ++i) den *= 10;
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  bool match(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const std::string& what) { fail_at(what, pos_); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t at) {
    throw ParseError(what, at + 1);
  }

  std::string_view text_;
  const std::vector<std::string>& names_;
  const std::map<std::string, std::size_t>& aliases_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text,
                            const std::vector<std::string>& variable_names) {
  const std::map<std::string, std::size_t> no_aliases;
  return Parser(text, variable_names, no_aliases).run();
}

Polynomial parse_polynomial(std::string_view text,
                            const std::vector<std::string>& variable_names,
                            const std::map<std::string, std::size_t>& aliases) {
  return Parser(text, variable_names, aliases).run();
}

Jet parse_jet(std::string_view text, std::size_t num_params, int order) {
  const auto names = default_variable_names(num_params);
  std::map<std::string, std::size_t> aliases;
  if (num_params == 1) aliases["y"] = 1;
  const Polynomial p = Parser(text, names, aliases).run();
  Jet j(num_params, order);
  for (const auto& [e, c] : p) j.add_term(e, c);
  return j;
}

double evaluate(const Polynomial& p, const std::vector<double>& point) {
  double sum = 0.0;
  for (const auto& [e, c] : p) {
    double term = c.get_d();
    for (std::size_t i = 0; i < e.size(); ++i) {
      term *= std::pow(point.at(i), static_cast<double>(e[i]));
    }
    sum += term;
  }
  return sum;
}

}  // namespace frontcalc
