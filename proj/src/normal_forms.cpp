#include <frontcalc/normal_forms.hpp>

#include <algorithm>
#include <stdexcept>

namespace frontcalc {

namespace {

Jet mono(std::size_t n, int order, unsigned x_exp, std::size_t y_index,
         unsigned y_exp, const Rational& c) {
  Exponents e(n + 1, 0);
  e[0] = x_exp;
  if (y_index > 0) e[y_index] += y_exp;
  return Jet::monomial(n, order, std::move(e), c);
}

}  // namespace

MapGerm legendrian_a_normal_form(unsigned k, std::size_t num_params,
                                 int order) {
  if (k > num_params + 1) {
    throw std::invalid_argument("G_k needs k <= n+1");
  }
  const std::size_t n = num_params;
  Jet phi1 = mono(n, order, k + 2, 0, 0, Rational(k + 1));
  Jet phi2 = mono(n, order, k + 1, 0, 0, -Rational(k + 2));
  for (unsigned j = 1; j + 1 <= k; ++j) {
    phi1 += mono(n, order, j + 1, j, 1, Rational(j));
    phi2 += mono(n, order, j, j, 1, -Rational(j + 1));
  }
  return MapGerm::unfolding(phi1, phi2);
}

PedalFactorization legendrian_a_differential_factors(unsigned k,
                                                     std::size_t num_params,
                                                     int order) {
  const std::size_t n = num_params;
  Jet nf = -Jet::variable(n, order, 0);
  Jet p = mono(n, order, k, 0, 0, -Rational((k + 2) * (k + 1)));
  for (unsigned j = 1; j + 1 <= k; ++j) {
    p += mono(n, order, j - 1, j, 1, -Rational(j * (j + 1)));
  }
  return {nf, p};
}

MapGerm s_k_normal_form(unsigned k, int sign, int order) {
  const Jet x = Jet::variable(1, order, 0);
  const Jet p = x * x + mono(1, order, 0, 1, k + 1, Rational(sign));
  return MapGerm::unfolding(x * p, p);
}

MapGerm legendrian_s_k_normal_form(unsigned k, int sign, int order) {
  const Rational s(sign);
  Jet phi1 = mono(1, order, 4, 0, 0, Rational(1, 4)) +
             mono(1, order, 2, 1, k + 1, s / 2);
  Jet phi2 = mono(1, order, 3, 0, 0, Rational(1, 3)) +
             mono(1, order, 1, 1, k + 1, s);
  return MapGerm::unfolding(phi1, phi2);
}

MapGerm swallowtail_normal_form(std::size_t num_params, int order) {
  return legendrian_a_normal_form(2, std::max<std::size_t>(num_params, 1),
                                  order);
}

MapGerm quartic_family(const Rational& a, std::span<const Rational> b,
                       const Rational& c, std::span<const Rational> d,
                       int order) {
  if (b.size() != d.size() || b.empty()) {
    throw std::invalid_argument("b and d must be nonempty and equally long");
  }
  const std::size_t n = b.size();
  Jet phi1 = mono(n, order, 4, 0, 0, a);
  Jet phi2 = mono(n, order, 3, 0, 0, c);
  for (std::size_t i = 0; i < n; ++i) {
    phi1 += mono(n, order, 2, i + 1, 1, b[i]);
    phi2 += mono(n, order, 1, i + 1, 1, d[i]);
  }
  return MapGerm::unfolding(phi1, phi2);
}

}  // namespace frontcalc
