#include <frontcalc/sampling.hpp>

namespace frontcalc {

int GermSampler::uniform(int lo, int hi) {
  // Own mapping rather than std::uniform_int_distribution, whose output is
  // not specified across standard libraries.
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(rng_() % span);
}

Rational GermSampler::small_rational(int max_num, int max_den, bool nonzero) {
  int num = 0;
  do {
    num = uniform(-max_num, max_num);
  } while (nonzero && num == 0);
  Rational r(num, uniform(1, max_den));
  r.canonicalize();
  return r;
}

Jet GermSampler::sparse_jet(std::size_t num_params, int order,
                            unsigned min_degree, unsigned max_degree,
                            std::size_t terms) {
  Jet j(num_params, order);
  for (std::size_t t = 0; t < terms; ++t) {
    const unsigned deg = static_cast<unsigned>(
        uniform(static_cast<int>(min_degree), static_cast<int>(max_degree)));
    Exponents e(num_params + 1, 0);
    for (unsigned k = 0; k < deg; ++k) {
      ++e[static_cast<std::size_t>(uniform(0, static_cast<int>(num_params)))];
    }
    j += Jet::monomial(num_params, order, e, small_rational());
  }
  return j;
}

PedalSample GermSampler::pedal_type(std::size_t n, int order,
                                    PedalStratum stratum) {
  if (stratum == PedalStratum::Any) {
    stratum = static_cast<PedalStratum>(uniform(0, 3));
  }
  const Jet x = Jet::variable(n, order, 0);
  Jet nf = small_rational(4, 3, true) * x + sparse_jet(n, order, 1, 3, 3);
  // Keep dn/dx(0,0) away from the random linear part.
  nf -= derivative_at_origin(nf, 0, 1) * x;
  nf += small_rational(4, 3, true) * x;

  Jet p(n, order);
  switch (stratum) {
    case PedalStratum::NonZeroValue:
      p = Jet::constant(n, order, small_rational(4, 3, true)) +
          sparse_jet(n, order, 1, 3, 3);
      break;
    case PedalStratum::Fold:
      p = small_rational(4, 3, true) * x + sparse_jet(n, order, 2, 3, 3);
      for (std::size_t i = 1; i <= n; ++i) {
        p += small_rational() * Jet::variable(n, order, i);
      }
      break;
    case PedalStratum::Umbrella:
    case PedalStratum::Degenerate: {
      p = small_rational(4, 3, true) * (x * x) + sparse_jet(n, order, 2, 4, 3);
      // The sparse part may cancel the x^2 term.
      Exponents xx(n + 1, 0);
      xx[0] = 2;
      if (p.coefficient(xx) == 0) {
        p += Jet::monomial(n, order, xx, small_rational(4, 3, true));
      }
      if (stratum == PedalStratum::Umbrella) {
        const std::size_t i = static_cast<std::size_t>(uniform(1, int(n)));
        p += small_rational(4, 3, true) * Jet::variable(n, order, i);
      }
      break;
    }
    case PedalStratum::Any:
      break;
  }
  const MapGerm phi = MapGerm::unfolding(nf * p, p);
  return {phi, {nf.truncated(phi.order()), p.truncated(phi.order())}, stratum};
}

MapGerm GermSampler::legendrian_candidate(std::size_t n, int order) {
  const Jet x = Jet::variable(n, order, 0);
  // dPhi2/dx with zero constant term.
  Jet q(n, order);
  while (q.is_zero()) q = sparse_jet(n, order - 1, 1, 3, 4);
  Jet h = small_rational(4, 3, true) * x + sparse_jet(n, order - 1, 1, 3, 3);
  h -= derivative_at_origin(h, 0, 1) * x;
  h += small_rational(4, 3, true) * x;
  const Jet phi2 = integrate_in_x(q);
  const Jet phi1 = integrate_in_x(-(h * q));
  return MapGerm::unfolding(phi1, phi2);
}

PropositionTuple GermSampler::proposition_tuple(std::size_t n) {
  PropositionTuple t;
  const int strategy = uniform(0, 4);
  t.a = small_rational();
  t.c = small_rational();
  for (std::size_t i = 0; i < n; ++i) {
    t.b.push_back(small_rational());
    t.d.push_back(small_rational());
  }
  switch (strategy) {
    case 0:  // satisfied with a, c != 0
    case 1: {
      t.a = small_rational(4, 3, true);
      t.c = small_rational(4, 3, true);
      for (std::size_t i = 0; i < n; ++i) {
        t.d[i] = 3 * t.b[i] * t.c / (2 * t.a);
      }
      break;
    }
    case 2: {  // satisfied except one index
      t.a = small_rational(4, 3, true);
      t.c = small_rational(4, 3, true);
      for (std::size_t i = 0; i < n; ++i) {
        t.d[i] = 3 * t.b[i] * t.c / (2 * t.a);
      }
      const std::size_t j = static_cast<std::size_t>(uniform(0, int(n) - 1));
      t.d[j] += small_rational(4, 3, true);
      break;
    }
    case 3: {  // a or c zero: the equation holds only for some d
      if (uniform(0, 1) == 0) {
        t.a = 0;
        for (auto& b : t.b) b = uniform(0, 1) ? Rational(0) : b;
      } else {
        t.c = 0;
        for (auto& d : t.d) d = uniform(0, 1) ? Rational(0) : d;
      }
      break;
    }
    default:  // unconstrained
      break;
  }
  return t;
}

}  // namespace frontcalc
