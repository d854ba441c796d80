#include <frontcalc/germ_calculus.hpp>
#include <frontcalc/linear_algebra.hpp>

#include <algorithm>

namespace frontcalc {

std::string to_string(RejectReason r) {
  switch (r) {
    case RejectReason::NotDivisible:
      return "not-divisible";
    case RejectReason::IndeterminateFactor:
      return "indeterminate-factor";
    case RejectReason::DivisorVanishes:
      return "divisor-vanishes";
    case RejectReason::FactorNotZeroAtOrigin:
      return "factor-not-zero-at-origin";
    case RejectReason::FactorNotFold:
      return "factor-not-fold";
    case RejectReason::NotLegendrianRepresentable:
      return "not-Legendrian-representable";
    case RejectReason::NotMorse:
      return "not-Morse";
    case RejectReason::NotCritical:
      return "not-critical";
  }
  return "unknown";
}

MapGerm::MapGerm(std::vector<Jet> components)
    : components_(std::move(components)) {
  if (components_.size() < 3) {
    throw ShapeError("a map-germ needs at least three components");
  }
  const std::size_t n = components_.front().num_params();
  if (components_.size() != n + 2) {
    throw ShapeError("expected " + std::to_string(n + 2) +
                     " components for " + std::to_string(n) + " parameters");
  }
  int order = components_.front().order();
  for (const auto& c : components_) {
    if (c.num_params() != n) {
      throw ShapeError("components have different parameter counts");
    }
    order = std::min(order, c.order());
  }
  for (auto& c : components_) {
    if (c.order() != order) c = c.truncated(order);
  }
  unfolding_shape_ = true;
  for (std::size_t i = 1; i <= n; ++i) {
    if (!(components_[i + 1] == Jet::variable(n, order, i))) {
      unfolding_shape_ = false;
    }
  }
}

MapGerm MapGerm::unfolding(const Jet& phi1, const Jet& phi2) {
  if (phi1.num_params() != phi2.num_params()) {
    throw ShapeError("phi1 and phi2 have different parameter counts");
  }
  const std::size_t n = phi1.num_params();
  const int order = std::min(phi1.order(), phi2.order());
  std::vector<Jet> comps{phi1, phi2};
  for (std::size_t i = 1; i <= n; ++i) {
    comps.push_back(Jet::variable(n, order, i));
  }
  return MapGerm(std::move(comps));
}

Jet NormalField::squared_norm() const {
  Jet sum(components.front().num_params(), components.front().order());
  for (const auto& c : components) sum += c * c;
  return sum;
}

namespace {

void require_unfolding(const MapGerm& g, const char* op) {
  if (!g.has_unfolding_shape()) {
    throw ShapeError(std::string(op) +
                     ": germ is not of the form (phi1, phi2, y)");
  }
}

}  // namespace

Outcome<PedalFactorization> is_pedal_unfolding_type(const MapGerm& phi) {
  require_unfolding(phi, "is_pedal_unfolding_type");
  const Jet& p = phi.phi2();
  if (p.is_zero()) {
    if (phi.phi1().is_zero()) {
      return Rejection{RejectReason::IndeterminateFactor,
                       "phi1 and phi2 both vanish; n cannot be recovered"};
    }
    return Rejection{RejectReason::DivisorVanishes,
                     "phi2 vanishes identically but phi1 does not"};
  }
  auto n = divide(phi.phi1(), p);
  if (!n) {
    return Rejection{RejectReason::NotDivisible,
                     "phi1 is not a multiple of phi2 in the jet ring"};
  }
  if (value_at_origin(*n) != 0) {
    return Rejection{RejectReason::FactorNotZeroAtOrigin,
                     "n(0,0) = " + to_string(value_at_origin(*n))};
  }
  if (n->order() < 1 || derivative_at_origin(*n, 0, 1) == 0) {
    return Rejection{RejectReason::FactorNotFold, "dn/dx(0,0) = 0"};
  }
  return PedalFactorization{*n, p};
}

MapGerm integrate(const MapGerm& phi) {
  auto fac = is_pedal_unfolding_type(phi);
  if (!fac) {
    throw PreconditionError("integrate: not of pedal unfolding type (" +
                            to_string(fac.rejection().reason) + ": " +
                            fac.rejection().detail + ")");
  }
  return MapGerm::unfolding(integrate_in_x(phi.phi1()),
                            integrate_in_x(phi.phi2()));
}

MapGerm differentiate(const MapGerm& Phi, bool require_normalized) {
  require_unfolding(Phi, "differentiate");
  if (require_normalized && !is_normalized_legendrian(Phi).normalized()) {
    throw PreconditionError("differentiate: germ is not normalized Legendrian");
  }
  return MapGerm::unfolding(partial_derivative(Phi.phi1(), 0),
                            partial_derivative(Phi.phi2(), 0));
}

std::vector<Jet> orthogonality_residuals(const MapGerm& Phi,
                                         const NormalField& nu) {
  std::vector<Jet> out;
  const std::size_t nv = Phi.num_params() + 1;
  for (std::size_t var = 0; var < nv; ++var) {
    Jet dot(Phi.num_params(), Phi.order());
    for (std::size_t i = 0; i < Phi.components().size(); ++i) {
      dot += nu.components[i] * partial_derivative(Phi.component(i), var);
    }
    out.push_back(std::move(dot));
  }
  return out;
}

Outcome<NormalField> compute_normal_field(const MapGerm& Phi) {
  require_unfolding(Phi, "compute_normal_field");
  const std::size_t n = Phi.num_params();
  const Jet d1 = partial_derivative(Phi.phi1(), 0);
  const Jet d2 = partial_derivative(Phi.phi2(), 0);
  if (d2.is_zero()) {
    return Rejection{RejectReason::NotLegendrianRepresentable,
                     "dPhi2/dx vanishes identically"};
  }
  auto ratio = divide(d1, d2);
  if (!ratio) {
    return Rejection{RejectReason::NotLegendrianRepresentable,
                     "dPhi1/dx is not a multiple of dPhi2/dx"};
  }
  const Jet nu2 = -*ratio;
  NormalField nu;
  nu.components.push_back(Jet::constant(n, nu2.order(), 1));
  nu.components.push_back(nu2);
  for (std::size_t i = 1; i <= n; ++i) {
    nu.components.push_back(-partial_derivative(Phi.phi1(), i) -
                            nu2 * partial_derivative(Phi.phi2(), i));
  }
  for (const auto& r : orthogonality_residuals(Phi, nu)) {
    if (!r.is_zero()) {
      return Rejection{RejectReason::NotLegendrianRepresentable,
                       "orthogonality identity fails after re-substitution"};
    }
  }
  return nu;
}

LegendrianCheck is_normalized_legendrian(const MapGerm& Phi) {
  LegendrianCheck check;
  check.unfolding_shape = Phi.has_unfolding_shape();
  if (!check.unfolding_shape) {
    check.notes.push_back("germ is not of the form (phi1, phi2, y)");
    return check;
  }
  const std::size_t n = Phi.num_params();
  const Rational d2 = derivative_at_origin(Phi.phi2(), 0, 1);
  check.critical_in_x = d2 == 0;
  if (!check.critical_in_x) {
    check.notes.push_back("dPhi2/dx(0,0) = " + to_string(d2) +
                          " != 0: non-singular germ, criticality waived");
  }

  auto nu = compute_normal_field(Phi);
  check.normal_field_found = nu.ok();
  if (!nu) {
    check.notes.push_back(to_string(nu.rejection().reason) + ": " +
                          nu.rejection().detail);
    return check;
  }
  check.normal_field = *nu;

  check.normal_at_origin = true;
  for (std::size_t i = 1; i < nu->components.size(); ++i) {
    if (value_at_origin(nu->components[i]) != 0) {
      check.normal_at_origin = false;
    }
  }
  if (!check.normal_at_origin) {
    check.notes.push_back("nu(0,0) is not +dX1");
  }

  std::vector<std::vector<Rational>> rows;
  for (const auto& c : Phi.components()) rows.push_back(gradient_at_origin(c));
  for (const auto& c : nu->components) rows.push_back(gradient_at_origin(c));
  check.lift_rank = rank(rows);
  check.lift_immersive = check.lift_rank == n + 1;
  if (!check.lift_immersive) {
    check.notes.push_back("Legendrian lift has rank " +
                          std::to_string(check.lift_rank) + " < " +
                          std::to_string(n + 1));
  }
  return check;
}

Jet determinant(const std::vector<std::vector<Jet>>& m) {
  const std::size_t size = m.size();
  const Jet& probe = m.at(0).at(0);
  int order = probe.order();
  for (const auto& row : m) {
    for (const auto& e : row) order = std::min(order, e.order());
  }
  if (size == 1) return m[0][0];

  // Expand along the first column; rows are tracked by index lists.
  std::vector<std::size_t> rows(size);
  for (std::size_t i = 0; i < size; ++i) rows[i] = i;
  auto rec = [&](auto&& self, const std::vector<std::size_t>& live,
                 std::size_t col) -> Jet {
    Jet acc(probe.num_params(), order);
    if (col + 1 == size) {
      acc += m[live[0]][col];
      return acc;
    }
    for (std::size_t k = 0; k < live.size(); ++k) {
      const Jet& entry = m[live[k]][col];
      if (entry.is_zero()) continue;
      std::vector<std::size_t> rest;
      for (std::size_t j = 0; j < live.size(); ++j) {
        if (j != k) rest.push_back(live[j]);
      }
      Jet minor = self(self, rest, col + 1);
      if (minor.is_zero()) continue;
      Jet term = entry * minor;
      if (k % 2 == 0) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    return acc;
  };
  return rec(rec, rows, 0);
}

Jet legendrian_jacobian(const MapGerm& Phi, const NormalField& nu) {
  const std::size_t dim = Phi.components().size();
  const std::size_t nv = Phi.num_params() + 1;
  std::vector<std::vector<Jet>> m(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t var = 0; var < nv; ++var) {
      m[r].push_back(partial_derivative(Phi.component(r), var));
    }
    m[r].push_back(nu.components.at(r));
  }
  return determinant(m);
}

bool jacobian_identity_check(const MapGerm& Phi, const NormalField& nu) {
  const Jet lj = legendrian_jacobian(Phi, nu);
  Jet rhs = partial_derivative(Phi.phi2(), 0) * nu.squared_norm();
  if (Phi.num_params() % 2 == 0) rhs = -rhs;  // (-1)^(n+1)
  const int order = std::min(lj.order(), rhs.order());
  return lj.truncated(order) == rhs.truncated(order);
}

std::string to_string(const MapGerm& g) {
  std::string out = "(";
  for (std::size_t i = 0; i < g.components().size(); ++i) {
    if (i) out += ", ";
    out += to_string(g.component(i));
  }
  return out + ")";
}

}  // namespace frontcalc
