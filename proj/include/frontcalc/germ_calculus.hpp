#pragma once

/**
 * Map-germs (R x R^n, 0) -> (R^2 x R^n, 0) in unfolding form
 * (Phi1, Phi2, y1, ..., yn), and the calculus between the two classes the
 * library works with:
 *
 *  - germs of pedal unfolding type, (n*p, p, y) with n(0,0) = 0 and
 *    dn/dx(0,0) != 0;
 *  - normalized Legendrian germs, whose normal field at the origin is +dX1.
 *
 * `integrate` takes the first class to the second by integrating the first
 * two components in x from 0; `differentiate` goes back by taking d/dx.
 *
 * Normal fields are kept unnormalized with first component identically 1,
 * so everything stays rational. The Legendrian-Jacobian computed from such a
 * field is the true one times the positive unit |nu|.
 */

#include <frontcalc/jet.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace frontcalc {

/// Malformed germ (wrong number of components, mixed parameter counts, or a
/// germ that is not in unfolding form where one is required).
class ShapeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was applied to a germ outside its domain.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class RejectReason {
  NotDivisible,
  IndeterminateFactor,
  DivisorVanishes,
  FactorNotZeroAtOrigin,
  FactorNotFold,
  NotLegendrianRepresentable,
  NotMorse,
  NotCritical,
};

std::string to_string(RejectReason r);

struct Rejection {
  RejectReason reason;
  std::string detail;
};

/// Either a value or the reason it could not be produced.
template <class T>
class Outcome {
 public:
  Outcome(T value) : data_(std::move(value)) {}
  Outcome(Rejection r) : data_(std::move(r)) {}

  bool ok() const { return std::holds_alternative<T>(data_); }
  explicit operator bool() const { return ok(); }
  const T& value() const { return std::get<T>(data_); }
  const T& operator*() const { return value(); }
  const T* operator->() const { return &value(); }
  const Rejection& rejection() const { return std::get<Rejection>(data_); }

 private:
  std::variant<T, Rejection> data_;
};

class MapGerm {
 public:
  /// n+2 components in n+1 variables; all are truncated to the lowest order
  /// among them.
  explicit MapGerm(std::vector<Jet> components);

  /// (phi1, phi2, y1, ..., yn).
  static MapGerm unfolding(const Jet& phi1, const Jet& phi2);

  std::size_t num_params() const { return components_.front().num_params(); }
  int order() const { return components_.front().order(); }
  const std::vector<Jet>& components() const { return components_; }
  const Jet& component(std::size_t i) const { return components_.at(i); }
  const Jet& phi1() const { return components_[0]; }
  const Jet& phi2() const { return components_[1]; }

  /// True when components 3..n+2 are exactly y1..yn.
  bool has_unfolding_shape() const { return unfolding_shape_; }

  friend bool operator==(const MapGerm& a, const MapGerm& b) {
    return a.components_ == b.components_;
  }

 private:
  std::vector<Jet> components_;
  bool unfolding_shape_ = false;
};

/// Normal field along a germ with first component identically 1.
struct NormalField {
  std::vector<Jet> components;

  /// Sum of squares of the components; the squared length as a jet.
  Jet squared_norm() const;
};

struct PedalFactorization {
  Jet n_factor;
  Jet p_factor;
};

Outcome<PedalFactorization> is_pedal_unfolding_type(const MapGerm& phi);

/// Integration of a germ of pedal unfolding type. Throws PreconditionError
/// when `phi` is not of pedal unfolding type.
MapGerm integrate(const MapGerm& phi);

/// Componentwise d/dx of the first two components.
MapGerm differentiate(const MapGerm& Phi, bool require_normalized = false);

Outcome<NormalField> compute_normal_field(const MapGerm& Phi);

/// Dot products of the field with dPhi/dx and each dPhi/dy_i.
std::vector<Jet> orthogonality_residuals(const MapGerm& Phi,
                                         const NormalField& nu);

struct LegendrianCheck {
  bool unfolding_shape = false;
  /// dPhi2/dx(0,0) == 0.
  bool critical_in_x = false;
  bool normal_field_found = false;
  /// nu(0,0) = (1, 0, ..., 0).
  bool normal_at_origin = false;
  /// Rank of the Jacobian of (Phi, nu) at the origin equals n+1.
  bool lift_immersive = false;
  std::size_t lift_rank = 0;
  std::optional<NormalField> normal_field;
  std::vector<std::string> notes;

  /// Shape, normal-field and lift conditions. The critical-in-x condition is
  /// recorded but not required: a germ with dPhi2/dx(0,0) != 0 is an
  /// immersion and counts as a non-singular normalized germ.
  bool normalized() const {
    return unfolding_shape && normal_field_found && normal_at_origin &&
           lift_immersive;
  }
};

LegendrianCheck is_normalized_legendrian(const MapGerm& Phi);

/// det(dPhi/dx, dPhi/dy1, ..., dPhi/dyn, nu) with the unnormalized field.
Jet legendrian_jacobian(const MapGerm& Phi, const NormalField& nu);

/// Checks LJ = (-1)^(n+1) * dPhi2/dx * |nu|^2 as a jet identity.
bool jacobian_identity_check(const MapGerm& Phi, const NormalField& nu);

/// Determinant of a square matrix of jets (Laplace expansion, skipping zero
/// entries).
Jet determinant(const std::vector<std::vector<Jet>>& m);

std::string to_string(const MapGerm& g);

}  // namespace frontcalc
