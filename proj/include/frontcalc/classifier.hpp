#pragma once

/**
 * Recognition criteria for pedal-type and normalized Legendrian germs.
 *
 * Legendrian side: with LJ the Legendrian-Jacobian, let k be the smallest
 * order with d^k LJ/dx^k (0,0) != 0. k = 0 is a non-singular germ. For
 * k >= 1 the germ is of Legendrian A_{k+1} type (k = 1 cusp, k = 2
 * swallowtail) exactly when LJ, dLJ/dx, ..., d^{k-1}LJ/dx^{k-1} have linearly
 * independent differentials at the origin. Everything here is unchanged when
 * LJ is multiplied by a unit, so the unnormalized Jacobian is used directly.
 *
 * Pedal side: with p the second component, p(0,0) != 0 or dp/dx(0,0) != 0
 * give a non-singular germ. Otherwise p is reduced by the Morse lemma with
 * parameters to x^2 + q(y) up to sign, and dq(0) != 0 characterises the
 * (Whitney umbrella) x R^{n-1}; for one parameter the vanishing order of q
 * gives the S_k type.
 */

#include <frontcalc/germ_calculus.hpp>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace frontcalc {

enum class Verdict {
  NonSingular,
  CuspCrossRn,
  SwallowtailCrossRn1,
  LegendrianA,
  Sk,
  WhitneyUmbrellaCrossRn1,
  UndeterminedAtTruncation,
  NotApplicable,
};

/// How classify_pedal_type reached its verdict.
enum class PedalRoute { None, NonZeroValue, FoldOfP, Morse };

std::string to_string(Verdict v);
std::string to_string(PedalRoute r);

struct Evidence {
  std::string criterion;
  std::vector<Rational> values;
  std::optional<std::size_t> rank;
  std::optional<unsigned> order;
  std::string note;

  friend bool operator==(const Evidence&, const Evidence&) = default;
};

struct ClassificationReport {
  Verdict verdict = Verdict::NotApplicable;
  /// m of Legendrian A_m (k+1); set for cusp (2) and swallowtail (3) too.
  unsigned a_index = 0;
  unsigned sk_index = 0;
  int sk_sign = 0;
  /// S_k with odd k+1: the two signs are equivalent via y -> -y.
  bool sign_identified = false;
  PedalRoute route = PedalRoute::None;
  /// False when the input was outside the classifier's domain.
  bool precondition_met = true;
  /// Set when the local-algebra oracle was consulted.
  std::optional<bool> oracle_agrees;
  std::vector<Evidence> evidence;

  /// e.g. "SwallowtailCrossRn-1", "LegendrianA(4)", "Sk(2, +)".
  std::string label() const;

  friend bool operator==(const ClassificationReport&,
                         const ClassificationReport&) = default;
};

struct MorseReduction {
  /// xi(y) with dp/dx(xi(y), y) = 0 and xi(0) = 0.
  Jet critical_path;
  /// q(y) = p(xi(y), y).
  Jet reduced_q;
  /// Sign of d^2p/dx^2(0,0).
  int leading_sign;
};

Outcome<MorseReduction> morse_reduce(const Jet& p);

ClassificationReport classify_pedal_type(const MapGerm& phi,
                                         const PedalFactorization& factors);
/// Factorizes first; NotApplicable with precondition_met = false when
/// `phi` is not of pedal unfolding type.
ClassificationReport classify_pedal_type(const MapGerm& phi);

struct LegendrianOptions {
  /// Cross-check the rank test against the truncated local algebra.
  bool run_oracle = false;
};

/// NotApplicable with precondition_met = false unless Phi is a normalized
/// Legendrian germ.
ClassificationReport classify_legendrian(const MapGerm& Phi,
                                         LegendrianOptions options = {});

/// The criterion applied to a given Legendrian-Jacobian jet.
ClassificationReport classify_legendrian_jacobian(const Jet& lj,
                                                  LegendrianOptions options = {});

struct PropositionCheck {
  bool predicted = false;
  ClassificationReport classified;
  bool consistent() const {
    return predicted == (classified.verdict == Verdict::SwallowtailCrossRn1);
  }
};

/// Builds (a x^4 + x^2 sum b_i y_i, c x^3 + x sum d_i y_i, y), evaluates the
/// coefficient condition (2 a d_i = 3 b_i c for all i, and a b_i c d_i != 0
/// for some i) and classifies the germ.
PropositionCheck check_proposition_application(const Rational& a,
                                               std::span<const Rational> b,
                                               const Rational& c,
                                               std::span<const Rational> d,
                                               int order = 6);

struct PipelineStage {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ArnoldReport {
  std::vector<PipelineStage> stages;
  std::optional<MapGerm> substituted;
  std::optional<PedalFactorization> factors;
  std::optional<ClassificationReport> pedal;
  std::optional<ClassificationReport> legendrian;

  bool ok() const;
  /// Name of the first failing stage, empty when all passed.
  std::string failed_stage() const;
};

/// Tangent developable of (x^4, x^3, x^2): substitution y <- (y - x^2)/2,
/// then D, pedal classification, and Legendrian classification.
ArnoldReport check_arnold_observation(int order = Jet::kDefaultOrder);

}  // namespace frontcalc
