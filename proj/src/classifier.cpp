#include <frontcalc/classifier.hpp>
#include <frontcalc/linear_algebra.hpp>
#include <frontcalc/local_algebra.hpp>
#include <frontcalc/normal_forms.hpp>

#include <algorithm>

namespace frontcalc {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::NonSingular:
      return "NonSingular";
    case Verdict::CuspCrossRn:
      return "CuspCrossRn";
    case Verdict::SwallowtailCrossRn1:
      return "SwallowtailCrossRn-1";
    case Verdict::LegendrianA:
      return "LegendrianA";
    case Verdict::Sk:
      return "Sk";
    case Verdict::WhitneyUmbrellaCrossRn1:
      return "WhitneyUmbrellaCrossRn-1";
    case Verdict::UndeterminedAtTruncation:
      return "UndeterminedAtTruncation";
    case Verdict::NotApplicable:
      return "NotApplicable";
  }
  return "NotApplicable";
}

std::string to_string(PedalRoute r) {
  switch (r) {
    case PedalRoute::None:
      return "none";
    case PedalRoute::NonZeroValue:
      return "nonzero-value";
    case PedalRoute::FoldOfP:
      return "fold-of-p";
    case PedalRoute::Morse:
      return "morse";
  }
  return "none";
}

std::string ClassificationReport::label() const {
  switch (verdict) {
    case Verdict::LegendrianA:
      return "LegendrianA(" + std::to_string(a_index) + ")";
    case Verdict::Sk:
      return "Sk(" + std::to_string(sk_index) + ", " +
             (sk_sign > 0 ? "+" : "-") + ")";
    default:
      return to_string(verdict);
  }
}

Outcome<MorseReduction> morse_reduce(const Jet& p) {
  if (value_at_origin(p) != 0) {
    return Rejection{RejectReason::NotCritical,
                     "p(0,0) = " + to_string(value_at_origin(p))};
  }
  if (derivative_at_origin(p, 0, 1) != 0) {
    return Rejection{RejectReason::NotCritical,
                     "dp/dx(0,0) = " + to_string(derivative_at_origin(p, 0, 1))};
  }
  const Rational curvature = derivative_at_origin(p, 0, 2);
  if (curvature == 0 || p.order() < 2) {
    return Rejection{RejectReason::NotMorse, "d2p/dx2(0,0) = 0"};
  }

  // Fixed-slope Newton iteration for dp/dx(xi(y), y) = 0; each pass fixes
  // at least one more y-degree of xi.
  const Jet g = partial_derivative(p, 0);
  const std::size_t n = p.num_params();
  Jet xi(n, g.order());
  const Rational inv = 1 / curvature;
  for (int pass = 0; pass <= g.order() + 1; ++pass) {
    const Jet residual = substitute(g, {{0, xi}});
    if (residual.is_zero()) break;
    xi -= residual * inv;
  }
  if (!substitute(g, {{0, xi}}).is_zero()) {
    return Rejection{RejectReason::NotMorse,
                     "critical path iteration did not settle"};
  }
  Jet q = substitute(p, {{0, xi}});
  return MorseReduction{xi, q, sign(curvature)};
}

namespace {

Evidence value_evidence(std::string criterion, std::vector<Rational> values,
                        std::string note = {}) {
  return Evidence{std::move(criterion), std::move(values), std::nullopt,
                  std::nullopt, std::move(note)};
}

ClassificationReport not_applicable(std::string criterion, std::string note) {
  ClassificationReport r;
  r.precondition_met = false;
  r.evidence.push_back(value_evidence(std::move(criterion), {}, std::move(note)));
  return r;
}

}  // namespace

ClassificationReport classify_pedal_type(const MapGerm& phi,
                                         const PedalFactorization& factors) {
  ClassificationReport report;
  const Jet& p = factors.p_factor;
  const std::size_t n = phi.num_params();

  const Rational p0 = value_at_origin(p);
  report.evidence.push_back(value_evidence("p(0,0)", {p0}));
  if (p0 != 0) {
    report.verdict = Verdict::NonSingular;
    report.route = PedalRoute::NonZeroValue;
    return report;
  }
  const Rational px = derivative_at_origin(p, 0, 1);
  report.evidence.push_back(value_evidence("dp/dx(0,0)", {px}));
  if (px != 0) {
    report.verdict = Verdict::NonSingular;
    report.route = PedalRoute::FoldOfP;
    report.evidence.back().note = "fold of p; integration is a cusp";
    return report;
  }

  report.route = PedalRoute::Morse;
  auto morse = morse_reduce(p);
  if (!morse) {
    report.verdict = Verdict::NotApplicable;
    report.evidence.push_back(value_evidence(
        "morse-reduction", {derivative_at_origin(p, 0, 2)},
        to_string(morse.rejection().reason) + ": " + morse.rejection().detail));
    return report;
  }
  const Jet& q = morse->reduced_q;
  report.evidence.push_back(value_evidence(
      "morse-reduction", {Rational(morse->leading_sign)},
      "xi = " + to_string(morse->critical_path) + ", q = " + to_string(q)));

  auto grad = gradient_at_origin(q);
  std::vector<Rational> dq(grad.begin() + 1, grad.end());
  const bool umbrella =
      std::any_of(dq.begin(), dq.end(), [](const Rational& v) { return v != 0; });
  report.evidence.push_back(value_evidence("dq(0)", dq));
  if (umbrella) {
    report.verdict = Verdict::WhitneyUmbrellaCrossRn1;
    return report;
  }

  if (q.is_zero()) {
    report.verdict = Verdict::UndeterminedAtTruncation;
    Evidence e = value_evidence("order of q", {},
                                "q vanishes up to the truncation order");
    e.order = static_cast<unsigned>(std::max(q.order(), 0));
    report.evidence.push_back(std::move(e));
    return report;
  }
  if (n != 1) {
    report.verdict = Verdict::NotApplicable;
    report.evidence.push_back(value_evidence(
        "order of q", {}, "S_k recognition needs a single parameter"));
    return report;
  }

  const auto ord = order_in(q, 1);
  if (!ord) {
    // q has only mixed terms, which cannot happen for n = 1.
    report.verdict = Verdict::UndeterminedAtTruncation;
    return report;
  }
  Exponents e(2, 0);
  e[1] = *ord;
  const int lead_sign = sign(q.coefficient(e));
  report.verdict = Verdict::Sk;
  report.sk_index = *ord - 1;
  report.sk_sign = morse->leading_sign * lead_sign;
  report.sign_identified = (*ord % 2) == 1;
  Evidence oe = value_evidence("order of q", {q.coefficient(e)},
                               report.sign_identified
                                   ? "odd order: signs identified by y -> -y"
                                   : "even order: signs distinct");
  oe.order = *ord;
  report.evidence.push_back(std::move(oe));
  return report;
}

ClassificationReport classify_pedal_type(const MapGerm& phi) {
  auto factors = is_pedal_unfolding_type(phi);
  if (!factors) {
    return not_applicable("pedal-unfolding-type",
                          to_string(factors.rejection().reason) + ": " +
                              factors.rejection().detail);
  }
  return classify_pedal_type(phi, *factors);
}

ClassificationReport classify_legendrian_jacobian(const Jet& lj,
                                                  LegendrianOptions options) {
  ClassificationReport report;
  const std::size_t n = lj.num_params();
  const int known = lj.order();

  std::optional<unsigned> first;
  std::vector<Rational> x_derivs;
  for (int k = 0; k <= known; ++k) {
    const Rational v = derivative_at_origin(lj, 0, static_cast<unsigned>(k));
    x_derivs.push_back(v);
    if (v != 0) {
      first = static_cast<unsigned>(k);
      break;
    }
  }
  Evidence de = value_evidence("d^k LJ/dx^k(0,0), k = 0, 1, ...", x_derivs);
  if (!first) {
    report.verdict = Verdict::UndeterminedAtTruncation;
    de.order = static_cast<unsigned>(std::max(known, 0));
    de.note = "all x-derivatives vanish up to the truncation order";
    report.evidence.push_back(std::move(de));
    return report;
  }
  const unsigned k = *first;
  de.order = k;
  report.evidence.push_back(std::move(de));
  if (k == 0) {
    report.verdict = Verdict::NonSingular;
    return report;
  }

  std::vector<Jet> gens{lj};
  for (unsigned j = 1; j < k; ++j) {
    gens.push_back(partial_derivative(gens.back(), 0));
  }
  if (gens.back().order() < 1) {
    report.verdict = Verdict::UndeterminedAtTruncation;
    Evidence e = value_evidence("rank test", {},
                                "differential of d^{k-1}LJ/dx^{k-1} is beyond "
                                "the truncation order");
    e.order = k;
    report.evidence.push_back(std::move(e));
    return report;
  }
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> flat;
  for (const auto& g : gens) {
    rows.push_back(gradient_at_origin(g));
    flat.insert(flat.end(), rows.back().begin(), rows.back().end());
  }
  const std::size_t r = rank(rows);
  Evidence re = value_evidence("rank of d(d^j LJ/dx^j)(0), j < k", flat);
  re.rank = r;
  re.order = k;
  report.evidence.push_back(std::move(re));

  const bool regular = r == k;
  if (regular) {
    report.a_index = k + 1;
    report.verdict = k == 1   ? Verdict::CuspCrossRn
                     : k == 2 ? Verdict::SwallowtailCrossRn1
                              : Verdict::LegendrianA;
  } else {
    report.verdict = Verdict::NotApplicable;
    report.evidence.back().note = "differentials dependent: not of type A_" +
                                  std::to_string(k + 1);
  }

  if (options.run_oracle) {
    int min_order = known;
    for (const auto& g : gens) min_order = std::min(min_order, g.order());
    const unsigned level =
        static_cast<unsigned>(std::clamp(min_order + 1, 0, 5));
    if (level >= 2) {
      const std::size_t dim = truncated_quotient_dimension(gens, n, level);
      const std::size_t model = model_quotient_dimension(k, n, level);
      report.oracle_agrees = regular == (dim == model);
      Evidence oe = value_evidence(
          "local-algebra dimension (ideal, model)",
          {Rational(static_cast<long>(dim)), Rational(static_cast<long>(model))},
          "truncated below degree " + std::to_string(level));
      oe.order = level;
      report.evidence.push_back(std::move(oe));
    }
  }
  return report;
}

ClassificationReport classify_legendrian(const MapGerm& Phi,
                                         LegendrianOptions options) {
  const LegendrianCheck check = is_normalized_legendrian(Phi);
  if (!check.normalized()) {
    std::string note;
    for (const auto& s : check.notes) note += (note.empty() ? "" : "; ") + s;
    return not_applicable("normalized-legendrian", note);
  }
  const Jet lj = legendrian_jacobian(Phi, *check.normal_field);
  ClassificationReport report = classify_legendrian_jacobian(lj, options);
  Evidence le = value_evidence("legendrian-lift rank", {});
  le.rank = check.lift_rank;
  report.evidence.insert(report.evidence.begin(), std::move(le));
  return report;
}

PropositionCheck check_proposition_application(const Rational& a,
                                               std::span<const Rational> b,
                                               const Rational& c,
                                               std::span<const Rational> d,
                                               int order) {
  PropositionCheck out;
  bool all_equal = true;
  bool some_nonzero = false;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (2 * a * d[i] != 3 * b[i] * c) all_equal = false;
    if (a * b[i] * c * d[i] != 0) some_nonzero = true;
  }
  out.predicted = all_equal && some_nonzero;
  out.classified = classify_legendrian(quartic_family(a, b, c, d, order));
  return out;
}

bool ArnoldReport::ok() const {
  return !stages.empty() &&
         std::all_of(stages.begin(), stages.end(),
                     [](const PipelineStage& s) { return s.passed; });
}

std::string ArnoldReport::failed_stage() const {
  for (const auto& s : stages) {
    if (!s.passed) return s.name;
  }
  return {};
}

ArnoldReport check_arnold_observation(int order) {
  ArnoldReport report;
  const Jet x = Jet::variable(1, order, 0);
  const Jet y = Jet::variable(1, order, 1);
  const Rational half(1, 2);

  // (x^4, x^3, x^2) + y (4x^2, 3x, 2)
  const MapGerm developable({power(x, 4) + 4 * (x * x * y),
                             power(x, 3) + 3 * (x * y), x * x + 2 * y});

  const Jet y_new = (y - x * x) * half;
  std::vector<Jet> comps;
  for (const auto& c : developable.components()) {
    comps.push_back(substitute(c, {{1, y_new}}));
  }
  const MapGerm tilde(std::move(comps));
  const MapGerm expected = MapGerm::unfolding(
      -power(x, 4) + 2 * (x * x * y),
      -half * power(x, 3) + Rational(3, 2) * (x * y));
  report.substituted = tilde;
  report.stages.push_back({"substitution", tilde == expected,
                           to_string(tilde)});
  if (!report.stages.back().passed) return report;

  const MapGerm diff = differentiate(tilde);
  auto factors = is_pedal_unfolding_type(diff);
  if (!factors) {
    report.stages.push_back({"pedal-factorization", false,
                             factors.rejection().detail});
    return report;
  }
  report.factors = *factors;
  const Jet expected_n = Rational(8, 3) * x;
  const Jet expected_p = Rational(3, 2) * (y - x * x);
  const int fo = factors->n_factor.order();
  const bool factors_match =
      factors->n_factor == expected_n.truncated(fo) &&
      factors->p_factor == expected_p.truncated(factors->p_factor.order());
  report.stages.push_back(
      {"pedal-factorization", factors_match,
       "n = " + to_string(factors->n_factor) +
           ", p = " + to_string(factors->p_factor)});
  if (!factors_match) return report;

  report.pedal = classify_pedal_type(diff, *factors);
  report.stages.push_back(
      {"pedal-classification",
       report.pedal->verdict == Verdict::WhitneyUmbrellaCrossRn1,
       report.pedal->label()});
  if (!report.stages.back().passed) return report;

  report.legendrian = classify_legendrian(tilde, {.run_oracle = true});
  report.stages.push_back(
      {"legendrian-classification",
       report.legendrian->verdict == Verdict::SwallowtailCrossRn1,
       report.legendrian->label()});
  if (!report.stages.back().passed) return report;

  const MapGerm back = integrate(diff);
  report.stages.push_back({"round-trip", back == tilde, to_string(back)});
  return report;
}

}  // namespace frontcalc
