// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <frontcalc/classifier.hpp>
#include <frontcalc/evolution.hpp>
#include <frontcalc/normal_forms.hpp>
#include <frontcalc/report_io.hpp>
#include <frontcalc/sampling.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

using namespace frontcalc;

namespace {

struct Outcome_ {
  bool ok = true;
  std::string detail;
};

Jet term(std::size_t n, int order, Exponents e, const Rational& c) {
  Jet j(n, order);
  j.add_term(e, c);
  return j;
}

// x^a * y_j^b (j = 0 means no y factor).
Exponents ex(std::size_t n, unsigned a, std::size_t j = 0, unsigned b = 0) {
  Exponents e(n + 1, 0);
  e[0] = a;
  if (j > 0) e[j] += b;
  return e;
}

Jet y(std::size_t n, int order, std::size_t j) { return Jet::variable(n, order, j); }

// G_k written out term by term.
MapGerm g_k(unsigned k, std::size_t n, int order) {
  Jet p1 = term(n, order, ex(n, k + 2), Rational(k + 1));
  Jet p2 = term(n, order, ex(n, k + 1), Rational(-int(k + 2)));
  for (unsigned j = 1; j + 1 <= k; ++j) {
    p1.add_term(ex(n, j + 1, j, 1), Rational(j));
    p2.add_term(ex(n, j, j, 1), Rational(-int(j + 1)));
  }
  return MapGerm::unfolding(p1, p2);
}

// Permutation expansion, used as a second determinant.
Jet leibniz_det(const std::vector<std::vector<Jet>>& m) {
  const std::size_t size = m.size();
  std::vector<std::size_t> perm(size);
  std::iota(perm.begin(), perm.end(), 0);
  Jet total = m[0][0] * Rational(0);
  do {
    int sign = 1;
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = i + 1; j < size; ++j) {
        if (perm[i] > perm[j]) sign = -sign;
      }
    }
    Jet prod = m[0][perm[0]];
    for (std::size_t i = 1; i < size && !prod.is_zero(); ++i) prod = prod * m[i][perm[i]];
    total += prod * Rational(sign);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// LJ by its definition and (-1)^(n+1) dPhi2/dx |nu|^2; both must agree with
// the library Jacobian.
bool jacobian_identity_holds(const MapGerm& Phi, std::string& why) {
  const auto nu = compute_normal_field(Phi);
  if (!nu) {
    why = "no normal field for " + to_string(Phi);
    return false;
  }
  const std::size_t n = Phi.num_params();
  std::vector<std::vector<Jet>> rows(n + 2);
  for (std::size_t r = 0; r < n + 2; ++r) {
    for (std::size_t v = 0; v <= n; ++v) {
      rows[r].push_back(partial_derivative(Phi.component(r), v));
    }
    rows[r].push_back(nu->components[r]);
  }
  const Jet lj_def = leibniz_det(rows);
  Jet sq = nu->components[0] * nu->components[0];
  for (std::size_t i = 1; i < nu->components.size(); ++i) {
    sq += nu->components[i] * nu->components[i];
  }
  const Jet rhs =
      partial_derivative(Phi.phi2(), 0) * sq * Rational(n % 2 == 1 ? 1 : -1);
  const Jet lib = legendrian_jacobian(Phi, *nu);
  if (!(lj_def == rhs) || !(lib == rhs) || !jacobian_identity_check(Phi, *nu)) {
    why = "identity fails for " + to_string(Phi);
    return false;
  }
  return true;
}

Outcome_ criterion1() {
  Outcome_ out;
  int checked = 0;
  for (unsigned k = 0; k <= 4; ++k) {
    for (int s : {1, -1}) {
      const int order = 8;
      const Jet nf = Jet::variable(1, order, 0);
      const Jet p = term(1, order, ex(1, 2), 1) + term(1, order, ex(1, 0, 1, k + 1), s);
      const MapGerm f = MapGerm::unfolding(nf * p, p);
      const MapGerm F = integrate(f);
      const Jet e1 = term(1, order, ex(1, 4), Rational(1, 4)) +
                     term(1, order, ex(1, 2, 1, k + 1), Rational(s, 2));
      const Jet e2 = term(1, order, ex(1, 3), Rational(1, 3)) +
                     term(1, order, ex(1, 1, 1, k + 1), Rational(s));
      ++checked;
      if (!(F.phi1() == e1) || !(F.phi2() == e2) || !(F.component(2) == y(1, order, 1))) {
        out.ok = false;
        out.detail += " I(f_" + std::to_string(k) + ") = " + to_string(F) + ";";
      }
    }
  }
  std::vector<std::pair<unsigned, std::size_t>> cases;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (unsigned k = 0; k <= 5 && k <= n + 1; ++k) cases.push_back({k, n});
  }
  cases.push_back({5, 4});
  for (auto [k, n] : cases) {
    const int order = 8;
    const MapGerm G = g_k(k, n, order);
    Jet p = term(n, order, ex(n, k), Rational(-int((k + 2) * (k + 1))));
    for (unsigned j = 1; j + 1 <= k; ++j) {
      p.add_term(ex(n, j - 1, j, 1), Rational(-int(j * (j + 1))));
    }
    const Jet nx = term(n, order, ex(n, 1), -1);
    const MapGerm D = differentiate(G);
    const auto factors = is_pedal_unfolding_type(D);
    ++checked;
    const bool good = factors && factors->n_factor == nx && factors->p_factor == p &&
                      D.phi1() == nx * p && D.phi2() == p &&
                      legendrian_a_normal_form(k, n, order) == G;
    if (!good) {
      out.ok = false;
      out.detail += " D(G_" + std::to_string(k) + "), n=" + std::to_string(n) + ";";
    }
  }
  if (out.ok) {
    out.detail = std::to_string(checked) + " operator identities (G_k for k <= n+1)";
  }
  return out;
}

Outcome_ criterion2() {
  Outcome_ out;
  GermSampler sampler(2024);
  int di = 0, id = 0, resampled = 0;
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + t % 3;
    const PedalSample s = sampler.pedal_type(n, 7);
    if (!(differentiate(integrate(s.phi)) == s.phi)) {
      out.ok = false;
      out.detail += " D(I(phi)) != phi for " + to_string(s.phi) + ";";
    }
    ++di;
  }
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + t % 3;
    MapGerm Phi = sampler.legendrian_candidate(n, 7);
    while (!is_normalized_legendrian(Phi).normalized()) {
      ++resampled;
      Phi = sampler.legendrian_candidate(n, 7);
    }
    bool vanishes = true;
    for (std::size_t i = 0; i < 2; ++i) {
      vanishes = vanishes && Phi.component(i).restricted_to_x_zero().is_zero();
    }
    if (!vanishes) {
      out.ok = false;
      out.detail += " sample does not vanish on x = 0;";
    }
    if (!(integrate(differentiate(Phi)) == Phi)) {
      out.ok = false;
      out.detail += " I(D(Phi)) != Phi for " + to_string(Phi) + ";";
    }
    ++id;
  }
  if (out.ok) {
    out.detail = std::to_string(di) + " D.I and " + std::to_string(id) +
                 " I.D round trips exact (" + std::to_string(resampled) +
                 " non-normalized draws resampled)";
  }
  return out;
}

Outcome_ criterion3() {
  Outcome_ out;
  std::vector<MapGerm> corpus;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (unsigned k = 0; k <= 5 && k <= n + 1; ++k) corpus.push_back(g_k(k, n, 8));
    corpus.push_back(swallowtail_normal_form(n, 8));
  }
  for (unsigned k = 1; k <= 4; ++k) {
    for (int s : {1, -1}) corpus.push_back(legendrian_s_k_normal_form(k, s, 8));
  }
  GermSampler sampler(31337);
  for (int t = 0; t < 200; ++t) {
    corpus.push_back(integrate(sampler.pedal_type(1 + t % 3, 6).phi));
  }
  std::string why;
  for (const auto& Phi : corpus) {
    if (!jacobian_identity_holds(Phi, why)) {
      out.ok = false;
      out.detail += " " + why + ";";
      break;
    }
  }
  if (out.ok) out.detail = std::to_string(corpus.size()) + " germs, exact";
  return out;
}

Outcome_ criterion4() {
  Outcome_ out;
  int checked = 0;
  std::vector<std::pair<unsigned, std::size_t>> cases;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (unsigned k = 0; k <= 5 && k <= n + 1; ++k) cases.push_back({k, n});
  }
  cases.push_back({5, 4});
  for (auto [k, n] : cases) {
    const auto r = classify_legendrian(g_k(k, n, 8), {.run_oracle = true});
    Verdict want = k == 0   ? Verdict::NonSingular
                   : k == 1 ? Verdict::CuspCrossRn
                   : k == 2 ? Verdict::SwallowtailCrossRn1
                            : Verdict::LegendrianA;
    bool good = r.precondition_met && r.verdict == want;
    if (k >= 1) good = good && r.a_index == k + 1;
    if (k >= 1) good = good && r.oracle_agrees.value_or(false);
    ++checked;
    if (!good) {
      out.ok = false;
      out.detail += " G_" + std::to_string(k) + ", n=" + std::to_string(n) + " -> " +
                    r.label() + ";";
    }
  }
  if (out.ok) {
    out.detail = std::to_string(checked) +
                 " G_k cases, oracle agrees on every singular one (k > n+1 skipped)";
  }
  return out;
}

Outcome_ criterion5() {
  Outcome_ out;
  auto predicted = [](const PropositionTuple& t) {
    bool all = true, some = false;
    for (std::size_t i = 0; i < t.b.size(); ++i) {
      all = all && 2 * t.a * t.d[i] == 3 * t.b[i] * t.c;
      some = some || (t.a * t.b[i] * t.c * t.d[i] != 0);
    }
    return all && some;
  };
  auto run = [&](const PropositionTuple& t, int& positive) {
    const auto check = check_proposition_application(t.a, t.b, t.c, t.d);
    const bool want = predicted(t);
    positive += want;
    const bool got = check.classified.verdict == Verdict::SwallowtailCrossRn1;
    return want == got && check.predicted == want;
  };
  int positive = 0, mismatches = 0, total = 0;
  const PropositionTuple worked{3, {1}, -4, {-2}};
  if (!run(worked, positive) || positive != 1) {
    out.ok = false;
    out.detail += " a=3, b=1, c=-4, d=-2 is not a swallowtail;";
  }
  GermSampler sampler(0x5eed);
  for (std::size_t n = 1; n <= 3; ++n) {
    for (int t = 0; t < 1000; ++t) {
      ++total;
      if (!run(sampler.proposition_tuple(n), positive)) ++mismatches;
    }
  }
  if (mismatches > 0) out.ok = false;
  out.detail += " " + std::to_string(total) + " tuples, " + std::to_string(positive) +
                " predicted swallowtail, " + std::to_string(mismatches) + " mismatches";
  return out;
}

Outcome_ criterion6() {
  Outcome_ out;
  const ArnoldReport r = check_arnold_observation();
  const int order = Jet::kDefaultOrder;
  const Jet e1 = term(1, order, ex(1, 4), -1) + term(1, order, ex(1, 2, 1, 1), 2);
  const Jet e2 = term(1, order, ex(1, 3), Rational(-1, 2)) +
                 term(1, order, ex(1, 1, 1, 1), Rational(3, 2));
  if (!r.substituted || !(r.substituted->phi1() == e1) ||
      !(r.substituted->phi2() == e2) ||
      !(r.substituted->component(2) == y(1, order, 1))) {
    out.ok = false;
    out.detail = "substitution gives " +
                 (r.substituted ? to_string(*r.substituted) : std::string("nothing"));
    return out;
  }
  if (!r.ok() || !r.legendrian ||
      r.legendrian->verdict != Verdict::SwallowtailCrossRn1) {
    out.ok = false;
    out.detail = "pipeline failed at " + r.failed_stage();
    return out;
  }
  out.detail = "substitution exact, D -> " + r.pedal->label() + ", verdict " +
               r.legendrian->label();
  return out;
}

Outcome_ criterion7() {
  Outcome_ out;
  for (unsigned k = 1; k <= 4; ++k) {
    for (int s : {1, -1}) {
      const int order = 8;
      const Jet p = term(1, order, ex(1, 2), 1) + term(1, order, ex(1, 0, 1, k + 1), s);
      const MapGerm f = MapGerm::unfolding(Jet::variable(1, order, 0) * p, p);
      const auto r = classify_pedal_type(f);
      const std::string want =
          "Sk(" + std::to_string(k) + ", " + (s > 0 ? "+" : "-") + ")";
      const bool odd = (k + 1) % 2 == 1;
      const std::string text = human_report({"pedal", r});
      const bool noted = text.find("equivalent") != std::string::npos;
      if (r.label() != want || r.sk_index != k || r.sk_sign != s ||
          r.sign_identified != odd || noted != odd || !(s_k_normal_form(k, s, order) == f)) {
        out.ok = false;
        out.detail += " f_{" + std::to_string(k) + "," + (s > 0 ? "+" : "-") + "} -> " +
                      r.label() + ";";
      }
    }
  }
  if (out.ok) out.detail = "k = 1..4 both signs, sign identification noted for k = 2, 4";
  return out;
}

Outcome_ criterion8() {
  Outcome_ out;
  std::ostringstream d;
  const auto grid = uniform_grid(-1.5, 1.5, 2001);

  double center_err = 0;
  for (double R : {1.0, 2.5}) {
    const Vec2 c{0.3, -0.2};
    const ArcLengthCurve circle = arc_length_reparametrize(circle_curve(R, c));
    for (double s : grid) {
      const Vec2 r = circle.curve.point(s);
      center_err = std::max(center_err, norm(pedal_point(r, circle.curve.d1(s), c) - r));
    }
  }

  double cardioid_err = 0;
  {
    const ArcLengthCurve circle = arc_length_reparametrize(circle_curve(1));
    const Vec2 P{1, 0};
    for (double s : grid) {
      const Vec2 want = P + (1 - std::cos(s)) * Vec2{std::cos(s), std::sin(s)};
      cardioid_err = std::max(
          cardioid_err, norm(pedal_point(circle.curve.point(s), circle.curve.d1(s), P) - want));
    }
  }

  double wf_err = 0, ortho = 0;
  const ArcLengthCurve circle = arc_length_reparametrize(circle_curve(1));
  {
    const auto w = wavefront_evolve(circle.curve, {0, 0}, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      wf_err = std::max(wf_err, norm(w.wf[i] - Vec2{std::sin(grid[i]), 1 - std::cos(grid[i])}));
    }
  }
  const ArcLengthCurve ellipse = arc_length_reparametrize(ellipse_curve(2, 1));
  const ArcLengthCurve parabola = arc_length_reparametrize(parabola_curve(0.5));
  double ratio_lo = 1e300, ratio_hi = 0;
  const auto coarse = uniform_grid(-1.5, 1.5, 25);
  for (const auto* arc : {&circle, &ellipse, &parabola}) {
    for (Vec2 P : {Vec2{0, 0}, Vec2{1, 0}, Vec2{0.4, -0.7}}) {
      const auto w = wavefront_evolve(arc->curve, P, grid);
      for (std::size_t i = 0; i < grid.size(); ++i) {
        ortho = std::max(ortho, std::abs(dot(w.ped[i] - P, w.tangent[i])));
      }
      const double ratio = convergence_ratio(arc->curve, P, coarse);
      ratio_lo = std::min(ratio_lo, ratio);
      ratio_hi = std::max(ratio_hi, ratio);
    }
  }
  // Family runs through the same path.
  const auto fam = family_evolve(circle.curve, parse_pedal_path("1 + u; 0.5*u", 1), grid,
                                 grid_product({uniform_grid(-0.2, 0.2, 5)}));
  for (const auto& m : fam.members) {
    if (!m.error.empty()) {
      out.ok = false;
      d << " family member failed: " << m.error << ';';
      continue;
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
      ortho = std::max(ortho, std::abs(dot(m.trace.ped[i] - m.P, m.trace.tangent[i])));
    }
  }

  out.ok = out.ok && center_err <= 1e-12 && cardioid_err <= 1e-6 && wf_err <= 1e-8 &&
           ortho <= 1e-8 && ratio_lo >= 12 && ratio_hi <= 20;
  d << " center " << center_err << ", cardioid " << cardioid_err << ", wf " << wf_err
    << ", orthogonality " << ortho << ", ratio [" << ratio_lo << ", " << ratio_hi << "]";
  out.detail = d.str();
  return out;
}

Outcome_ criterion9() {
  Outcome_ out;
  GermSampler sampler(99);
  int umbrellas = 0, folds = 0, mismatches = 0;
  const PedalStratum strata[] = {PedalStratum::Umbrella, PedalStratum::Fold,
                                 PedalStratum::Degenerate, PedalStratum::NonZeroValue,
                                 PedalStratum::Any};
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + t % 3;
    const PedalSample s = sampler.pedal_type(n, 7, strata[t % 5]);
    const auto pedal = classify_pedal_type(s.phi, s.factors);
    const auto leg = classify_legendrian(integrate(s.phi));
    const bool umbrella = pedal.verdict == Verdict::WhitneyUmbrellaCrossRn1;
    const bool swallowtail = leg.verdict == Verdict::SwallowtailCrossRn1;
    const bool fold = pedal.route == PedalRoute::FoldOfP;
    const bool cusp = leg.verdict == Verdict::CuspCrossRn;
    umbrellas += umbrella;
    folds += fold;
    if (umbrella != swallowtail || fold != cusp) {
      ++mismatches;
      if (mismatches <= 3) {
        out.detail += " " + to_string(s.phi) + ": " + pedal.label() + " vs " +
                      leg.label() + ";";
      }
    }
  }
  out.ok = mismatches == 0 && umbrellas > 0 && folds > 0;
  out.detail += " 200 germs, " + std::to_string(umbrellas) + " umbrellas, " +
                std::to_string(folds) + " folds, " + std::to_string(mismatches) +
                " mismatches";
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    std::function<Outcome_()> run;
    double budget;
  };
  const std::vector<Criterion> criteria = {
      {criterion1, 1},  {criterion2, 10}, {criterion3, 10},
      {criterion4, 5},  {criterion5, 30}, {criterion6, 1},
      {criterion7, 1},  {criterion8, 30}, {criterion9, 20},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome_ r;
    try {
      r = criteria[i].run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > criteria[i].budget) {
      r.ok = false;
      r.detail += " (over the " + std::to_string(int(criteria[i].budget)) + "s budget)";
    }
    std::ostringstream t;
    t.precision(3);
    t << std::fixed << secs;
    std::cout << "criterion " << i + 1 << ": " << (r.ok ? "PASS" : "FAIL") << " ("
              << t.str() << "s)" << (r.detail.empty() || r.detail[0] == ' ' ? "" : " ")
              << r.detail << '\n';
    failed += !r.ok;
  }
  return failed == 0 ? 0 : 1;
}
