#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <frontcalc/classifier.hpp>
#include <frontcalc/local_algebra.hpp>
#include <frontcalc/normal_forms.hpp>
#include <frontcalc/sampling.hpp>

#include <array>

#include "helpers.hpp"

using namespace frontcalc;
using testing::germ;
using testing::J;

TEST_CASE("morse reduction") {
  auto a = morse_reduce(J("x^2 + y"));
  REQUIRE(a);
  CHECK(a->critical_path.is_zero());
  CHECK(a->reduced_q == J("y"));

  auto b = morse_reduce(J("x^2 + 2*x*y + y"));
  REQUIRE(b);
  CHECK(b->critical_path == J("-y"));
  CHECK(b->reduced_q == J("y - y^2"));
  // p is stationary in x along the path: sample p(xi + h, y) numerically.
  const double y = 0.01, xi = -y;
  for (double h : {1e-3, -1e-3}) {
    const double x = xi + h;
    const double p = x * x + 2 * x * y + y;
    const double p0 = xi * xi + 2 * xi * y + y;
    CHECK(p - p0 == doctest::Approx(h * h).epsilon(1e-9));
  }

  auto c = morse_reduce(J("3/2*(y - x^2)"));
  REQUIRE(c);
  CHECK(c->critical_path.is_zero());
  CHECK(c->reduced_q == J("3/2*y"));
  CHECK(c->leading_sign == -1);

  CHECK(morse_reduce(J("x^3 + y")).rejection().reason == RejectReason::NotMorse);
  CHECK(morse_reduce(J("x + y")).rejection().reason == RejectReason::NotCritical);

  // The critical path really is critical for a random Morse p.
  GermSampler sampler(17);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 1 + t % 3;
    const Jet p = sampler.pedal_type(n, 7, PedalStratum::Umbrella).factors.p_factor;
    auto m = morse_reduce(p);
    REQUIRE(m);
    const Jet g = partial_derivative(p, 0);
    CHECK(substitute(g, {{0, m->critical_path}}).is_zero());
    CHECK(value_at_origin(m->critical_path) == 0);
  }
}

TEST_CASE("pedal-type classification") {
  auto r = classify_pedal_type(s_k_normal_form(1, -1, 8));
  CHECK(r.label() == "Sk(1, -)");
  CHECK_FALSE(r.sign_identified);

  auto umbrella = classify_pedal_type(germ("12*x^3 + 2*x*y", "-12*x^2 - 2*y"));
  CHECK(umbrella.verdict == Verdict::WhitneyUmbrellaCrossRn1);
  CHECK(umbrella.route == PedalRoute::Morse);

  auto fold = classify_pedal_type(germ("6*x^2", "-6*x"));
  CHECK(fold.verdict == Verdict::NonSingular);
  CHECK(fold.route == PedalRoute::FoldOfP);

  auto value = classify_pedal_type(germ("x + x*y", "1 + y"));
  CHECK(value.verdict == Verdict::NonSingular);
  CHECK(value.route == PedalRoute::NonZeroValue);

  auto flat = classify_pedal_type(germ("x^3", "x^2", 1, 6));
  CHECK(flat.verdict == Verdict::UndeterminedAtTruncation);
  CHECK_FALSE(flat.evidence.empty());

  auto multi = classify_pedal_type(germ("x^3 + x*y1*y2", "x^2 + y1*y2", 2));
  CHECK(multi.verdict == Verdict::NotApplicable);
  CHECK(multi.precondition_met);

  auto outside = classify_pedal_type(germ("4*x^3 + 2*x*y", "3*x^2 + y"));
  CHECK(outside.verdict == Verdict::NotApplicable);
  CHECK_FALSE(outside.precondition_met);

  // Negative x^2 coefficient: the sign is read after normalizing it to +1.
  auto neg = classify_pedal_type(germ("-x^3 + x*y^2", "-x^2 + y^2"));
  CHECK(neg.label() == "Sk(1, -)");
}

TEST_CASE("S_k recognition") {
  for (unsigned k = 1; k <= 4; ++k) {
    for (int s : {1, -1}) {
      const auto r = classify_pedal_type(s_k_normal_form(k, s, 8));
      CHECK(r.verdict == Verdict::Sk);
      CHECK(r.sk_index == k);
      CHECK(r.sk_sign == s);
      CHECK(r.sign_identified == ((k + 1) % 2 == 1));
    }
  }
}

TEST_CASE("Legendrian classification of normal forms") {
  const Verdict expected[] = {Verdict::NonSingular, Verdict::CuspCrossRn,
                              Verdict::SwallowtailCrossRn1, Verdict::LegendrianA,
                              Verdict::LegendrianA, Verdict::LegendrianA};
  for (std::size_t n = 1; n <= 4; ++n) {
    for (unsigned k = 0; k <= 5 && k <= n + 1; ++k) {
      const auto r =
          classify_legendrian(legendrian_a_normal_form(k, n, 8), {.run_oracle = true});
      CHECK(r.verdict == expected[k]);
      if (k >= 1) {
        CHECK(r.a_index == k + 1);
        CHECK(r.oracle_agrees == true);
      }
    }
  }
  CHECK(classify_legendrian(germ("2*x^3", "-3*x^2")).verdict == Verdict::CuspCrossRn);
  const auto na = classify_legendrian(germ("x^4 + x^2*y", "x^3 + x*y"));
  CHECK(na.verdict == Verdict::NotApplicable);
  CHECK_FALSE(na.precondition_met);
}

TEST_CASE("rank deficiency and truncation in the Legendrian criterion") {
  // LJ = x^2 + y^2: k = 2 but d(LJ)(0) = 0.
  const auto r = classify_legendrian_jacobian(J("x^2 + y^2"), {.run_oracle = true});
  CHECK(r.verdict == Verdict::NotApplicable);
  CHECK(r.oracle_agrees == true);
  const auto u = classify_legendrian_jacobian(J("y", 1, 4));
  CHECK(u.verdict == Verdict::UndeterminedAtTruncation);
}

TEST_CASE("unit and sign invariance of the Legendrian criterion") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + t % 3;
    const unsigned k = static_cast<unsigned>(t % 3);
    const Jet lj = legendrian_a_differential_factors(k + 1, std::max<std::size_t>(n, k), 7)
                       .p_factor +
                   testing::random_jet(rng, std::max<std::size_t>(n, k), 7, 3, 3);
    Jet unit = testing::random_jet(rng, lj.num_params(), 7, 3, 1);
    unit += Jet::constant(lj.num_params(), 7, 1 + static_cast<long>(rng() % 3));
    const auto base = classify_legendrian_jacobian(lj);
    CHECK(classify_legendrian_jacobian(unit * lj).verdict == base.verdict);
    CHECK(classify_legendrian_jacobian(-lj).verdict == base.verdict);
  }
}

TEST_CASE("truncated local algebra") {
  CHECK(monomials_below(2, 3).size() == 6);
  const std::vector<Jet> xy = {J("x", 1, 5), J("y", 1, 5)};
  CHECK(truncated_quotient_dimension(xy, 1, 4) == 1);
  const std::vector<Jet> x2y = {J("x^2", 1, 5), J("y", 1, 5)};
  CHECK(truncated_quotient_dimension(x2y, 1, 4) == 2);
  const std::vector<Jet> none;
  CHECK(truncated_quotient_dimension(none, 1, 3) == 6);
  CHECK(model_quotient_dimension(2, 1, 4) == 1);
  CHECK(model_quotient_dimension(1, 2, 3) == 6);
  // A unit times a generator spans the same ideal.
  const std::vector<Jet> unit_x = {J("x + x*y + x^2", 1, 5), J("y - x^2", 1, 5)};
  CHECK(truncated_quotient_dimension(unit_x, 1, 4) == 1);
}

TEST_CASE("proposition application") {
  const std::array<Rational, 1> b{Rational(1)}, d{Rational(-2)};
  const auto worked = check_proposition_application(3, b, -4, d);
  CHECK(worked.predicted);
  CHECK(worked.classified.verdict == Verdict::SwallowtailCrossRn1);

  const std::array<Rational, 1> one{Rational(1)};
  const auto ones = check_proposition_application(1, one, 1, one);
  CHECK_FALSE(ones.predicted);
  CHECK(ones.consistent());

  const std::array<Rational, 2> b2{Rational(2), Rational(-1)}, d2{Rational(5), Rational(3)};
  const auto zero_a = check_proposition_application(0, b2, 7, d2);
  CHECK_FALSE(zero_a.predicted);
  CHECK(zero_a.consistent());

  GermSampler sampler(31);
  for (int t = 0; t < 200; ++t) {
    const auto tuple = sampler.proposition_tuple(1 + t % 3);
    CHECK(check_proposition_application(tuple.a, tuple.b, tuple.c, tuple.d).consistent());
  }
}

TEST_CASE("Arnold observation pipeline") {
  const ArnoldReport report = check_arnold_observation();
  CHECK(report.ok());
  CHECK(report.failed_stage().empty());
  REQUIRE(report.substituted);
  CHECK(*report.substituted == germ("-x^4 + 2*x^2*y", "-1/2*x^3 + 3/2*x*y"));
  REQUIRE(report.factors);
  CHECK(report.factors->n_factor == J("8/3*x"));
  REQUIRE(report.legendrian);
  CHECK(report.legendrian->verdict == Verdict::SwallowtailCrossRn1);
}

TEST_CASE("calculus correspondence on random pedal germs") {
  GermSampler sampler(41);
  for (int t = 0; t < 80; ++t) {
    const std::size_t n = 1 + t % 3;
    const PedalSample s = sampler.pedal_type(n, 7);
    const auto pedal = classify_pedal_type(s.phi, s.factors);
    const auto leg = classify_legendrian(integrate(s.phi));
    CHECK((pedal.verdict == Verdict::WhitneyUmbrellaCrossRn1) ==
          (leg.verdict == Verdict::SwallowtailCrossRn1));
    CHECK((pedal.route == PedalRoute::FoldOfP) == (leg.verdict == Verdict::CuspCrossRn));
    CHECK((pedal.route == PedalRoute::NonZeroValue) ==
          (leg.verdict == Verdict::NonSingular));
  }
}

TEST_CASE("report labels") {
  ClassificationReport r;
  r.verdict = Verdict::LegendrianA;
  r.a_index = 4;
  CHECK(r.label() == "LegendrianA(4)");
  r.verdict = Verdict::Sk;
  r.sk_index = 2;
  r.sk_sign = 1;
  CHECK(r.label() == "Sk(2, +)");
  r.verdict = Verdict::SwallowtailCrossRn1;
  CHECK(r.label() == "SwallowtailCrossRn-1");
  CHECK(to_string(Verdict::WhitneyUmbrellaCrossRn1) == "WhitneyUmbrellaCrossRn-1");
}
