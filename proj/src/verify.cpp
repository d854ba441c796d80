#include <frontcalc/classifier.hpp>
#include <frontcalc/normal_forms.hpp>
#include <frontcalc/sampling.hpp>
#include <frontcalc/verify.hpp>

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace frontcalc {

bool SuiteResult::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckLine& c) { return c.passed; });
}

namespace {

std::string tuple_text(const PropositionTuple& t) {
  auto list = [](const std::vector<Rational>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
      s += (i ? ", " : "") + to_string(v[i]);
    }
    return s + ")";
  };
  return "a=" + to_string(t.a) + " b=" + list(t.b) + " c=" + to_string(t.c) +
         " d=" + list(t.d);
}

Verdict expected_gk(unsigned k) {
  switch (k) {
    case 0:
      return Verdict::NonSingular;
    case 1:
      return Verdict::CuspCrossRn;
    case 2:
      return Verdict::SwallowtailCrossRn1;
    default:
      return Verdict::LegendrianA;
  }
}

}  // namespace

SuiteResult verify_proposition(const VerifyOptions& options) {
  SuiteResult out{"proposition", {}};
  {
    const std::array<Rational, 1> b{Rational(1)}, d{Rational(-2)};
    const auto check = check_proposition_application(3, b, -4, d);
    out.checks.push_back(
        {check.predicted && check.consistent(),
         "instance a=3 b=1 c=-4 d=-2: predicted " +
             std::string(check.predicted ? "swallowtail" : "not swallowtail") +
             ", classified " + check.classified.label()});
  }
  GermSampler sampler(options.seed ^ 0x70726f70ULL);
  for (std::size_t n = 1; n <= 3; ++n) {
    std::size_t predicted = 0, mismatches = 0;
    std::string first_mismatch;
    for (std::size_t t = 0; t < options.trials; ++t) {
      const PropositionTuple tuple = sampler.proposition_tuple(n);
      const auto check =
          check_proposition_application(tuple.a, tuple.b, tuple.c, tuple.d);
      if (check.predicted) ++predicted;
      if (!check.consistent()) {
        if (mismatches++ == 0) {
          first_mismatch = "; first mismatch " + tuple_text(tuple) + " -> " +
                           check.classified.label();
        }
      }
    }
    out.checks.push_back(
        {mismatches == 0,
         "n=" + std::to_string(n) + ": " + std::to_string(options.trials) +
             " tuples, " + std::to_string(predicted) +
             " predicted swallowtail, " + std::to_string(mismatches) +
             " mismatches" + first_mismatch});
  }
  return out;
}

SuiteResult verify_arnold() {
  SuiteResult out{"arnold", {}};
  const ArnoldReport report = check_arnold_observation();
  for (const auto& s : report.stages) {
    out.checks.push_back({s.passed, s.name + ": " + s.detail});
  }
  if (report.stages.empty()) out.checks.push_back({false, "no stages ran"});
  return out;
}

SuiteResult verify_gk_table() {
  SuiteResult out{"gk-table", {}};
  for (std::size_t n = 1; n <= 4; ++n) {
    for (unsigned k = 0; k <= 5 && k <= n + 1; ++k) {
      const MapGerm g = legendrian_a_normal_form(k, n, 8);
      const auto r = classify_legendrian(g, {.run_oracle = true});
      const bool verdict_ok =
          r.verdict == expected_gk(k) && (k < 1 || r.a_index == k + 1);
      const bool oracle_ok = k == 0 || r.oracle_agrees.value_or(false);
      std::string text = "G" + std::to_string(k) + " n=" + std::to_string(n) +
                         " -> " + r.label();
      if (k >= 1) {
        text += oracle_ok ? " (local algebra agrees)"
                          : " (local algebra disagrees)";
      }
      out.checks.push_back({verdict_ok && oracle_ok, text});
    }
  }
  return out;
}

SuiteResult verify_roundtrip(const VerifyOptions& options) {
  SuiteResult out{"roundtrip", {}};
  GermSampler sampler(options.seed ^ 0x726f756eULL);

  std::size_t di_fail = 0, identity_fail = 0;
  std::string di_detail;
  for (std::size_t t = 0; t < options.trials; ++t) {
    const std::size_t n = 1 + t % 3;
    const int order = 6 + static_cast<int>(t % 3);
    const PedalSample s = sampler.pedal_type(n, order);
    const MapGerm Phi = integrate(s.phi);
    if (!(differentiate(Phi) == s.phi)) {
      if (di_fail++ == 0) di_detail = "; first failure " + to_string(s.phi);
    }
    if (auto nf = compute_normal_field(Phi); !nf || !jacobian_identity_check(Phi, *nf)) {
      ++identity_fail;
    }
  }
  out.checks.push_back({di_fail == 0, "D(I(phi)) = phi on " +
                                          std::to_string(options.trials) +
                                          " pedal-type germs, " +
                                          std::to_string(di_fail) +
                                          " failures" + di_detail});
  out.checks.push_back(
      {identity_fail == 0, "Legendrian-Jacobian identity on the same " +
                            std::to_string(options.trials) + " images, " +
                            std::to_string(identity_fail) + " failures"});

  std::size_t id_fail = 0, rejected = 0;
  std::string id_detail;
  for (std::size_t t = 0; t < options.trials; ++t) {
    const std::size_t n = 1 + t % 3;
    const int order = 6 + static_cast<int>(t % 3);
    MapGerm Phi = sampler.legendrian_candidate(n, order);
    while (!is_normalized_legendrian(Phi).normalized()) {
      ++rejected;
      Phi = sampler.legendrian_candidate(n, order);
    }
    const MapGerm back = integrate(differentiate(Phi, true));
    if (!(back == Phi)) {
      if (id_fail++ == 0) id_detail = "; first failure " + to_string(Phi);
    }
  }
  out.checks.push_back(
      {id_fail == 0, "I(D(Phi)) = Phi on " + std::to_string(options.trials) +
                         " normalized Legendrian germs (" +
                         std::to_string(rejected) + " candidates resampled), " +
                         std::to_string(id_fail) + " failures" + id_detail});
  return out;
}

std::vector<SuiteResult> run_verify(const std::string& suite,
                                    const VerifyOptions& options) {
  if (suite == "proposition") return {verify_proposition(options)};
  if (suite == "arnold") return {verify_arnold()};
  if (suite == "gk-table") return {verify_gk_table()};
  if (suite == "roundtrip") return {verify_roundtrip(options)};
  if (suite == "all") {
    return {verify_proposition(options), verify_arnold(), verify_gk_table(),
            verify_roundtrip(options)};
  }
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

void print_suite(const SuiteResult& suite, std::ostream& out) {
  out << "== " << suite.name << " ==\n";
  for (const auto& c : suite.checks) {
    out << (c.passed ? "[PASS] " : "[FAIL] ") << c.text << '\n';
  }
  out << suite.name << ": " << (suite.ok() ? "PASS" : "FAIL") << '\n';
}

}  // namespace frontcalc
