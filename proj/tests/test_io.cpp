#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

#include <frontcalc/germ_file.hpp>
#include <frontcalc/report_io.hpp>

using namespace frontcalc;
using testing::germ;
using testing::J;

namespace {

std::pair<std::size_t, std::size_t> error_position(std::string_view text) {
  try {
    parse_germ_file(text);
  } catch (const GermFileError& e) {
    return {e.line(), e.column()};
  }
  return {0, 0};
}

}  // namespace

TEST_CASE("germ file parsing") {
  const GermFile f = parse_germ_file(
      "# swallowtail\n"
      "params = 1\n"
      "order = 8\n"
      "phi1 = 3*x^4 + x^2*y1   # trailing comment\n"
      "phi2 = -4*x^3 - 2*x*y\n");
  CHECK(f.params == 1);
  CHECK(f.order == 8);
  CHECK(f.germ == germ("3*x^4 + x^2*y1", "-4*x^3 - 2*x*y1", 1, 8));
  CHECK(f.germ.has_unfolding_shape());
  CHECK_FALSE(f.factors);

  const GermFile d = parse_germ_file("params = 2\nphi1 = x*y2\nphi2 = x^2 + y1\n");
  CHECK(d.order == Jet::kDefaultOrder);
  CHECK(d.germ.num_params() == 2);

  const GermFile np = parse_germ_file("params = 1\norder = 6\nn = x\np = x^2 + y^3\n");
  REQUIRE(np.factors);
  CHECK(np.factors->n_factor == J("x", 1, 6));
  CHECK(np.factors->p_factor == J("x^2 + y1^3", 1, 6));
  CHECK(np.germ == germ("x^3 + x*y1^3", "x^2 + y1^3", 1, 6));
}

TEST_CASE("germ file errors") {
  CHECK(error_position("params = 1\nphi1 = x\nphi3 = x\n") == std::pair<std::size_t, std::size_t>{3, 1});
  CHECK(error_position("params = 1\nphi1 = x^3 + * y\nphi2 = x\n").first == 2);
  CHECK(error_position("params = 1\nphi1 = x^3 + * y\nphi2 = x\n").second == 14);
  CHECK(error_position("params = 1\nphi1 = x\nphi1 = x\nphi2 = x\n").first == 3);
  CHECK(error_position("params = 1\nphi1 = x\nn = x\np = x\n").first > 0);
  CHECK(error_position("params = 0\nphi1 = x\nphi2 = x\n").first == 1);
  CHECK_THROWS_AS(parse_germ_file("params = 1\nphi1 = x\n"), GermFileError);
  CHECK(error_position("params = 1\norder = 0\nphi1 = x\nphi2 = x\n").first == 2);
  CHECK(error_position("params = 1\njunk line\n").first == 2);
  CHECK(error_position("params = 1\nphi1 = y2\nphi2 = x\n").first == 2);

  try {
    parse_germ_file("params = 2\nphi1 = 0\nphi2 = 0*x\n");
    FAIL("zero germ accepted");
  } catch (const GermFileError& e) {
    CHECK(std::string(e.what()).find("structural") != std::string::npos);
  }
  CHECK_THROWS_AS(read_germ_file("/nonexistent/file.germ"), GermFileError);
}

TEST_CASE("germ file round trip") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + trial % 3;
    Jet a = testing::random_jet(rng, n, 6, 5, 1);
    Jet b = testing::random_jet(rng, n, 6, 5, 1);
    if (a.is_zero() && b.is_zero()) b = Jet::variable(n, 6, 0);
    const MapGerm g = MapGerm::unfolding(a, b);
    const std::string text = emit_germ_file(g);
    const GermFile back = parse_germ_file(text);
    CHECK(back.germ == g);
    CHECK(emit_germ_file(back.germ) == text);
  }
}

TEST_CASE("report JSON") {
  const MapGerm g2 = germ("3*x^4 + x^2*y1", "-4*x^3 - 2*x*y1", 1, 8);
  const MapGerm f = germ("x^3 + x*y1^3", "x^2 + y1^3", 1, 8);
  std::vector<ReportDocument> docs = {
      {"legendrian", classify_legendrian(g2, {.run_oracle = true})},
      {"pedal", classify_pedal_type(f)},
      {"pedal", classify_pedal_type(g2)},
  };
  CHECK(docs[0].report.label() == "SwallowtailCrossRn-1");
  CHECK(docs[1].report.label() == "Sk(2, +)");
  CHECK_FALSE(docs[2].report.precondition_met);

  for (const auto& doc : docs) {
    const auto j = to_json(doc);
    const ReportDocument back = report_from_json(j);
    CHECK(back == doc);
    CHECK(to_json(back).dump() == j.dump());

    const std::string block = emit_report_block(doc);
    const std::string wrapped = "noise before\n" + human_report(doc) + block + "after\n";
    const ReportDocument parsed = parse_report_block(wrapped);
    CHECK(parsed == doc);
    CHECK(emit_report_block(parsed) == block);
  }

  const auto j = to_json(docs[0]);
  CHECK(j["verdict"] == "SwallowtailCrossRn-1");
  CHECK(j["a_index"] == 3);
  CHECK(j["oracle_agrees"] == true);
  CHECK(to_json(docs[1])["oracle_agrees"].is_null());

  auto bad = j;
  bad["label"] = "CuspCrossRn";
  CHECK_THROWS_AS(report_from_json(bad), std::invalid_argument);
  bad = j;
  bad["verdict"] = "Swallowtail";
  CHECK_THROWS_AS(report_from_json(bad), std::invalid_argument);
  CHECK_THROWS_AS(parse_report_block("no report here"), std::invalid_argument);

  for (auto v : {Verdict::NonSingular, Verdict::CuspCrossRn, Verdict::SwallowtailCrossRn1,
                 Verdict::LegendrianA, Verdict::Sk, Verdict::WhitneyUmbrellaCrossRn1,
                 Verdict::UndeterminedAtTruncation, Verdict::NotApplicable}) {
    CHECK(verdict_from_string(to_string(v)) == v);
  }
  for (auto r : {PedalRoute::None, PedalRoute::NonZeroValue, PedalRoute::FoldOfP,
                 PedalRoute::Morse}) {
    CHECK(route_from_string(to_string(r)) == r);
  }
}

TEST_CASE("human report") {
  const MapGerm f = germ("x^3 + x*y1^3", "x^2 + y1^3", 1, 8);
  const std::string text = human_report({"pedal", classify_pedal_type(f)});
  CHECK(text.find("Sk(2, +)") != std::string::npos);
  CHECK(text.find("order of q") != std::string::npos);
  CHECK(text.find("morse") != std::string::npos);
}
