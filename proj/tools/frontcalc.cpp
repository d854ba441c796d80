// frontcalc: classify, integrate/differentiate and verify map-germs, and
// sample pedal / wave-front families of plane curves.
//
// Exit codes: 0 success, 1 check or pipeline failure, 2 usage or parse error.

#include <frontcalc/classifier.hpp>
#include <frontcalc/evolution.hpp>
#include <frontcalc/germ_file.hpp>
#include <frontcalc/report_io.hpp>
#include <frontcalc/trace_io.hpp>
#include <frontcalc/verify.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

using namespace frontcalc;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

std::optional<GermFile> load(const std::string& path) {
  try {
    return read_germ_file(path);
  } catch (const GermFileError& e) {
    std::cerr << path;
    if (e.line() > 0) std::cerr << ':' << e.line() << ':' << e.column();
    std::cerr << ": error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << path << ": error: " << e.what() << '\n';
  }
  return std::nullopt;
}

int cmd_classify(const std::string& path, const std::string& mode) {
  const auto file = load(path);
  if (!file) return kUsage;
  const MapGerm& germ = file->germ;

  ReportDocument doc;
  if (mode == "pedal") {
    doc = {"pedal", classify_pedal_type(germ)};
  } else if (mode == "legendrian") {
    doc = {"legendrian", classify_legendrian(germ, {.run_oracle = true})};
  } else {
    auto factors = is_pedal_unfolding_type(germ);
    if (factors) {
      doc = {"pedal", classify_pedal_type(germ, *factors)};
    } else {
      doc = {"legendrian", classify_legendrian(germ, {.run_oracle = true})};
      if (!doc.report.precondition_met) {
        doc.pipeline = "none";
        doc.report.evidence.insert(
            doc.report.evidence.begin(),
            Evidence{"pedal-unfolding-type", {}, std::nullopt, std::nullopt,
                     to_string(factors.rejection().reason) + ": " +
                         factors.rejection().detail});
      }
    }
  }
  std::cout << "germ: " << to_string(germ) << '\n'
            << human_report(doc) << emit_report_block(doc);
  if (!doc.report.precondition_met) {
    std::cerr << "error: germ is outside the " << doc.pipeline
              << " pipeline's domain\n";
    return kFailure;
  }
  return doc.report.oracle_agrees.value_or(true) ? kOk : kFailure;
}

int cmd_integrate(const std::string& path) {
  const auto file = load(path);
  if (!file) return kUsage;
  try {
    std::cout << emit_germ_file(integrate(file->germ));
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kOk;
}

int cmd_differentiate(const std::string& path, bool require_normalized) {
  const auto file = load(path);
  if (!file) return kUsage;
  try {
    std::cout << emit_germ_file(differentiate(file->germ, require_normalized));
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kOk;
}

int cmd_verify(const std::string& suite, const VerifyOptions& options) {
  bool ok = true;
  for (const auto& r : run_verify(suite, options)) {
    print_suite(r, std::cout);
    ok = ok && r.ok();
  }
  std::cout << (ok ? "verify: PASS" : "verify: FAIL") << '\n';
  return ok ? kOk : kFailure;
}

struct Range {
  double lo = 0;
  double hi = 0;
  std::size_t count = 1;
};

Range parse_range(const std::string& text, bool with_count) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(':', start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  if (parts.size() != (with_count ? 3u : 2u)) {
    throw CLI::ValidationError(with_count ? "expected lo:hi:count"
                                          : "expected lo:hi");
  }
  Range r;
  try {
    std::size_t used = 0;
    r.lo = std::stod(parts[0], &used);
    if (used != parts[0].size()) throw std::invalid_argument(parts[0]);
    r.hi = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument(parts[1]);
    if (with_count) {
      const long c = std::stol(parts[2], &used);
      if (used != parts[2].size() || c < 1) throw std::invalid_argument(parts[2]);
      r.count = static_cast<std::size_t>(c);
    }
  } catch (const std::exception&) {
    throw CLI::ValidationError("bad range '" + text + "'");
  }
  if (r.hi < r.lo) throw CLI::ValidationError("range '" + text + "' has hi < lo");
  return r;
}

struct EvolveArgs {
  std::string curve;
  std::string pedal;
  std::vector<std::string> u_grids;
  std::string s_range = "-1.5:1.5";
  std::size_t samples = 2001;
  double tol = 1e-9;
  std::string csv;
  std::string svg;
};

int cmd_evolve(const EvolveArgs& args) {
  PlaneCurve curve;
  PedalPointPath path;
  std::vector<std::vector<double>> axes;
  Range s_range;
  try {
    curve = parse_curve_spec(args.curve);
    for (const auto& g : args.u_grids) {
      const Range r = parse_range(g, true);
      axes.push_back(uniform_grid(r.lo, r.hi, r.count));
    }
    if (axes.empty()) axes.push_back({0.0});
    path = parse_pedal_path(args.pedal, axes.size());
    s_range = parse_range(args.s_range, false);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  if (args.samples < 2 || !(s_range.hi > s_range.lo) || !(args.tol > 0)) {
    std::cerr << "error: need samples >= 2, a nonempty s-range and tol > 0\n";
    return kUsage;
  }

  EvolutionTrace trace;
  try {
    const ArcLengthCurve arc = arc_length_reparametrize(curve);
    if (s_range.lo < arc.curve.lo || s_range.hi > arc.curve.hi) {
      std::cerr << "error: s-range exceeds the curve domain ["
                << arc.curve.lo << ", " << arc.curve.hi << "]\n";
      return kFailure;
    }
    FamilyOptions options;
    options.wavefront.tolerance = args.tol;
    trace = family_evolve(arc.curve, path,
                          uniform_grid(s_range.lo, s_range.hi, args.samples),
                          grid_product(axes), options);
  } catch (const CurveError& e) {
    std::cerr << "error: degenerate curve: " << e.what();
    if (e.location()) std::cerr << " (first violating sample " << *e.location() << ')';
    std::cerr << '\n';
    return kFailure;
  }

  std::ofstream csv(args.csv);
  if (!csv) {
    std::cerr << "error: cannot write '" << args.csv << "'\n";
    return kFailure;
  }
  write_csv(trace, csv);
  if (!args.svg.empty()) {
    std::ofstream svg(args.svg);
    if (!svg) {
      std::cerr << "error: cannot write '" << args.svg << "'\n";
      return kFailure;
    }
    write_svg(trace, svg);
  }

  bool ok = true;
  for (const auto& m : trace.members) {
    std::cout << "u = (";
    for (std::size_t i = 0; i < m.u.size(); ++i) {
      std::cout << (i ? ", " : "") << format_double(m.u[i]);
    }
    std::cout << ")";
    if (!m.error.empty()) {
      std::cout << ": error: " << m.error << '\n';
      ok = false;
      continue;
    }
    std::cout << " P = (" << format_double(m.P.x) << ", "
              << format_double(m.P.y) << ") rank dP = "
              << numeric_rank(path.jacobian(m.u)) << " candidates: "
              << m.candidates.size();
    for (const auto& c : m.candidates) std::cout << " s=" << format_double(c.s);
    std::cout << '\n';
  }
  return ok ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact jet calculus and classification of pedal-type and "
               "Legendrian map-germs; numeric pedal and wave-front families"};
  app.require_subcommand(1);

  std::string path;
  bool as_pedal = false, as_legendrian = false, auto_mode = false;
  auto* classify = app.add_subcommand("classify", "classify a germ file");
  classify->add_option("file", path, "germ file")->required();
  auto* f1 = classify->add_flag("--as-pedal", as_pedal, "pedal-type pipeline");
  auto* f2 = classify->add_flag("--as-legendrian", as_legendrian,
                                "normalized Legendrian pipeline");
  auto* f3 = classify->add_flag("--auto", auto_mode,
                                "pedal factorization first, then Legendrian");
  f1->excludes(f2)->excludes(f3);
  f2->excludes(f3);

  auto* integ = app.add_subcommand("integrate", "componentwise x-integral");
  integ->add_option("file", path, "germ file")->required();

  bool require_normalized = false;
  auto* diff = app.add_subcommand("differentiate", "componentwise x-derivative");
  diff->add_option("file", path, "germ file")->required();
  diff->add_flag("--require-normalized", require_normalized,
                 "reject germs that are not normalized Legendrian");

  std::string suite;
  VerifyOptions vopts;
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("suite", suite, "proposition|arnold|gk-table|roundtrip|all")
      ->required()
      ->check(CLI::IsMember({"proposition", "arnold", "gk-table", "roundtrip", "all"}));
  verify->add_option("--trials", vopts.trials, "random trials per check")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", vopts.seed, "random seed");

  EvolveArgs eargs;
  auto* evolve = app.add_subcommand("evolve", "pedal and wave-front families");
  evolve->add_option("--curve", eargs.curve,
                     "circle:R[,cx,cy] | ellipse:a,b | parabola:c | poly:px;py")
      ->required();
  evolve->add_option("--pedal", eargs.pedal, "pedal point path \"px;py\" in u1..un")
      ->required();
  evolve->add_option("--u-grid", eargs.u_grids, "lo:hi:count, once per parameter");
  evolve->add_option("--s-range", eargs.s_range, "lo:hi arc-length window");
  evolve->add_option("--samples", eargs.samples, "arc-length samples");
  evolve->add_option("--tol", eargs.tol, "wave-front step-halving tolerance");
  evolve->add_option("--csv", eargs.csv, "CSV output")->required();
  evolve->add_option("--svg", eargs.svg, "SVG output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*classify) {
      const std::string mode =
          as_pedal ? "pedal" : as_legendrian ? "legendrian" : "auto";
      return cmd_classify(path, mode);
    }
    if (*integ) return cmd_integrate(path);
    if (*diff) return cmd_differentiate(path, require_normalized);
    if (*verify) return cmd_verify(suite, vopts);
    if (*evolve) return cmd_evolve(eargs);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}
