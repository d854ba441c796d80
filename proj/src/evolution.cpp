#include <frontcalc/evolution.hpp>
#include <frontcalc/polynomial_parser.hpp>

#include <algorithm>
#include <cmath>
#include <atomic>
#include <future>
#include <thread>
#include <map>
#include <stdexcept>

namespace frontcalc {

Vec2 pedal_point(Vec2 r, Vec2 T, Vec2 P) { return r + dot(P - r, T) * T; }

namespace {

void require_increasing(const std::vector<double>& grid) {
  if (grid.empty()) throw std::invalid_argument("empty s-grid");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) {
      throw std::invalid_argument("s-grid must be strictly increasing");
    }
  }
}

Vec2 velocity(const PlaneCurve& arc, Vec2 P, double s) {
  const Vec2 v = pedal_point(arc.point(s), arc.d1(s), P) - P;
  if (!std::isfinite(v.x) || !std::isfinite(v.y)) {
    throw std::runtime_error("non-finite wave-front velocity at s = " +
                             std::to_string(s));
  }
  return v;
}

// The right-hand side does not depend on WF, so RK4 needs f at s, s+h/2, s+h.
Vec2 march(const PlaneCurve& arc, Vec2 P, Vec2 w, double from, double to,
           std::size_t substeps) {
  const double h = (to - from) / double(substeps);
  Vec2 k1 = velocity(arc, P, from);
  for (std::size_t j = 0; j < substeps; ++j) {
    const double s = from + h * double(j);
    const double end = j + 1 == substeps ? to : s + h;
    const Vec2 k2 = velocity(arc, P, s + 0.5 * h);
    const Vec2 k4 = velocity(arc, P, end);
    w += (h / 6) * (k1 + 4 * k2 + k4);
    k1 = k4;
  }
  return w;
}

}  // namespace

std::vector<Vec2> wavefront_fixed_step(const PlaneCurve& arc, Vec2 P,
                                       const std::vector<double>& s_grid,
                                       std::size_t substeps) {
  require_increasing(s_grid);
  substeps = std::max<std::size_t>(substeps, 1);
  std::vector<Vec2> out(s_grid.size());
  const auto first_pos =
      std::size_t(std::lower_bound(s_grid.begin(), s_grid.end(), 0.0) -
                  s_grid.begin());
  Vec2 w{};
  double at = 0;
  for (std::size_t i = first_pos; i < s_grid.size(); ++i) {
    if (s_grid[i] != at) w = march(arc, P, w, at, s_grid[i], substeps);
    at = s_grid[i];
    out[i] = w;
  }
  w = {};
  at = 0;
  for (std::size_t i = first_pos; i-- > 0;) {
    w = march(arc, P, w, at, s_grid[i], substeps);
    at = s_grid[i];
    out[i] = w;
  }
  return out;
}

WavefrontResult wavefront_evolve(const PlaneCurve& arc, Vec2 P,
                                 const std::vector<double>& s_grid,
                                 const WavefrontOptions& options) {
  std::size_t m = std::max<std::size_t>(options.initial_substeps, 1);
  std::vector<Vec2> previous = wavefront_fixed_step(arc, P, s_grid, m);
  WavefrontResult out;
  bool converged = false;
  for (std::size_t k = 0; k < options.max_halvings; ++k) {
    m *= 2;
    std::vector<Vec2> next = wavefront_fixed_step(arc, P, s_grid, m);
    double change = 0;
    for (std::size_t i = 0; i < next.size(); ++i) {
      change = std::max(change, norm(next[i] - previous[i]));
    }
    previous = std::move(next);
    out.last_change = change;
    if (change <= options.tolerance) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw std::runtime_error("wave front did not converge: last change " +
                             std::to_string(out.last_change));
  }
  out.substeps = m;
  out.s = s_grid;
  out.wf = std::move(previous);
  for (double s : s_grid) {
    const Vec2 T = arc.d1(s);
    out.tangent.push_back(T);
    out.ped.push_back(pedal_point(arc.point(s), T, P));
  }
  return out;
}

double convergence_ratio(const PlaneCurve& arc, Vec2 P,
                         const std::vector<double>& s_grid,
                         std::size_t substeps) {
  const auto w1 = wavefront_fixed_step(arc, P, s_grid, substeps);
  const auto w2 = wavefront_fixed_step(arc, P, s_grid, 2 * substeps);
  const auto w4 = wavefront_fixed_step(arc, P, s_grid, 4 * substeps);
  const std::size_t last = s_grid.size() - 1;
  const double num = norm(w1[0] - w2[0]) + norm(w1[last] - w2[last]);
  const double den = norm(w2[0] - w4[0]) + norm(w2[last] - w4[last]);
  return num / den;
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t count) {
  if (count == 0) throw std::invalid_argument("grid needs at least 1 point");
  if (count == 1) return {lo};
  std::vector<double> g(count);
  for (std::size_t i = 0; i < count; ++i) {
    g[i] = lo + (hi - lo) * double(i) / double(count - 1);
  }
  g.back() = hi;
  return g;
}

namespace {

Polynomial derivative(const Polynomial& p, std::size_t var) {
  Polynomial d;
  for (const auto& [e, c] : p) {
    if (e[var] == 0) continue;
    Exponents f = e;
    --f[var];
    d[f] += c * e[var];
  }
  return d;
}

}  // namespace

PedalPointPath parse_pedal_path(std::string_view spec, std::size_t dim) {
  const auto semi = spec.find(';');
  if (semi == std::string_view::npos || spec.find(';', semi + 1) != spec.npos) {
    throw std::invalid_argument("pedal path needs 'px;py'");
  }
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= dim; ++i) names.push_back("u" + std::to_string(i));
  std::map<std::string, std::size_t> aliases;
  if (dim == 1) aliases["u"] = 0;
  Polynomial px, py;
  try {
    px = parse_polynomial(spec.substr(0, semi), names, aliases);
    py = parse_polynomial(spec.substr(semi + 1), names, aliases);
  } catch (const ParseError& e) {
    throw std::invalid_argument(std::string("pedal path: ") + e.what());
  }
  std::vector<std::pair<Polynomial, Polynomial>> grads;
  for (std::size_t i = 0; i < dim; ++i) {
    grads.emplace_back(derivative(px, i), derivative(py, i));
  }
  PedalPointPath path;
  path.dim = dim;
  path.point = [px, py](const std::vector<double>& u) {
    return Vec2{evaluate(px, u), evaluate(py, u)};
  };
  path.jacobian = [grads](const std::vector<double>& u) {
    std::vector<Vec2> cols;
    for (const auto& [gx, gy] : grads) {
      cols.push_back({evaluate(gx, u), evaluate(gy, u)});
    }
    return cols;
  };
  return path;
}

std::size_t numeric_rank(const std::vector<Vec2>& columns, double threshold) {
  // Gram matrix A A^T of the 2 x n matrix.
  double a = 0, b = 0, c = 0;
  for (const Vec2& v : columns) {
    a += v.x * v.x;
    b += v.x * v.y;
    c += v.y * v.y;
  }
  const double mean = 0.5 * (a + c);
  const double disc = std::sqrt(0.25 * (a - c) * (a - c) + b * b);
  const double l1 = mean + disc;
  // Product form avoids cancellation for the small eigenvalue.
  const double l2 = l1 > 0 ? std::max(0.0, (a * c - b * b) / l1) : 0.0;
  std::size_t r = 0;
  if (std::sqrt(l1) > threshold) ++r;
  if (std::sqrt(l2) > threshold) ++r;
  return r;
}

bool is_regular_pedal_path(const PedalPointPath& path,
                           const std::vector<double>& u, double threshold) {
  return numeric_rank(path.jacobian(u), threshold) == path.dim;
}

namespace {

double normal_offset(const PlaneCurve& arc, Vec2 P, double s) {
  return dot(P - arc.point(s), perp(arc.d1(s)));
}

}  // namespace

std::vector<SingularCandidate> singular_candidates(
    const PlaneCurve& arc, Vec2 P, const std::vector<double>& s_grid,
    double threshold) {
  const std::size_t m = s_grid.size();
  std::vector<double> g(m);
  for (std::size_t i = 0; i < m; ++i) g[i] = normal_offset(arc, P, s_grid[i]);

  std::vector<SingularCandidate> found;
  auto keep = [&](double s) {
    const double d = std::abs(normal_offset(arc, P, s));
    if (d < threshold) found.push_back({s, d});
  };

  for (std::size_t i = 0; i + 1 < m; ++i) {
    if (g[i] == 0) {
      keep(s_grid[i]);
    } else if (g[i] * g[i + 1] < 0) {
      double a = s_grid[i], b = s_grid[i + 1];
      const bool rising = g[i] < 0;
      for (int it = 0; it < 200 && b - a > 1e-15 * std::max(1.0, std::abs(a)); ++it) {
        const double mid = 0.5 * (a + b);
        const double gm = normal_offset(arc, P, mid);
        if ((gm < 0) == rising) a = mid; else b = mid;
      }
      keep(0.5 * (a + b));
    }
  }
  if (m >= 1 && g[m - 1] == 0) keep(s_grid[m - 1]);

  const double inv_phi = (std::sqrt(5.0) - 1) / 2;
  for (std::size_t i = 1; i + 1 < m; ++i) {
    const bool same_sign = (g[i - 1] > 0 && g[i] > 0 && g[i + 1] > 0) ||
                           (g[i - 1] < 0 && g[i] < 0 && g[i + 1] < 0);
    if (!same_sign) continue;
    if (std::abs(g[i]) > std::abs(g[i - 1]) || std::abs(g[i]) > std::abs(g[i + 1])) {
      continue;
    }
    double a = s_grid[i - 1], b = s_grid[i + 1];
    auto f = [&](double s) { return std::abs(normal_offset(arc, P, s)); };
    double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    for (int it = 0; it < 200 && b - a > 1e-12 * std::max(1.0, std::abs(a)); ++it) {
      if (fc < fd) {
        b = d; d = c; fd = fc;
        c = b - inv_phi * (b - a); fc = f(c);
      } else {
        a = c; c = d; fc = fd;
        d = a + inv_phi * (b - a); fd = f(d);
      }
    }
    keep(0.5 * (a + b));
  }

  std::sort(found.begin(), found.end(),
            [](const auto& x, const auto& y) { return x.s < y.s; });
  double spacing = m > 1 ? s_grid[1] - s_grid[0] : 0;
  for (std::size_t i = 1; i < m; ++i) spacing = std::min(spacing, s_grid[i] - s_grid[i - 1]);
  std::vector<SingularCandidate> merged;
  for (const auto& c : found) {
    if (!merged.empty() && c.s - merged.back().s < spacing) {
      if (c.distance < merged.back().distance) merged.back() = c;
      continue;
    }
    merged.push_back(c);
  }
  return merged;
}

std::vector<std::vector<double>> grid_product(
    const std::vector<std::vector<double>>& axes) {
  std::vector<std::vector<double>> out{{}};
  for (const auto& axis : axes) {
    std::vector<std::vector<double>> next;
    for (const auto& prefix : out) {
      for (double v : axis) {
        auto p = prefix;
        p.push_back(v);
        next.push_back(std::move(p));
      }
    }
    out = std::move(next);
  }
  return out;
}

EvolutionTrace family_evolve(const PlaneCurve& arc, const PedalPointPath& path,
                             const std::vector<double>& s_grid,
                             const std::vector<std::vector<double>>& u_points,
                             const FamilyOptions& options) {
  require_increasing(s_grid);
  const CurveCheck check =
      check_curve(arc, s_grid.front(), s_grid.back(), s_grid.size());
  if (!check.ok()) throw CurveError(check.message, check.first_violation);

  double xmin = INFINITY, xmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
  for (double s : s_grid) {
    const Vec2 r = arc.point(s);
    xmin = std::min(xmin, r.x);
    xmax = std::max(xmax, r.x);
    ymin = std::min(ymin, r.y);
    ymax = std::max(ymax, r.y);
  }
  const double scale = std::max(std::hypot(xmax - xmin, ymax - ymin), 1e-300);

  EvolutionTrace trace;
  trace.s = s_grid;
  trace.dim = path.dim;
  trace.tolerance = options.wavefront.tolerance;
  trace.candidate_threshold = options.candidate_tolerance * scale;

  auto run = [&](const std::vector<double>& u) {
    FamilyMember m;
    m.u = u;
    try {
      m.P = path.point(u);
      m.trace = wavefront_evolve(arc, m.P, s_grid, options.wavefront);
      m.candidates =
          singular_candidates(arc, m.P, s_grid, trace.candidate_threshold);
    } catch (const std::exception& e) {
      m.error = e.what();
    }
    return m;
  };

  trace.members.resize(u_points.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < u_points.size();) {
      trace.members[i] = run(u_points[i]);
    }
  };
  const std::size_t workers =
      options.parallel
          ? std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()),
                                  u_points.size())
          : 0;
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, worker));
  }
  if (workers == 0) worker();
  for (auto& j : jobs) j.get();
  return trace;
}

}  // namespace frontcalc
