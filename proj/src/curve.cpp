#include <frontcalc/curve.hpp>
#include <frontcalc/polynomial_parser.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <memory>
#include <numbers>

namespace frontcalc {

double PlaneCurve::signed_curvature(double t) const {
  const Vec2 a = d1(t);
  const double s = norm(a);
  return cross(a, d2(t)) / (s * s * s);
}

PlaneCurve circle_curve(double radius, Vec2 center) {
  if (!(radius > 0)) throw std::invalid_argument("circle radius must be > 0");
  PlaneCurve c;
  c.point = [=](double t) {
    return Vec2{center.x + radius * std::cos(t), center.y + radius * std::sin(t)};
  };
  c.d1 = [=](double t) {
    return Vec2{-radius * std::sin(t), radius * std::cos(t)};
  };
  c.d2 = [=](double t) {
    return Vec2{-radius * std::cos(t), -radius * std::sin(t)};
  };
  c.lo = -std::numbers::pi;
  c.hi = std::numbers::pi;
  c.name = "circle";
  return c;
}

PlaneCurve ellipse_curve(double a, double b) {
  if (!(a > 0) || !(b > 0)) {
    throw std::invalid_argument("ellipse semi-axes must be > 0");
  }
  PlaneCurve c;
  c.point = [=](double t) { return Vec2{a * std::cos(t), b * std::sin(t)}; };
  c.d1 = [=](double t) { return Vec2{-a * std::sin(t), b * std::cos(t)}; };
  c.d2 = [=](double t) { return Vec2{-a * std::cos(t), -b * std::sin(t)}; };
  c.lo = -std::numbers::pi;
  c.hi = std::numbers::pi;
  c.name = "ellipse";
  return c;
}

PlaneCurve parabola_curve(double coeff) {
  auto c = polynomial_curve({0, 1}, {0, 0, coeff});
  c.name = "parabola";
  return c;
}

namespace {

double horner(const std::vector<double>& p, double t) {
  double v = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * t + *it;
  return v;
}

std::vector<double> derivative(const std::vector<double>& p) {
  std::vector<double> d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(double(i) * p[i]);
  return d;
}

}  // namespace

PlaneCurve polynomial_curve(std::vector<double> px, std::vector<double> py,
                            double lo, double hi) {
  auto dx = derivative(px), dy = derivative(py);
  auto ddx = derivative(dx), ddy = derivative(dy);
  PlaneCurve c;
  c.point = [=](double t) { return Vec2{horner(px, t), horner(py, t)}; };
  c.d1 = [=](double t) { return Vec2{horner(dx, t), horner(dy, t)}; };
  c.d2 = [=](double t) { return Vec2{horner(ddx, t), horner(ddy, t)}; };
  c.lo = lo;
  c.hi = hi;
  c.name = "poly";
  return c;
}

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

double parse_number(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw std::invalid_argument("bad number '" + std::string(s) + "'");
  }
  return v;
}

std::vector<double> parse_coefficients(std::string_view text) {
  const Polynomial p = parse_polynomial(text, {"t"});
  std::vector<double> out;
  for (const auto& [e, c] : p) {
    if (out.size() <= e[0]) out.resize(e[0] + 1, 0.0);
    out[e[0]] = c.get_d();
  }
  return out;
}

}  // namespace

PlaneCurve parse_curve_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("curve spec needs 'kind:args'");
  }
  const auto kind = trim(spec.substr(0, colon));
  const auto args = spec.substr(colon + 1);
  if (kind == "poly") {
    const auto parts = split(args, ';');
    if (parts.size() != 2) {
      throw std::invalid_argument("poly curve needs 'px;py'");
    }
    try {
      return polynomial_curve(parse_coefficients(parts[0]),
                              parse_coefficients(parts[1]));
    } catch (const ParseError& e) {
      throw std::invalid_argument(std::string("poly curve: ") + e.what());
    }
  }
  std::vector<double> v;
  for (auto part : split(args, ',')) v.push_back(parse_number(part));
  if (kind == "circle" && (v.size() == 1 || v.size() == 3)) {
    return circle_curve(v[0], v.size() == 3 ? Vec2{v[1], v[2]} : Vec2{});
  }
  if (kind == "ellipse" && v.size() == 2) return ellipse_curve(v[0], v[1]);
  if (kind == "parabola" && v.size() == 1) return parabola_curve(v[0]);
  throw std::invalid_argument("unknown curve spec '" + std::string(spec) + "'");
}

CurveCheck check_curve(const PlaneCurve& c, double lo, double hi,
                       std::size_t samples, double eps) {
  CurveCheck out;
  int first_sign = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    const double t =
        samples == 1 ? lo : lo + (hi - lo) * double(i) / double(samples - 1);
    const double speed = norm(c.d1(t));
    if (!(speed > eps)) {
      out.non_singular = false;
      out.first_violation = t;
      out.message = "singular point (|r'| = " + std::to_string(speed) +
                    ") at t = " + std::to_string(t);
      return out;
    }
    const double k = c.signed_curvature(t);
    const int sg = k > eps ? 1 : k < -eps ? -1 : 0;
    if (sg == 0 || (first_sign != 0 && sg != first_sign)) {
      out.non_degenerate = false;
      out.first_violation = t;
      out.message = "inflection (curvature " + std::to_string(k) +
                    ") at parameter " + std::to_string(t);
      return out;
    }
    first_sign = sg;
  }
  return out;
}

namespace {

template <class F>
double simpson_rec(const F& f, double a, double b, double fa, double fm,
                   double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6 * (fa + 4 * flm + fm);
  const double right = (b - m) / 6 * (fm + 4 * frm + fb);
  const double diff = left + right - whole;
  const double floor = 8 * std::numeric_limits<double>::epsilon() *
                       (std::abs(left) + std::abs(right));
  if (depth <= 0 || std::abs(diff) <= std::max(15 * tol, floor)) {
    return left + right + diff / 15;
  }
  return simpson_rec(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
         simpson_rec(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

template <class F>
double adaptive_simpson(const F& f, double a, double b, double tol) {
  if (a == b) return 0;
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6 * (fa + 4 * fm + fb);
  return simpson_rec(f, a, b, fa, fm, fb, whole, tol, 30);
}

struct ArcTable {
  PlaneCurve base;
  std::vector<double> t;
  std::vector<double> cum;
  double origin = 0;

  double speed(double u) const { return norm(base.d1(u)); }

  double integral(double a, double b) const {
    return adaptive_simpson([this](double u) { return speed(u); }, a, b,
                            1e-15 * std::max(1.0, std::abs(b - a)));
  }

  std::size_t panel_of_t(double u) const {
    auto it = std::upper_bound(t.begin(), t.end(), u);
    std::size_t i = it == t.begin() ? 0 : std::size_t(it - t.begin()) - 1;
    return std::min(i, t.size() - 2);
  }

  double s_of_t(double u) const {
    const std::size_t i = panel_of_t(u);
    return cum[i] + integral(t[i], u) - origin;
  }

  double t_of_s(double s) const {
    const double target = s + origin;
    const double tol = 1e-13 * std::max(1.0, cum.back());
    if (target < cum.front() - tol || target > cum.back() + tol) {
      throw CurveError("arc length " + std::to_string(s) +
                           " outside the curve domain",
                       s);
    }
    auto it = std::upper_bound(cum.begin(), cum.end(), target);
    std::size_t i = it == cum.begin() ? 0 : std::size_t(it - cum.begin()) - 1;
    i = std::min(i, t.size() - 2);
    double a = t[i], b = t[i + 1];
    const double span = cum[i + 1] - cum[i];
    double u = span > 0 ? a + (b - a) * (target - cum[i]) / span : a;
    for (int iter = 0; iter < 60; ++iter) {
      const double f = cum[i] + integral(t[i], u) - target;
      if (f > 0) b = u; else a = u;
      double next = u - f / speed(u);
      if (!(next > a && next < b)) next = 0.5 * (a + b);
      const bool done = std::abs(next - u) <= 1e-15 * std::max(1.0, std::abs(u));
      u = next;
      if (done || b - a <= 1e-16 * std::max(1.0, std::abs(u))) break;
    }
    return u;
  }
};

}  // namespace

ArcLengthCurve arc_length_reparametrize(const PlaneCurve& c,
                                        std::size_t resolution) {
  if (resolution < 2) resolution = 2;
  if (!(c.lo <= 0 && 0 <= c.hi && c.lo < c.hi)) {
    throw CurveError("curve domain must contain 0", std::nullopt);
  }
  auto table = std::make_shared<ArcTable>();
  table->base = c;
  double scale = 0;
  for (std::size_t i = 0; i <= resolution; ++i) {
    const double u = c.lo + (c.hi - c.lo) * double(i) / double(resolution);
    table->t.push_back(u);
    scale = std::max(scale, table->speed(u));
  }
  for (std::size_t i = 0; i <= 2 * resolution; ++i) {
    const double u = c.lo + (c.hi - c.lo) * double(i) / double(2 * resolution);
    if (!(table->speed(u) > 1e-12 * scale)) {
      throw CurveError("singular point at t = " + std::to_string(u), u);
    }
  }
  table->cum.push_back(0);
  for (std::size_t i = 1; i <= resolution; ++i) {
    table->cum.push_back(table->cum.back() +
                         table->integral(table->t[i - 1], table->t[i]));
  }
  table->origin = 0;
  table->origin = table->s_of_t(0);

  ArcLengthCurve out;
  out.length = table->cum.back();
  out.t_of_s = [table](double s) { return table->t_of_s(s); };
  out.s_of_t = [table](double u) { return table->s_of_t(u); };
  PlaneCurve& r = out.curve;
  r.point = [table](double s) { return table->base.point(table->t_of_s(s)); };
  r.d1 = [table](double s) {
    const Vec2 v = table->base.d1(table->t_of_s(s));
    return v * (1 / norm(v));
  };
  r.d2 = [table](double s) {
    const double u = table->t_of_s(s);
    const Vec2 v = table->base.d1(u);
    const double sp = norm(v);
    const Vec2 T = v * (1 / sp);
    const Vec2 a = table->base.d2(u);
    return (a - dot(a, T) * T) * (1 / (sp * sp));
  };
  r.lo = -table->origin;
  r.hi = table->cum.back() - table->origin;
  r.name = c.name;
  return out;
}

}  // namespace frontcalc
