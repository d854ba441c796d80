#pragma once

// Plane curves in binary64 for the numeric lab.

#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace frontcalc {

struct Vec2 {
  double x = 0;
  double y = 0;

  Vec2& operator+=(Vec2 b) { x += b.x; y += b.y; return *this; }
  Vec2& operator-=(Vec2 b) { x -= b.x; y -= b.y; return *this; }
  Vec2& operator*=(double c) { x *= c; y *= c; return *this; }
  friend Vec2 operator+(Vec2 a, Vec2 b) { return a += b; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return a -= b; }
  friend Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
  friend Vec2 operator*(Vec2 a, double c) { return a *= c; }
  friend Vec2 operator*(double c, Vec2 a) { return a *= c; }
  friend bool operator==(Vec2, Vec2) = default;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
/// Rotation by +90 degrees.
inline Vec2 perp(Vec2 a) { return {-a.y, a.x}; }

class CurveError : public std::runtime_error {
 public:
  CurveError(const std::string& what, std::optional<double> location)
      : std::runtime_error(what), location_(location) {}
  /// Parameter value of the first offending sample, if any.
  std::optional<double> location() const { return location_; }

 private:
  std::optional<double> location_;
};

struct PlaneCurve {
  std::function<Vec2(double)> point;
  std::function<Vec2(double)> d1;
  std::function<Vec2(double)> d2;
  /// Parameter domain; contains 0, the base point.
  double lo = -1;
  double hi = 1;
  std::string name;

  double signed_curvature(double t) const;
};

PlaneCurve circle_curve(double radius, Vec2 center = {});
PlaneCurve ellipse_curve(double a, double b);
/// (t, c t^2)
PlaneCurve parabola_curve(double c);
/// (px(t), py(t)); coefficient i multiplies t^i.
PlaneCurve polynomial_curve(std::vector<double> px, std::vector<double> py,
                            double lo = -4, double hi = 4);

/// "circle:R[,cx,cy]", "ellipse:a,b", "parabola:c", "poly:px;py" with
/// polynomials in t. Throws std::invalid_argument.
PlaneCurve parse_curve_spec(std::string_view spec);

struct CurveCheck {
  bool non_singular = true;
  bool non_degenerate = true;
  /// First sample violating either property.
  std::optional<double> first_violation;
  std::string message;

  bool ok() const { return non_singular && non_degenerate; }
};

/// Samples speed and signed curvature at `samples` points of [lo, hi].
CurveCheck check_curve(const PlaneCurve& c, double lo, double hi,
                       std::size_t samples, double eps = 1e-10);

struct ArcLengthCurve {
  /// Parametrized by arc length measured from t = 0.
  PlaneCurve curve;
  std::function<double(double)> t_of_s;
  std::function<double(double)> s_of_t;
  /// Total length, for scale-relative thresholds.
  double length = 0;
};

/// Cumulative arc length by adaptive Simpson on `resolution` panels,
/// inverted by safeguarded Newton. Throws CurveError at a singular point.
ArcLengthCurve arc_length_reparametrize(const PlaneCurve& c,
                                        std::size_t resolution = 2048);

}  // namespace frontcalc
