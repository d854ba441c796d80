#pragma once

// Pedal curves, wave fronts WF' = ped - P with WF(0) = 0, and families over
// a grid of pedal points P(u).

#include <frontcalc/curve.hpp>

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <string>
#include <vector>

namespace frontcalc {

/// Foot of the perpendicular from P to the line r + R T.
Vec2 pedal_point(Vec2 r, Vec2 T, Vec2 P);

struct WavefrontOptions {
  double tolerance = 1e-9;
  /// RK4 substeps per grid interval before any halving.
  std::size_t initial_substeps = 1;
  std::size_t max_halvings = 16;
};

struct WavefrontResult {
  std::vector<double> s;
  std::vector<Vec2> ped;
  std::vector<Vec2> wf;
  std::vector<Vec2> tangent;
  /// Substeps per grid interval of the accepted run.
  std::size_t substeps = 0;
  /// Max change at grid points between the last two refinements.
  double last_change = 0;
};

/// Integrates outward from s = 0 along a grid that must be strictly
/// increasing. Throws std::runtime_error on non-finite values or when the
/// tolerance is not reached.
WavefrontResult wavefront_evolve(const PlaneCurve& arc, Vec2 P,
                                 const std::vector<double>& s_grid,
                                 const WavefrontOptions& options = {});

/// WF at the grid points with a fixed number of substeps per interval.
std::vector<Vec2> wavefront_fixed_step(const PlaneCurve& arc, Vec2 P,
                                       const std::vector<double>& s_grid,
                                       std::size_t substeps);

/// |W_h - W_{h/2}| / |W_{h/2} - W_{h/4}| at the grid endpoints; close to 16
/// for a fourth-order method.
double convergence_ratio(const PlaneCurve& arc, Vec2 P,
                         const std::vector<double>& s_grid,
                         std::size_t substeps = 1);

std::vector<double> uniform_grid(double lo, double hi, std::size_t count);

struct PedalPointPath {
  std::size_t dim = 1;
  std::function<Vec2(const std::vector<double>&)> point;
  /// Columns dP/du_i.
  std::function<std::vector<Vec2>(const std::vector<double>&)> jacobian;
};

/// "px;py" with polynomials in u1..un (u for u1 when n == 1).
PedalPointPath parse_pedal_path(std::string_view spec, std::size_t dim);

/// Numeric rank of a 2 x n matrix given by columns; singular values from the
/// 2 x 2 Gram matrix, compared against `threshold`.
std::size_t numeric_rank(const std::vector<Vec2>& columns,
                         double threshold = 1e-8);

/// rank dP(u) == n.
bool is_regular_pedal_path(const PedalPointPath& path,
                           const std::vector<double>& u,
                           double threshold = 1e-8);

struct SingularCandidate {
  double s = 0;
  /// |ped(s) - P(u)| at the candidate.
  double distance = 0;
};

/// Zeros of |ped - P| = |(P - r) . N| along the grid: sign changes refined
/// by bisection and near-zero minima refined by golden section, kept when
/// below `threshold`.
std::vector<SingularCandidate> singular_candidates(const PlaneCurve& arc,
                                                   Vec2 P,
                                                   const std::vector<double>& s_grid,
                                                   double threshold);

struct FamilyMember {
  std::vector<double> u;
  Vec2 P;
  WavefrontResult trace;
  std::vector<SingularCandidate> candidates;
  /// Empty on success.
  std::string error;
};

struct EvolutionTrace {
  std::vector<double> s;
  std::vector<FamilyMember> members;
  std::size_t dim = 0;
  double tolerance = 0;
  double candidate_threshold = 0;
};

struct FamilyOptions {
  WavefrontOptions wavefront;
  /// Relative to the curve scale (diameter of the sampled arc).
  double candidate_tolerance = 1e-7;
  bool parallel = true;
};

/// Cartesian product of 1-d grids.
std::vector<std::vector<double>> grid_product(
    const std::vector<std::vector<double>>& axes);

/// Checks non-degeneracy on the s-range first and throws CurveError with
/// the first violating sample. Per-u failures are recorded in the member.
EvolutionTrace family_evolve(const PlaneCurve& arc, const PedalPointPath& path,
                             const std::vector<double>& s_grid,
                             const std::vector<std::vector<double>>& u_points,
                             const FamilyOptions& options = {});

}  // namespace frontcalc
