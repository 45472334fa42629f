#pragma once

#include <functional>
#include <map>
#include <vector>

#include "varcap/multi_index.hpp"

namespace varcap {

/// Number of alpha in Z_{>=0}^m with |alpha| = s: binom(s+m-1, m-1).
long long h_m(int m, int s);

/// Point of the simplex Sigma_m (non-negative entries summing to 1).
struct SimplexPoint {
  std::vector<double> theta;

  explicit SimplexPoint(std::vector<double> th);
  int dim() const { return static_cast<int>(theta.size()); }
  bool interior() const;
  bool boundary() const { return !interior(); }
};

/// A non-negative function on multi-indices tabulated through level S, with
/// the finite offset set calF of the weak-submultiplicativity definition and
/// an observed subexponential growth certificate Y(a) <= C r^|a|.
struct TabulatedY {
  int m = 0;
  int S = 0;
  std::map<MultiIndex, double, GrevlexLess> values;
  std::vector<MultiIndex> offsets;  // calF
  double growth_C = 1.0;
  double growth_r = 1.0;

  static TabulatedY tabulate(int m, int S, const std::function<double(const MultiIndex&)>& f,
                             std::vector<MultiIndex> offsets);

  double at(const MultiIndex& a) const;
  bool has(const MultiIndex& a) const { return values.count(a) != 0; }
  /// Recompute (C, r) from the table.
  void observe_growth();
};

/// Pairs (alpha, beta) for which no offset gamma gives
/// Y(alpha+beta+gamma) <= Y(alpha) Y(beta) (1 + tol).  Empty output certifies
/// weak submultiplicativity on the table.
std::vector<std::pair<MultiIndex, MultiIndex>> weak_submult_check(const TabulatedY& Y,
                                                                  double tol = 1e-12);

/// Largest-remainder rounding of s*theta with |result| = s exactly; ties go
/// to the lowest index.
MultiIndex round_to_level(const SimplexPoint& theta, int s);

/// Diagnostic estimate of the directional limit T(theta): the value
/// Y(alpha_s)^{1/s} at the top level plus a least-squares trend slope over
/// the second half of the schedule.  Interior theta only.
struct TrendEstimate {
  double value = 0.0;
  double slope = 0.0;
  std::vector<double> path;  // per-level values
};
TrendEstimate T_estimate(const TabulatedY& Y, const SimplexPoint& theta);

/// (1/h_m(s)) sum_{|alpha|=s} (1/s) log Y(alpha); -inf sentinel (with a count
/// of the zero entries) when the level contains zeros.
struct LogAverage {
  double value = 0.0;
  bool minus_inf = false;
  int zero_count = 0;
};
LogAverage simplex_log_average(const TabulatedY& Y, int s);

/// Finite-S proxy for T^-(b) at a boundary point: the minimum of
/// Y(alpha)^{1/|alpha|} over table entries with |alpha| >= S/2 and
/// ||alpha/|alpha| - b|| <= window (default 2m/S, widened once if empty).
double boundary_liminf_proxy(const TabulatedY& Y, const SimplexPoint& b, double window = 0.0);

}  // namespace varcap
