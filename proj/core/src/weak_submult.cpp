#include "varcap/weak_submult.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "varcap/groebner.hpp"

namespace varcap {
namespace {

std::vector<MultiIndex> level(int m, int s) {
  std::vector<MultiIndex> out;
  std::vector<int> cur(m, 0);
  std::function<void(int, int)> gen = [&](int pos, int remaining) {
    if (pos == m) {
      if (remaining == 0) out.emplace_back(cur);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      cur[pos] = v;
      gen(pos + 1, remaining - v);
    }
    cur[pos] = 0;
  };
  gen(0, s);
  std::sort(out.begin(), out.end(), GrevlexLess{});
  return out;
}

}  // namespace

long long h_m(int m, int s) {
  if (s < 0) return 0;
  return binomial(s + m - 1, m - 1);
}

SimplexPoint::SimplexPoint(std::vector<double> th) : theta(std::move(th)) {
  double sum = 0;
  for (double v : theta) {
    if (v < 0) throw DimensionError("SimplexPoint: negative coordinate");
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw DimensionError("SimplexPoint: coordinates must sum to 1");
}

bool SimplexPoint::interior() const {
  for (double v : theta)
    if (v <= 0) return false;
  return true;
}

TabulatedY TabulatedY::tabulate(int m, int S, const std::function<double(const MultiIndex&)>& f,
                                std::vector<MultiIndex> offsets) {
  TabulatedY Y;
  Y.m = m;
  Y.S = S;
  Y.offsets = std::move(offsets);
  if (Y.offsets.empty()) Y.offsets.push_back(MultiIndex::zero(m));
  for (int s = 0; s <= S; ++s)
    for (const auto& a : level(m, s)) {
      double v = f(a);
      if (v < 0) throw NumericalError("TabulatedY: negative value");
      Y.values.emplace(a, v);
    }
  Y.observe_growth();
  return Y;
}

double TabulatedY::at(const MultiIndex& a) const {
  auto it = values.find(a);
  if (it == values.end()) throw DimensionError("TabulatedY: index outside the table");
  return it->second;
}

void TabulatedY::observe_growth() {
  double r = 0.0, c = 1.0;
  for (const auto& [a, v] : values) {
    if (a.degree() == 0)
      c = std::max(c, v);
    else if (v > 0)
      r = std::max(r, std::pow(v, 1.0 / a.degree()));
  }
  growth_r = std::max(r, 1e-300);
  growth_C = c;
}

std::vector<std::pair<MultiIndex, MultiIndex>> weak_submult_check(const TabulatedY& Y,
                                                                  double tol) {
  int max_off = 0;
  for (const auto& g : Y.offsets) max_off = std::max(max_off, g.degree());
  std::vector<std::pair<MultiIndex, MultiIndex>> bad;
  for (const auto& [a, va] : Y.values) {
    for (const auto& [b, vb] : Y.values) {
      if (a.degree() + b.degree() + max_off > Y.S) continue;
      bool ok = false;
      for (const auto& g : Y.offsets) {
        double lhs = Y.at(a.plus(b).plus(g));
        if (lhs <= va * vb * (1.0 + tol)) {
          ok = true;
          break;
        }
      }
      if (!ok) bad.emplace_back(a, b);
    }
  }
  return bad;
}

MultiIndex round_to_level(const SimplexPoint& theta, int s) {
  int m = theta.dim();
  std::vector<int> base(m);
  std::vector<std::pair<double, int>> fracs(m);
  int used = 0;
  for (int k = 0; k < m; ++k) {
    double x = s * theta.theta[k];
    base[k] = static_cast<int>(std::floor(x));
    used += base[k];
    fracs[k] = {x - base[k], k};
  }
  // distribute the remainder to the largest fractional parts, lowest index on ties
  std::stable_sort(fracs.begin(), fracs.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  int rem = s - used;
  for (int k = 0; k < rem; ++k) base[fracs[k % m].second] += 1;
  return MultiIndex(std::move(base));
}

TrendEstimate T_estimate(const TabulatedY& Y, const SimplexPoint& theta) {
  if (theta.dim() != Y.m) throw DimensionError("T_estimate: dimension mismatch");
  if (!theta.interior())
    throw DimensionError("T_estimate: boundary direction (use boundary_liminf_proxy)");
  TrendEstimate out;
  for (int s = 1; s <= Y.S; ++s) {
    MultiIndex a = round_to_level(theta, s);
    out.path.push_back(std::pow(Y.at(a), 1.0 / s));
  }
  out.value = out.path.back();
  // least-squares slope over the second half
  int lo = static_cast<int>(out.path.size()) / 2;
  int k = static_cast<int>(out.path.size()) - lo;
  if (k >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int idx = lo; idx < static_cast<int>(out.path.size()); ++idx) {
      double x = idx + 1, y = out.path[idx];
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    out.slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  }
  return out;
}

LogAverage simplex_log_average(const TabulatedY& Y, int s) {
  if (s < 1 || s > Y.S) throw DimensionError("simplex_log_average: level outside the table");
  LogAverage out;
  double sum = 0;
  long long count = 0;
  for (const auto& a : level(Y.m, s)) {
    double v = Y.at(a);
    if (v <= 0) {
      ++out.zero_count;
      continue;
    }
    sum += std::log(v) / s;
    ++count;
  }
  if (out.zero_count > 0) {
    out.minus_inf = true;
    out.value = -std::numeric_limits<double>::infinity();
    return out;
  }
  out.value = sum / static_cast<double>(h_m(Y.m, s));
  (void)count;
  return out;
}

double boundary_liminf_proxy(const TabulatedY& Y, const SimplexPoint& b, double window) {
  if (b.dim() != Y.m) throw DimensionError("boundary_liminf_proxy: dimension mismatch");
  if (b.interior())
    throw DimensionError("boundary_liminf_proxy: interior direction (use T_estimate)");
  if (window <= 0) window = 2.0 * Y.m / Y.S;
  for (int widen = 0; widen < 2; ++widen) {
    double best = std::numeric_limits<double>::infinity();
    bool found = false;
    for (const auto& [a, v] : Y.values) {
      if (2 * a.degree() < Y.S || a.degree() == 0) continue;
      double dist2 = 0;
      for (int k = 0; k < Y.m; ++k) {
        double diff = static_cast<double>(a[k]) / a.degree() - b.theta[k];
        dist2 += diff * diff;
      }
      if (std::sqrt(dist2) > window) continue;
      found = true;
      best = std::min(best, v > 0 ? std::pow(v, 1.0 / a.degree())
                                  : -std::numeric_limits<double>::infinity());
    }
    if (found) return best;
    window *= 2.0;
  }
  throw NumericalError("boundary_liminf_proxy: empty window after widening");
}

}  // namespace varcap
