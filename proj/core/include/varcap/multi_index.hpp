#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "varcap/errors.hpp"

namespace varcap {

/// Exponent vector of a monomial in n variables, with cached total degree.
class MultiIndex {
 public:
  MultiIndex() = default;

  explicit MultiIndex(std::vector<int> exps) : exps_(std::move(exps)) {
    for (int e : exps_) {
      if (e < 0) throw DimensionError("MultiIndex: negative exponent");
      degree_ += e;
    }
  }

  static MultiIndex zero(int n) { return MultiIndex(std::vector<int>(n, 0)); }

  static MultiIndex unit(int n, int var, int power = 1) {
    std::vector<int> e(n, 0);
    if (var < 0 || var >= n) throw DimensionError("MultiIndex::unit: variable out of range");
    e[var] = power;
    return MultiIndex(std::move(e));
  }

  int size() const { return static_cast<int>(exps_.size()); }
  int degree() const { return degree_; }
  int operator[](int i) const { return exps_[i]; }
  const std::vector<int>& exponents() const { return exps_; }

  MultiIndex plus(const MultiIndex& o) const {
    require_same_size(o);
    std::vector<int> e(exps_);
    for (int i = 0; i < size(); ++i) e[i] += o.exps_[i];
    return MultiIndex(std::move(e));
  }

  /// Componentwise difference; nullopt if any entry would go negative.
  std::optional<MultiIndex> minus(const MultiIndex& o) const {
    require_same_size(o);
    std::vector<int> e(exps_);
    for (int i = 0; i < size(); ++i) {
      e[i] -= o.exps_[i];
      if (e[i] < 0) return std::nullopt;
    }
    return MultiIndex(std::move(e));
  }

  /// True when this monomial divides m.
  bool divides(const MultiIndex& m) const {
    require_same_size(m);
    for (int i = 0; i < size(); ++i)
      if (exps_[i] > m.exps_[i]) return false;
    return true;
  }

  /// True when only variables with index < k (0-based) appear.
  bool supported_below(int k) const {
    for (int i = k; i < size(); ++i)
      if (exps_[i] != 0) return false;
    return true;
  }

  bool is_zero() const { return degree_ == 0; }

  bool operator==(const MultiIndex& o) const { return exps_ == o.exps_; }
  bool operator!=(const MultiIndex& o) const { return exps_ != o.exps_; }

 private:
  void require_same_size(const MultiIndex& o) const {
    if (o.size() != size()) throw DimensionError("MultiIndex: length mismatch");
  }

  std::vector<int> exps_;
  int degree_ = 0;
};

enum class Ordering { Less, Equal, Greater };

/// Graded order with z1 < z2 < ... < zn: a < b iff |a| < |b|, or |a| = |b|
/// and the first nonzero entry of a - b is positive.  For a generator of the
/// Noether shape this makes the pure power z_i^{d_i} the leading monomial,
/// and on the sphere relation the leading monomial is z3^2.
inline Ordering grevlex_compare(const MultiIndex& a, const MultiIndex& b) {
  if (a.size() != b.size()) throw DimensionError("grevlex_compare: length mismatch");
  if (a.degree() != b.degree())
    return a.degree() < b.degree() ? Ordering::Less : Ordering::Greater;
  for (int i = 0; i < a.size(); ++i) {
    int d = a[i] - b[i];
    if (d > 0) return Ordering::Less;
    if (d < 0) return Ordering::Greater;
  }
  return Ordering::Equal;
}

struct GrevlexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const {
    return grevlex_compare(a, b) == Ordering::Less;
  }
};

}  // namespace varcap
