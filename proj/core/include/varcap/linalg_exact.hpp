#pragma once

#include <map>
#include <optional>
#include <vector>

#include "varcap/gauss_rational.hpp"

namespace varcap {

using SparseRowQ = std::map<int, GaussRational>;  // coordinate index -> value

/// Incremental exact row space over Q(i).  Rows are kept in echelon form
/// pivoted on their largest coordinate index.
class ExactRowSpace {
 public:
  /// Reduce `row` against the stored pivots; returns the residual.
  SparseRowQ reduce(SparseRowQ row) const {
    for (;;) {
      if (row.empty()) return row;
      int lead = row.rbegin()->first;
      auto it = pivots_.find(lead);
      if (it == pivots_.end()) return row;
      GaussRational f = row.rbegin()->second;  // pivot rows are monic
      subtract_scaled(row, it->second, f);
    }
  }

  /// True (and the row is absorbed) when independent of the current space.
  bool insert(SparseRowQ row) {
    row = reduce(std::move(row));
    if (row.empty()) return false;
    GaussRational lead = row.rbegin()->second;
    int idx = row.rbegin()->first;
    for (auto& [k, v] : row) v /= lead;
    pivots_.emplace(idx, std::move(row));
    return true;
  }

  int rank() const { return static_cast<int>(pivots_.size()); }

 private:
  static void subtract_scaled(SparseRowQ& a, const SparseRowQ& b, const GaussRational& f) {
    for (const auto& [k, v] : b) {
      auto it = a.find(k);
      if (it == a.end()) {
        GaussRational nv = -(f * v);
        if (!nv.is_zero()) a.emplace(k, std::move(nv));
      } else {
        it->second -= f * v;
        if (it->second.is_zero()) a.erase(it);
      }
    }
  }

  std::map<int, SparseRowQ> pivots_;
};

/// Solve sum_j x_j col_j = target exactly; nullopt when inconsistent or the
/// columns are dependent in a way that blocks back-substitution.
std::optional<std::vector<GaussRational>> solve_exact(const std::vector<SparseRowQ>& cols,
                                                      const SparseRowQ& target, int dim);

/// Rank of a dense exact matrix (rows x cols), by Gaussian elimination.
int exact_rank(std::vector<std::vector<GaussRational>> a);

/// Solve the square system A x = b exactly; nullopt when singular.
std::optional<std::vector<GaussRational>> solve_square(std::vector<std::vector<GaussRational>> a,
                                                       std::vector<GaussRational> b);

}  // namespace varcap
