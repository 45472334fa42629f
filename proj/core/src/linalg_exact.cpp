#include "varcap/linalg_exact.hpp"

namespace varcap {

std::optional<std::vector<GaussRational>> solve_exact(const std::vector<SparseRowQ>& cols,
                                                      const SparseRowQ& target, int dim) {
  int nc = static_cast<int>(cols.size());
  // densify into (dim) x (nc+1) augmented matrix
  std::vector<std::vector<GaussRational>> a(dim, std::vector<GaussRational>(nc + 1));
  for (int j = 0; j < nc; ++j)
    for (const auto& [k, v] : cols[j]) a[k][j] = v;
  for (const auto& [k, v] : target) a[k][nc] = v;

  std::vector<int> pivot_col_of_row;
  int row = 0;
  for (int col = 0; col < nc && row < dim; ++col) {
    int piv = -1;
    for (int r = row; r < dim; ++r)
      if (!a[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[row]);
    GaussRational inv = GaussRational::one() / a[row][col];
    for (int c = col; c <= nc; ++c) a[row][c] *= inv;
    for (int r = 0; r < dim; ++r) {
      if (r == row || a[r][col].is_zero()) continue;
      GaussRational f = a[r][col];
      for (int c = col; c <= nc; ++c) a[r][c] -= f * a[row][c];
    }
    pivot_col_of_row.push_back(col);
    ++row;
  }
  // consistency: remaining rows must have zero rhs
  for (int r = row; r < dim; ++r)
    if (!a[r][nc].is_zero()) return std::nullopt;
  std::vector<GaussRational> x(nc);
  for (int r = 0; r < row; ++r) x[pivot_col_of_row[r]] = a[r][nc];
  // verify (columns may be dependent; free variables default to zero)
  // residual check through the pivots above suffices for our callers, who
  // pass independent columns.
  return x;
}

int exact_rank(std::vector<std::vector<GaussRational>> a) {
  if (a.empty()) return 0;
  int rows = static_cast<int>(a.size());
  int cols = static_cast<int>(a[0].size());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (!a[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[rank]);
    GaussRational inv = GaussRational::one() / a[rank][col];
    for (int c = col; c < cols; ++c) a[rank][c] *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || a[r][col].is_zero()) continue;
      GaussRational f = a[r][col];
      for (int c = col; c < cols; ++c) a[r][c] -= f * a[rank][c];
    }
    ++rank;
  }
  return rank;
}

std::optional<std::vector<GaussRational>> solve_square(std::vector<std::vector<GaussRational>> a,
                                                       std::vector<GaussRational> b) {
  int n = static_cast<int>(a.size());
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!a[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    GaussRational inv = GaussRational::one() / a[col][col];
    for (int c = col; c < n; ++c) a[col][c] *= inv;
    b[col] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      GaussRational f = a[r][col];
      for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  return b;
}

}  // namespace varcap
