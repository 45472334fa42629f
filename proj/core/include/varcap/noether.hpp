#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "varcap/groebner.hpp"

namespace varcap {

/// Witness for one variable z_i beyond the normalization: the minimal d_i
/// with z_i^{d_i} in <LT(I)>, and a monic relation
///   g_i = z_i^{d_i} + sum_j h_ij(z_1..z_{i-1}) z_i^j,  deg h_ij + j <= d_i.
struct NoetherWitness {
  int var = 0;  // 1-based variable index i
  int d = 0;
  PolyQ g;
};

struct NoetherData {
  int m = 0;
  std::vector<NoetherWitness> witnesses;  // for i = m+1..n

  int degree_for(int var) const {
    for (const auto& w : witnesses)
      if (w.var == var) return w.d;
    throw DimensionError("NoetherData: no witness for variable");
  }
};

struct NoetherFailure {
  std::string clause;  // "standard-monomials" | "pure-power" | "witness-shape"
  int var = -1;
  std::optional<MultiIndex> offending;
  std::string message;
};

struct NoetherResult {
  std::optional<NoetherData> data;
  std::optional<NoetherFailure> failure;
  bool ok() const { return data.has_value(); }
};

/// Checks that C[z_1..z_m] embeds into C[z]_I (no leading monomial supported
/// on z_1..z_m) and that each z_i, i > m, carries a pure power in <LT(I)>
/// whose reduced-basis witness has the required degree shape.  Powers are
/// scanned up to `d_cap`.  A failed check is reported as "not verified", not
/// as a crash.
NoetherResult noether_verify(const GroebnerContext& ctx, int m, int d_cap = 64);

using LinearChange = std::vector<std::vector<GaussRational>>;  // z_i -> sum_j T[i][j] z_j

/// Substitute z_i -> sum_j T[i][j] z_j in every generator (exact).
std::vector<PolyQ> apply_linear_change(const std::vector<PolyQ>& gens, const LinearChange& T);

struct LinearChangeResult {
  std::vector<PolyQ> generators;
  LinearChange T;
};

/// Identity plus small random integer entries, redrawn (up to `max_tries`)
/// until invertible; deterministic in `seed`.
LinearChangeResult random_linear_change(const std::vector<PolyQ>& gens, std::uint64_t seed,
                                        int max_tries = 16);

/// Exact determinant of the substitution matrix.
GaussRational change_determinant(const LinearChange& T);

}  // namespace varcap
