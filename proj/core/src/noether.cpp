#include "varcap/noether.hpp"

#include <random>

namespace varcap {

NoetherResult noether_verify(const GroebnerContext& ctx, int m, int d_cap) {
  if (m < 1 || m > ctx.n) throw DimensionError("noether_verify: m out of range");
  NoetherResult res;
  if (ctx.unit_ideal) {
    res.failure = NoetherFailure{"standard-monomials", -1, std::nullopt,
                                 "unit ideal: the variety is empty"};
    return res;
  }

  // (a) no leading monomial supported on z_1..z_m only: every monomial of
  // C[z_1..z_m] stays standard.
  for (const auto& lt : ctx.lt_set) {
    if (lt.supported_below(m)) {
      res.failure = NoetherFailure{
          "standard-monomials", -1, lt,
          "leading monomial involves only z_1..z_" + std::to_string(m)};
      return res;
    }
  }

  NoetherData data;
  data.m = m;
  for (int var = m + 1; var <= ctx.n; ++var) {
    // minimal d with z_var^d in <LT(I)>, scanned up to the cap
    int d = -1;
    for (int k = 1; k <= d_cap; ++k) {
      if (ctx.in_lt_ideal(MultiIndex::unit(ctx.n, var - 1, k))) {
        d = k;
        break;
      }
    }
    if (d < 0) {
      res.failure = NoetherFailure{"pure-power", var, std::nullopt,
                                   "no pure power of z_" + std::to_string(var) + " in <LT(I)> up to degree " +
                                       std::to_string(d_cap)};
      return res;
    }
    // the reduced-basis element with that leading monomial
    MultiIndex want = MultiIndex::unit(ctx.n, var - 1, d);
    const PolyQ* witness = nullptr;
    for (const auto& g : ctx.reduced_gb)
      if (g.leading_term().first == want) {
        witness = &g;
        break;
      }
    if (!witness) {
      res.failure = NoetherFailure{"pure-power", var, want,
                                   "no reduced-basis element with leading monomial z_" +
                                       std::to_string(var) + "^" + std::to_string(d)};
      return res;
    }
    // shape: every non-leading term z^gamma has gamma supported on z_1..z_var,
    // gamma_var < d, and |gamma| <= d.
    for (const auto& [mi, c] : witness->terms()) {
      if (mi == want) continue;
      bool bad = !mi.supported_below(var) || mi[var - 1] >= d || mi.degree() > d;
      if (bad) {
        res.failure = NoetherFailure{"witness-shape", var, mi,
                                     "witness term violates the degree shape"};
        return res;
      }
    }
    data.witnesses.push_back(NoetherWitness{var, d, *witness});
  }
  res.data = std::move(data);
  return res;
}

std::vector<PolyQ> apply_linear_change(const std::vector<PolyQ>& gens, const LinearChange& T) {
  if (gens.empty()) return {};
  int n = gens.front().vars();
  if (static_cast<int>(T.size()) != n) throw DimensionError("linear change: matrix size != n");
  std::vector<PolyQ> forms;
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(T[i].size()) != n) throw DimensionError("linear change: matrix not square");
    PolyQ f(n);
    for (int j = 0; j < n; ++j)
      if (!T[i][j].is_zero()) f.add_term(MultiIndex::unit(n, j), T[i][j]);
    forms.push_back(std::move(f));
  }
  std::vector<PolyQ> out;
  out.reserve(gens.size());
  for (const auto& g : gens) {
    // powers of each form, grown on demand
    std::vector<std::vector<PolyQ>> pow(n);
    for (int v = 0; v < n; ++v) pow[v].push_back(PolyQ::constant(n, GaussRational::one()));
    PolyQ acc(n);
    for (const auto& [mi, c] : g.terms()) {
      PolyQ term = PolyQ::constant(n, c);
      for (int v = 0; v < n; ++v) {
        auto& pv = pow[v];
        while (static_cast<int>(pv.size()) <= mi[v]) pv.push_back(pv.back() * forms[v]);
        if (mi[v] > 0) term = term * pv[mi[v]];
      }
      acc = acc + term;
    }
    out.push_back(std::move(acc));
  }
  return out;
}

GaussRational change_determinant(const LinearChange& T) {
  int n = static_cast<int>(T.size());
  std::vector<std::vector<GaussRational>> a = T;
  GaussRational det = GaussRational::one();
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!a[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return GaussRational();
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (int r = col + 1; r < n; ++r) {
      if (a[r][col].is_zero()) continue;
      GaussRational f = a[r][col] / a[col][col];
      for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

LinearChangeResult random_linear_change(const std::vector<PolyQ>& gens, std::uint64_t seed,
                                        int max_tries) {
  if (gens.empty()) throw DimensionError("random_linear_change: no generators");
  int n = gens.front().vars();
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    LinearChange T(n, std::vector<GaussRational>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        long r = static_cast<long>(rng() % 5) - 2;  // portable draw in [-2, 2]
        T[i][j] = GaussRational(Rational(r) + (i == j ? 1 : 0));
      }
    if (!change_determinant(T).is_zero())
      return LinearChangeResult{apply_linear_change(gens, T), std::move(T)};
  }
  throw NumericalError("random_linear_change: no invertible draw within the retry bound");
}

}  // namespace varcap
