#include "varcap/groebner.hpp"

#include <algorithm>
#include <set>

namespace varcap {
namespace {

MultiIndex exponent_lcm(const MultiIndex& a, const MultiIndex& b) {
  std::vector<int> e(a.size());
  for (int i = 0; i < a.size(); ++i) e[i] = std::max(a[i], b[i]);
  return MultiIndex(std::move(e));
}

bool coprime(const MultiIndex& a, const MultiIndex& b) {
  for (int i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

PolyQ make_monic(const PolyQ& p) {
  if (p.is_zero()) return p;
  return p.scaled(GaussRational::one() / p.leading_term().second);
}

/// Full division remainder against `basis` (assumed monic).  Deterministic:
/// always reduces the current leading term by the lowest-index divisor.
PolyQ reduce_full(const PolyQ& p, const std::vector<PolyQ>& basis) {
  PolyQ work = p;
  PolyQ rem(p.vars());
  while (!work.is_zero()) {
    const auto& [mi, c] = work.leading_term();
    bool reduced = false;
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      const auto& glt = g.leading_term().first;
      if (auto q = mi.minus(glt)) {
        work = work - g.times_monomial(*q, c);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.add_term(mi, c);
      // subtract exactly the moved term
      PolyQ t = PolyQ::monomial(mi, c);
      work = work - t;
    }
  }
  return rem;
}

PolyQ s_poly(const PolyQ& f, const PolyQ& g) {
  const auto& lf = f.leading_term();
  const auto& lg = g.leading_term();
  MultiIndex l = exponent_lcm(lf.first, lg.first);
  PolyQ a = f.times_monomial(*l.minus(lf.first), GaussRational::one() / lf.second);
  PolyQ b = g.times_monomial(*l.minus(lg.first), GaussRational::one() / lg.second);
  return a - b;
}

}  // namespace

GroebnerContext groebner(std::vector<PolyQ> generators, int n) {
  GroebnerContext ctx;
  ctx.generators = generators;
  ctx.n = generators.empty() ? std::max(n, 0) : generators.front().vars();
  if (n >= 0 && ctx.n != n) throw DimensionError("groebner: generator variable count != n");
  for (const auto& g : generators)
    if (g.vars() != ctx.n) throw FieldError("groebner: generators over different variable counts");

  std::vector<PolyQ> basis;
  for (const auto& g : generators)
    if (!g.is_zero()) basis.push_back(make_monic(g));

  // Pair queue keyed by lcm (normal selection strategy).
  struct Pair {
    MultiIndex lcm;
    int i, j;
  };
  auto pair_less = [](const Pair& a, const Pair& b) {
    Ordering o = grevlex_compare(a.lcm, b.lcm);
    if (o != Ordering::Equal) return o == Ordering::Less;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };
  std::vector<Pair> pairs;
  auto push_pairs_for = [&](int j) {
    for (int i = 0; i < j; ++i) {
      const auto& li = basis[i].leading_term().first;
      const auto& lj = basis[j].leading_term().first;
      if (coprime(li, lj)) continue;  // Buchberger's product criterion
      pairs.push_back({exponent_lcm(li, lj), i, j});
    }
  };
  for (int j = 0; j < static_cast<int>(basis.size()); ++j) push_pairs_for(j);

  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(), pair_less);
    Pair p = *it;
    pairs.erase(it);
    PolyQ s = reduce_full(s_poly(basis[p.i], basis[p.j]), basis);
    if (s.is_zero()) continue;
    basis.push_back(make_monic(s));
    push_pairs_for(static_cast<int>(basis.size()) - 1);
  }

  // Minimalize: drop elements whose LT is divisible by another's LT.
  std::vector<PolyQ> minimal;
  for (size_t i = 0; i < basis.size(); ++i) {
    const auto& lt = basis[i].leading_term().first;
    bool keep = true;
    for (size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      const auto& lj = basis[j].leading_term().first;
      if (lj.divides(lt) && !(lt == lj && j > i)) {
        keep = false;
        break;
      }
    }
    if (keep) minimal.push_back(basis[i]);
  }

  // Inter-reduce tails.
  std::vector<PolyQ> reduced = minimal;
  for (size_t i = 0; i < reduced.size(); ++i) {
    std::vector<PolyQ> others;
    for (size_t j = 0; j < reduced.size(); ++j)
      if (j != i) others.push_back(reduced[j]);
    reduced[i] = make_monic(reduce_full(reduced[i], others));
  }
  std::sort(reduced.begin(), reduced.end(), [](const PolyQ& a, const PolyQ& b) {
    return grevlex_compare(a.leading_term().first, b.leading_term().first) == Ordering::Less;
  });

  // 1 in the ideal?
  if (!reduced.empty() && reduced.front().leading_term().first.is_zero()) {
    ctx.unit_ideal = true;
    reduced = {PolyQ::constant(ctx.n, GaussRational::one())};
  }

  ctx.reduced_gb = reduced;
  for (const auto& g : reduced) {
    ctx.lt_set.push_back(g.leading_term().first);
    ctx.reduced_gb_float.push_back(to_float(g));
  }
  return ctx;
}

PolyQ normal_form(const PolyQ& p, const GroebnerContext& ctx) {
  if (p.vars() != ctx.n) throw DimensionError("normal_form: variable count mismatch");
  if (ctx.reduced_gb.empty()) return p;
  return reduce_full(p, ctx.reduced_gb);
}

PolyC normal_form(const PolyC& p, const GroebnerContext& ctx, double chop) {
  if (p.vars() != ctx.n) throw DimensionError("normal_form: variable count mismatch");
  if (ctx.reduced_gb_float.empty()) return p;
  double scale = 0.0;
  for (const auto& [mi, c] : p.terms()) scale = std::max(scale, std::abs(c));
  if (scale == 0.0) return p;

  PolyC work = p;
  PolyC rem(p.vars());
  while (!work.is_zero()) {
    auto [mi, c] = work.leading_term();
    if (std::abs(c) <= chop * scale) {
      work = work - PolyC::monomial(mi, c);
      continue;
    }
    bool reduced = false;
    for (const auto& g : ctx.reduced_gb_float) {
      const auto& glt = g.leading_term().first;
      if (auto q = mi.minus(glt)) {
        work = work - g.times_monomial(*q, c);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.add_term(mi, c);
      work = work - PolyC::monomial(mi, c);
    }
  }
  return rem;
}

namespace {

void enumerate_rec(int n, int var, int remaining, std::vector<int>& cur,
                   const GroebnerContext& ctx, std::vector<MultiIndex>& out) {
  if (var == n) {
    MultiIndex mi(cur);
    if (!ctx.in_lt_ideal(mi)) out.push_back(std::move(mi));
    return;
  }
  for (int e = 0; e <= remaining; ++e) {
    cur[var] = e;
    enumerate_rec(n, var + 1, remaining - e, cur, ctx, out);
  }
  cur[var] = 0;
}

}  // namespace

std::vector<MultiIndex> standard_monomials(const GroebnerContext& ctx, int s) {
  if (s < 0) throw DimensionError("standard_monomials: negative degree bound");
  std::vector<MultiIndex> out;
  if (ctx.unit_ideal) return out;
  std::vector<int> cur(ctx.n, 0);
  enumerate_rec(ctx.n, 0, s, cur, ctx, out);
  std::sort(out.begin(), out.end(), GrevlexLess{});
  return out;
}

long long hilbert_dim(const GroebnerContext& ctx, int s) {
  return static_cast<long long>(standard_monomials(ctx, s).size());
}

long long binomial(int a, int b) {
  if (b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  long long r = 1;
  for (int k = 1; k <= b; ++k) r = r * (a - b + k) / k;
  return r;
}

}  // namespace varcap
