#include "varcap/infinity.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>

#include "varcap/linalg_exact.hpp"
#include "varcap/poly_text.hpp"

namespace varcap {
namespace {

// ---------- univariate helpers ----------

// coefficients c[0..d] of g(w) = sum c_k w^k
using UniPolyQ = std::vector<GaussRational>;

GaussRational uni_eval(const UniPolyQ& g, const GaussRational& x) {
  GaussRational acc;
  for (auto it = g.rbegin(); it != g.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<std::complex<double>> companion_roots(const UniPolyQ& g) {
  int d = static_cast<int>(g.size()) - 1;
  if (d < 1) return {};
  Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(d, d);
  std::complex<double> lead = g[d].to_complex();
  for (int k = 0; k < d; ++k) C(k, d - 1) = -g[k].to_complex() / lead;
  for (int k = 1; k < d; ++k) C(k, k - 1) = 1.0;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, /*computeEigenvectors=*/false);
  std::vector<std::complex<double>> roots(d);
  for (int k = 0; k < d; ++k) roots[k] = es.eigenvalues()(k);
  return roots;
}

bool complex_less(const std::complex<double>& a, const std::complex<double>& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

bool gauss_less(const GaussRational& a, const GaussRational& b) {
  if (a.re != b.re) return a.re < b.re;
  return a.im < b.im;
}

// ---------- point helpers ----------

std::vector<std::complex<double>> to_float_point(const std::vector<GaussRational>& p) {
  std::vector<std::complex<double>> out(p.size());
  for (size_t i = 0; i < p.size(); ++i) out[i] = p[i].to_complex();
  return out;
}

std::vector<HomogPolyQ> homogenized_generators(const VarietySpec& variety,
                                               const GroebnerContext& ctx) {
  std::vector<HomogPolyQ> out;
  const auto& gens = ctx.reduced_gb.empty() ? variety.generators : ctx.reduced_gb;
  for (const auto& g : gens) out.push_back(homogenize(g));
  return out;
}

// Groebner context of I^h + <z0..z_{m-1}> in n+1 variables.
GroebnerContext s_part_context(const VarietySpec& variety, const GroebnerContext& ctx) {
  std::vector<PolyQ> gens;
  for (const auto& h : homogenized_generators(variety, ctx)) gens.push_back(h.poly);
  for (int k = 0; k < variety.m; ++k) gens.push_back(PolyQ::variable(variety.n + 1, k));
  return groebner(std::move(gens), variety.n + 1);
}

long long s_dim(const GroebnerContext& spart, int tau) {
  long long count = 0;
  for (const auto& mi : standard_monomials(spart, tau))
    if (mi.degree() == tau) ++count;
  return count;
}

// Scheme length of Vbar ∩ P: the stabilized value of dim S_tau.
struct SchemeDegree {
  int degree = 0;
  int stable_from = 0;
};

SchemeDegree scheme_degree(const GroebnerContext& spart, int tau_cap) {
  long long prev = -1;
  int run = 0;
  for (int tau = 0; tau <= tau_cap; ++tau) {
    long long d = s_dim(spart, tau);
    if (d == prev)
      ++run;
    else
      run = 0;
    prev = d;
    if (run >= 2) return {static_cast<int>(d), tau - run};
  }
  return {static_cast<int>(prev), tau_cap};
}

}  // namespace

std::optional<Rational> snap_rational(double x, int den_bound, double tol) {
  // continued-fraction convergents with bounded denominator
  double v = x;
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int it = 0; it < 64; ++it) {
    double fl = std::floor(v);
    if (fl > 1e15 || fl < -1e15) break;
    long long a = static_cast<long long>(fl);
    long long p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > den_bound) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    double rem = v - fl;
    if (std::abs(static_cast<double>(p1) / q1 - x) < 1e-13) break;
    if (rem < 1e-14) break;
    v = 1.0 / rem;
  }
  if (q1 == 0) return std::nullopt;
  Rational cand(p1, q1);
  if (std::abs(static_cast<double>(cand) - x) > tol * std::max(1.0, std::abs(x)))
    return std::nullopt;
  return cand;
}

std::vector<PointAtInfinity> points_at_infinity(const VarietySpec& variety,
                                                const GroebnerContext& ctx,
                                                const NoetherData& noether,
                                                const InfinityOptions& opts) {
  const int n = variety.n;
  const int m = noether.m;

  if (variety.hypersurface_shape() && variety.points_at_infinity_text.empty()) {
    if (ctx.reduced_gb.size() != 1)
      throw StructureError("points_at_infinity: hypersurface route needs a principal ideal");
    const PolyQ& f = ctx.reduced_gb.front();
    const int d = f.total_degree();
    // LT(f) = z_n^d (hypersurface Noether shape)
    if (f.leading_term().first != MultiIndex::unit(n, n - 1, d))
      throw StructureError("points_at_infinity: leading monomial of f is not z_n^d");

    HomogPolyQ F = homogenize(f);
    // G = the part of F supported on z_{n-1}, z_n only; g(w) = G(1, w)
    UniPolyQ g(d + 1);
    for (const auto& [mi, c] : F.poly.terms()) {
      bool tail_only = true;
      for (int k = 0; k <= n - 2; ++k)
        if (mi[k] != 0) {
          tail_only = false;
          break;
        }
      if (tail_only) g[mi[n]] += c;
    }
    if (g[d].is_zero())
      throw StructureError("points_at_infinity: tail polynomial degenerates");

    auto roots = companion_roots(g);
    std::sort(roots.begin(), roots.end(), complex_less);
    double scale = 1.0;
    for (auto& r : roots) scale = std::max(scale, std::abs(r));
    for (size_t a = 0; a + 1 < roots.size(); ++a)
      for (size_t b = a + 1; b < roots.size(); ++b)
        if (std::abs(roots[a] - roots[b]) <= opts.distinct_tol * scale)
          throw StructureError(
              "points_at_infinity: repeated root of the tail polynomial (property (2) fails)");

    // snap all roots into Q(i) if possible, verifying exactly
    std::vector<GaussRational> exact_roots;
    bool all_exact = true;
    for (const auto& r : roots) {
      auto re = snap_rational(r.real(), opts.snap_den_bound);
      auto im = snap_rational(r.imag(), opts.snap_den_bound);
      if (re && im) {
        GaussRational cand(*re, *im);
        if (uni_eval(g, cand).is_zero()) {
          exact_roots.push_back(std::move(cand));
          continue;
        }
      }
      all_exact = false;
      break;
    }

    std::vector<PointAtInfinity> out;
    if (all_exact) {
      std::sort(exact_roots.begin(), exact_roots.end(), gauss_less);
      for (const auto& b : exact_roots) {
        PointAtInfinity p;
        std::vector<GaussRational> e(n + 1);
        e[n - 1] = GaussRational::one();
        e[n] = b;
        p.coords = to_float_point(e);
        p.exact = std::move(e);
        out.push_back(std::move(p));
      }
    } else {
      for (const auto& b : roots) {
        PointAtInfinity p;
        p.coords.assign(n + 1, {0.0, 0.0});
        p.coords[n - 1] = {1.0, 0.0};
        p.coords[n] = b;
        out.push_back(std::move(p));
      }
    }
    return out;
  }

  // General route: points supplied in the variety file.
  if (variety.points_at_infinity_text.empty())
    throw StructureError(
        "points_at_infinity: non-hypersurface varieties need points_at_infinity in the variety "
        "file");

  auto spart = s_part_context(variety, ctx);
  int count = static_cast<int>(variety.points_at_infinity_text.size());
  SchemeDegree deg = scheme_degree(spart, 4 * count + 8);
  if (deg.degree != count)
    throw StructureError("points_at_infinity: variety file supplies " + std::to_string(count) +
                         " points but the scheme degree is " + std::to_string(deg.degree));

  auto hgens = homogenized_generators(variety, ctx);
  std::vector<PointAtInfinity> out;
  for (const auto& text : variety.points_at_infinity_text) {
    auto raw = parse_projective_point(text, n + 1);
    if (raw[m].is_zero())
      throw StructureError("points_at_infinity: point " + text +
                           " has z_m = 0 (property (3) fails)");
    // normalize z_m = 1
    std::vector<GaussRational> e(n + 1);
    for (int k = 0; k <= n; ++k) e[k] = raw[k] / raw[m];
    for (int k = 0; k < m; ++k)
      if (!e[k].is_zero())
        throw StructureError("points_at_infinity: point " + text +
                             " does not lie on V(z0..z_{m-1})");
    for (const auto& h : hgens)
      if (!h.poly.evaluate_exact(e).is_zero())
        throw StructureError("points_at_infinity: point " + text + " is not on the closure of V");
    PointAtInfinity p;
    p.coords = to_float_point(e);
    p.exact = std::move(e);
    out.push_back(std::move(p));
  }
  // pairwise distinct
  for (size_t a = 0; a + 1 < out.size(); ++a)
    for (size_t b = a + 1; b < out.size(); ++b)
      if (*out[a].exact == *out[b].exact)
        throw StructureError("points_at_infinity: supplied points are not distinct");
  return out;
}

namespace {

// Lagrange forms for the hypersurface case: v_i = prod_{j != i} l_j / l_j(1, beta_i),
// l_j = z_n - beta_j z_{n-1}, as exact degree-(d-1) forms in z0..zn.
std::vector<HomogPolyQ> hypersurface_interpolants_exact(
    const std::vector<PointAtInfinity>& points, int n) {
  int d = static_cast<int>(points.size());
  std::vector<GaussRational> beta(d);
  for (int i = 0; i < d; ++i) beta[i] = (*points[i].exact)[n];
  std::vector<HomogPolyQ> out;
  for (int i = 0; i < d; ++i) {
    PolyQ acc = PolyQ::constant(n + 1, GaussRational::one());
    GaussRational denom = GaussRational::one();
    for (int j = 0; j < d; ++j) {
      if (j == i) continue;
      PolyQ lj(n + 1);
      lj.add_term(MultiIndex::unit(n + 1, n), GaussRational::one());
      lj.add_term(MultiIndex::unit(n + 1, n - 1), -beta[j]);
      acc = acc * lj;
      denom *= beta[i] - beta[j];
    }
    out.emplace_back(acc.scaled(GaussRational::one() / denom), d - 1);
  }
  return out;
}

std::vector<HomogPolyC> hypersurface_interpolants_float(
    const std::vector<PointAtInfinity>& points, int n) {
  int d = static_cast<int>(points.size());
  std::vector<std::complex<double>> beta(d);
  for (int i = 0; i < d; ++i) beta[i] = points[i].coords[n];
  std::vector<HomogPolyC> out;
  for (int i = 0; i < d; ++i) {
    PolyC acc = PolyC::constant(n + 1, {1.0, 0.0});
    std::complex<double> denom{1.0, 0.0};
    for (int j = 0; j < d; ++j) {
      if (j == i) continue;
      PolyC lj(n + 1);
      lj.add_term(MultiIndex::unit(n + 1, n), {1.0, 0.0});
      lj.add_term(MultiIndex::unit(n + 1, n - 1), -beta[j]);
      acc = acc * lj;
      denom *= beta[i] - beta[j];
    }
    out.emplace_back(acc.scaled(1.0 / denom), d - 1);
  }
  return out;
}

// Candidate monomials z_m^{t-k} z^beta (beta over slots m+1..n, |beta| = k <= t)
// as (n+1)-variable multi-indices, ascending grevlex.
std::vector<MultiIndex> chart_monomials(int n, int m, int t) {
  std::vector<MultiIndex> out;
  // enumerate beta over slots m+1..n with |beta| <= t
  std::vector<int> beta(n - m, 0);
  std::function<void(int, int)> gen = [&](int pos, int remaining) {
    if (pos == n - m) {
      int k = 0;
      for (int v : beta) k += v;
      std::vector<int> mi(n + 1, 0);
      mi[m] = t - k;
      for (int idx = 0; idx < n - m; ++idx) mi[m + 1 + idx] = beta[idx];
      out.push_back(MultiIndex(std::move(mi)));
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      beta[pos] = v;
      gen(pos + 1, remaining - v);
    }
    beta[pos] = 0;
  };
  gen(0, t);
  std::sort(out.begin(), out.end(), GrevlexLess{});
  return out;
}

}  // namespace

InterpolantSet interpolants(const std::vector<PointAtInfinity>& points,
                            const VarietySpec& variety, const GroebnerContext& ctx,
                            const NoetherData& noether, const InfinityOptions& opts) {
  const int n = variety.n;
  const int m = noether.m;
  const int d = static_cast<int>(points.size());
  InterpolantSet set;
  set.d = d;

  bool all_exact = std::all_of(points.begin(), points.end(),
                               [](const PointAtInfinity& p) { return p.exact.has_value(); });

  if (variety.hypersurface_shape() && variety.points_at_infinity_text.empty()) {
    set.t = d - 1;
    set.exact = all_exact;
    if (all_exact) {
      set.v_exact = hypersurface_interpolants_exact(points, n);
      for (const auto& v : set.v_exact) set.v.push_back(to_float(v));
    } else {
      set.v = hypersurface_interpolants_float(points, n);
    }
    return set;
  }

  // General case: smallest t >= floor with an onto evaluation map and stable
  // powers (lem:Stau at tau = t, t+1).
  auto spart = s_part_context(variety, ctx);
  int t_cap = std::max(1, opts.t_cap_multiplier * d);
  int t_start = std::max(opts.t_floor, d == 1 ? 0 : 1);
  if (!all_exact)
    throw StructureError("interpolants: general route requires exact supplied points");

  for (int t = t_start; t <= t_cap; ++t) {
    auto cands = chart_monomials(n, m, t);
    // evaluation matrix rows = points, cols = candidate monomials (local eval
    // at z_m = 1 is just the monomial at the normalized coordinates)
    std::vector<std::vector<GaussRational>> M(d, std::vector<GaussRational>(cands.size()));
    for (int i = 0; i < d; ++i) {
      for (size_t c = 0; c < cands.size(); ++c) {
        GaussRational val = GaussRational::one();
        for (int slot = 0; slot <= n; ++slot)
          for (int rep = 0; rep < cands[c][slot]; ++rep) val *= (*points[i].exact)[slot];
        M[i][c] = val;
      }
    }
    // greedy independent columns in grevlex order
    std::vector<int> chosen;
    ExactRowSpace cols;
    for (size_t c = 0; c < cands.size() && static_cast<int>(chosen.size()) < d; ++c) {
      SparseRowQ row;
      for (int i = 0; i < d; ++i)
        if (!M[i][c].is_zero()) row[i] = M[i][c];
      if (cols.insert(std::move(row))) chosen.push_back(static_cast<int>(c));
    }
    if (static_cast<int>(chosen.size()) < d) continue;  // not onto at this t

    // invert the d x d evaluation submatrix: v_i = sum_c inv[c][i] * monomial_c
    std::vector<HomogPolyQ> vs;
    bool ok = true;
    for (int i = 0; i < d; ++i) {
      std::vector<std::vector<GaussRational>> A(d, std::vector<GaussRational>(d));
      std::vector<GaussRational> rhs(d);
      for (int r = 0; r < d; ++r) {
        rhs[r] = (r == i) ? GaussRational::one() : GaussRational();
        for (int c = 0; c < d; ++c) A[r][c] = M[r][chosen[c]];
      }
      auto x = solve_square(std::move(A), std::move(rhs));
      if (!x) {
        ok = false;
        break;
      }
      PolyQ v(n + 1);
      for (int c = 0; c < d; ++c)
        if (!(*x)[c].is_zero()) v.add_term(cands[chosen[c]], (*x)[c]);
      vs.emplace_back(std::move(v), t);
    }
    if (!ok) continue;

    // lem:Stau at tau = t and t+1: dim S_tau = d and the shifted interpolants
    // stay independent modulo the ideal.
    bool stau_ok = true;
    for (int tau = t; tau <= t + 1 && stau_ok; ++tau) {
      if (s_dim(spart, tau) != d) {
        stau_ok = false;
        break;
      }
      std::vector<MultiIndex> coords;
      for (const auto& mi : standard_monomials(spart, tau))
        if (mi.degree() == tau) coords.push_back(mi);
      std::map<MultiIndex, int, GrevlexLess> coord_index;
      for (size_t k = 0; k < coords.size(); ++k) coord_index[coords[k]] = static_cast<int>(k);
      std::vector<std::vector<GaussRational>> rows;
      for (const auto& v : vs) {
        PolyQ shifted = v.poly.times_monomial(MultiIndex::unit(n + 1, m, tau - t),
                                              GaussRational::one());
        PolyQ nf = normal_form(shifted, spart);
        std::vector<GaussRational> row(coords.size());
        for (const auto& [mi, c] : nf.terms()) {
          auto it = coord_index.find(mi);
          if (it == coord_index.end()) {
            stau_ok = false;
            break;
          }
          row[it->second] = c;
        }
        rows.push_back(std::move(row));
        if (!stau_ok) break;
      }
      if (stau_ok && exact_rank(rows) != d) stau_ok = false;
    }
    if (!stau_ok) continue;

    // delta verification (exact)
    for (int i = 0; i < d && ok; ++i)
      for (int j = 0; j < d && ok; ++j) {
        GaussRational val = vs[i].poly.evaluate_exact(*points[j].exact);
        GaussRational want = (i == j) ? GaussRational::one() : GaussRational();
        if (val != want) ok = false;
      }
    if (!ok) continue;

    set.t = t;
    set.exact = true;
    set.v_exact = vs;
    for (const auto& v : vs) set.v.push_back(to_float(v));
    return set;
  }
  throw StructureError("interpolants: no admissible degree t up to the cap");
}

namespace {

template <class C>
struct WitnessOut {
  std::vector<BasicPolynomial<C>> parts;  // slot 0 = h_0, slot k = h_k
  bool strict = true;
};

// Peel sum_k z_k * part_k + part_0 out of r; parts are normal forms because
// divisors of standard monomials are standard.
template <class C>
WitnessOut<C> peel(const BasicPolynomial<C>& r, int n, int m, int max_deg) {
  WitnessOut<C> out;
  out.parts.assign(m, BasicPolynomial<C>(n));
  BasicPolynomial<C> rest = r;
  for (int k = 1; k <= m - 1; ++k) {
    BasicPolynomial<C> part(n);
    BasicPolynomial<C> keep(n);
    for (const auto& [mi, c] : rest.terms()) {
      if (mi[k - 1] > 0) {
        auto q = mi.minus(MultiIndex::unit(n, k - 1));
        part.add_term(*q, c);
      } else {
        keep.add_term(mi, c);
      }
    }
    out.parts[k] = std::move(part);
    rest = std::move(keep);
  }
  out.parts[0] = std::move(rest);
  for (int k = 0; k < m; ++k) {
    if (out.parts[k].is_zero()) continue;  // deg(0) passes every bound
    if (out.parts[k].total_degree() > max_deg)
      throw StructureError("lift_and_witness: witness degree bound 2t-1 violated");
    if (out.parts[k].total_degree() >= max_deg) out.strict = false;
  }
  return out;
}

}  // namespace

std::vector<LiftedInterpolant> lift_and_witness(const InterpolantSet& interp,
                                                const GroebnerContext& ctx,
                                                const NoetherData& noether) {
  const int n = ctx.n;
  const int m = noether.m;
  const int t = interp.t;
  const int d = interp.d;
  std::vector<LiftedInterpolant> out;

  std::vector<PolyQ> bv_exact;
  std::vector<PolyC> bv_float;
  if (interp.exact) {
    for (const auto& v : interp.v_exact) {
      PolyQ nf = normal_form(dehomogenize(v), ctx);
      bv_exact.push_back(nf.homogeneous_part(t));
    }
    for (const auto& b : bv_exact) bv_float.push_back(to_float(b));
  } else {
    for (const auto& v : interp.v) {
      PolyC nf = normal_form(dehomogenize(v), ctx);
      bv_float.push_back(pruned(nf.homogeneous_part(t), 1e-12));
    }
  }

  MultiIndex zmt = MultiIndex::unit(n, m - 1, t);
  for (int i = 0; i < d; ++i) {
    LiftedInterpolant li;
    li.index = i + 1;
    li.bv = bv_float[i];
    if (interp.exact) li.bv_exact = bv_exact[i];

    if (interp.exact) {
      PolyQ r = normal_form(bv_exact[i] * bv_exact[i], ctx) -
                normal_form(bv_exact[i].times_monomial(zmt, GaussRational::one()), ctx);
      auto w = peel(r, n, m, 2 * t - 1);
      li.self_h_exact.resize(m);
      for (int k = 0; k < m; ++k) {
        li.self_h.push_back(to_float(w.parts[k]));
        li.self_h_exact[k] = w.parts[k];
      }
      for (int j = 0; j < d; ++j) {
        if (j == i) continue;
        PolyQ rc = normal_form(bv_exact[i] * bv_exact[j], ctx);
        auto wc = peel(rc, n, m, 2 * t - 1);
        LiftedInterpolant::Cross cr;
        cr.j = j + 1;
        cr.strict = wc.strict;
        for (int k = 0; k < m; ++k) cr.q.push_back(to_float(wc.parts[k]));
        li.cross.push_back(std::move(cr));
      }
    } else {
      PolyC r = normal_form(bv_float[i] * bv_float[i], ctx) -
                normal_form(bv_float[i].times_monomial(zmt, {1.0, 0.0}), ctx);
      r = pruned(r, 1e-10);
      auto w = peel(r, n, m, 2 * t - 1);
      li.self_h = w.parts;
      li.self_h_exact.resize(m);
      for (int j = 0; j < d; ++j) {
        if (j == i) continue;
        PolyC rc = pruned(normal_form(bv_float[i] * bv_float[j], ctx), 1e-10);
        auto wc = peel(rc, n, m, 2 * t - 1);
        LiftedInterpolant::Cross cr;
        cr.j = j + 1;
        cr.strict = wc.strict;
        cr.q = wc.parts;
        li.cross.push_back(std::move(cr));
      }
    }
    out.push_back(std::move(li));
  }
  return out;
}

}  // namespace varcap
