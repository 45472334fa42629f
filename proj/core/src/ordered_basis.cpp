#include "varcap/ordered_basis.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "varcap/linalg_exact.hpp"
#include "varcap/poly_text.hpp"
#include "varcap/weak_submult.hpp"

namespace varcap {
namespace {

// Incremental float row space (modified Gram-Schmidt with threshold), used
// only when exact coordinates are unavailable.
class FloatRowSpace {
 public:
  explicit FloatRowSpace(int dim) : dim_(dim) {}

  bool insert(std::vector<std::complex<double>> row) {
    double norm0 = norm(row);
    if (norm0 == 0.0) return false;
    for (const auto& b : basis_) {
      std::complex<double> proj{0, 0};
      for (int k = 0; k < dim_; ++k) proj += std::conj(b[k]) * row[k];
      for (int k = 0; k < dim_; ++k) row[k] -= proj * b[k];
    }
    double res = norm(row);
    if (res <= 1e-9 * norm0) return false;
    for (auto& v : row) v /= res;
    basis_.push_back(std::move(row));
    return true;
  }

 private:
  static double norm(const std::vector<std::complex<double>>& v) {
    double s = 0;
    for (const auto& x : v) s += std::norm(x);
    return std::sqrt(s);
  }
  int dim_;
  std::vector<std::vector<std::complex<double>>> basis_;
};

std::vector<MultiIndex> degree_slices(int len, int total) {
  // all multi-indices of the given length with |alpha| = total, grevlex order
  std::vector<MultiIndex> out;
  std::vector<int> cur(len, 0);
  std::function<void(int, int)> gen = [&](int pos, int remaining) {
    if (pos == len) {
      if (remaining == 0) out.emplace_back(cur);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      cur[pos] = v;
      gen(pos + 1, remaining - v);
    }
    cur[pos] = 0;
  };
  gen(0, total);
  std::sort(out.begin(), out.end(), GrevlexLess{});
  return out;
}

MultiIndex embed(const MultiIndex& part, int n, int offset) {
  std::vector<int> e(n, 0);
  for (int k = 0; k < part.size(); ++k) e[offset + k] = part[k];
  return MultiIndex(std::move(e));
}

std::string tuple_text(const MultiIndex& mi) {
  std::string s = "(";
  for (int k = 0; k < mi.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(mi[k]);
  }
  return s + ")";
}

}  // namespace

int OrderedBasisC::starstar_index(const MultiIndex& alpha_m, int i) const {
  for (size_t k = 0; k < elements.size(); ++k) {
    const auto& e = elements[k];
    if (e.kind == BasisElement::Kind::StarStar && e.bv_index == i && e.alpha == alpha_m)
      return static_cast<int>(k);
  }
  return -1;
}

std::vector<int> OrderedBasisC::star_indices(const MultiIndex& alpha_prime) const {
  std::vector<int> out;
  for (size_t k = 0; k < elements.size(); ++k) {
    const auto& e = elements[k];
    if (e.kind == BasisElement::Kind::Star && e.alpha == alpha_prime)
      out.push_back(static_cast<int>(k));
  }
  return out;
}

OrderedBasisC build_basis(const VarietySpec& variety, const GroebnerContext& ctx,
                          const NoetherData& noether, const InterpolantSet& interp,
                          const std::vector<LiftedInterpolant>& lifted, int s_max) {
  OrderedBasisC basis;
  basis.n = variety.n;
  basis.m = noether.m;
  basis.d = interp.d;
  basis.t = interp.t;
  basis.s_max = s_max;
  basis.exact = interp.exact;
  const int n = basis.n, m = basis.m, d = basis.d, t = basis.t;

  // calB = { z_m^l z^beta standard : l + |beta| <= t-1 }
  for (int total = 0; total <= t - 1; ++total) {
    for (int l = total; l >= 0; --l) {
      for (const auto& beta : degree_slices(n - m, total - l)) {
        MultiIndex mono = embed(beta, n, m).plus(MultiIndex::unit(n, m - 1, l));
        if (!ctx.in_lt_ideal(mono)) basis.calB.push_back(mono);
      }
    }
  }
  std::sort(basis.calB.begin(), basis.calB.end(), GrevlexLess{});

  // coordinates: standard monomials through degree s_max
  auto coords = standard_monomials(ctx, s_max);
  std::map<MultiIndex, int, GrevlexLess> coord_index;
  for (size_t k = 0; k < coords.size(); ++k) coord_index[coords[k]] = static_cast<int>(k);
  const int dim = static_cast<int>(coords.size());

  ExactRowSpace exact_space;
  FloatRowSpace float_space(dim);

  auto exact_row = [&](const PolyQ& p) {
    SparseRowQ row;
    for (const auto& [mi, c] : p.terms()) row[coord_index.at(mi)] = c;
    return row;
  };
  auto float_row = [&](const PolyC& p) {
    std::vector<std::complex<double>> row(dim, {0, 0});
    for (const auto& [mi, c] : p.terms()) row[coord_index.at(mi)] = c;
    return row;
  };
  auto insert_element = [&](BasisElement& e) {
    if (basis.exact) return exact_space.insert(exact_row(*e.nf_exact));
    return float_space.insert(float_row(e.nf));
  };

  basis.h_s.assign(s_max + 1, 0);
  basis.m_s.assign(s_max + 1, 0);
  basis.l_s.assign(s_max + 1, 0);
  basis.a_s.assign(s_max + 1, 0);

  long long prefix = 0, degree_weighted = 0;
  for (int s = 0; s <= s_max; ++s) {
    std::vector<BasisElement> star_kept;
    std::vector<BasisElement> starstar;

    // StarStar first: z^alpha bv_i with |alpha| = s - t; independence is a
    // theorem, so failure is a hard error.
    if (s >= t) {
      for (const auto& alpha : degree_slices(m, s - t)) {
        MultiIndex alpha_emb = embed(alpha, n, 0);
        for (int i = 1; i <= d; ++i) {
          BasisElement e;
          e.kind = BasisElement::Kind::StarStar;
          e.degree = s;
          e.alpha = alpha;
          e.bv_index = i;
          e.monomial = alpha_emb;
          if (basis.exact) {
            PolyQ nf = normal_form(
                lifted[i - 1].bv_exact->times_monomial(alpha_emb, GaussRational::one()), ctx);
            e.nf = to_float(nf);
            e.nf_exact = std::move(nf);
          } else {
            e.nf = pruned(
                normal_form(lifted[i - 1].bv.times_monomial(alpha_emb, {1.0, 0.0}), ctx), 1e-12);
          }
          if (!insert_element(e))
            throw StructureError(
                "build_basis: module elements z^alpha bv_i are linearly dependent at degree " +
                std::to_string(s) + " (free-module property violated)");
          starstar.push_back(std::move(e));
        }
      }
    }

    // Star candidates of degree s in grevlex order, kept when independent of
    // everything inserted so far.
    std::vector<BasisElement> star_cands;
    for (const auto& b : basis.calB) {
      int rest = s - b.degree();
      if (rest < 0) continue;
      for (const auto& ap : degree_slices(m - 1, rest)) {
        BasisElement e;
        e.kind = BasisElement::Kind::Star;
        e.degree = s;
        e.alpha = ap;
        e.l = b[m - 1];
        {
          std::vector<int> be(n - m);
          for (int k = 0; k < n - m; ++k) be[k] = b[m + k];
          e.beta = MultiIndex(std::move(be));
        }
        e.monomial = embed(ap, n, 0).plus(b);
        star_cands.push_back(std::move(e));
      }
    }
    std::sort(star_cands.begin(), star_cands.end(),
              [](const BasisElement& a, const BasisElement& b) {
                return grevlex_compare(a.monomial, b.monomial) == Ordering::Less;
              });
    for (auto& e : star_cands) {
      if (basis.exact) {
        PolyQ nf = normal_form(PolyQ::monomial(e.monomial, GaussRational::one()), ctx);
        e.nf = to_float(nf);
        e.nf_exact = std::move(nf);
      } else {
        e.nf = normal_form(PolyC::monomial(e.monomial, {1.0, 0.0}), ctx);
      }
      if (insert_element(e)) star_kept.push_back(std::move(e));
    }

    long long h = static_cast<long long>(star_kept.size() + starstar.size());
    basis.h_s[s] = h;
    basis.a_s[s] = h - d * h_m(m, s - t);
    if (basis.a_s[s] != static_cast<long long>(star_kept.size()))
      throw StructureError("build_basis: a_s bookkeeping mismatch at degree " + std::to_string(s));
    prefix += h;
    degree_weighted += h * s;
    basis.m_s[s] = prefix;
    basis.l_s[s] = degree_weighted;
    if (prefix != hilbert_dim(ctx, s))
      throw StructureError("build_basis: prefix count differs from the Hilbert dimension at degree " +
                           std::to_string(s));

    for (auto& e : star_kept) basis.elements.push_back(std::move(e));
    for (auto& e : starstar) basis.elements.push_back(std::move(e));
  }
  return basis;
}

BvExpansion expand_in_bv(const MultiIndex& beta, const OrderedBasisC& basis,
                         const GroebnerContext& ctx) {
  if (!basis.exact) throw StructureError("expand_in_bv: needs the exact basis");
  const int n = basis.n, m = basis.m, d = basis.d, t = basis.t;
  if (beta.size() != n - m) throw DimensionError("expand_in_bv: beta has wrong length");
  if (beta.degree() > t) throw DimensionError("expand_in_bv: |beta| exceeds t");

  MultiIndex mono =
      embed(beta, n, m).plus(MultiIndex::unit(n, m - 1, t - beta.degree()));
  PolyQ target = normal_form(PolyQ::monomial(mono, GaussRational::one()), ctx);

  auto coords = standard_monomials(ctx, t);
  std::map<MultiIndex, int, GrevlexLess> coord_index;
  for (size_t k = 0; k < coords.size(); ++k) coord_index[coords[k]] = static_cast<int>(k);

  std::vector<SparseRowQ> cols;
  std::vector<int> col_elem;
  for (size_t k = 0; k < basis.elements.size(); ++k) {
    const auto& e = basis.elements[k];
    if (e.degree > t) break;
    SparseRowQ col;
    for (const auto& [mi, c] : e.nf_exact->terms()) col[coord_index.at(mi)] = c;
    cols.push_back(std::move(col));
    col_elem.push_back(static_cast<int>(k));
  }
  SparseRowQ rhs;
  for (const auto& [mi, c] : target.terms()) rhs[coord_index.at(mi)] = c;

  auto x = solve_exact(cols, rhs, static_cast<int>(coords.size()));
  if (!x) throw StructureError("expand_in_bv: singular solve against the basis prefix");

  BvExpansion out;
  out.coeff.assign(d, GaussRational());
  out.q = PolyQ(n);
  bool any = false;
  for (size_t c = 0; c < cols.size(); ++c) {
    const auto& e = basis.elements[col_elem[c]];
    if (e.kind == BasisElement::Kind::StarStar && e.degree == t) {
      out.coeff[e.bv_index - 1] = (*x)[c];
      if (!(*x)[c].is_zero()) any = true;
    } else if (!(*x)[c].is_zero()) {
      out.q = out.q + e.nf_exact->scaled((*x)[c]);
    }
  }
  if (!any)
    throw StructureError("expand_in_bv: all bv coefficients vanish (contradicts the basis property)");
  return out;
}

std::string dump_basis(const OrderedBasisC& basis) {
  std::ostringstream os;
  for (const auto& e : basis.elements) {
    if (e.kind == BasisElement::Kind::Star) {
      os << "*\t" << e.degree << "\talpha=" << tuple_text(e.alpha) << "\tl=" << e.l
         << "\tbeta=" << tuple_text(e.beta) << "\t";
    } else {
      os << "**\t" << e.degree << "\talpha=" << tuple_text(e.alpha) << "\ti=" << e.bv_index
         << "\t";
    }
    if (e.nf_exact)
      os << format_poly(*e.nf_exact);
    else
      os << format_poly(e.nf);
    os << "\n";
  }
  return os.str();
}

}  // namespace varcap
