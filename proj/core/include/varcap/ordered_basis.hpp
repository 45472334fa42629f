#pragma once

#include <map>
#include <string>

#include "varcap/infinity.hpp"

namespace varcap {

/// One element of the ordered basis: either a monomial element
/// z^{alpha'} z_m^l z^beta with z_m^l z^beta in calB (Star), or a module
/// element z^alpha bv_i (StarStar).  `nf` is the stored normal form.
struct BasisElement {
  enum class Kind { Star, StarStar };
  Kind kind = Kind::Star;
  int degree = 0;
  MultiIndex alpha;      // Star: over z1..z_{m-1}; StarStar: over z1..z_m
  int l = 0;             // Star only
  MultiIndex beta;       // Star only, over z_{m+1}..z_n
  int bv_index = 0;      // StarStar only, 1-based
  MultiIndex monomial;   // the defining n-variable monomial factor
  PolyC nf;
  std::optional<PolyQ> nf_exact;

  bool is_star() const { return kind == Kind::Star; }
};

/// The basis C of C[V] through degree s_max, listed in the order `prec`:
/// by degree; within a degree Star before StarStar; Star by grevlex; StarStar
/// by grevlex on z^alpha then by i.  The degree-<=s prefix is a basis of
/// C[V]_{<=s}, so the prefix count m_s equals the Hilbert dimension.
struct OrderedBasisC {
  int n = 0, m = 0, d = 0, t = 0, s_max = 0;
  bool exact = false;
  std::vector<BasisElement> elements;
  std::vector<long long> h_s;  // per-degree counts, 0..s_max
  std::vector<long long> m_s;  // prefix counts
  std::vector<long long> l_s;  // degree sums
  std::vector<long long> a_s;  // h_s - d*h_m(s-t)
  std::vector<MultiIndex> calB;  // n-variable monomials z_m^l z^beta, grevlex

  /// Index of z^alpha bv_i (alpha over z1..zm, i 1-based); -1 when absent.
  int starstar_index(const MultiIndex& alpha_m, int i) const;
  /// Indices of kept Star elements with the given alpha' (over z1..z_{m-1}).
  std::vector<int> star_indices(const MultiIndex& alpha_prime) const;

  long long prefix_size(int s) const { return m_s.at(s); }
};

/// Degree-by-degree construction: StarStar elements first (their exact rank
/// must be full, else the free-module property failed upstream), then Star
/// candidates filtered by exact linear independence in standard-monomial
/// coordinates.  Float fallback uses Gram-Schmidt ranks with a fixed
/// threshold when the interpolants are not exact.
OrderedBasisC build_basis(const VarietySpec& variety, const GroebnerContext& ctx,
                          const NoetherData& noether, const InterpolantSet& interp,
                          const std::vector<LiftedInterpolant>& lifted, int s_max);

/// Exact expansion z_m^{t-|beta|} z^beta = sum_i C_i bv_i + q with q spanned
/// by basis elements preceding bv_1.
struct BvExpansion {
  std::vector<GaussRational> coeff;  // size d
  PolyQ q;
};
BvExpansion expand_in_bv(const MultiIndex& beta, const OrderedBasisC& basis,
                         const GroebnerContext& ctx);

/// One element per line: kind, degree, defining data, canonical normal form.
std::string dump_basis(const OrderedBasisC& basis);

}  // namespace varcap
