#pragma once

#include <vector>

#include "varcap/polynomial.hpp"

namespace varcap {

/// Reduced grevlex Groebner basis of an ideal over Q(i), with leading-term
/// data.  `unit_ideal` marks 1 in I (empty variety) as a distinct condition.
struct GroebnerContext {
  int n = 0;
  std::vector<PolyQ> generators;
  std::vector<PolyQ> reduced_gb;        // monic, sorted by leading monomial
  std::vector<MultiIndex> lt_set;       // leading exponents of reduced_gb
  std::vector<PolyC> reduced_gb_float;  // cached float mirror
  bool unit_ideal = false;

  bool in_lt_ideal(const MultiIndex& mi) const {
    for (const auto& lt : lt_set)
      if (lt.divides(mi)) return true;
    return false;
  }
};

/// Buchberger with normal (smallest-lcm) pair selection and the coprime
/// criterion, followed by full inter-reduction.  Idempotent on a reduced
/// basis.  An empty generator list gives the zero ideal; pass `n` explicitly
/// in that case.
GroebnerContext groebner(std::vector<PolyQ> generators, int n = -1);

/// Remainder on division by the reduced basis: no term of the result is
/// divisible by any member of lt_set, and p - result lies in the ideal.
PolyQ normal_form(const PolyQ& p, const GroebnerContext& ctx);

/// Float-coefficient variant for data that does not live in Q(i); terms with
/// relative magnitude below `chop` are dropped after reduction.
PolyC normal_form(const PolyC& p, const GroebnerContext& ctx, double chop = 1e-12);

/// All monomials of degree <= s outside <LT(I)>, ascending grevlex.
std::vector<MultiIndex> standard_monomials(const GroebnerContext& ctx, int s);

/// |standard_monomials(ctx, s)| = dim (C[z]/I)_{<= s}.
long long hilbert_dim(const GroebnerContext& ctx, int s);

/// Binomial C(a, b) as long long (desk scale).
long long binomial(int a, int b);

}  // namespace varcap
