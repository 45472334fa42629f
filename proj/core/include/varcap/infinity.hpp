#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "varcap/noether.hpp"
#include "varcap/variety.hpp"

namespace varcap {

/// One of the d points of Vbar ∩ V(z0..z_{m-1}), normalized so the z_m
/// coordinate is 1 (property (3)); the first m slots (z0..z_{m-1}) vanish.
struct PointAtInfinity {
  std::vector<std::complex<double>> coords;          // n+1 projective coords
  std::optional<std::vector<GaussRational>> exact;   // when representable in Q(i)
};

struct InfinityOptions {
  double distinct_tol = 1e-8;    // relative root-gap tolerance (property (2))
  double residual_tol = 1e-10;   // membership residual for supplied points
  int snap_den_bound = 64;       // denominator cap when snapping roots into Q(i)
  int t_floor = 0;               // user floor for the general-case t search
  int t_cap_multiplier = 4;      // search t <= t_cap_multiplier * d
};

/// Hypersurfaces (m = n-1): roots of the two-variable tail of f^h via
/// companion-matrix eigenvalues, snapped into Q(i) when possible.  Otherwise
/// the points come from the variety file and are verified against I^h.
/// Repeated roots, a vanishing z_m coordinate, or a count mismatch with the
/// scheme degree are structural failures.
std::vector<PointAtInfinity> points_at_infinity(const VarietySpec& variety,
                                                const GroebnerContext& ctx,
                                                const NoetherData& noether,
                                                const InfinityOptions& opts = {});

/// The degree-t interpolating forms v_i in z_m..z_n with v_i(lambda_j) =
/// delta_ij under local evaluation on the chart z_m != 0.
struct InterpolantSet {
  int t = 0;
  int d = 0;
  bool exact = false;
  std::vector<HomogPolyC> v;                  // always present
  std::vector<HomogPolyQ> v_exact;            // when exact
};

/// Hypersurface closed form (t = d-1, Lagrange factors of the tail), or the
/// smallest t >= floor whose evaluation matrix has rank d and whose powers
/// z_m^{tau-t} v_i stay a basis of S_tau for tau in {t, t+1}.
InterpolantSet interpolants(const std::vector<PointAtInfinity>& points,
                            const VarietySpec& variety, const GroebnerContext& ctx,
                            const NoetherData& noether, const InfinityOptions& opts = {});

/// bv_i: the degree-t homogeneous part of the normal form of v_i|_{z0=1},
/// together with certified product-relation witnesses
///   nf(bv_i^2) - nf(z_m^t bv_i) = sum_k z_k h_k + h_0,
///   nf(bv_i bv_j)               = sum_k z_k q_k + q_0   (i != j),
/// all witness degrees <= 2t-1.  `cross_strict` records whether the strict
/// bound deg < 2t-1 also held (it fails already on the sphere).
struct LiftedInterpolant {
  int index = 0;  // 1-based i
  PolyC bv;
  std::optional<PolyQ> bv_exact;
  std::vector<PolyC> self_h;                  // slot 0 = h_0, slot k = h_k
  std::vector<std::optional<PolyQ>> self_h_exact;
  struct Cross {
    int j = 0;
    std::vector<PolyC> q;                     // slot 0 = q_0, slot k = q_k
    bool strict = false;
  };
  std::vector<Cross> cross;
};

std::vector<LiftedInterpolant> lift_and_witness(const InterpolantSet& interp,
                                                const GroebnerContext& ctx,
                                                const NoetherData& noether);

/// Snap a float to a nearby rational with denominator <= bound (continued
/// fractions); nullopt when no close candidate exists.
std::optional<Rational> snap_rational(double x, int den_bound, double tol = 1e-9);

}  // namespace varcap
