#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <utility>

#include "varcap/gauss_rational.hpp"
#include "varcap/multi_index.hpp"

namespace varcap {

template <class C>
struct CoeffOps;

template <>
struct CoeffOps<GaussRational> {
  static bool is_zero(const GaussRational& c) { return c.is_zero(); }
  static GaussRational one() { return GaussRational::one(); }
  static std::complex<double> to_complex(const GaussRational& c) { return c.to_complex(); }
};

template <>
struct CoeffOps<std::complex<double>> {
  static bool is_zero(const std::complex<double>& c) { return c == std::complex<double>(0.0, 0.0); }
  static std::complex<double> one() { return {1.0, 0.0}; }
  static std::complex<double> to_complex(const std::complex<double>& c) { return c; }
};

/// Sparse multivariate polynomial; terms kept in ascending grevlex order so
/// the leading term is the last map entry.  No zero coefficients are stored.
template <class C>
class BasicPolynomial {
 public:
  using TermMap = std::map<MultiIndex, C, GrevlexLess>;

  BasicPolynomial() = default;
  explicit BasicPolynomial(int n) : n_(n) {}

  static BasicPolynomial zero(int n) { return BasicPolynomial(n); }

  static BasicPolynomial constant(int n, C c) {
    BasicPolynomial p(n);
    p.add_term(MultiIndex::zero(n), std::move(c));
    return p;
  }

  static BasicPolynomial monomial(MultiIndex mi, C c) {
    BasicPolynomial p(mi.size());
    p.add_term(std::move(mi), std::move(c));
    return p;
  }

  static BasicPolynomial variable(int n, int var) {
    return monomial(MultiIndex::unit(n, var), CoeffOps<C>::one());
  }

  int vars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }
  const TermMap& terms() const { return terms_; }

  /// Degree of the zero polynomial is the -1 sentinel.
  int total_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

  const std::pair<const MultiIndex, C>& leading_term() const {
    if (terms_.empty()) throw FieldError("leading_term of zero polynomial");
    return *terms_.rbegin();
  }

  C coefficient(const MultiIndex& mi) const {
    auto it = terms_.find(mi);
    return it == terms_.end() ? C{} : it->second;
  }

  void add_term(MultiIndex mi, C c) {
    if (mi.size() != n_) throw DimensionError("polynomial term has wrong variable count");
    auto [it, inserted] = terms_.try_emplace(std::move(mi), c);
    if (!inserted) {
      it->second += c;
      if (CoeffOps<C>::is_zero(it->second)) terms_.erase(it);
    } else if (CoeffOps<C>::is_zero(it->second)) {
      terms_.erase(it);
    }
  }

  friend BasicPolynomial operator+(const BasicPolynomial& a, const BasicPolynomial& b) {
    a.require_compatible(b);
    BasicPolynomial r(a);
    for (const auto& [mi, c] : b.terms_) r.add_term(mi, c);
    return r;
  }

  friend BasicPolynomial operator-(const BasicPolynomial& a, const BasicPolynomial& b) {
    a.require_compatible(b);
    BasicPolynomial r(a);
    for (const auto& [mi, c] : b.terms_) r.add_term(mi, -c);
    return r;
  }

  friend BasicPolynomial operator-(const BasicPolynomial& a) {
    BasicPolynomial r(a.n_);
    for (const auto& [mi, c] : a.terms_) r.terms_.emplace(mi, -c);
    return r;
  }

  friend BasicPolynomial operator*(const BasicPolynomial& a, const BasicPolynomial& b) {
    a.require_compatible(b);
    BasicPolynomial r(a.n_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma.plus(mb), ca * cb);
    return r;
  }

  BasicPolynomial scaled(const C& c) const {
    BasicPolynomial r(n_);
    if (CoeffOps<C>::is_zero(c)) return r;
    for (const auto& [mi, cc] : terms_) {
      C v = cc * c;
      if (!CoeffOps<C>::is_zero(v)) r.terms_.emplace(mi, std::move(v));
    }
    return r;
  }

  BasicPolynomial times_monomial(const MultiIndex& mi, const C& c) const {
    BasicPolynomial r(n_);
    if (CoeffOps<C>::is_zero(c)) return r;
    for (const auto& [m, cc] : terms_) {
      C v = cc * c;
      if (!CoeffOps<C>::is_zero(v)) r.terms_.emplace(m.plus(mi), std::move(v));
    }
    return r;
  }

  /// Homogeneous part of the given degree.
  BasicPolynomial homogeneous_part(int degree) const {
    BasicPolynomial r(n_);
    for (const auto& [mi, c] : terms_)
      if (mi.degree() == degree) r.terms_.emplace(mi, c);
    return r;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.degree();
    return terms_.rbegin()->first.degree() == d;
  }

  std::complex<double> evaluate(const std::vector<std::complex<double>>& point) const {
    if (static_cast<int>(point.size()) != n_)
      throw DimensionError("evaluate: point length mismatch");
    // Power tables per variable up to the needed degree.
    std::vector<std::vector<std::complex<double>>> pow(n_);
    for (int v = 0; v < n_; ++v) pow[v].push_back({1.0, 0.0});
    std::complex<double> acc{0.0, 0.0};
    for (const auto& [mi, c] : terms_) {
      std::complex<double> t = CoeffOps<C>::to_complex(c);
      for (int v = 0; v < n_; ++v) {
        int e = mi[v];
        auto& pv = pow[v];
        while (static_cast<int>(pv.size()) <= e) pv.push_back(pv.back() * point[v]);
        t *= pv[e];
      }
      acc += t;
    }
    return acc;
  }

  /// Exact evaluation (coefficient-field points).
  C evaluate_exact(const std::vector<C>& point) const {
    if (static_cast<int>(point.size()) != n_)
      throw DimensionError("evaluate_exact: point length mismatch");
    std::vector<std::vector<C>> pow(n_);
    for (int v = 0; v < n_; ++v) pow[v].push_back(CoeffOps<C>::one());
    C acc{};
    for (const auto& [mi, c] : terms_) {
      C t = c;
      for (int v = 0; v < n_; ++v) {
        int e = mi[v];
        auto& pv = pow[v];
        while (static_cast<int>(pv.size()) <= e) pv.push_back(pv.back() * point[v]);
        t *= pv[e];
      }
      acc += t;
    }
    return acc;
  }

  bool operator==(const BasicPolynomial& o) const { return n_ == o.n_ && terms_ == o.terms_; }
  bool operator!=(const BasicPolynomial& o) const { return !(*this == o); }

 private:
  void require_compatible(const BasicPolynomial& o) const {
    if (n_ != o.n_) throw FieldError("polynomial arithmetic: variable count mismatch");
  }

  int n_ = 0;
  TermMap terms_;
};

using PolyQ = BasicPolynomial<GaussRational>;
using PolyC = BasicPolynomial<std::complex<double>>;

inline PolyC to_float(const PolyQ& p) {
  PolyC r(p.vars());
  for (const auto& [mi, c] : p.terms()) r.add_term(mi, c.to_complex());
  return r;
}

/// Drop terms with |coefficient| <= eps * (largest coefficient magnitude).
inline PolyC pruned(const PolyC& p, double eps) {
  double scale = 0.0;
  for (const auto& [mi, c] : p.terms()) scale = std::max(scale, std::abs(c));
  PolyC r(p.vars());
  for (const auto& [mi, c] : p.terms())
    if (std::abs(c) > eps * scale) r.add_term(mi, c);
  return r;
}

/// Homogeneous polynomial in variables z0..zn (z0 at slot 0); every stored
/// term has total degree equal to `degree`.
template <class C>
struct HomogPolynomial {
  BasicPolynomial<C> poly;  // n+1 variables
  int degree = 0;

  HomogPolynomial() = default;
  HomogPolynomial(BasicPolynomial<C> p, int deg) : poly(std::move(p)), degree(deg) {
    for (const auto& [mi, c] : poly.terms())
      if (mi.degree() != degree) throw FieldError("HomogPolynomial: inhomogeneous term");
  }
};

using HomogPolyQ = HomogPolynomial<GaussRational>;
using HomogPolyC = HomogPolynomial<std::complex<double>>;

/// p(z1..zn) of degree d -> sum c_a z0^{d-|a|} z^a in z0..zn.
template <class C>
HomogPolynomial<C> homogenize(const BasicPolynomial<C>& p) {
  int n = p.vars();
  int d = std::max(p.total_degree(), 0);
  BasicPolynomial<C> h(n + 1);
  for (const auto& [mi, c] : p.terms()) {
    std::vector<int> e(n + 1);
    e[0] = d - mi.degree();
    for (int i = 0; i < n; ++i) e[i + 1] = mi[i];
    h.add_term(MultiIndex(std::move(e)), c);
  }
  return HomogPolynomial<C>(std::move(h), p.is_zero() ? 0 : d);
}

/// Set z0 = 1.
template <class C>
BasicPolynomial<C> dehomogenize(const HomogPolynomial<C>& hp) {
  int n = hp.poly.vars() - 1;
  BasicPolynomial<C> p(n);
  for (const auto& [mi, c] : hp.poly.terms()) {
    std::vector<int> e(n);
    for (int i = 0; i < n; ++i) e[i] = mi[i + 1];
    p.add_term(MultiIndex(std::move(e)), c);
  }
  return p;
}

inline HomogPolyC to_float(const HomogPolyQ& p) { return {to_float(p.poly), p.degree}; }

/// Local evaluation of a degree-t form on the chart z_m != 0:
/// f(a) := a_m^{-t} f(a_0,...,a_n).  `point` has n+1 projective coordinates
/// and `chart_var` is the 1-based index m (slot m in the z0..zn vector).
template <class C>
std::complex<double> local_evaluate(const HomogPolynomial<C>& f,
                                    const std::vector<std::complex<double>>& point,
                                    int chart_var) {
  if (static_cast<int>(point.size()) != f.poly.vars())
    throw DimensionError("local_evaluate: point length mismatch");
  std::complex<double> am = point[chart_var];
  if (am == std::complex<double>(0.0, 0.0))
    throw NumericalError("local_evaluate: point outside the chart z_m != 0");
  std::complex<double> v = f.poly.evaluate(point);
  return v / std::pow(am, f.degree);
}

}  // namespace varcap
