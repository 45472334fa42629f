#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <string>

#include "varcap/errors.hpp"

namespace varcap {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Element of Q(i): re + im*i with arbitrary-precision rational parts.
/// cpp_rational keeps itself fully reduced, so equality is exact.
struct GaussRational {
  Rational re;
  Rational im;

  GaussRational() = default;
  GaussRational(Rational r) : re(std::move(r)) {}
  GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  GaussRational(long r) : re(r) {}
  GaussRational(long r, long i) : re(r), im(i) {}

  static GaussRational one() { return GaussRational(1); }
  static GaussRational i() { return GaussRational(Rational(0), Rational(1)); }
  static GaussRational of(long num, long den) { return GaussRational(Rational(num, den)); }
  static GaussRational of(long rn, long rd, long in, long id) {
    return GaussRational(Rational(rn, rd), Rational(in, id));
  }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  bool is_one() const { return re == 1 && im == 0; }

  GaussRational conj() const { return {re, -im}; }

  /// |z|^2 as a rational.
  Rational norm2() const { return re * re + im * im; }

  std::complex<double> to_complex() const {
    return {static_cast<double>(re), static_cast<double>(im)};
  }

  friend GaussRational operator+(const GaussRational& a, const GaussRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussRational operator-(const GaussRational& a, const GaussRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }
  friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussRational operator/(const GaussRational& a, const GaussRational& b) {
    Rational n2 = b.norm2();
    if (n2 == 0) throw FieldError("GaussRational: division by zero");
    GaussRational num = a * b.conj();
    return {num.re / n2, num.im / n2};
  }
  GaussRational& operator+=(const GaussRational& o) { return *this = *this + o; }
  GaussRational& operator-=(const GaussRational& o) { return *this = *this - o; }
  GaussRational& operator*=(const GaussRational& o) { return *this = *this * o; }
  GaussRational& operator/=(const GaussRational& o) { return *this = *this / o; }

  bool operator==(const GaussRational& o) const { return re == o.re && im == o.im; }
  bool operator!=(const GaussRational& o) const { return !(*this == o); }
};

/// Canonical text of a rational, "p" or "p/q".
std::string to_string(const Rational& r);

/// Canonical text of a Gaussian rational without enclosing parens,
/// e.g. "1/2", "-3i", "1/2+1/3i", "1/2-1/3i".
std::string to_string(const GaussRational& c);

}  // namespace varcap
