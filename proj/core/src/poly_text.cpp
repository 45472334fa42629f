#include "varcap/poly_text.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <sstream>

namespace varcap {
namespace {

struct Cursor {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("polynomial text: " + why + " at offset " + std::to_string(pos) + " in \"" +
                     s + "\"");
  }
};

Integer parse_digits(Cursor& c) {
  c.skip_ws();
  size_t start = c.pos;
  while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) ++c.pos;
  if (c.pos == start) c.fail("expected digits");
  return Integer(c.s.substr(start, c.pos - start));
}

// rational := digits ['/' digits]
Rational parse_rational(Cursor& c) {
  Integer num = parse_digits(c);
  if (c.pos < c.s.size() && c.s[c.pos] == '/') {
    ++c.pos;
    Integer den = parse_digits(c);
    if (den == 0) c.fail("zero denominator");
    return Rational(num, den);
  }
  return Rational(num);
}

// one signed literal part: [sign] (rat ['i'] | 'i')
GaussRational parse_literal_part(Cursor& c, bool allow_sign) {
  int sign = 1;
  if (allow_sign) {
    if (c.accept('-'))
      sign = -1;
    else
      c.accept('+');
  }
  c.skip_ws();
  if (c.pos < c.s.size() && c.s[c.pos] == 'i') {
    ++c.pos;
    return GaussRational(Rational(0), Rational(sign));
  }
  Rational r = parse_rational(c);
  if (c.pos < c.s.size() && c.s[c.pos] == 'i') {
    ++c.pos;
    return GaussRational(Rational(0), sign * r);
  }
  return GaussRational(sign * r);
}

// complex := part [part]  (second part must carry an explicit sign)
GaussRational parse_complex(Cursor& c) {
  GaussRational v = parse_literal_part(c, true);
  c.skip_ws();
  if (c.pos < c.s.size() && (c.s[c.pos] == '+' || c.s[c.pos] == '-')) {
    GaussRational w = parse_literal_part(c, true);
    if ((!v.is_real() && !w.is_real()) || (v.is_real() && w.is_real()))
      c.fail("complex literal needs one real and one imaginary part");
    v += w;
  }
  return v;
}

struct Factor {
  GaussRational coeff = GaussRational::one();
  int var = -1;  // slot index, or -1 for pure coefficient
  int power = 1;
};

Factor parse_factor(Cursor& c, int n, int first_var) {
  Factor f;
  if (c.accept('(')) {
    f.coeff = parse_complex(c);
    c.expect(')');
    return f;
  }
  c.skip_ws();
  if (c.pos < c.s.size() && c.s[c.pos] == 'z') {
    ++c.pos;
    Integer idx = parse_digits(c);
    long v = idx.convert_to<long>() - first_var;
    if (v < 0 || v >= n) c.fail("variable index out of range");
    f.var = static_cast<int>(v);
    if (c.pos < c.s.size() && c.s[c.pos] == '^') {
      ++c.pos;
      f.power = parse_digits(c).convert_to<int>();
    }
    return f;
  }
  f.coeff = parse_literal_part(c, false);
  return f;
}

}  // namespace

PolyQ parse_poly(const std::string& text, int n, int first_var) {
  Cursor c{text};
  PolyQ p(n);
  if (c.eof()) throw ParseError("polynomial text: empty input");
  bool first = true;
  while (!c.eof()) {
    int sign = 1;
    if (c.accept('-'))
      sign = -1;
    else if (!c.accept('+') && !first)
      c.fail("expected '+' or '-' between terms");
    // term
    GaussRational coeff{Rational(sign)};
    std::vector<int> exps(n, 0);
    bool have_factor = false;
    for (;;) {
      Factor f = parse_factor(c, n, first_var);
      have_factor = true;
      if (f.var < 0)
        coeff *= f.coeff;
      else
        exps[f.var] += f.power;
      if (!c.accept('*')) break;
    }
    if (!have_factor) c.fail("empty term");
    p.add_term(MultiIndex(std::move(exps)), coeff);
    first = false;
  }
  return p;
}

namespace {

std::string monomial_text(const MultiIndex& mi, int first_var) {
  std::string out;
  for (int v = 0; v < mi.size(); ++v) {
    if (mi[v] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'z';
    out += std::to_string(v + first_var);
    if (mi[v] > 1) {
      out += '^';
      out += std::to_string(mi[v]);
    }
  }
  return out;
}

// The shared layout.  `coeff_text(c)` returns the unsigned body text and
// `negate_for_sign(c)` says whether to fold a '-' out front.
template <class C, class IsNeg, class Neg, class Body, class IsOne>
std::string format_impl(const BasicPolynomial<C>& p, int first_var, IsNeg is_neg, Neg neg,
                        Body body, IsOne is_one) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    C c = it->second;
    bool negative = is_neg(c);
    if (negative) c = neg(c);
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    std::string mono = monomial_text(it->first, first_var);
    if (mono.empty())
      out += body(c, /*bare=*/true);
    else if (is_one(c))
      out += mono;
    else
      out += body(c, /*bare=*/false) + "*" + mono;
    first = false;
  }
  return out;
}

}  // namespace

std::string format_poly(const PolyQ& p, int first_var) {
  return format_impl(
      p, first_var,
      [](const GaussRational& c) { return c.re < 0 || (c.re == 0 && c.im < 0); },
      [](const GaussRational& c) { return -c; },
      [](const GaussRational& c, bool bare) {
        std::string t = to_string(c);
        bool mixed = c.re != 0 && c.im != 0;
        if (bare && !mixed) return t;
        return "(" + t + ")";
      },
      [](const GaussRational& c) { return c.is_one(); });
}

std::string format_poly(const PolyC& p, int first_var) {
  auto part = [](double v) {
    std::string s = fmt_double(v);
    return s;
  };
  return format_impl(
      p, first_var,
      [](const std::complex<double>& c) {
        return c.real() < 0 || (c.real() == 0 && c.imag() < 0);
      },
      [](const std::complex<double>& c) { return -c; },
      [&](const std::complex<double>& c, bool bare) {
        std::string t;
        if (c.imag() == 0)
          t = part(c.real());
        else if (c.real() == 0)
          t = part(c.imag()) + "i";
        else
          t = part(c.real()) + (c.imag() > 0 ? "+" : "") + part(c.imag()) + "i";
        bool mixed = c.real() != 0 && c.imag() != 0;
        if (bare && !mixed) return t;
        return "(" + t + ")";
      },
      [](const std::complex<double>& c) { return c == std::complex<double>(1.0, 0.0); });
}

std::vector<GaussRational> parse_projective_point(const std::string& text, int len) {
  Cursor c{text};
  c.expect('[');
  std::vector<GaussRational> out;
  for (;;) {
    out.push_back(parse_complex(c));
    if (!c.accept(':')) break;
  }
  c.expect(']');
  if (!c.eof()) c.fail("trailing text after point");
  if (static_cast<int>(out.size()) != len)
    throw ParseError("projective point: expected " + std::to_string(len) + " coordinates, got " +
                     std::to_string(out.size()));
  return out;
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace varcap
