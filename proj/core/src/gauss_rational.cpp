#include "varcap/gauss_rational.hpp"

#include <sstream>

namespace varcap {

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << '/' << denominator(r);
  return os.str();
}

std::string to_string(const GaussRational& c) {
  if (c.is_zero()) return "0";
  std::string out;
  if (c.re != 0) out += to_string(c.re);
  if (c.im != 0) {
    if (c.re != 0 && c.im > 0) out += '+';
    if (c.im == -1)
      out += '-';
    else if (c.im != 1)
      out += to_string(c.im);
    out += 'i';
  }
  return out;
}

}  // namespace varcap
