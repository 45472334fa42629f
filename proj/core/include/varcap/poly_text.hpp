#pragma once

#include <string>

#include "varcap/polynomial.hpp"

namespace varcap {

/// Polynomial text grammar.  Terms joined by `+`/`-`; a term is factors
/// joined by `*`; a factor is a parenthesized complex literal `(a/b+c/di)`
/// (parts optional), a bare rational/imaginary literal, or a variable
/// `z<k>` with optional `^e`.  Variables are z<first_var> .. z<first_var+n-1>,
/// so affine polynomials use z1..zn and homogeneous ones z0..zn.
PolyQ parse_poly(const std::string& text, int n, int first_var = 1);

/// Canonical printing: terms in decreasing grevlex order, sign-folded and
/// joined by ` + ` / ` - `; coefficients parenthesized except a plain 1 and
/// bare constants; variables ascending with `^` powers.  parse(format(p)) == p.
std::string format_poly(const PolyQ& p, int first_var = 1);

/// Same layout with floating-point coefficients printed via shortest
/// round-trip decimal text.
std::string format_poly(const PolyC& p, int first_var = 1);

/// Projective point text `[c0:c1:...:cn]` with complex-literal entries.
std::vector<GaussRational> parse_projective_point(const std::string& text, int len);

/// Deterministic decimal text for CSV output (round-trips exactly).
std::string fmt_double(double v);

}  // namespace varcap
