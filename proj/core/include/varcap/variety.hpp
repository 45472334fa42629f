#pragma once

#include <string>
#include <vector>

#include "varcap/polynomial.hpp"

namespace varcap {

/// Input description of the variety V = V(generators) in C^n with a declared
/// Noether dimension m.  Points at infinity are only required when V is not
/// a hypersurface (m < n-1); radicality of a non-squarefree input must be
/// asserted by the user.
struct VarietySpec {
  std::string label;
  int n = 0;
  int m = 0;
  std::vector<std::string> generator_text;
  std::vector<PolyQ> generators;
  bool radical_asserted = false;
  std::vector<std::string> points_at_infinity_text;

  bool hypersurface_shape() const { return m == n - 1; }
};

VarietySpec parse_variety_json(const std::string& json_text);
VarietySpec load_variety(const std::string& path);
std::string variety_to_json(const VarietySpec& v);

}  // namespace varcap
