#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "leibniz/bounds.hpp"

namespace leibniz {

/// The standard structural summary of one algebra: dimensions of the
/// centers, derived subalgebra, derivation spaces, and both classical
/// central series (computed with the left multiplications as the
/// derivation set). Every entry is a basis-independent invariant, so the
/// whole value doubles as an isomorphism-invariance signature.
struct Analysis {
  std::size_t dim = 0;
  FieldSpec field;
  bool lie = false;
  std::size_t center_left = 0;
  std::size_t center_right = 0;
  std::size_t center = 0;
  std::size_t derived = 0;
  std::size_t der = 0;
  std::size_t adl = 0;
  std::vector<std::size_t> upper_dims;  // upper series term dims, from zeta_0 = 0
  std::size_t zl = 0;
  std::size_t hypercenter = 0;
  std::vector<std::size_t> lower_dims;  // lower series term dims, from gamma_1 = L

  friend bool operator==(const Analysis&, const Analysis&) = default;
};

Analysis analyze(const LeibnizAlgebra& a);

/// Stable `key = value` lines.
std::string render_analysis_kv(const Analysis& an);

}  // namespace leibniz
