#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "leibniz/series.hpp"

namespace leibniz {

enum class Claim {
  theorem_a,
  theorem_b,
  schur_leibniz,
  schur_lie,
  hegarty_leibniz,
  hegarty_lie,
  baer_leibniz,
  baer_lie,
  codim_step,
};

std::string claim_name(Claim c);

/// One checked inequality: named integer quantities, the two sides, and the
/// verdict. For an inapplicable claim (a Lie-only bound on a non-Lie
/// algebra, or the m = 0 degenerate case) lhs/rhs/holds are meaningless and
/// holds stays false.
struct BoundReport {
  Claim claim = Claim::theorem_a;
  std::vector<std::pair<std::string, Int>> quantities;
  Int lhs = 0;
  Int rhs = 0;
  bool applicable = true;
  bool holds = false;
};

/// The recursive bound: beta(k,1,t) = t(k+t) and
/// beta(k,m+1,t) = beta(k,m,t) * (k + beta(k,m,t)).
/// m >= 1 required; exact arbitrary-precision result.
Int beta(const Int& k, std::size_t m, const Int& t);

/// dim [L,D] <= t(k+t) with t = codim of the D-center and
/// k = dim D - dim Ad^l(L).
BoundReport verify_theorem_a(const LeibnizAlgebra& a, const DerivationSet& d);

/// dim gamma_{m+1}(L,D) <= beta(k,m,t) with m the upper series length and
/// t the codim of the hypercenter; inapplicable when m = 0.
BoundReport verify_theorem_b(const LeibnizAlgebra& a, const DerivationSet& d);

/// Intermediate inequality used on the way to the theorems: modulo [L,L],
/// the D-derived subalgebra has dimension at most t*k.
BoundReport verify_codim_step(const LeibnizAlgebra& a, const DerivationSet& d);

/// The six specializations, with the classical series (D = Ad^l) read at
/// series_index >= 1:
///   schur_leibniz:   dim [L,L]     <= t^2            with t = codim center
///   schur_lie:       dim [L,L]     <= t(t+1)/2        (Lie only)
///   hegarty_leibniz: dim [L,Der]   <= t(t+1)          with t = codim Der-center
///   hegarty_lie:     dim [L,Der]   <= t(t+1)/2        (Lie only)
///   baer_leibniz:    dim gamma_{s+1} <= 2^(s-1) t^(s+1) with s = series_index,
///                    t = codim of the s-th upper term
///   baer_lie:        dim gamma_{s+1} <= t^s (t+1)/2    (Lie only)
std::vector<BoundReport> verify_corollaries(const LeibnizAlgebra& a, std::size_t series_index);

}  // namespace leibniz
