#pragma once

#include <cstddef>
#include <vector>

#include "leibniz/derivations.hpp"

namespace leibniz {

enum class SeriesFlavor { upper, lower };

/// A stabilized central series, terms stored as subspaces of the original
/// algebra (never in quotient coordinates). No duplicate terms are stored:
/// the last term repeats forever, and the accessors read past the end by
/// clamping.
///
/// upper: terms[nu] = the nu-th upper term, terms[0] = 0, strictly
/// ascending; stabilized_at = zl = index of the last term; the last term is
/// the hypercenter.
/// lower: terms[i] holds the (i+1)-st lower term, terms[0] = L, strictly
/// descending; stabilized_at = index of the last term.
struct SeriesResult {
  SeriesFlavor flavor = SeriesFlavor::upper;
  std::vector<Subspace> terms;
  std::size_t stabilized_at = 0;

  /// Upper flavor: the nu-th term, constant past stabilization.
  const Subspace& zeta(std::size_t nu) const;
  /// Lower flavor: the nu-th term, nu >= 1, constant past stabilization.
  const Subspace& gamma(std::size_t nu) const;
  const Subspace& hypercenter() const { return terms.back(); }
  std::size_t zl() const { return stabilized_at; }
};

/// Iterated pullback of D-centers of quotients: each step quotients by the
/// current term (ideal and D-invariance checked), takes the D-center of the
/// induced derivation set, and pulls it back.
SeriesResult upper_d_central_series(const LeibnizAlgebra& a, const DerivationSet& d);

/// Descending sums of images: starts at L, each step applies the basis
/// derivations to the current term and takes the span.
SeriesResult lower_d_central_series(const LeibnizAlgebra& a, const DerivationSet& d);

}  // namespace leibniz
