#include "leibniz/series.hpp"

#include <utility>

namespace leibniz {

const Subspace& SeriesResult::zeta(std::size_t nu) const {
  if (flavor != SeriesFlavor::upper) throw Error("zeta read on a lower series");
  return terms[nu < terms.size() ? nu : terms.size() - 1];
}

const Subspace& SeriesResult::gamma(std::size_t nu) const {
  if (flavor != SeriesFlavor::lower) throw Error("gamma read on an upper series");
  if (nu < 1) throw Error("lower series terms are indexed from 1");
  std::size_t i = nu - 1;
  return terms[i < terms.size() ? i : terms.size() - 1];
}

SeriesResult upper_d_central_series(const LeibnizAlgebra& a, const DerivationSet& d) {
  if (!d.contains_adl)
    throw Error("upper series requires a set containing the left multiplications");
  SeriesResult out;
  out.flavor = SeriesFlavor::upper;
  out.terms.push_back(Subspace::zero(a.dim(), a.field()));
  for (;;) {
    const Subspace& current = out.terms.back();
    InducedSet induced = induced_derivations(d, current);
    Subspace next = preimage(induced.quot.proj, d_center(induced.set));
    if (next == current) break;
    if (!subspace_leq(current, next)) throw Error("upper series failed to ascend");
    out.terms.push_back(std::move(next));
  }
  out.stabilized_at = out.terms.size() - 1;
  return out;
}

SeriesResult lower_d_central_series(const LeibnizAlgebra& a, const DerivationSet& d) {
  if (!d.contains_adl)
    throw Error("lower series requires a set containing the left multiplications");
  std::size_t n = a.dim();
  std::vector<Matrix> basis = d.basis_matrices();
  SeriesResult out;
  out.flavor = SeriesFlavor::lower;
  out.terms.push_back(Subspace::full(n, a.field()));
  for (;;) {
    const Subspace& current = out.terms.back();
    std::vector<Vec> rows;
    for (const Matrix& m : basis)
      for (std::size_t r = 0; r < current.dim(); ++r) rows.push_back(m * current.basis().row(r));
    Subspace next = Subspace::span_rows(Matrix::from_rows(rows, n, a.field()));
    if (next == current) break;
    if (!subspace_leq(next, current)) throw Error("lower series failed to descend");
    out.terms.push_back(std::move(next));
  }
  out.stabilized_at = out.terms.size() - 1;
  return out;
}

}  // namespace leibniz
