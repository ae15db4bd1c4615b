#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "leibniz/algebra.hpp"

namespace leibniz {

/// Row-major flattening of n x n matrices into vectors of length n^2 — the
/// fixed convention that lets spaces of linear maps live in Subspace.
Vec flatten(const Matrix& m);
Matrix unflatten(const Vec& v, std::size_t n, const FieldSpec& f);

/// Commutator u v - v u.
Matrix commutator(const Matrix& u, const Matrix& v);

struct DerivationCheck {
  bool ok = true;
  // basis pairs (i, j), 0-based, where m([e_i,e_j]) != [m(e_i),e_j] + [e_i,m(e_j)]
  std::vector<std::pair<std::size_t, std::size_t>> violations;
};

/// Tests the derivation condition on all basis pairs.
DerivationCheck derivation_check(const LeibnizAlgebra& a, const Matrix& m);
bool is_derivation(const LeibnizAlgebra& a, const Matrix& m);

/// A subspace D of the derivation algebra, flattened into F^(n^2).
/// Instances produced by the factory functions below always satisfy:
/// every basis element is a derivation, Ad^l(L) is contained in the space
/// (contains_adl), and the space is closed under commutator (closed).
struct DerivationSet {
  LeibnizAlgebra algebra;
  Subspace space;  // subspace of F^(n^2), row-major flattened matrices
  bool contains_adl = false;
  bool closed = false;

  std::size_t dim() const { return space.dim(); }
  std::vector<Matrix> basis_matrices() const;
};

struct AdLeft {
  std::vector<Matrix> maps;  // maps[i] = l_{e_i}, entry (r,c) = c(i,c,r)
  Subspace space;            // span of the flattened maps
};

/// The left multiplications l_a(x) = [a,x] and their span Ad^l(L).
AdLeft ad_left(const LeibnizAlgebra& a);

/// Der(L): the full solution space of the derivation condition, computed as
/// the kernel of the n^3 x n^2 linear system over F^(n^2).
DerivationSet derivation_algebra(const LeibnizAlgebra& a);

/// Smallest commutator-closed subspace containing the generators and
/// Ad^l(L). Throws ValidationError if a generator is not a derivation.
/// With no generators this is exactly Ad^l(L).
DerivationSet lie_closure(const LeibnizAlgebra& a, const std::vector<Matrix>& generators);

/// Ad^l(L) packaged as a DerivationSet; same as lie_closure(a, {}).
DerivationSet adl_set(const LeibnizAlgebra& a);

/// Common kernel of the basis derivations; all of L for the zero set.
Subspace annihilator(const DerivationSet& d);

/// annihilator(d) intersected with the left center. Requires contains_adl,
/// which guarantees the result lies inside the center (checked).
Subspace d_center(const DerivationSet& d);

/// Sum of the images of the basis derivations.
Subspace d_derived(const DerivationSet& d);

struct InducedSet {
  QuotientAlgebra quot;
  DerivationSet set;  // derivation set over quot.algebra
};

/// Pushes d through the quotient by z: each basis matrix m becomes
/// proj * m * section. Requires z to be an ideal invariant under every
/// basis derivation (hard error otherwise), and checks that the images are
/// derivations of the quotient and that Ad^l maps onto Ad^l of the
/// quotient.
InducedSet induced_derivations(const DerivationSet& d, const Subspace& z);

}  // namespace leibniz
