#include "leibniz/derivations.hpp"

#include <string>
#include <utility>

namespace leibniz {

Vec flatten(const Matrix& m) { return m.a; }

Matrix unflatten(const Vec& v, std::size_t n, const FieldSpec& f) {
  if (v.size() != n * n) throw Error("unflatten length mismatch");
  Matrix m = Matrix::zero(n, n, f);
  m.a = v;
  return m;
}

Matrix commutator(const Matrix& u, const Matrix& v) { return u * v - v * u; }

DerivationCheck derivation_check(const LeibnizAlgebra& a, const Matrix& m) {
  std::size_t n = a.dim();
  if (m.rows != n || m.cols != n || !(m.field == a.field()))
    throw Error("derivation check shape/field mismatch");
  DerivationCheck out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec lhs = m * a.bracket_basis(i, j);
      Vec rhs = bracket_eval(a, m.col(i), basis_vec(n, j, a.field()));
      Vec rhs2 = bracket_eval(a, basis_vec(n, i, a.field()), m.col(j));
      for (std::size_t k = 0; k < n; ++k) rhs[k] += rhs2[k];
      if (lhs != rhs) {
        out.ok = false;
        out.violations.emplace_back(i, j);
      }
    }
  return out;
}

bool is_derivation(const LeibnizAlgebra& a, const Matrix& m) { return derivation_check(a, m).ok; }

std::vector<Matrix> DerivationSet::basis_matrices() const {
  std::vector<Matrix> out;
  out.reserve(space.dim());
  for (std::size_t r = 0; r < space.dim(); ++r)
    out.push_back(unflatten(space.basis().row(r), algebra.dim(), algebra.field()));
  return out;
}

AdLeft ad_left(const LeibnizAlgebra& a) {
  std::size_t n = a.dim();
  std::vector<Matrix> maps;
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < n; ++i) {
    maps.push_back(left_mult_basis(a, i));
    rows.push_back(flatten(maps.back()));
  }
  Subspace space = Subspace::span_rows(Matrix::from_rows(rows, n * n, a.field()));
  return AdLeft{std::move(maps), std::move(space)};
}

namespace {

// Verifies the basis-of-space derivation property plus the two structural
// flags and packages the result; used by every DerivationSet factory.
DerivationSet seal_set(const LeibnizAlgebra& a, Subspace space) {
  DerivationSet d{a, std::move(space), false, false};
  std::vector<Matrix> basis = d.basis_matrices();
  for (const Matrix& m : basis)
    if (!is_derivation(a, m)) throw Error("derivation set basis element is not a derivation");

  d.contains_adl = subspace_leq(ad_left(a).space, d.space);
  d.closed = true;
  for (std::size_t i = 0; i < basis.size() && d.closed; ++i)
    for (std::size_t j = i + 1; j < basis.size() && d.closed; ++j)
      d.closed = subspace_contains(d.space, flatten(commutator(basis[i], basis[j])));
  return d;
}

}  // namespace

DerivationSet derivation_algebra(const LeibnizAlgebra& a) {
  std::size_t n = a.dim();
  // Unknowns m(a,b) flattened as a*n+b; one equation per (i,j,r):
  // sum_b m(r,b) c(i,j,b) - sum_a m(a,i) c(a,j,r) - sum_a m(a,j) c(i,a,r) = 0.
  Matrix sys = Matrix::zero(n * n * n, n * n, a.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t r = 0; r < n; ++r) {
        std::size_t eq = (i * n + j) * n + r;
        for (std::size_t b = 0; b < n; ++b) sys.at(eq, r * n + b) += a.c(i, j, b);
        for (std::size_t x = 0; x < n; ++x) {
          sys.at(eq, x * n + i) -= a.c(x, j, r);
          sys.at(eq, x * n + j) -= a.c(i, x, r);
        }
      }
  DerivationSet d = seal_set(a, kernel(sys));
  if (!d.contains_adl || !d.closed) throw Error("derivation algebra failed its structure checks");
  return d;
}

DerivationSet lie_closure(const LeibnizAlgebra& a, const std::vector<Matrix>& generators) {
  std::size_t n = a.dim();
  for (std::size_t g = 0; g < generators.size(); ++g) {
    DerivationCheck check = derivation_check(a, generators[g]);
    if (!check.ok)
      throw ValidationError("generator " + std::to_string(g + 1) +
                            " is not a derivation; condition fails at basis pair (" +
                            std::to_string(check.violations.front().first + 1) + "," +
                            std::to_string(check.violations.front().second + 1) + ")");
  }

  std::vector<Vec> rows;
  for (const Matrix& m : ad_left(a).maps) rows.push_back(flatten(m));
  for (const Matrix& m : generators) rows.push_back(flatten(m));
  Subspace space = Subspace::span_rows(Matrix::from_rows(rows, n * n, a.field()));

  // Fixed-point iteration; the ambient dimension n^2 bounds the step count.
  for (;;) {
    std::vector<Matrix> basis;
    for (std::size_t r = 0; r < space.dim(); ++r)
      basis.push_back(unflatten(space.basis().row(r), n, a.field()));
    std::vector<Vec> next_rows;
    for (std::size_t r = 0; r < space.dim(); ++r) next_rows.push_back(space.basis().row(r));
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i + 1; j < basis.size(); ++j)
        next_rows.push_back(flatten(commutator(basis[i], basis[j])));
    Subspace next = Subspace::span_rows(Matrix::from_rows(next_rows, n * n, a.field()));
    if (next.dim() == space.dim()) break;
    space = std::move(next);
  }

  DerivationSet d = seal_set(a, std::move(space));
  if (!d.contains_adl || !d.closed) throw Error("closure failed its structure checks");
  return d;
}

DerivationSet adl_set(const LeibnizAlgebra& a) { return lie_closure(a, {}); }

Subspace annihilator(const DerivationSet& d) {
  std::size_t n = d.algebra.dim();
  std::vector<Matrix> blocks = d.basis_matrices();
  if (blocks.empty()) return Subspace::full(n, d.algebra.field());
  return kernel(vstack(blocks, n, d.algebra.field()));
}

Subspace d_center(const DerivationSet& d) {
  if (!d.contains_adl) throw Error("D-center requires a set containing the left multiplications");
  Centers c = centers(d.algebra);
  Subspace result = subspace_intersect(annihilator(d), c.left);
  if (!subspace_leq(result, c.center))
    throw Error("D-center escaped the center");  // impossible when contains_adl holds
  return result;
}

Subspace d_derived(const DerivationSet& d) {
  std::size_t n = d.algebra.dim();
  Subspace sum = Subspace::zero(n, d.algebra.field());
  for (const Matrix& m : d.basis_matrices()) sum = subspace_sum(sum, column_space(m));
  return sum;
}

InducedSet induced_derivations(const DerivationSet& d, const Subspace& z) {
  const LeibnizAlgebra& a = d.algebra;
  std::vector<Matrix> basis = d.basis_matrices();
  for (const Matrix& m : basis)
    for (std::size_t r = 0; r < z.dim(); ++r)
      if (!subspace_contains(z, m * z.basis().row(r)))
        throw Error("quotient ideal is not invariant under the derivation set");

  QuotientAlgebra quot = quotient_algebra(a, z);  // checks the ideal property
  std::size_t q = quot.algebra.dim();
  std::vector<Vec> rows;
  for (const Matrix& m : basis) rows.push_back(flatten(quot.proj * m * quot.section));
  Subspace space = Subspace::span_rows(Matrix::from_rows(rows, q * q, a.field()));

  DerivationSet induced = seal_set(quot.algebra, std::move(space));
  if (!induced.contains_adl || !induced.closed)
    throw Error("induced derivation set failed its structure checks");

  // The left multiplications of L must push forward onto exactly the left
  // multiplications of the quotient.
  std::vector<Vec> pushed;
  for (const Matrix& m : ad_left(a).maps) pushed.push_back(flatten(quot.proj * m * quot.section));
  Subspace image = Subspace::span_rows(Matrix::from_rows(pushed, q * q, a.field()));
  if (!(image == ad_left(quot.algebra).space))
    throw Error("left multiplications did not push forward onto the quotient's");

  return InducedSet{std::move(quot), std::move(induced)};
}

}  // namespace leibniz
