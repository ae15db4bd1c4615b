#include "leibniz/algebra.hpp"

#include <utility>

namespace leibniz {

TableValidation LeibnizAlgebra::validate_table(std::size_t n, const FieldSpec& f,
                                               const std::vector<Scalar>& constants) {
  if (constants.size() != n * n * n) throw Error("structure constant table has wrong size");
  for (const Scalar& s : constants)
    if (!(s.field() == f)) throw Error("structure constant field mismatch");

  auto c = [&](std::size_t i, std::size_t j, std::size_t k) -> const Scalar& {
    return constants[(i * n + j) * n + k];
  };

  TableValidation out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        // [[e_i,e_j],e_k] vs [e_i,[e_j,e_k]] - [e_j,[e_i,e_k]]
        Vec lhs = zero_vec(n, f);
        Vec rhs = zero_vec(n, f);
        for (std::size_t m = 0; m < n; ++m) {
          if (!c(i, j, m).is_zero())
            for (std::size_t r = 0; r < n; ++r) lhs[r] += c(i, j, m) * c(m, k, r);
          if (!c(j, k, m).is_zero())
            for (std::size_t r = 0; r < n; ++r) rhs[r] += c(j, k, m) * c(i, m, r);
          if (!c(i, k, m).is_zero())
            for (std::size_t r = 0; r < n; ++r) rhs[r] -= c(i, k, m) * c(j, m, r);
        }
        if (lhs != rhs) {
          out.ok = false;
          out.violations.push_back({i, j, k, std::move(lhs), std::move(rhs)});
        }
      }
  return out;
}

std::string describe_violations(const std::vector<LeibnizViolation>& violations) {
  std::string msg = "left Leibniz identity fails on " + std::to_string(violations.size()) +
                    " basis triple(s):";
  std::size_t shown = 0;
  for (const LeibnizViolation& v : violations) {
    if (shown == 8) {
      msg += " ...";
      break;
    }
    msg += " (" + std::to_string(v.i + 1) + "," + std::to_string(v.j + 1) + "," +
           std::to_string(v.k + 1) + ")";
    ++shown;
  }
  return msg;
}

LeibnizAlgebra LeibnizAlgebra::make(std::size_t n, const FieldSpec& f,
                                    std::vector<Scalar> constants) {
  TableValidation check = validate_table(n, f, constants);
  if (!check.ok) throw ValidationError(describe_violations(check.violations));

  LeibnizAlgebra a;
  a.n_ = n;
  a.field_ = f;
  a.c_ = std::move(constants);
  for (std::size_t i = 0; i < n && a.lie_; ++i)
    for (std::size_t j = 0; j <= i && a.lie_; ++j)
      for (std::size_t k = 0; k < n && a.lie_; ++k)
        a.lie_ = (i == j) ? a.c(i, i, k).is_zero() : (a.c(i, j, k) == -a.c(j, i, k));
  return a;
}

Vec LeibnizAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  auto first = c_.begin() + static_cast<std::ptrdiff_t>((i * n_ + j) * n_);
  return Vec(first, first + static_cast<std::ptrdiff_t>(n_));
}

Vec bracket_eval(const LeibnizAlgebra& a, const Vec& x, const Vec& y) {
  std::size_t n = a.dim();
  if (x.size() != n || y.size() != n) throw Error("bracket operand dimension mismatch");
  Vec out = zero_vec(n, a.field());
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      Scalar w = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) out[k] += w * a.c(i, j, k);
    }
  }
  return out;
}

Matrix left_mult(const LeibnizAlgebra& a, const Vec& x) {
  std::size_t n = a.dim();
  if (x.size() != n) throw Error("left multiplication operand dimension mismatch");
  Matrix m = Matrix::zero(n, n, a.field());
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t r = 0; r < n; ++r) m.at(r, c) += x[i] * a.c(i, c, r);
  }
  return m;
}

Matrix left_mult_basis(const LeibnizAlgebra& a, std::size_t i) {
  std::size_t n = a.dim();
  Matrix m = Matrix::zero(n, n, a.field());
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) m.at(r, c) = a.c(i, c, r);
  return m;
}

Matrix right_mult_basis(const LeibnizAlgebra& a, std::size_t j) {
  std::size_t n = a.dim();
  Matrix m = Matrix::zero(n, n, a.field());
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) m.at(r, c) = a.c(c, j, r);
  return m;
}

Centers centers(const LeibnizAlgebra& a) {
  std::size_t n = a.dim();
  std::vector<Matrix> right_mults, left_mults;
  for (std::size_t i = 0; i < n; ++i) {
    right_mults.push_back(right_mult_basis(a, i));
    left_mults.push_back(left_mult_basis(a, i));
  }
  Subspace left = kernel(vstack(right_mults, n, a.field()));
  Subspace right = kernel(vstack(left_mults, n, a.field()));
  Subspace center = subspace_intersect(left, right);
  return Centers{std::move(left), std::move(right), std::move(center)};
}

Subspace derived_subalgebra(const LeibnizAlgebra& a) {
  std::size_t n = a.dim();
  std::vector<Vec> rows;
  rows.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rows.push_back(a.bracket_basis(i, j));
  return Subspace::span_rows(Matrix::from_rows(rows, n, a.field()));
}

bool is_ideal(const LeibnizAlgebra& a, const Subspace& u) {
  if (u.ambient() != a.dim() || !(u.field() == a.field()))
    throw Error("ideal test ambient/field mismatch");
  for (std::size_t r = 0; r < u.dim(); ++r) {
    Vec ur = u.basis().row(r);
    for (std::size_t i = 0; i < a.dim(); ++i) {
      Vec ei = basis_vec(a.dim(), i, a.field());
      if (!subspace_contains(u, bracket_eval(a, ei, ur))) return false;
      if (!subspace_contains(u, bracket_eval(a, ur, ei))) return false;
    }
  }
  return true;
}

QuotientAlgebra quotient_algebra(const LeibnizAlgebra& a, const Subspace& z) {
  if (!is_ideal(a, z)) throw Error("quotient by a subspace that is not an ideal");
  QuotientMap qm = quotient_map(z);
  std::size_t q = qm.qdim;
  std::vector<Scalar> constants(q * q * q, Scalar::zero(a.field()));
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) {
      Vec w = qm.proj * bracket_eval(a, qm.section.col(i), qm.section.col(j));
      for (std::size_t k = 0; k < q; ++k) constants[(i * q + j) * q + k] = w[k];
    }
  QuotientAlgebra out{LeibnizAlgebra::make(q, a.field(), std::move(constants)), qm.proj,
                      qm.section};
  return out;
}

LeibnizAlgebra catalog_make(Family family, std::size_t dim, const FieldSpec& f) {
  auto zero_table = [&](std::size_t n) {
    return std::vector<Scalar>(n * n * n, Scalar::zero(f));
  };
  Scalar one = Scalar::one(f);
  switch (family) {
    case Family::abelian: {
      if (dim < 1) throw Error("abelian family needs dim >= 1");
      return LeibnizAlgebra::make(dim, f, zero_table(dim));
    }
    case Family::cyclic_leibniz: {
      if (dim < 2) throw Error("cyclic family needs dim >= 2");
      std::vector<Scalar> c = zero_table(dim);
      for (std::size_t i = 0; i + 1 < dim; ++i) c[(0 * dim + i) * dim + (i + 1)] = one;
      return LeibnizAlgebra::make(dim, f, std::move(c));
    }
    case Family::heisenberg: {
      if (dim != 3) throw Error("heisenberg family needs dim == 3");
      std::vector<Scalar> c = zero_table(3);
      c[(0 * 3 + 1) * 3 + 2] = one;
      c[(1 * 3 + 0) * 3 + 2] = -one;
      return LeibnizAlgebra::make(3, f, std::move(c));
    }
    case Family::nonabelian2: {
      if (dim != 2) throw Error("nonabelian2 family needs dim == 2");
      std::vector<Scalar> c = zero_table(2);
      c[(0 * 2 + 1) * 2 + 1] = one;
      c[(1 * 2 + 0) * 2 + 1] = -one;
      return LeibnizAlgebra::make(2, f, std::move(c));
    }
  }
  throw Error("unknown catalog family");
}

LeibnizAlgebra direct_sum(const LeibnizAlgebra& a, const LeibnizAlgebra& b) {
  if (!(a.field() == b.field())) throw Error("direct sum field mismatch");
  std::size_t na = a.dim(), nb = b.dim(), n = na + nb;
  std::vector<Scalar> c(n * n * n, Scalar::zero(a.field()));
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < na; ++k) c[(i * n + j) * n + k] = a.c(i, j, k);
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t k = 0; k < nb; ++k)
        c[((na + i) * n + (na + j)) * n + (na + k)] = b.c(i, j, k);
  return LeibnizAlgebra::make(n, a.field(), std::move(c));
}

LeibnizAlgebra change_basis(const LeibnizAlgebra& a, const Matrix& p) {
  std::size_t n = a.dim();
  if (p.rows != n || p.cols != n || !(p.field == a.field()))
    throw Error("change of basis matrix shape/field mismatch");
  Matrix p_inv = inverse(p);
  std::vector<Scalar> c(n * n * n, Scalar::zero(a.field()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec w = p_inv * bracket_eval(a, p.col(i), p.col(j));
      for (std::size_t k = 0; k < n; ++k) c[(i * n + j) * n + k] = w[k];
    }
  return LeibnizAlgebra::make(n, a.field(), std::move(c));
}

}  // namespace leibniz
