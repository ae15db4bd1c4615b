#include "leibniz/linalg.hpp"

#include <algorithm>
#include <utility>

namespace leibniz {

Vec zero_vec(std::size_t n, const FieldSpec& f) { return Vec(n, Scalar::zero(f)); }

Vec basis_vec(std::size_t n, std::size_t i, const FieldSpec& f) {
  Vec v = zero_vec(n, f);
  v[i] = Scalar::one(f);
  return v;
}

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix Matrix::zero(std::size_t rows, std::size_t cols, const FieldSpec& f) {
  Matrix m;
  m.rows = rows;
  m.cols = cols;
  m.field = f;
  m.a.assign(rows * cols, Scalar::zero(f));
  return m;
}

Matrix Matrix::identity(std::size_t n, const FieldSpec& f) {
  Matrix m = zero(n, n, f);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols, const FieldSpec& f) {
  Matrix m = zero(rows.size(), cols, f);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Vec Matrix::row(std::size_t r) const {
  Vec v(a.begin() + r * cols, a.begin() + (r + 1) * cols);
  return v;
}

Vec Matrix::col(std::size_t c) const {
  Vec v;
  v.reserve(rows);
  for (std::size_t r = 0; r < rows; ++r) v.push_back(at(r, c));
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t = zero(cols, rows, field);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix operator*(const Matrix& x, const Matrix& y) {
  if (x.cols != y.rows || !(x.field == y.field)) throw Error("matrix product shape mismatch");
  Matrix z = Matrix::zero(x.rows, y.cols, x.field);
  for (std::size_t r = 0; r < x.rows; ++r)
    for (std::size_t k = 0; k < x.cols; ++k) {
      const Scalar& xv = x.at(r, k);
      if (xv.is_zero()) continue;
      for (std::size_t c = 0; c < y.cols; ++c) z.at(r, c) += xv * y.at(k, c);
    }
  return z;
}

Matrix operator+(const Matrix& x, const Matrix& y) {
  if (x.rows != y.rows || x.cols != y.cols || !(x.field == y.field))
    throw Error("matrix sum shape mismatch");
  Matrix z = x;
  for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] += y.a[i];
  return z;
}

Matrix operator-(const Matrix& x, const Matrix& y) {
  if (x.rows != y.rows || x.cols != y.cols || !(x.field == y.field))
    throw Error("matrix difference shape mismatch");
  Matrix z = x;
  for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] -= y.a[i];
  return z;
}

Matrix operator*(const Scalar& s, const Matrix& x) {
  Matrix z = x;
  for (Scalar& e : z.a) e *= s;
  return z;
}

Vec operator*(const Matrix& m, const Vec& x) {
  if (x.size() != m.cols) throw Error("matrix-vector shape mismatch");
  Vec y = zero_vec(m.rows, m.field);
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c) y[r] += m.at(r, c) * x[c];
  return y;
}

Matrix vstack(const std::vector<Matrix>& blocks, std::size_t cols, const FieldSpec& f) {
  std::size_t rows = 0;
  for (const Matrix& b : blocks) {
    if (b.cols != cols || !(b.field == f)) throw Error("vstack shape mismatch");
    rows += b.rows;
  }
  Matrix m = Matrix::zero(rows, cols, f);
  std::size_t r0 = 0;
  for (const Matrix& b : blocks) {
    std::copy(b.a.begin(), b.a.end(), m.a.begin() + r0 * cols);
    r0 += b.rows;
  }
  return m;
}

RrefResult rref(const Matrix& m) {
  RrefResult res;
  res.reduced = m;
  Matrix& r = res.reduced;
  std::size_t pr = 0;  // next pivot row
  for (std::size_t col = 0; col < r.cols && pr < r.rows; ++col) {
    std::size_t sel = pr;
    while (sel < r.rows && r.at(sel, col).is_zero()) ++sel;
    if (sel == r.rows) continue;
    if (sel != pr)
      for (std::size_t c = 0; c < r.cols; ++c) std::swap(r.at(pr, c), r.at(sel, c));
    Scalar piv_inv = inv(r.at(pr, col));
    for (std::size_t c = col; c < r.cols; ++c) r.at(pr, c) *= piv_inv;
    for (std::size_t row = 0; row < r.rows; ++row) {
      if (row == pr || r.at(row, col).is_zero()) continue;
      Scalar factor = r.at(row, col);
      for (std::size_t c = col; c < r.cols; ++c) r.at(row, c) -= factor * r.at(pr, c);
    }
    res.pivots.push_back(col);
    ++pr;
  }
  res.rank = pr;
  return res;
}

Matrix inverse(const Matrix& m) {
  if (m.rows != m.cols) throw Error("inverse of non-square matrix");
  std::size_t n = m.rows;
  Matrix aug = Matrix::zero(n, 2 * n, m.field);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = Scalar::one(m.field);
  }
  RrefResult red = rref(aug);
  if (red.rank < n || (n > 0 && red.pivots[n - 1] >= n)) throw Error("matrix is singular");
  Matrix out = Matrix::zero(n, n, m.field);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out.at(r, c) = red.reduced.at(r, n + c);
  return out;
}

Subspace Subspace::zero(std::size_t ambient, const FieldSpec& f) {
  Subspace s;
  s.basis_ = Matrix::zero(0, ambient, f);
  return s;
}

Subspace Subspace::full(std::size_t ambient, const FieldSpec& f) {
  Subspace s;
  s.basis_ = Matrix::identity(ambient, f);
  for (std::size_t i = 0; i < ambient; ++i) s.pivots_.push_back(i);
  return s;
}

Subspace Subspace::span_rows(const Matrix& m) {
  RrefResult red = rref(m);
  Subspace s;
  s.basis_ = Matrix::zero(red.rank, m.cols, m.field);
  std::copy(red.reduced.a.begin(), red.reduced.a.begin() + red.rank * m.cols, s.basis_.a.begin());
  s.pivots_ = red.pivots;
  return s;
}

Vec residual(const Subspace& u, Vec x) {
  if (x.size() != u.ambient()) throw Error("residual ambient mismatch");
  for (std::size_t i = 0; i < u.dim(); ++i) {
    Scalar c = x[u.pivots()[i]];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < x.size(); ++j) x[j] -= c * u.basis().at(i, j);
  }
  return x;
}

Subspace kernel(const Matrix& m) {
  RrefResult red = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (std::size_t p : red.pivots) is_pivot[p] = true;
  std::vector<Vec> rows;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v = zero_vec(m.cols, m.field);
    v[free] = Scalar::one(m.field);
    for (std::size_t i = 0; i < red.rank; ++i) v[red.pivots[i]] = -red.reduced.at(i, free);
    rows.push_back(std::move(v));
  }
  return Subspace::span_rows(Matrix::from_rows(rows, m.cols, m.field));
}

Subspace column_space(const Matrix& m) { return Subspace::span_rows(m.transpose()); }

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient() || !(u.field() == v.field()))
    throw Error("subspace sum ambient/field mismatch");
  return Subspace::span_rows(vstack({u.basis(), v.basis()}, u.ambient(), u.field()));
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient() || !(u.field() == v.field()))
    throw Error("subspace intersection ambient/field mismatch");
  std::size_t n = u.ambient();
  // Zassenhaus blocks: rows (u_i | u_i) and (v_j | 0); after elimination the
  // rows with zero left half carry an intersection basis in the right half.
  Matrix stacked = Matrix::zero(u.dim() + v.dim(), 2 * n, u.field());
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t c = 0; c < n; ++c) {
      stacked.at(i, c) = u.basis().at(i, c);
      stacked.at(i, n + c) = u.basis().at(i, c);
    }
  for (std::size_t j = 0; j < v.dim(); ++j)
    for (std::size_t c = 0; c < n; ++c) stacked.at(u.dim() + j, c) = v.basis().at(j, c);
  RrefResult red = rref(stacked);
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < red.rank; ++r) {
    bool left_zero = true;
    for (std::size_t c = 0; c < n && left_zero; ++c) left_zero = red.reduced.at(r, c).is_zero();
    if (!left_zero) continue;
    Vec w(red.reduced.a.begin() + r * 2 * n + n, red.reduced.a.begin() + (r + 1) * 2 * n);
    rows.push_back(std::move(w));
  }
  return Subspace::span_rows(Matrix::from_rows(rows, n, u.field()));
}

bool subspace_contains(const Subspace& u, const Vec& x) { return is_zero_vec(residual(u, x)); }

bool subspace_leq(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient() || !(u.field() == v.field()))
    throw Error("subspace containment ambient/field mismatch");
  for (std::size_t i = 0; i < u.dim(); ++i)
    if (!subspace_contains(v, u.basis().row(i))) return false;
  return true;
}

namespace {

// Linear map x -> x - (projection of x onto w along its pivot coordinates);
// its kernel is exactly w.
Matrix residual_matrix(const Subspace& w) {
  std::size_t n = w.ambient();
  Matrix r = Matrix::identity(n, w.field());
  for (std::size_t i = 0; i < w.dim(); ++i) {
    std::size_t p = w.pivots()[i];
    for (std::size_t row = 0; row < n; ++row) r.at(row, p) -= w.basis().at(i, row);
  }
  return r;
}

}  // namespace

Subspace preimage(const Matrix& m, const Subspace& w) {
  if (w.ambient() != m.rows || !(w.field() == m.field))
    throw Error("preimage ambient/field mismatch");
  return kernel(residual_matrix(w) * m);
}

QuotientMap quotient_map(const Subspace& z) {
  std::size_t n = z.ambient();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : z.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> complement;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) complement.push_back(c);

  QuotientMap qm;
  qm.qdim = complement.size();
  qm.proj = Matrix::zero(qm.qdim, n, z.field());
  qm.section = Matrix::zero(n, qm.qdim, z.field());
  for (std::size_t q = 0; q < qm.qdim; ++q) {
    qm.proj.at(q, complement[q]) = Scalar::one(z.field());
    for (std::size_t i = 0; i < z.dim(); ++i)
      qm.proj.at(q, z.pivots()[i]) = -z.basis().at(i, complement[q]);
    qm.section.at(complement[q], q) = Scalar::one(z.field());
  }
  return qm;
}

}  // namespace leibniz
