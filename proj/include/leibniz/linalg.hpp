#pragma once

#include <cstddef>
#include <vector>

#include "leibniz/field.hpp"

namespace leibniz {

using Vec = std::vector<Scalar>;

Vec zero_vec(std::size_t n, const FieldSpec& f);
Vec basis_vec(std::size_t n, std::size_t i, const FieldSpec& f);
bool is_zero_vec(const Vec& v);

/// Dense row-major matrix over an exact field. Zero-row and zero-column
/// shapes are legal; the dimensions are stored explicitly so an r x 0 or
/// 0 x c matrix keeps its shape through products and stacking.
///
/// Convention used across the project: a matrix acting on algebra elements
/// maps basis vector e_c to its column c.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  FieldSpec field;
  std::vector<Scalar> a;  // row-major, rows*cols entries

  static Matrix zero(std::size_t rows, std::size_t cols, const FieldSpec& f);
  static Matrix identity(std::size_t n, const FieldSpec& f);
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols, const FieldSpec& f);

  Scalar& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;
  Matrix transpose() const;
  bool is_zero() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;
};

Matrix operator*(const Matrix& x, const Matrix& y);
Matrix operator+(const Matrix& x, const Matrix& y);
Matrix operator-(const Matrix& x, const Matrix& y);
Matrix operator*(const Scalar& s, const Matrix& x);
Vec operator*(const Matrix& m, const Vec& x);

/// Stacks blocks vertically; all must share the column count and field.
Matrix vstack(const std::vector<Matrix>& blocks, std::size_t cols, const FieldSpec& f);

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

/// Unique reduced row echelon form (Gauss-Jordan with exact arithmetic).
RrefResult rref(const Matrix& m);

/// Inverse of a square matrix; throws Error if singular.
Matrix inverse(const Matrix& m);

/// A subspace of F^n held in its canonical form: the reduced row echelon
/// basis with zero rows dropped. Canonicity makes equality of values
/// coincide with equality of subspaces, which is what series-stabilization
/// detection and test assertions rely on.
class Subspace {
 public:
  static Subspace zero(std::size_t ambient, const FieldSpec& f);
  static Subspace full(std::size_t ambient, const FieldSpec& f);
  /// Span of the rows of m, canonicalized.
  static Subspace span_rows(const Matrix& m);

  std::size_t ambient() const { return basis_.cols; }
  std::size_t dim() const { return basis_.rows; }
  const FieldSpec& field() const { return basis_.field; }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  Subspace() = default;
  Matrix basis_;  // dim x ambient, canonical RREF, no zero rows
  std::vector<std::size_t> pivots_;
};

/// x reduced against u's RREF basis; zero iff x is in u.
Vec residual(const Subspace& u, Vec x);

/// Null space {x : m x = 0} of F^cols.
Subspace kernel(const Matrix& m);

/// Span of the columns of m, as a subspace of F^rows.
Subspace column_space(const Matrix& m);

Subspace subspace_sum(const Subspace& u, const Subspace& v);

/// Intersection via the Zassenhaus stacked-block elimination.
Subspace subspace_intersect(const Subspace& u, const Subspace& v);

bool subspace_contains(const Subspace& u, const Vec& x);

/// u subseteq v.
bool subspace_leq(const Subspace& u, const Subspace& v);

/// {x : m x in w}; always contains kernel(m).
Subspace preimage(const Matrix& m, const Subspace& w);

/// Linear data of the quotient F^n / z. proj (qdim x n) has kernel exactly
/// z; section (n x qdim) satisfies proj * section = identity. Quotient
/// coordinates are the non-pivot coordinates of z's RREF basis.
struct QuotientMap {
  Matrix proj;
  Matrix section;
  std::size_t qdim = 0;
};

QuotientMap quotient_map(const Subspace& z);

}  // namespace leibniz
