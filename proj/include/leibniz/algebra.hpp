#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "leibniz/linalg.hpp"

namespace leibniz {

/// One failing basis triple of the left Leibniz identity, with both sides
/// of [[e_i,e_j],e_k] = [e_i,[e_j,e_k]] - [e_j,[e_i,e_k]]. Indices are
/// 0-based here; user-facing messages print them 1-based.
struct LeibnizViolation {
  std::size_t i = 0, j = 0, k = 0;
  Vec lhs;
  Vec rhs;
};

struct TableValidation {
  bool ok = true;
  std::vector<LeibnizViolation> violations;
};

/// A finite-dimensional left Leibniz algebra given by structure constants:
/// [e_i, e_j] = sum_k c(i,j,k) e_k. Construction validates the left Leibniz
/// identity on all basis triples (bilinearity makes that sufficient), so
/// every live instance is valid and immutable.
class LeibnizAlgebra {
 public:
  /// Validates and constructs; throws ValidationError listing the violating
  /// triples if the table does not satisfy the Leibniz identity.
  static LeibnizAlgebra make(std::size_t n, const FieldSpec& f, std::vector<Scalar> constants);

  /// Checks a raw table without constructing.
  static TableValidation validate_table(std::size_t n, const FieldSpec& f,
                                        const std::vector<Scalar>& constants);

  std::size_t dim() const { return n_; }
  const FieldSpec& field() const { return field_; }
  const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * n_ + j) * n_ + k];
  }
  const std::vector<Scalar>& constants() const { return c_; }

  /// [e_i, e_j] as a coordinate vector.
  Vec bracket_basis(std::size_t i, std::size_t j) const;

  /// True iff [x,x] = 0 for all x, tested by the polarized condition:
  /// diagonal basis brackets vanish and constants are antisymmetric. The
  /// polarized form is what stays correct in characteristic 2.
  bool is_lie() const { return lie_; }

  friend bool operator==(const LeibnizAlgebra&, const LeibnizAlgebra&) = default;

 private:
  LeibnizAlgebra() = default;
  std::size_t n_ = 0;
  FieldSpec field_;
  std::vector<Scalar> c_;
  bool lie_ = true;
};

std::string describe_violations(const std::vector<LeibnizViolation>& violations);

/// Bilinear extension of the structure constants.
Vec bracket_eval(const LeibnizAlgebra& a, const Vec& x, const Vec& y);

/// Left multiplication l_x : y -> [x, y] in the column convention.
Matrix left_mult(const LeibnizAlgebra& a, const Vec& x);
Matrix left_mult_basis(const LeibnizAlgebra& a, std::size_t i);
/// Right multiplication r_j : x -> [x, e_j].
Matrix right_mult_basis(const LeibnizAlgebra& a, std::size_t j);

struct Centers {
  Subspace left;
  Subspace right;
  Subspace center;
};

/// Left center {x : [x,L] = 0}, right center {x : [L,x] = 0}, and their
/// intersection, each solved as the kernel of a stacked linear system.
Centers centers(const LeibnizAlgebra& a);

/// [L,L] = span of all basis brackets.
Subspace derived_subalgebra(const LeibnizAlgebra& a);

/// Two-sided ideal test: [L,u] and [u,L] both land in u.
bool is_ideal(const LeibnizAlgebra& a, const Subspace& u);

struct QuotientAlgebra {
  LeibnizAlgebra algebra;
  Matrix proj;     // qdim x n
  Matrix section;  // n x qdim, proj * section = identity
};

/// Quotient by an ideal (checked; throws Error otherwise). The quotient
/// basis is the set of non-pivot coordinates of z's RREF basis.
QuotientAlgebra quotient_algebra(const LeibnizAlgebra& a, const Subspace& z);

enum class Family { abelian, cyclic_leibniz, heisenberg, nonabelian2 };

/// Fixture families:
///   abelian      - all brackets zero (any dim)
///   cyclic_leibniz - [e1,e_i] = e_{i+1} for i < n (dim >= 2; non-Lie)
///   heisenberg   - [e1,e2] = e3 = -[e2,e1] (dim 3)
///   nonabelian2  - [e1,e2] = e2 = -[e2,e1] (dim 2)
LeibnizAlgebra catalog_make(Family family, std::size_t dim, const FieldSpec& f);

LeibnizAlgebra direct_sum(const LeibnizAlgebra& a, const LeibnizAlgebra& b);

/// Structure constants in the basis f_j = sum_i p(i,j) e_i; throws Error if
/// p is singular.
LeibnizAlgebra change_basis(const LeibnizAlgebra& a, const Matrix& p);

}  // namespace leibniz
