#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "leibniz/error.hpp"

namespace leibniz {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

enum class FieldKind { rationals, prime };

/// Which field scalars live in: Q, or F_p for a prime p.
/// p is capped below 2^31 so residue arithmetic stays in machine words.
struct FieldSpec {
  FieldKind kind = FieldKind::rationals;
  std::int64_t p = 0;  // modulus, prime kind only

  static constexpr std::int64_t max_prime = 2147483647;  // 2^31 - 1

  static FieldSpec rationals() { return FieldSpec{}; }
  static FieldSpec prime(std::int64_t p);  // throws Error unless 2 <= p <= max_prime and p prime

  bool is_rationals() const { return kind == FieldKind::rationals; }
  bool is_prime() const { return kind == FieldKind::prime; }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// An exact field element in canonical form.
///
/// Rationals are stored as a normalized fraction (coprime, positive
/// denominator); prime-field elements as the residue in [0, p). Canonical
/// form makes structural equality coincide with field equality, which the
/// subspace layer relies on.
class Scalar {
 public:
  Scalar() = default;  // rational zero

  static Scalar zero(const FieldSpec& f);
  static Scalar one(const FieldSpec& f);
  static Scalar of(const FieldSpec& f, std::int64_t value);
  static Scalar of(const FieldSpec& f, const Int& value);
  static Scalar rational(const Rat& value);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Rational value; only meaningful for the rationals kind.
  const Rat& rat() const { return q_; }
  /// Residue in [0, p); only meaningful for the prime kind.
  std::int64_t residue() const { return r_; }

  friend bool operator==(const Scalar&, const Scalar&) = default;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);  // throws on zero divisor
  friend Scalar operator-(const Scalar& a);

  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

 private:
  FieldSpec field_;
  Rat q_ = 0;          // rationals only
  std::int64_t r_ = 0;  // prime residue only
};

/// Multiplicative inverse; throws Error on zero.
Scalar inv(const Scalar& a);

/// Parses the scalar grammar: rationals `-?digits(/digits)?`, prime fields
/// `digits` (reduced mod p). Throws Error on malformed text, a zero
/// denominator, or a denominator given for a prime field.
Scalar scalar_parse(const std::string& text, const FieldSpec& f);

/// Canonical text form: `n` or `n/d` with d > 1 for rationals, the residue
/// for prime fields. scalar_parse(scalar_format(s), f) == s.
std::string scalar_format(const Scalar& s);

}  // namespace leibniz
