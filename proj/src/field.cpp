#include "leibniz/field.hpp"

#include <cctype>

namespace leibniz {

namespace {

bool is_prime_number(std::int64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::int64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

void require_same_field(const Scalar& a, const Scalar& b) {
  if (!(a.field() == b.field())) throw Error("scalar field mismatch");
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  // extended Euclid; a in [1, p)
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw Error("residue not invertible (modulus not prime?)");
  return t < 0 ? t + p : t;
}

}  // namespace

FieldSpec FieldSpec::prime(std::int64_t p) {
  if (p < 2 || p > max_prime) throw Error("prime modulus out of range [2, 2^31)");
  if (!is_prime_number(p)) throw Error("modulus " + std::to_string(p) + " is not prime");
  FieldSpec f;
  f.kind = FieldKind::prime;
  f.p = p;
  return f;
}

Scalar Scalar::zero(const FieldSpec& f) {
  Scalar s;
  s.field_ = f;
  return s;
}

Scalar Scalar::one(const FieldSpec& f) { return of(f, 1); }

Scalar Scalar::of(const FieldSpec& f, std::int64_t value) {
  Scalar s;
  s.field_ = f;
  if (f.is_prime()) {
    s.r_ = value % f.p;
    if (s.r_ < 0) s.r_ += f.p;
  } else {
    s.q_ = value;
  }
  return s;
}

Scalar Scalar::of(const FieldSpec& f, const Int& value) {
  Scalar s;
  s.field_ = f;
  if (f.is_prime()) {
    Int r = value % f.p;
    if (r < 0) r += f.p;
    s.r_ = r.convert_to<std::int64_t>();
  } else {
    s.q_ = Rat(value);
  }
  return s;
}

Scalar Scalar::rational(const Rat& value) {
  Scalar s;
  s.q_ = value;
  return s;
}

bool Scalar::is_zero() const { return field_.is_prime() ? r_ == 0 : q_ == 0; }

bool Scalar::is_one() const { return field_.is_prime() ? r_ == 1 : q_ == 1; }

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same_field(a, b);
  Scalar s = a;
  if (a.field_.is_prime())
    s.r_ = (a.r_ + b.r_) % a.field_.p;
  else
    s.q_ = a.q_ + b.q_;
  return s;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  require_same_field(a, b);
  Scalar s = a;
  if (a.field_.is_prime()) {
    s.r_ = (a.r_ - b.r_) % a.field_.p;
    if (s.r_ < 0) s.r_ += a.field_.p;
  } else {
    s.q_ = a.q_ - b.q_;
  }
  return s;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same_field(a, b);
  Scalar s = a;
  if (a.field_.is_prime())
    s.r_ = (a.r_ * b.r_) % a.field_.p;  // p < 2^31 keeps the product in range
  else
    s.q_ = a.q_ * b.q_;
  return s;
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * inv(b); }

Scalar operator-(const Scalar& a) {
  Scalar s = a;
  if (a.field_.is_prime()) {
    if (a.r_ != 0) s.r_ = a.field_.p - a.r_;
  } else {
    s.q_ = -a.q_;
  }
  return s;
}

Scalar inv(const Scalar& a) {
  if (a.is_zero()) throw Error("division by zero");
  Scalar s = a;
  if (a.field().is_prime())
    s = Scalar::of(a.field(), mod_inverse(a.residue(), a.field().p));
  else
    s = Scalar::rational(Rat(1) / a.rat());
  return s;
}

Scalar scalar_parse(const std::string& text, const FieldSpec& f) {
  if (text.empty()) throw Error("empty scalar");
  std::size_t pos = 0;
  bool negative = false;
  if (text[0] == '-') {
    if (f.is_prime()) throw Error("malformed scalar '" + text + "' for prime field");
    negative = true;
    pos = 1;
  }
  std::size_t digits_start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == digits_start) throw Error("malformed scalar '" + text + "'");
  Int num(text.substr(digits_start, pos - digits_start));
  if (negative) num = -num;
  if (pos == text.size()) return Scalar::of(f, num);
  if (text[pos] != '/') throw Error("malformed scalar '" + text + "'");
  if (f.is_prime()) throw Error("denominator not allowed for prime field in '" + text + "'");
  std::size_t den_start = ++pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == den_start || pos != text.size()) throw Error("malformed scalar '" + text + "'");
  Int den(text.substr(den_start));
  if (den == 0) throw Error("zero denominator in '" + text + "'");
  return Scalar::rational(Rat(num, den));
}

std::string scalar_format(const Scalar& s) {
  if (s.field().is_prime()) return std::to_string(s.residue());
  const Rat& q = s.rat();
  std::string out = numerator(q).str();
  if (denominator(q) != 1) out += "/" + denominator(q).str();
  return out;
}

}  // namespace leibniz
