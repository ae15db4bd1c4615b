#pragma once

#include <cstdint>
#include <random>

#include "leibniz/linalg.hpp"

namespace leibniz {

/// Deterministic random source. mt19937_64 has a standard-specified output
/// sequence, and reduction is plain modulo (std::uniform_int_distribution
/// is implementation-defined), so a seed yields the same stream on every
/// platform and toolchain — the fuzz-reproducibility contract depends on
/// this.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() { return state_(); }

  std::uint64_t below(std::uint64_t bound) { return bound ? next() % bound : 0; }

  std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool coin() { return below(2) == 1; }

  /// Small scalar: integers in [-3, 3] over the rationals, any residue over
  /// a prime field.
  Scalar scalar(const FieldSpec& f) {
    if (f.is_prime()) return Scalar::of(f, static_cast<std::int64_t>(below(f.p)));
    return Scalar::of(f, int_in(-3, 3));
  }

  Scalar nonzero_scalar(const FieldSpec& f) {
    for (;;) {
      Scalar s = scalar(f);
      if (!s.is_zero()) return s;
    }
  }

  Vec vec(std::size_t n, const FieldSpec& f) {
    Vec v = zero_vec(n, f);
    for (Scalar& s : v) s = scalar(f);
    return v;
  }

  Matrix invertible(std::size_t n, const FieldSpec& f) {
    for (;;) {
      Matrix m = Matrix::zero(n, n, f);
      for (Scalar& s : m.a) s = scalar(f);
      if (rref(m).rank == n) return m;
    }
  }

 private:
  std::mt19937_64 state_;
};

}  // namespace leibniz
