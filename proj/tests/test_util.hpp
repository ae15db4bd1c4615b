#pragma once

#include <cstdint>
#include <vector>

#include "leibniz/algebra.hpp"

namespace testutil {

using namespace leibniz;

inline FieldSpec q() { return FieldSpec::rationals(); }
inline FieldSpec fp(std::int64_t p) { return FieldSpec::prime(p); }

inline Scalar sc(const FieldSpec& f, std::int64_t v) { return Scalar::of(f, v); }
inline Scalar frac(std::int64_t num, std::int64_t den) {
  return Scalar::rational(Rat(Int(num), Int(den)));
}

struct Entry {
  std::size_t i, j, k;  // 1-based, like the file format
  std::int64_t value;
};

/// Structure-constant table from a sparse entry list.
inline std::vector<Scalar> table(std::size_t n, const FieldSpec& f,
                                 const std::vector<Entry>& entries) {
  std::vector<Scalar> c(n * n * n, Scalar::zero(f));
  for (const Entry& e : entries)
    c[((e.i - 1) * n + (e.j - 1)) * n + (e.k - 1)] = sc(f, e.value);
  return c;
}

inline LeibnizAlgebra make(std::size_t n, const FieldSpec& f, const std::vector<Entry>& entries) {
  return LeibnizAlgebra::make(n, f, table(n, f, entries));
}

// The two standing fixtures: a1 is the 2-dim cyclic algebra [e1,e1] = e2
// (not Lie); heis is the 3-dim Heisenberg algebra [e1,e2] = e3 = -[e2,e1].
inline LeibnizAlgebra a1(const FieldSpec& f) { return catalog_make(Family::cyclic_leibniz, 2, f); }
inline LeibnizAlgebra heis(const FieldSpec& f) { return catalog_make(Family::heisenberg, 3, f); }

inline Vec vec(const FieldSpec& f, const std::vector<std::int64_t>& entries) {
  Vec v;
  for (std::int64_t e : entries) v.push_back(sc(f, e));
  return v;
}

inline Matrix mat(const FieldSpec& f, std::size_t rows, std::size_t cols,
                  const std::vector<std::int64_t>& entries) {
  Matrix m = Matrix::zero(rows, cols, f);
  for (std::size_t i = 0; i < entries.size(); ++i) m.a[i] = sc(f, entries[i]);
  return m;
}

}  // namespace testutil
