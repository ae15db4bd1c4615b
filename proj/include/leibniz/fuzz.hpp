#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "leibniz/derivations.hpp"
#include "leibniz/rng.hpp"

namespace leibniz {

enum class FuzzStrategy { catalog_conjugate, graded_reject };

FuzzStrategy parse_strategy(const std::string& name);
std::string strategy_name(FuzzStrategy s);

struct FuzzConfig {
  std::size_t dim = 2;
  FieldSpec field;
  std::size_t count = 1;
  std::uint64_t seed = 1;
  FuzzStrategy strategy = FuzzStrategy::catalog_conjugate;
};

struct FuzzStream {
  std::vector<LeibnizAlgebra> algebras;
  std::size_t attempts = 0;  // tables drawn, accepted + rejected
  std::size_t rejected = 0;
};

/// Deterministic stream of validated algebras.
///
/// catalog_conjugate: a catalog family (or a direct sum of two) of the
/// requested dimension, pushed through a random change of basis — valid by
/// construction, works over any field.
///
/// graded_reject: random tables supported on c(i,j,k) with k > max(i,j)
/// (so every draw is nilpotently graded), kept only when they satisfy the
/// Leibniz identity; prime fields only; attempts/rejected record the
/// rejection rate. The all-zero table is always acceptable, so the draw
/// loop terminates.
FuzzStream fuzz_generate(const FuzzConfig& cfg);

/// The derivation sets an instance is paired with: always Ad^l(L) and
/// Der(L); when dim Der - dim Ad^l >= 2, also the closure of one random
/// element of Der outside Ad^l.
std::vector<DerivationSet> fuzz_derivation_sets(const LeibnizAlgebra& a, Rng& rng);

}  // namespace leibniz
