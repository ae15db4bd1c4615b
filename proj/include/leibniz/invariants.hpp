#pragma once

#include <string>
#include <vector>

#include "leibniz/analyze.hpp"
#include "leibniz/fuzz.hpp"

namespace leibniz {

/// Outcome of the full per-algebra verification: structural invariants,
/// both series, every bound, and basis-change invariance.
struct InstanceCheck {
  bool ok = true;
  std::vector<std::string> failures;
  std::size_t dsets = 0;         // derivation sets the algebra was paired with
  std::size_t bound_checks = 0;  // applicable inequalities evaluated
  // observations (recorded, never asserted)
  bool asymmetric_centers = false;  // dim of left and right centers differ
  bool der_k_gt_t = false;          // with D = Der(L): k exceeds t
};

/// Runs the whole invariant-and-bound suite on one algebra: center/ideal
/// structure, annihilator identities, the commutator identity with the
/// left multiplications, both series for each paired derivation set
/// (ascent, descent, invariance, quotient consistency), every bound and
/// specialization, and dimension invariance under 3 random basis changes.
/// Any failed check lands in `failures`; rng drives the sampled choices.
InstanceCheck verify_instance(const LeibnizAlgebra& a, Rng& rng);

}  // namespace leibniz
