#include "leibniz/fuzz.hpp"

#include <utility>

namespace leibniz {

FuzzStrategy parse_strategy(const std::string& name) {
  if (name == "catalog_conjugate") return FuzzStrategy::catalog_conjugate;
  if (name == "graded_reject") return FuzzStrategy::graded_reject;
  throw ParseError("strategy must be catalog_conjugate or graded_reject, got '" + name + "'");
}

std::string strategy_name(FuzzStrategy s) {
  return s == FuzzStrategy::catalog_conjugate ? "catalog_conjugate" : "graded_reject";
}

namespace {

// The catalog atoms available at a given dimension.
std::vector<LeibnizAlgebra> atoms(std::size_t dim, const FieldSpec& f) {
  std::vector<LeibnizAlgebra> out;
  out.push_back(catalog_make(Family::abelian, dim, f));
  if (dim >= 2) out.push_back(catalog_make(Family::cyclic_leibniz, dim, f));
  if (dim == 2) out.push_back(catalog_make(Family::nonabelian2, dim, f));
  if (dim == 3) out.push_back(catalog_make(Family::heisenberg, dim, f));
  return out;
}

LeibnizAlgebra pick_atom(std::size_t dim, const FieldSpec& f, Rng& rng) {
  std::vector<LeibnizAlgebra> menu = atoms(dim, f);
  return menu[rng.below(menu.size())];
}

LeibnizAlgebra catalog_conjugate_one(const FuzzConfig& cfg, Rng& rng) {
  LeibnizAlgebra base = [&] {
    if (cfg.dim >= 2 && rng.coin()) {
      std::size_t left = 1 + rng.below(cfg.dim - 1);
      return direct_sum(pick_atom(left, cfg.field, rng),
                        pick_atom(cfg.dim - left, cfg.field, rng));
    }
    return pick_atom(cfg.dim, cfg.field, rng);
  }();
  return change_basis(base, rng.invertible(cfg.dim, cfg.field));
}

bool graded_reject_one(const FuzzConfig& cfg, Rng& rng, LeibnizAlgebra& out) {
  std::size_t n = cfg.dim;
  std::vector<Scalar> c(n * n * n, Scalar::zero(cfg.field));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = std::max(i, j) + 1; k < n; ++k)
        c[(i * n + j) * n + k] = rng.scalar(cfg.field);
  if (!LeibnizAlgebra::validate_table(n, cfg.field, c).ok) return false;
  out = LeibnizAlgebra::make(n, cfg.field, std::move(c));
  return true;
}

}  // namespace

FuzzStream fuzz_generate(const FuzzConfig& cfg) {
  if (cfg.dim < 1) throw Error("fuzz dimension must be at least 1");
  if (cfg.count < 1) throw Error("fuzz count must be at least 1");
  if (cfg.strategy == FuzzStrategy::graded_reject && !cfg.field.is_prime())
    throw Error("graded_reject strategy needs a prime field");

  Rng rng(cfg.seed);
  FuzzStream stream;
  while (stream.algebras.size() < cfg.count) {
    ++stream.attempts;
    if (cfg.strategy == FuzzStrategy::catalog_conjugate) {
      stream.algebras.push_back(catalog_conjugate_one(cfg, rng));
    } else {
      LeibnizAlgebra a = catalog_make(Family::abelian, 1, cfg.field);
      if (graded_reject_one(cfg, rng, a))
        stream.algebras.push_back(std::move(a));
      else
        ++stream.rejected;
    }
  }
  return stream;
}

std::vector<DerivationSet> fuzz_derivation_sets(const LeibnizAlgebra& a, Rng& rng) {
  std::vector<DerivationSet> out;
  out.push_back(adl_set(a));
  out.push_back(derivation_algebra(a));
  const DerivationSet& adl = out[0];
  const DerivationSet& der = out[1];
  if (der.dim() >= adl.dim() + 2) {
    // One random derivation outside Ad^l, commutator-closed with Ad^l.
    for (int tries = 0; tries < 32; ++tries) {
      Vec coords = rng.vec(der.dim(), a.field());
      Vec flat = zero_vec(a.dim() * a.dim(), a.field());
      for (std::size_t r = 0; r < der.dim(); ++r) {
        if (coords[r].is_zero()) continue;
        for (std::size_t c = 0; c < flat.size(); ++c)
          flat[c] += coords[r] * der.space.basis().at(r, c);
      }
      if (subspace_contains(adl.space, flat)) continue;
      out.push_back(lie_closure(a, {unflatten(flat, a.dim(), a.field())}));
      break;
    }
  }
  return out;
}

}  // namespace leibniz
