#include "leibniz/invariants.hpp"

#include <algorithm>
#include <utility>

namespace leibniz {

namespace {

const Int& quantity(const BoundReport& r, const std::string& name) {
  for (const auto& [key, value] : r.quantities)
    if (key == name) return value;
  throw Error("report lacks quantity " + name);
}

Subspace project_subspace(const Matrix& proj, const Subspace& u) {
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < u.dim(); ++r) rows.push_back(proj * u.basis().row(r));
  return Subspace::span_rows(Matrix::from_rows(rows, proj.rows, proj.field));
}

struct Checker {
  InstanceCheck result;

  void expect(bool condition, const std::string& what) {
    if (condition) return;
    result.ok = false;
    result.failures.push_back(what);
  }

  void expect_bound(const BoundReport& r, const std::string& context) {
    if (!r.applicable) return;
    ++result.bound_checks;
    expect(r.holds, context + ": " + claim_name(r.claim) + " fails with lhs=" + r.lhs.str() +
                        " rhs=" + r.rhs.str());
  }
};

void check_one_dset(Checker& ck, const LeibnizAlgebra& a, const DerivationSet& d,
                    const std::string& label, const Centers& c, const Subspace& derived) {
  std::size_t n = a.dim();
  std::vector<Matrix> basis = d.basis_matrices();

  Subspace dc = d_center(d);
  ck.expect(subspace_leq(dc, c.center), label + ": D-center is not inside the center");
  for (const Matrix& m : basis)
    for (std::size_t r = 0; r < dc.dim(); ++r)
      ck.expect(subspace_contains(dc, m * dc.basis().row(r)),
                label + ": D-center is not invariant");

  ck.expect(subspace_leq(annihilator(d), c.right),
            label + ": annihilator exceeds the right center");
  Subspace dd = d_derived(d);
  ck.expect(subspace_leq(derived, dd),
            label + ": derived subalgebra not inside the D-derived subalgebra");

  SeriesResult upper = upper_d_central_series(a, d);
  SeriesResult lower = lower_d_central_series(a, d);
  ck.expect(upper.terms.front().dim() == 0, label + ": upper series must start at zero");
  ck.expect(upper.stabilized_at <= n + 1, label + ": upper series too long");
  ck.expect(lower.stabilized_at <= n + 1, label + ": lower series too long");
  ck.expect(lower.terms.front().dim() == n, label + ": lower series must start at L");

  for (std::size_t nu = 0; nu + 1 < upper.terms.size(); ++nu) {
    const Subspace& lo = upper.terms[nu];
    const Subspace& hi = upper.terms[nu + 1];
    ck.expect(subspace_leq(lo, hi) && lo.dim() < hi.dim(),
              label + ": upper series not strictly ascending");
    for (const Matrix& m : basis)
      for (std::size_t r = 0; r < hi.dim(); ++r)
        ck.expect(subspace_contains(lo, m * hi.basis().row(r)),
                  label + ": upper series descent condition fails");
  }
  for (std::size_t i = 0; i + 1 < lower.terms.size(); ++i)
    ck.expect(subspace_leq(lower.terms[i + 1], lower.terms[i]) &&
                  lower.terms[i + 1].dim() < lower.terms[i].dim(),
              label + ": lower series not strictly descending");
  for (const Subspace& term : lower.terms)
    for (const Matrix& m : basis)
      for (std::size_t r = 0; r < term.dim(); ++r)
        ck.expect(subspace_contains(term, m * term.basis().row(r)),
                  label + ": lower series term is not invariant");

  ck.expect(lower.gamma(2) == dd, label + ": second lower term differs from [L,D]");
  if (upper.hypercenter().dim() == n)
    ck.expect(lower.gamma(upper.zl() + 1).dim() == 0,
              label + ": hypercenter is L but the lower series misses zero");

  // Lower series passes to the quotient by the first upper term.
  if (upper.zl() >= 1 && upper.terms[1].dim() > 0) {
    InducedSet ind = induced_derivations(d, upper.terms[1]);
    SeriesResult qlower = lower_d_central_series(ind.quot.algebra, ind.set);
    std::size_t depth = std::max(lower.terms.size(), qlower.terms.size()) + 1;
    for (std::size_t nu = 1; nu <= depth; ++nu)
      ck.expect(project_subspace(ind.quot.proj, lower.gamma(nu)) == qlower.gamma(nu),
                label + ": lower series does not project onto the quotient's");
  }

  ck.expect_bound(verify_theorem_a(a, d), label);
  ck.expect_bound(verify_codim_step(a, d), label);
  ck.expect_bound(verify_theorem_b(a, d), label);
}

}  // namespace

InstanceCheck verify_instance(const LeibnizAlgebra& a, Rng& rng) {
  Checker ck;
  std::size_t n = a.dim();
  try {
    Centers c = centers(a);
    Subspace derived = derived_subalgebra(a);
    ck.result.asymmetric_centers = c.left.dim() != c.right.dim();

    ck.expect(is_ideal(a, c.left), "left center is not an ideal");
    ck.expect(is_ideal(a, derived), "derived subalgebra is not an ideal");
    ck.expect(derived_subalgebra(quotient_algebra(a, derived).algebra).dim() == 0,
              "quotient by the derived subalgebra is not abelian");
    ck.expect(c.center == subspace_intersect(c.left, c.right),
              "center differs from the intersection of the side centers");
    if (a.is_lie())
      ck.expect(c.left == c.right && c.left == c.center,
                "Lie algebra with distinct side centers");

    AdLeft adl_maps = ad_left(a);
    DerivationSet der = derivation_algebra(a);
    ck.expect(subspace_leq(adl_maps.space, der.space),
              "left multiplications are not all derivations");

    for (int s = 0; s < 3; ++s) {
      // Random derivation m: the commutator with any l_x must be l_{m(x)}.
      Vec coords = rng.vec(der.dim(), a.field());
      Vec flat = zero_vec(n * n, a.field());
      for (std::size_t r = 0; r < der.dim(); ++r)
        for (std::size_t col = 0; col < n * n; ++col)
          flat[col] += coords[r] * der.space.basis().at(r, col);
      Matrix m = unflatten(flat, n, a.field());
      for (std::size_t i = 0; i < n; ++i)
        ck.expect(commutator(m, adl_maps.maps[i]) == left_mult(a, m.col(i)),
                  "commutator with a left multiplication gives the wrong map");
    }

    std::vector<DerivationSet> dsets = fuzz_derivation_sets(a, rng);
    ck.result.dsets = dsets.size();
    ck.expect(annihilator(dsets[0]) == c.right,
              "annihilator of the left multiplications differs from the right center");
    ck.expect(d_derived(dsets[0]) == derived,
              "D-derived subalgebra with D = Ad^l differs from [L,L]");

    const char* names[] = {"adl", "der", "mid"};
    for (std::size_t di = 0; di < dsets.size(); ++di)
      check_one_dset(ck, a, dsets[di], names[std::min<std::size_t>(di, 2)], c, derived);

    std::vector<BoundReport> cors1 = verify_corollaries(a, 1);
    for (const BoundReport& r : cors1) ck.expect_bound(r, "series index 1");
    for (std::size_t si = 2; si <= 3; ++si)
      for (const BoundReport& r : verify_corollaries(a, si))
        ck.expect_bound(r, "series index " + std::to_string(si));

    // Specialized to D = Ad^l, the first theorem reproduces the t^2 bound.
    BoundReport adl_a = verify_theorem_a(a, dsets[0]);
    const BoundReport& schur = cors1[0];
    ck.expect(quantity(adl_a, "t") == quantity(schur, "t") &&
                  quantity(adl_a, "k") == 0 && adl_a.rhs == schur.rhs,
              "theorem with D = Ad^l does not reduce to the t^2 bound");

    // k vs t observation for D = Der(L).
    BoundReport der_a = verify_theorem_a(a, der);
    ck.result.der_k_gt_t = quantity(der_a, "k") > quantity(der_a, "t");

    Analysis base = analyze(a);
    for (int rep = 0; rep < 3; ++rep) {
      LeibnizAlgebra conj = change_basis(a, rng.invertible(n, a.field()));
      ck.expect(analyze(conj) == base, "dimension signature changed under a basis change");
    }
  } catch (const Error& e) {
    ck.expect(false, std::string("unexpected error: ") + e.what());
  }
  return ck.result;
}

}  // namespace leibniz
