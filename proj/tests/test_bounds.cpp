#include <doctest.h>

#include "leibniz/bounds.hpp"
#include "test_util.hpp"

using namespace leibniz;
using testutil::a1;
using testutil::fp;
using testutil::heis;
using testutil::q;

namespace {

Int qty(const BoundReport& r, const std::string& name) {
  for (const auto& [key, value] : r.quantities)
    if (key == name) return value;
  FAIL("missing quantity " << name);
  return 0;
}

// Plain recursive restatement of the bound, as an independent code path.
Int beta_rec(const Int& k, std::size_t m, const Int& t) {
  if (m == 1) return t * (k + t);
  Int b = beta_rec(k, m - 1, t);
  return b * (k + b);
}

}  // namespace

TEST_CASE("bound values by hand") {
  CHECK(beta(1, 1, 2) == 6);
  CHECK(beta(0, 1, 3) == 9);
  CHECK(beta(2, 2, 3) == 255);
  CHECK(beta(1, 3, 2) == 1806);
  CHECK(beta(5, 1, 0) == 0);
  CHECK(beta(0, 4, 1) == 1);
  CHECK(beta(3, 2, 0) == 0);
}

TEST_CASE("bound recursion matches the straight line form") {
  for (int k = 0; k <= 5; ++k)
    for (int t = 0; t <= 5; ++t)
      for (std::size_t m = 1; m <= 4; ++m)
        CHECK(beta(k, m, t) == beta_rec(k, m, t));
}

TEST_CASE("bound is monotone in every argument") {
  for (int k = 0; k <= 4; ++k)
    for (int t = 0; t <= 4; ++t)
      for (std::size_t m = 1; m <= 3; ++m) {
        CHECK(beta(k, m, t) <= beta(k + 1, m, t));
        CHECK(beta(k, m, t) <= beta(k, m + 1, t));
        CHECK(beta(k, m, t) <= beta(k, m, t + 1));
      }
}

TEST_CASE("bound rejects bad arguments") {
  CHECK_THROWS_AS(beta(1, 0, 1), Error);
  CHECK_THROWS_AS(beta(-1, 1, 1), Error);
  CHECK_THROWS_AS(beta(1, 1, -2), Error);
}

TEST_CASE("first theorem fixtures") {
  LeibnizAlgebra a = a1(q());
  BoundReport tight = verify_theorem_a(a, adl_set(a));
  CHECK(tight.applicable);
  CHECK(tight.holds);
  CHECK(qty(tight, "t") == 1);
  CHECK(qty(tight, "k") == 0);
  CHECK(tight.lhs == 1);
  CHECK(tight.rhs == 1);

  BoundReport loose = verify_theorem_a(a, derivation_algebra(a));
  CHECK(loose.holds);
  CHECK(qty(loose, "t") == 2);
  CHECK(qty(loose, "k") == 1);
  CHECK(loose.lhs == 2);
  CHECK(loose.rhs == 6);

  BoundReport h = verify_theorem_a(heis(q()), adl_set(heis(q())));
  CHECK(h.holds);
  CHECK(qty(h, "t") == 2);
  CHECK(h.lhs == 1);
  CHECK(h.rhs == 4);
}

TEST_CASE("second theorem fixtures") {
  LeibnizAlgebra h = heis(q());
  BoundReport r = verify_theorem_b(h, adl_set(h));
  CHECK(r.applicable);
  CHECK(r.holds);
  CHECK(qty(r, "m") == 2);
  CHECK(qty(r, "t") == 0);
  // The whole algebra sits in the hypercenter, so the lower series must die.
  CHECK(r.lhs == 0);
  CHECK(r.rhs == 0);

  LeibnizAlgebra nab = catalog_make(Family::nonabelian2, 2, q());
  BoundReport dead = verify_theorem_b(nab, adl_set(nab));
  CHECK(!dead.applicable);
  CHECK(!dead.holds);
  CHECK(qty(dead, "m") == 0);

  LeibnizAlgebra ab = catalog_make(Family::abelian, 3, fp(2));
  BoundReport flat = verify_theorem_b(ab, adl_set(ab));
  CHECK(flat.applicable);
  CHECK(flat.holds);
  CHECK(qty(flat, "m") == 1);

  LeibnizAlgebra a = a1(q());
  CHECK(!verify_theorem_b(a, derivation_algebra(a)).applicable);
  CHECK(verify_theorem_b(a, adl_set(a)).holds);
}

TEST_CASE("intermediate codimension inequality fixtures") {
  LeibnizAlgebra a = a1(q());
  BoundReport step = verify_codim_step(a, derivation_algebra(a));
  CHECK(step.holds);
  CHECK(step.lhs == 1);
  CHECK(step.rhs == 2);

  BoundReport zero = verify_codim_step(a, adl_set(a));
  CHECK(zero.holds);
  CHECK(zero.lhs == 0);
  CHECK(zero.rhs == 0);
}

TEST_CASE("corollaries on the cyclic algebra") {
  std::vector<BoundReport> rs = verify_corollaries(a1(q()), 1);
  REQUIRE(rs.size() == 6);
  CHECK(rs[0].claim == Claim::schur_leibniz);
  CHECK(rs[1].claim == Claim::schur_lie);
  CHECK(rs[2].claim == Claim::hegarty_leibniz);
  CHECK(rs[3].claim == Claim::hegarty_lie);
  CHECK(rs[4].claim == Claim::baer_leibniz);
  CHECK(rs[5].claim == Claim::baer_lie);

  // Not a Lie algebra: the Lie refinements are switched off.
  CHECK(!rs[1].applicable);
  CHECK(!rs[3].applicable);
  CHECK(!rs[5].applicable);

  // dim [L,L] = 1 with a codimension one center: tight.
  CHECK(rs[0].holds);
  CHECK(qty(rs[0], "t") == 1);
  CHECK(rs[0].lhs == 1);
  CHECK(rs[0].rhs == 1);

  CHECK(rs[2].holds);
  CHECK(qty(rs[2], "t") == 2);
  CHECK(rs[2].lhs == 2);
  CHECK(rs[2].rhs == 6);

  CHECK(rs[4].holds);
  CHECK(qty(rs[4], "series_index") == 1);
  CHECK(qty(rs[4], "t") == 1);
  CHECK(rs[4].lhs == 1);
  CHECK(rs[4].rhs == 1);
}

TEST_CASE("corollaries on the heisenberg algebra include the lie refinements") {
  std::vector<BoundReport> rs = verify_corollaries(heis(q()), 1);
  for (const BoundReport& r : rs) CHECK(r.applicable);
  for (const BoundReport& r : rs) CHECK(r.holds);

  CHECK(qty(rs[1], "t") == 2);
  CHECK(rs[1].lhs == 1);
  CHECK(rs[1].rhs == 3);

  CHECK(qty(rs[3], "t") == 3);
  CHECK(rs[3].lhs == 3);
  CHECK(rs[3].rhs == 6);

  // At index 2 the upper series has filled the algebra: everything is zero.
  std::vector<BoundReport> deep = verify_corollaries(heis(q()), 2);
  CHECK(qty(deep[4], "t") == 0);
  CHECK(deep[4].lhs == 0);
  CHECK(deep[4].rhs == 0);
  CHECK(deep[4].holds);
  CHECK(deep[5].holds);
  CHECK(deep[5].rhs == 0);
}

TEST_CASE("corollary baer bound at index one on an algebra with trivial center") {
  LeibnizAlgebra nab = catalog_make(Family::nonabelian2, 2, q());
  std::vector<BoundReport> rs = verify_corollaries(nab, 1);
  CHECK(qty(rs[4], "t") == 2);
  CHECK(rs[4].lhs == 1);
  CHECK(rs[4].rhs == 4);
  CHECK(rs[4].holds);
  // This one is a Lie algebra, so the refinements apply.
  CHECK(rs[5].applicable);
  CHECK(rs[5].rhs == 3);
}

TEST_CASE("corollaries agree with the first theorem on the left multiplications") {
  for (const LeibnizAlgebra& a : {a1(q()), heis(q())}) {
    BoundReport thm = verify_theorem_a(a, adl_set(a));
    std::vector<BoundReport> rs = verify_corollaries(a, 1);
    CHECK(qty(thm, "t") == qty(rs[0], "t"));
    CHECK(qty(thm, "k") == 0);
    CHECK(thm.lhs == rs[0].lhs);
    CHECK(thm.rhs == rs[0].rhs);
  }
}

TEST_CASE("series index must be positive") {
  CHECK_THROWS_AS(verify_corollaries(a1(q()), 0), Error);
}

TEST_CASE("claim names are stable") {
  CHECK(claim_name(Claim::theorem_a) == "theorem_a");
  CHECK(claim_name(Claim::theorem_b) == "theorem_b");
  CHECK(claim_name(Claim::schur_leibniz) == "schur_leibniz");
  CHECK(claim_name(Claim::baer_lie) == "baer_lie");
  CHECK(claim_name(Claim::codim_step) == "codim_step");
}
