#include <doctest.h>

#include <string>

#include "leibniz/algebra.hpp"
#include "leibniz/rng.hpp"
#include "test_util.hpp"

using namespace leibniz;
using testutil::a1;
using testutil::fp;
using testutil::heis;
using testutil::make;
using testutil::q;
using testutil::sc;
using testutil::table;
using testutil::vec;

TEST_CASE("bracket evaluation on the cyclic algebra") {
  LeibnizAlgebra a = a1(q());
  // Only nonzero product: [e1, e1] = e2.
  CHECK(bracket_eval(a, vec(q(), {1, 0}), vec(q(), {1, 0})) == vec(q(), {0, 1}));
  CHECK(bracket_eval(a, vec(q(), {1, 1}), vec(q(), {1, 0})) == vec(q(), {0, 1}));
  CHECK(bracket_eval(a, vec(q(), {0, 1}), vec(q(), {1, 1})) == vec(q(), {0, 0}));
  CHECK(bracket_eval(a, vec(q(), {2, 0}), vec(q(), {3, 0})) == vec(q(), {0, 6}));

  CHECK(left_mult_basis(a, 0).col(0) == vec(q(), {0, 1}));
  CHECK(left_mult_basis(a, 0).col(1) == vec(q(), {0, 0}));
  CHECK(right_mult_basis(a, 0).col(0) == vec(q(), {0, 1}));
  CHECK(left_mult_basis(a, 1).is_zero());
  CHECK(left_mult(a, vec(q(), {1, 5})) == left_mult_basis(a, 0));
}

TEST_CASE("table validation pinpoints failing triples") {
  // [e1, e1] = e1 breaks the identity at the triple (1, 1, 1).
  std::vector<Scalar> t = table(2, q(), {{1, 1, 1, 1}});
  TableValidation check = LeibnizAlgebra::validate_table(2, q(), t);
  CHECK(!check.ok);
  REQUIRE(!check.violations.empty());
  CHECK(check.violations[0].i == 0);
  CHECK(check.violations[0].j == 0);
  CHECK(check.violations[0].k == 0);
  try {
    LeibnizAlgebra::make(2, q(), t);
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("(1,1,1)") != std::string::npos);
  }
}

TEST_CASE("a table can be valid over F_2 but invalid over the rationals") {
  // [e1, e2] = e1 and [e2, e1] = e1: needs 1 = -1.
  std::vector<testutil::Entry> entries = {{1, 2, 1, 1}, {2, 1, 1, 1}};
  CHECK(!LeibnizAlgebra::validate_table(2, q(), table(2, q(), entries)).ok);
  LeibnizAlgebra a = make(2, fp(2), entries);
  CHECK(a.is_lie());
}

TEST_CASE("lie detection covers diagonal and antisymmetry") {
  CHECK(catalog_make(Family::abelian, 3, q()).is_lie());
  CHECK(heis(q()).is_lie());
  CHECK(catalog_make(Family::nonabelian2, 2, q()).is_lie());
  CHECK(!a1(q()).is_lie());
  CHECK(!a1(fp(2)).is_lie());  // diagonal bracket is nonzero even in char 2
}

TEST_CASE("center fixtures") {
  LeibnizAlgebra a = a1(q());
  Centers c = centers(a);
  Subspace e2 = Subspace::span_rows(Matrix::from_rows({vec(q(), {0, 1})}, 2, q()));
  CHECK(c.left == e2);
  CHECK(c.right == e2);
  CHECK(c.center == e2);

  Centers ch = centers(heis(q()));
  CHECK(ch.center.dim() == 1);
  CHECK(ch.left == ch.right);
  CHECK(subspace_contains(ch.center, vec(q(), {0, 0, 1})));

  Centers cn = centers(catalog_make(Family::nonabelian2, 2, q()));
  CHECK(cn.left.dim() == 0);
  CHECK(cn.right.dim() == 0);
  CHECK(cn.center.dim() == 0);

  Centers cf = centers(catalog_make(Family::abelian, 3, fp(5)));
  CHECK(cf.center == Subspace::full(3, fp(5)));
}

TEST_CASE("one sided centers can differ") {
  LeibnizAlgebra a = catalog_make(Family::cyclic_leibniz, 3, q());
  Centers c = centers(a);
  CHECK(c.left.dim() == 2);
  CHECK(c.right.dim() == 1);
  CHECK(c.center == c.right);
  CHECK(c.center == subspace_intersect(c.left, c.right));
}

TEST_CASE("derived subalgebra fixtures") {
  CHECK(derived_subalgebra(a1(q())).dim() == 1);
  CHECK(subspace_contains(derived_subalgebra(a1(q())), vec(q(), {0, 1})));
  CHECK(derived_subalgebra(heis(q())).dim() == 1);
  CHECK(derived_subalgebra(catalog_make(Family::cyclic_leibniz, 3, q())).dim() == 2);
  CHECK(derived_subalgebra(catalog_make(Family::abelian, 4, fp(3))).dim() == 0);
}

TEST_CASE("ideal test fixtures") {
  LeibnizAlgebra h = heis(q());
  Subspace e1 = Subspace::span_rows(Matrix::from_rows({vec(q(), {1, 0, 0})}, 3, q()));
  CHECK(!is_ideal(h, e1));
  CHECK(is_ideal(h, centers(h).center));
  CHECK(is_ideal(h, derived_subalgebra(h)));
  CHECK(is_ideal(h, Subspace::zero(3, q())));
  CHECK(is_ideal(h, Subspace::full(3, q())));
}

TEST_CASE("quotients by ideals") {
  LeibnizAlgebra a = a1(q());
  QuotientAlgebra qa = quotient_algebra(a, derived_subalgebra(a));
  CHECK(qa.algebra.dim() == 1);
  CHECK(derived_subalgebra(qa.algebra).dim() == 0);

  LeibnizAlgebra h = heis(q());
  QuotientAlgebra qh = quotient_algebra(h, centers(h).center);
  CHECK(qh.algebra.dim() == 2);
  CHECK(derived_subalgebra(qh.algebra).dim() == 0);
  CHECK(qh.proj * qh.section == Matrix::identity(2, q()));

  Subspace e1 = Subspace::span_rows(Matrix::from_rows({vec(q(), {1, 0, 0})}, 3, q()));
  CHECK_THROWS_AS(quotient_algebra(h, e1), Error);

  // Quotient by the whole algebra and by zero.
  CHECK(quotient_algebra(h, Subspace::full(3, q())).algebra.dim() == 0);
  QuotientAlgebra same = quotient_algebra(h, Subspace::zero(3, q()));
  CHECK(same.algebra == h);
}

TEST_CASE("quotient of a non lie algebra can be lie") {
  LeibnizAlgebra a = catalog_make(Family::cyclic_leibniz, 3, q());
  CHECK(!a.is_lie());
  QuotientAlgebra qa = quotient_algebra(a, derived_subalgebra(a));
  CHECK(qa.algebra.is_lie());
}

TEST_CASE("catalog families validate and enforce dimensions") {
  for (const FieldSpec& f : {q(), fp(2), fp(7)}) {
    CHECK(catalog_make(Family::abelian, 1, f).dim() == 1);
    CHECK(catalog_make(Family::cyclic_leibniz, 5, f).dim() == 5);
    CHECK(catalog_make(Family::heisenberg, 3, f).dim() == 3);
    CHECK(catalog_make(Family::nonabelian2, 2, f).dim() == 2);
  }
  CHECK_THROWS_AS(catalog_make(Family::cyclic_leibniz, 1, q()), Error);
  CHECK_THROWS_AS(catalog_make(Family::heisenberg, 2, q()), Error);
  CHECK_THROWS_AS(catalog_make(Family::nonabelian2, 3, q()), Error);
  CHECK_THROWS_AS(catalog_make(Family::abelian, 0, q()), Error);
}

TEST_CASE("direct sums are componentwise") {
  LeibnizAlgebra s = direct_sum(heis(q()), a1(q()));
  CHECK(s.dim() == 5);
  CHECK(centers(s).center.dim() == 2);
  CHECK(derived_subalgebra(s).dim() == 2);
  CHECK(!s.is_lie());
  // Cross brackets vanish.
  CHECK(bracket_eval(s, vec(q(), {1, 0, 0, 0, 0}), vec(q(), {0, 0, 0, 1, 0})) ==
        zero_vec(5, q()));
  CHECK_THROWS_AS(direct_sum(heis(q()), a1(fp(2))), Error);
}

TEST_CASE("change of basis hand example") {
  // Swapping the two basis vectors of the cyclic algebra moves the product
  // [e1, e1] = e2 to [f2, f2] = f1.
  Matrix p = Matrix::from_rows({vec(q(), {0, 1}), vec(q(), {1, 0})}, 2, q());
  LeibnizAlgebra b = change_basis(a1(q()), p);
  CHECK(b.c(1, 1, 0) == Scalar::one(q()));
  CHECK(b.c(0, 0, 0).is_zero());
  CHECK(b.c(0, 0, 1).is_zero());
}

TEST_CASE("invariants survive random changes of basis") {
  Rng rng(41);
  for (const FieldSpec& f : {q(), fp(3)}) {
    std::vector<LeibnizAlgebra> samples = {
        a1(f), heis(f), catalog_make(Family::cyclic_leibniz, 4, f),
        direct_sum(catalog_make(Family::nonabelian2, 2, f), a1(f))};
    for (const LeibnizAlgebra& a : samples)
      for (int trial = 0; trial < 5; ++trial) {
        LeibnizAlgebra b = change_basis(a, rng.invertible(a.dim(), f));
        CHECK(b.is_lie() == a.is_lie());
        Centers ca = centers(a);
        Centers cb = centers(b);
        CHECK(cb.left.dim() == ca.left.dim());
        CHECK(cb.right.dim() == ca.right.dim());
        CHECK(cb.center.dim() == ca.center.dim());
        CHECK(derived_subalgebra(b).dim() == derived_subalgebra(a).dim());
      }
  }
  // The identity change of basis is the identity on constants.
  LeibnizAlgebra h = heis(q());
  CHECK(change_basis(h, Matrix::identity(3, q())) == h);
}

TEST_CASE("rejects malformed tables") {
  CHECK_THROWS_AS(LeibnizAlgebra::make(2, q(), std::vector<Scalar>(7, Scalar::zero(q()))),
                  Error);
  std::vector<Scalar> wrong_field = table(2, q(), {});
  wrong_field[0] = Scalar::zero(fp(2));
  CHECK_THROWS_AS(LeibnizAlgebra::make(2, q(), wrong_field), Error);
}
