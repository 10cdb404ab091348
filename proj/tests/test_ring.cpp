#include <stdexcept>

#include "doctest.h"
#include "lkb/braid.hpp"
#include "lkb/ring.hpp"
#include "support/oracles.hpp"

using namespace lkb;
using testsupport::Rng;

namespace {

GroupPtr q3_group() { return make_group(2, {{2, -2}}, {{0, 1}, {1, 0}}, 0); }
GroupPtr zmod4_group() { return make_group(1, {{4}}, {{-1}}, 0); }

RingMorphism theta_to_q3() {
  return RingMorphism(GroupMorphism(theta_group(), q3_group(),
                                    identity_matrix(2), 1));
}

}  // namespace

TEST_SUITE("ring") {

TEST_CASE("monomials and zero pruning") {
  GroupPtr th = theta_group();
  RingElement m = RingElement::monomial(th, -1, th->normalize({1, 1}, 1));
  CHECK(m.support_size() == 1);
  CHECK(m.terms().begin()->second == -1);

  CHECK(RingElement::one(th).support_size() == 1);
  CHECK(RingElement::monomial(th, 0, th->normalize({0, 0}, 1)).is_zero());
}

TEST_CASE("addition and negation") {
  // q2 - t q2 = q2 - q1 t
  RingElement e = theta_monomial(1, 0, 1, 0) +
                  (-(theta_monomial(1, 0, 0, 1) * theta_monomial(1, 0, 1, 0)));
  REQUIRE(e.support_size() == 2);
  GroupPtr th = theta_group();
  CHECK(e.terms().at(th->normalize({0, 1}, 0)) == 1);
  CHECK(e.terms().at(th->normalize({1, 0}, 1)) == -1);

  RingElement a = theta_monomial(3, 2, -1, 4);
  CHECK((a + (-a)).is_zero());

  // (t - 1) q1 q2
  RingElement f = (theta_monomial(1, 0, 0, 1) - theta_monomial(1, 0, 0, 0)) *
                  theta_monomial(1, 1, 1, 0);
  CHECK(f.terms().at(th->normalize({1, 1}, 1)) == 1);
  CHECK(f.terms().at(th->normalize({1, 1}, 0)) == -1);

  GroupPtr z4 = zmod4_group();
  CHECK_THROWS_AS((void)(RingElement::one(th) + RingElement::one(z4)),
                  std::invalid_argument);
}

TEST_CASE("products respect the twist") {
  GroupPtr th = theta_group();
  RingElement t = theta_monomial(1, 0, 0, 1);
  RingElement q1 = theta_monomial(1, 1, 0, 0);
  RingElement q2 = theta_monomial(1, 0, 1, 0);
  CHECK(t * q1 == q2 * t);
  CHECK(t * q2 == q1 * t);

  Rng rng(5);
  for (int it = 0; it < 50; ++it) {
    RingElement a = testsupport::random_ring_element(rng, th);
    CHECK(RingElement::one(th) * a == a);
    CHECK(a * RingElement::one(th) == a);
  }
}

TEST_CASE("squaring (1 - t) q2, frozen from the convolution oracle") {
  GroupPtr th = theta_group();
  RingElement one = theta_monomial(1, 0, 0, 0);
  RingElement t = theta_monomial(1, 0, 0, 1);
  RingElement q2 = theta_monomial(1, 0, 1, 0);
  RingElement f = (one - t) * q2;
  RingElement sq = f * f;

  // independent naive convolution over raw exponent triples
  testsupport::NakedPoly naked = testsupport::naked_mul(
      testsupport::naked_from_ring(f), testsupport::naked_from_ring(f));
  CHECK(naked == testsupport::naked_from_ring(sq));

  // q2^2 - q1 q2 t - q1^2 t + q1 q2 t^2
  testsupport::NakedPoly expected = {
      {{0, 2, 0}, 1}, {{1, 1, 1}, -1}, {{2, 0, 1}, -1}, {{1, 1, 2}, 1}};
  CHECK(naked == expected);

  // collapsing q1 = q2 merges the two middle terms: q^2 - 2 q^2 t + q^2 t^2
  RingElement classical = RingMorphism(theta_to_classical()).apply(sq);
  GroupPtr cg = classical_group();
  REQUIRE(classical.support_size() == 3);
  CHECK(classical.terms().at(cg->normalize({0, 2}, 0)) == 1);
  CHECK(classical.terms().at(cg->normalize({0, 2}, 1)) == -2);
  CHECK(classical.terms().at(cg->normalize({0, 2}, 2)) == 1);
}

TEST_CASE("random products agree with the convolution oracle") {
  GroupPtr th = theta_group();
  Rng rng(7);
  for (int it = 0; it < 120; ++it) {
    RingElement a = testsupport::random_ring_element(rng, th);
    RingElement b = testsupport::random_ring_element(rng, th);
    CHECK(testsupport::naked_from_ring(a * b) ==
          testsupport::naked_mul(testsupport::naked_from_ring(a),
                                 testsupport::naked_from_ring(b)));
  }
}

TEST_CASE("ring axioms on random triples") {
  Rng rng(13);
  for (GroupPtr g : {theta_group(), q3_group(), zmod4_group()}) {
    for (int it = 0; it < 60; ++it) {
      RingElement a = testsupport::random_ring_element(rng, g);
      RingElement b = testsupport::random_ring_element(rng, g);
      RingElement c = testsupport::random_ring_element(rng, g);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a + b) * c == a * c + b * c);
      CHECK(a + b == b + a);
    }
  }
}

TEST_CASE("morphisms merge colliding monomials") {
  GroupPtr th = theta_group();
  RingMorphism phi = theta_to_q3();

  // q1^2 - q2^2 dies in the quotient by (2,-2)
  RingElement diff = theta_monomial(1, 2, 0, 0) - theta_monomial(1, 0, 2, 0);
  CHECK(phi.apply(diff).is_zero());

  CHECK(phi.apply(RingElement::one(th)) == RingElement::one(q3_group()));

  // (1 - t) q2 maps to the classical (1 - t) q
  RingElement f = (theta_monomial(1, 0, 0, 0) - theta_monomial(1, 0, 0, 1)) *
                  theta_monomial(1, 0, 1, 0);
  RingElement img = RingMorphism(theta_to_classical()).apply(f);
  GroupPtr cg = classical_group();
  CHECK(img.terms().at(cg->normalize({0, 1}, 0)) == 1);
  CHECK(img.terms().at(cg->normalize({0, 1}, 1)) == -1);

  Rng rng(17);
  for (int it = 0; it < 80; ++it) {
    RingElement a = testsupport::random_ring_element(rng, th);
    RingElement b = testsupport::random_ring_element(rng, th);
    CHECK(phi.apply(a * b) == phi.apply(a) * phi.apply(b));
    CHECK(phi.apply(a + b) == phi.apply(a) + phi.apply(b));
  }
}

TEST_CASE("augmentation") {
  GroupPtr th = theta_group();
  RingElement f = (theta_monomial(1, 0, 0, 0) - theta_monomial(1, 0, 0, 1)) *
                  theta_monomial(1, 0, 1, 0);
  CHECK(f.augmentation() == 0);
  CHECK(theta_monomial(-1, 1, 1, 1).augmentation() == -1);

  Rng rng(19);
  RingMorphism phi = theta_to_q3();
  for (int it = 0; it < 100; ++it) {
    RingElement a = testsupport::random_ring_element(rng, th);
    RingElement b = testsupport::random_ring_element(rng, th);
    CHECK((a * b).augmentation() == a.augmentation() * b.augmentation());
    // augmentation factors through every quotient
    CHECK(phi.apply(a).augmentation() == a.augmentation());
  }
}

TEST_CASE("equality and support size") {
  GroupPtr th = theta_group();
  RingElement q1t = theta_monomial(1, 1, 0, 0) * theta_monomial(1, 0, 0, 1);
  RingElement tq2 = theta_monomial(1, 0, 0, 1) * theta_monomial(1, 0, 1, 0);
  CHECK(q1t == tq2);
  CHECK(RingElement::zero(th).support_size() == 0);
  RingElement f = (theta_monomial(1, 0, 0, 0) - theta_monomial(1, 0, 0, 1)) *
                  theta_monomial(1, 0, 1, 0);
  CHECK(f.support_size() == 2);
}

TEST_CASE("conjugation by t swaps the commuting variables") {
  GroupPtr th = theta_group();
  RingElement t = theta_monomial(1, 0, 0, 1);
  RingElement tinv = RingElement::monomial(th, 1, th->normalize({0, 0}, -1));
  Rng rng(29);
  for (int it = 0; it < 100; ++it) {
    // random polynomial in q1, q2 only
    RingElement p(th);
    RingElement swapped(th);
    long long nterms = rng.range(1, 5);
    for (long long j = 0; j < nterms; ++j) {
      Coord a = rng.range(-4, 4), b = rng.range(-4, 4);
      long coeff = static_cast<long>(rng.range(-9, 9));
      p.add_term(th->normalize({a, b}, 0), Int(coeff));
      swapped.add_term(th->normalize({b, a}, 0), Int(coeff));
    }
    CHECK(t * p * tinv == swapped);
  }
}

}  // TEST_SUITE
