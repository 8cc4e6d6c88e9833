#include "doctest.h"

#include "schubert/ring.hpp"

using namespace schubert;

namespace {
RingElement e(int k) { return RingElement::elementary(2, k); }
}

TEST_CASE("ring arithmetic") {
  RingElement a = e(1) + e(2);
  RingElement b = e(1) - e(2);
  CHECK(a * b == e(1) * e(1) - e(2) * e(2));
  CHECK(a * b == b * a);
  CHECK((a + b) * a == a * a + b * a);
  CHECK((a - a).is_zero());
  CHECK(a * RingElement::zero(2) == RingElement::zero(2));
  CHECK(a * RingElement::one(2) == a);
  CHECK(-(-a) == a);
  CHECK(a * Int(3) - a - a - a == RingElement::zero(2));
}

TEST_CASE("coefficients and monomials") {
  RingElement p = e(1) * e(1) * e(2) * Int(-2) + RingElement::one(2);
  CHECK(p.coefficient({2, 1}) == Int(-2));
  CHECK(p.coefficient({0, 0}) == Int(1));
  CHECK(p.coefficient({1, 0}) == Int(0));
  CHECK(p == RingElement::monomial(2, {2, 1}, Int(-2)) +
                 RingElement::monomial(2, {0, 0}, Int(1)));
}

TEST_CASE("grading") {
  // e_k carries degree k
  CHECK(e(2).degree() == 2);
  CHECK((e(1) * e(1) * e(2)).degree() == 4);
  CHECK(RingElement::zero(2).degree() == -1);
  CHECK(RingElement::one(2).degree() == 0);
  CHECK(e(2).is_homogeneous());
  RingElement mixed = e(1) + e(2);
  CHECK(!mixed.is_homogeneous());
  CHECK(mixed.homogeneous_component(1) == e(1));
  CHECK(mixed.homogeneous_component(2) == e(2));
  CHECK(mixed.homogeneous_component(3).is_zero());
  CHECK(mixed.homogeneous_component(1) + mixed.homogeneous_component(2) ==
        mixed);
}

TEST_CASE("arity one and constants") {
  RingElement x = RingElement::elementary(1, 1);
  CHECK((x * x).degree() == 2);
  CHECK(RingElement::constant(1, Int(5)).degree() == 0);
  CHECK(RingElement::constant(0, Int(7)) + RingElement::constant(0, Int(-7)) ==
        RingElement::zero(0));
}
