#include "doctest.h"

#include <stdexcept>

#include "schubert/hseq.hpp"
#include "schubert/parse.hpp"
#include "schubert/schur.hpp"

using namespace schubert;

namespace {
RingElement e(int k) { return RingElement::elementary(2, k); }
}

TEST_CASE("complete homogeneous elements") {
  HSequence H(2);
  CHECK(H.h(0) == RingElement::one(2));
  CHECK(H.h(-3).is_zero());
  CHECK(H.h(1) == e(1));
  CHECK(H.h(2) == e(1) * e(1) - e(2));
  CHECK(H.h(3) == e(1) * e(1) * e(1) - e(1) * e(2) * Int(2));
  CHECK(H.h(4) == e(1) * e(1) * e(1) * e(1) - e(1) * e(1) * e(2) * Int(3) +
                      e(2) * e(2));
  for (int j = 1; j <= 6; ++j) CHECK(H.h(j).degree() == j);

  HSequence H1(1);
  RingElement x = RingElement::elementary(1, 1);
  CHECK(H1.h(3) == x * x * x);
}

TEST_CASE("schur determinants") {
  HSequence H(2);
  CHECK(schur_determinant(Partition{}, H) == RingElement::one(2));
  CHECK(schur_determinant(Partition{1, 1}, H) == e(2));
  CHECK(schur_determinant(Partition{2, 2}, H) == e(2) * e(2));
  CHECK(schur_determinant(Partition{3, 1}, H) == e(1) * e(1) * e(2) -
                                                     e(2) * e(2));
  CHECK(schur_determinant(Partition{2, 1}, H) == e(1) * e(2));
  CHECK(schur_determinant(Partition{3}, H) == H.h(3));

  HSequence H3(3);
  CHECK(schur_determinant(Partition{1, 1, 1}, H3) ==
        RingElement::elementary(3, 3));
  CHECK_THROWS_AS(schur_determinant(Partition{1, 1, 1}, H),
                  std::invalid_argument);
}

TEST_CASE("straighten") {
  HSequence H(2);
  SchurExpansion sq = straighten(e(1) * e(1), 2);
  CHECK(sq.coefficient(Partition{2}) == Int(1));
  CHECK(sq.coefficient(Partition{1, 1}) == Int(1));
  CHECK(sq.terms().size() == 2);

  SchurExpansion p = straighten(H.h(1) * H.h(2), 2);
  CHECK(p.coefficient(Partition{2, 1}) == Int(1));
  CHECK(p.coefficient(Partition{3}) == Int(1));
  CHECK(p.terms().size() == 2);

  SchurExpansion q = straighten(H.h(2) * H.h(2), 2);
  CHECK(q.coefficient(Partition{2, 2}) == Int(1));
  CHECK(q.coefficient(Partition{3, 1}) == Int(1));
  CHECK(q.coefficient(Partition{4}) == Int(1));
  CHECK(q.terms().size() == 3);

  CHECK(straighten(RingElement::zero(2), 2).is_zero());
  CHECK(straighten(RingElement::one(2), 2).coefficient(Partition{}) == Int(1));

  // round trip through the ring and back
  SchurExpansion x(2, std::nullopt);
  x.add(Partition{3, 1}, Int(2));
  x.add(Partition{2}, Int(-5));
  CHECK(straighten(x.to_ring_element(), 2) == x);
}

TEST_CASE("projection") {
  // in the 2x2 box h_3 and h_4 die
  HSequence H(2);
  CHECK(project(straighten(H.h(3), 2), 4).is_zero());
  CHECK(project(straighten(H.h(4), 2), 4).is_zero());
  CHECK(project(straighten(H.h(1) * H.h(3) - H.h(4), 2), 4).is_zero());
  SchurExpansion p = project(straighten(H.h(1) * H.h(2), 2), 4);
  CHECK(p.coefficient(Partition{2, 1}) == Int(1));
  CHECK(p.terms().size() == 1);
  CHECK(p.box());
  CHECK(*p.box() == 4);
  CHECK_THROWS_AS(project(p, 1), std::invalid_argument);
}

TEST_CASE("expression parsing") {
  CHECK(parse_ring_element("e1^2*e2 - 2", 2) ==
        e(1) * e(1) * e(2) - RingElement::constant(2, Int(2)));
  CHECK(parse_ring_element("h2", 2) == e(1) * e(1) - e(2));
  CHECK(parse_ring_element("h1*h3 - h4", 2) ==
        e(1) * e(1) * e(2) - e(2) * e(2));
  CHECK(parse_ring_element("-3*e2 + e2", 2) == e(2) * Int(-2));
  CHECK(parse_ring_element("0", 2).is_zero());
  CHECK(parse_ring_element("1", 0) == RingElement::one(0));
  CHECK_THROWS_AS(parse_ring_element("e3", 2), ParseError);
  CHECK_THROWS_AS(parse_ring_element("e1^", 2), ParseError);
  CHECK_THROWS_AS(parse_ring_element("(e1", 2), ParseError);
  CHECK_THROWS_AS(parse_ring_element("2e1", 2), ParseError);
}

TEST_CASE("partition parsing") {
  CHECK(parse_partition("2,2") == Partition{2, 2});
  CHECK(parse_partition("(3, 1)") == Partition{3, 1});
  CHECK(parse_partition("0") == Partition{});
  CHECK(parse_partition("") == Partition{});
  CHECK_THROWS_AS(parse_partition("1,2"), ParseError);
  CHECK_THROWS_AS(parse_partition("2,,1"), ParseError);
  CHECK_THROWS_AS(parse_partition("x"), ParseError);
}
