#include "doctest.h"

#include <stdexcept>

#include "schubert/action.hpp"

using namespace schubert;

namespace {
SchurExpansion cls(int r, std::optional<int> n, const Partition& lam) {
  SchurExpansion x(r, n);
  x.add(lam, Int(1));
  return x;
}
RingElement e(int k) { return RingElement::elementary(2, k); }
}

TEST_CASE("twisted entries") {
  HSequence H(2);
  TwistedHSequence T(H, true, false);
  LaurentWindow t2 = T.entry(2);
  RingElement zero = RingElement::zero(2);
  CHECK(t2.get(0, 0, zero) == H.h(2));
  CHECK(t2.get(-1, 0, zero) == -H.h(1));
  CHECK(!t2.has(-2, 0));
  TwistedHSequence S(H, false, true);
  LaurentWindow s2 = S.entry(2);
  CHECK(s2.get(0, 0, zero) == H.h(2));
  CHECK(s2.get(0, -1, zero) == H.h(1));
  CHECK(s2.get(0, -2, zero) == RingElement::one(2));
  TwistedHSequence U(H, true, true);
  LaurentWindow u1 = U.entry(1);
  CHECK(u1.get(0, 0, zero) == H.h(1));
  CHECK(u1.get(-1, 0, zero) == -RingElement::one(2));
  CHECK(u1.get(0, -1, zero) == RingElement::one(2));
  CHECK(u1.get(-1, -1, zero).is_zero());
}

TEST_CASE("rank one action") {
  for (int m = 0; m <= 3; ++m)
    for (int i = 0; i <= 3; ++i)
      for (int j = 0; j <= 4; ++j) {
        SchurExpansion got = act_elementary(i, j, cls(1, std::nullopt, Partition({m})));
        if (j == m) {
          CHECK(got == cls(1, std::nullopt, Partition({i})));
        } else {
          CHECK(got.is_zero());
        }
      }
}

TEST_CASE("unboxed golden actions") {
  SchurExpansion e2 = cls(2, std::nullopt, Partition{1, 1});
  SchurExpansion got = act_elementary(4, 2, e2);
  CHECK(got.coefficient(Partition{3, 1}) == Int(1));
  CHECK(got.terms().size() == 1);
  CHECK(got.to_ring_element() == e(1) * e(1) * e(2) - e(2) * e(2));

  CHECK(act_elementary(1, 1, e2) == cls(2, std::nullopt, Partition{1, 1}));
  SchurExpansion down = act_elementary(0, 2, e2);
  CHECK(down.coefficient(Partition{}) == Int(-1));
  CHECK(down.terms().size() == 1);
  SchurExpansion up = act_elementary(3, 1, e2);
  CHECK(up.coefficient(Partition{2, 2}) == Int(-1));
  CHECK(up.terms().size() == 1);
  CHECK(act_elementary(2, 1, e2).is_zero());
  CHECK(act_elementary(5, 0, e2).is_zero());
}

TEST_CASE("boxed series cells") {
  // E(z,w) S(2,2) over the 2x4 quotient, cell by cell
  SchurExpansion x = cls(2, 4, Partition{2, 2});
  auto at = [&](int i, int j) { return act_elementary(i, j, x); };
  CHECK(at(0, 2) == cls(2, 4, Partition{2}));
  CHECK(at(1, 2) == cls(2, 4, Partition{2, 1}));
  CHECK(at(2, 2) == cls(2, 4, Partition{2, 2}));
  CHECK(at(3, 2).is_zero());
  SchurExpansion m03 = at(0, 3);
  CHECK(m03.coefficient(Partition{1}) == Int(-1));
  CHECK(m03.terms().size() == 1);
  SchurExpansion m13 = at(1, 3);
  CHECK(m13.coefficient(Partition{1, 1}) == Int(-1));
  CHECK(m13.terms().size() == 1);
  CHECK(at(2, 3).is_zero());
  CHECK(at(3, 3) == cls(2, 4, Partition{2, 2}));
  CHECK(at(2, 0).is_zero());
  CHECK(at(1, 1).is_zero());
  CHECK_THROWS_AS(at(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(at(1, -1), std::invalid_argument);
}

TEST_CASE("direct boxed route") {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      SchurExpansion x = cls(2, 4, Partition{2, 2});
      CHECK(act_elementary(i, j, x) == act_elementary_direct(i, j, x));
      SchurExpansion y = cls(2, 4, Partition{2, 1});
      CHECK(act_elementary(i, j, y) == act_elementary_direct(i, j, y));
    }
}

TEST_CASE("closed forms agree") {
  HSequence H(2);
  for (const Partition& lam :
       {Partition{}, Partition{1}, Partition{2, 1}, Partition{3, 3}}) {
    LaurentWindow det = action_determinantal(lam, H, 4);
    LaurentWindow vo = action_vertex(lam, H, 4);
    CHECK(agree_on(det, vo, Window{0, 4, -6, 0}));
  }
}

TEST_CASE("raising operator") {
  SchurExpansion vac(0, std::nullopt);
  vac.add(Partition{}, Int(1));
  LaurentWindow g0 = vertex_raising(vac, 4);
  RingElement x1 = RingElement::elementary(1, 1);
  RingElement zero1 = RingElement::zero(1);
  CHECK(g0.get(0, 0, zero1) == RingElement::one(1));
  CHECK(g0.get(1, 0, zero1) == x1);
  CHECK(g0.get(4, 0, zero1) == x1 * x1 * x1 * x1);

  LaurentWindow g1 = vertex_raising(cls(1, std::nullopt, Partition({1})), 3);
  RingElement zero2 = RingElement::zero(2);
  CHECK(g1.get(-1, 0, zero2) == -RingElement::one(2));
  CHECK(g1.get(0, 0, zero2).is_zero());
  CHECK(g1.get(1, 0, zero2) == e(2));
  CHECK(g1.get(2, 0, zero2) == e(1) * e(2));
  CHECK(g1.get(3, 0, zero2) == e(1) * e(1) * e(2) - e(2) * e(2));

  // the plain downward substitution is a genuinely different operator
  LaurentWindow other =
      vertex_raising(cls(1, std::nullopt, Partition({1})), 3, RaisingVariant::down);
  CHECK(other.get(-1, 0, zero2) == RingElement::one(2));
}

TEST_CASE("lowering operator") {
  LaurentWindow low1 = vertex_lowering(cls(1, std::nullopt, Partition({2})));
  RingElement zero0 = RingElement::zero(0);
  CHECK(low1.get(0, -2, zero0) == RingElement::one(0));
  CHECK(low1.get(0, 0, zero0).is_zero());
  CHECK(low1.get(0, -1, zero0).is_zero());

  RingElement x1 = RingElement::elementary(1, 1);
  RingElement zero1 = RingElement::zero(1);
  LaurentWindow low22 = vertex_lowering(cls(2, std::nullopt, Partition{2, 2}));
  CHECK(low22.get(0, -2, zero1) == x1 * x1);
  CHECK(low22.get(0, -1, zero1) == -(x1 * x1 * x1));
  LaurentWindow low0 = vertex_lowering(cls(2, std::nullopt, Partition{}));
  CHECK(low0.get(0, 0, zero1) == RingElement::one(1));
  CHECK(low0.get(0, 1, zero1) == -x1);

  SchurExpansion vac(0, std::nullopt);
  vac.add(Partition{}, Int(1));
  CHECK_THROWS_AS(vertex_lowering(vac), std::invalid_argument);
}

TEST_CASE("matrix action") {
  GlMatrix diag(4);
  diag.add(2, 2, Int(1));
  diag.add(3, 3, Int(1));
  SchurExpansion x = cls(2, 4, Partition{2, 2});
  CHECK(act_matrix(diag, x) == x * Int(2));

  GlMatrix trace(4);
  for (int k = 0; k < 4; ++k) trace.add(k, k, Int(1));
  SchurExpansion y = cls(2, 4, Partition{2, 1});
  CHECK(act_matrix(trace, y) == y * Int(2));

  GlMatrix single(4);
  single.add(1, 2, Int(1));
  CHECK(act_matrix(single, x) == cls(2, 4, Partition{2, 1}));

  GlMatrix wrong(5);
  wrong.add(0, 0, Int(1));
  CHECK_THROWS_AS(act_matrix(wrong, x), std::invalid_argument);
  CHECK_THROWS_AS(GlMatrix(4).add(4, 0, Int(1)), std::invalid_argument);
  GlMatrix cancel(4);
  cancel.add(0, 0, Int(1));
  cancel.add(0, 0, Int(-1));
  CHECK(cancel.entries.empty());
}
