#include "doctest.h"

#include "schubert/wedge.hpp"

using namespace schubert;

namespace {
WedgeElement b(std::vector<int> idx) { return WedgeElement::basis(std::move(idx)); }
}

TEST_CASE("wedge normalization") {
  WedgeElement anti(2);
  anti.add_term({0, 1}, Int(1));
  CHECK(anti == -b({1, 0}));
  WedgeElement rep(2);
  rep.add_term({2, 2}, Int(1));
  CHECK(rep.is_zero());
  CHECK(wedge(b({1}), b({0})) == b({1, 0}));
  CHECK(wedge(b({0}), b({1})) == -b({1, 0}));
  CHECK(wedge(b({3}), b({2, 0})) == b({3, 2, 0}));
  CHECK(wedge(b({2}), b({3, 0})) == -b({3, 2, 0}));
  CHECK(wedge(b({0}), b({3, 0})).is_zero());
  CHECK((b({1, 0}) + b({1, 0})) == b({1, 0}) * Int(2));
}

TEST_CASE("partition dictionary") {
  CHECK(WedgeElement::from_partition(Partition{2, 2}, 2) == b({3, 2}));
  CHECK(WedgeElement::from_partition(Partition{}, 3) == b({2, 1, 0}));
  CHECK(WedgeElement::from_partition(Partition{3, 1}, 2) == b({4, 1}));
  SchurExpansion s = to_schur(b({4, 1}));
  CHECK(s.rank() == 2);
  CHECK(s.coefficient(Partition{3, 1}) == Int(1));
  CHECK(to_schur(b({1, 0})).coefficient(Partition{}) == Int(1));
  SchurExpansion mixed = to_schur(b({3, 1}) - b({2, 0}) * Int(4));
  CHECK(mixed.coefficient(Partition{2, 1}) == Int(1));
  CHECK(mixed.coefficient(Partition{1}) == Int(-4));
}

TEST_CASE("contraction") {
  CHECK(contract(1, b({2, 1})) == -b({2}));
  CHECK(contract(0, b({2, 1})).is_zero());
  CHECK(contract(2, b({2, 1})) == b({1}));
  CHECK(contract(3, b({3, 2, 0})) == b({2, 0}));
  CHECK(contract(2, b({3, 2, 0})) == -b({3, 0}));
  CHECK(contract(0, b({3, 2, 0})) == b({3, 2}));
}

TEST_CASE("elementary action") {
  CHECK(elementary_action(4, 1, b({3, 1})) == -b({4, 3}));
  CHECK(elementary_action(4, 2, b({2, 1})) == b({4, 1}));
  CHECK(elementary_action(1, 1, b({2, 1})) == b({2, 1}));
  CHECK(elementary_action(0, 0, b({1, 0})) == b({1, 0}));
  CHECK(elementary_action(3, 0, b({2, 1})).is_zero());
  CHECK(elementary_action(2, 1, b({2, 1})).is_zero());  // repeated factor

  // the contraction route agrees with the Leibniz route
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; j <= 4; ++j) {
      WedgeElement u = b({3, 1, 0});
      CHECK(elementary_action(i, j, u) == elementary_action_leibniz(i, j, u));
    }
}

TEST_CASE("clifford relation") {
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; j <= 4; ++j) {
      WedgeElement u = b({4, 2, 1}) - b({3, 2, 0}) * Int(2);
      WedgeElement lhs = wedge(b({i}), contract(j, u)) +
                         contract(j, wedge(b({i}), u));
      WedgeElement expect = i == j ? u : WedgeElement(3);
      CHECK(lhs == expect);
    }
}

TEST_CASE("schubert derivations on one factor") {
  WedgeSeries1 up = schubert_derivation(SigmaKind::plus, 3, b({0}));
  CHECK(up.coefficient(0, 1) == b({0}));
  CHECK(up.coefficient(1, 1) == b({1}));
  CHECK(up.coefficient(3, 1) == b({3}));
  WedgeSeries1 upbar = schubert_derivation(SigmaKind::plus_bar, 3, b({0}));
  CHECK(upbar.coefficient(0, 1) == b({0}));
  CHECK(upbar.coefficient(1, 1) == -b({1}));
  CHECK(upbar.coefficient(2, 1).is_zero());
  WedgeSeries1 down = schubert_derivation(SigmaKind::minus, 0, b({2}));
  CHECK(down.coefficient(0, 1) == b({2}));
  CHECK(down.coefficient(-1, 1) == b({1}));
  CHECK(down.coefficient(-2, 1) == b({0}));
  CHECK(down.coefficient(-3, 1).is_zero());
  WedgeSeries1 downbar = schubert_derivation(SigmaKind::minus_bar, 0, b({2}));
  CHECK(downbar.coefficient(0, 1) == b({2}));
  CHECK(downbar.coefficient(-1, 1) == -b({1}));
  CHECK(downbar.coefficient(-2, 1).is_zero());
}

TEST_CASE("delta series cells") {
  WedgeSeries s = delta_series(b({2, 1}), 4);
  WedgeElement zero2(2);
  CHECK(s.get(4, -2, zero2) == b({4, 1}));
  CHECK(s.get(1, -1, zero2) == b({2, 1}));  // diagonal fixes occupied index
  CHECK(s.get(2, -2, zero2) == b({2, 1}));
  CHECK(s.get(1, -2, zero2).is_zero());  // repeated factor
  CHECK(s.get(0, -1, zero2) == b({2, 0}));
  CHECK(s.get(0, -2, zero2) == -b({1, 0}));
  CHECK(s.window().zhi == 4);
  CHECK(s.window().whi == 0);
}
