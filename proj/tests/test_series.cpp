#include "doctest.h"

#include <stdexcept>

#include "schubert/laurent.hpp"

using namespace schubert;

namespace {
const RingElement kOne = RingElement::one(0);
const RingElement kZero = RingElement::zero(0);
RingElement c(int v) { return RingElement::constant(0, Int(v)); }
}

TEST_CASE("window algebra") {
  Window a{0, 3, -kNoBound, 0};
  Window b{-1, kNoBound, -2, 1};
  Window s = add_window(a, b);
  CHECK(s.zlo == -1);
  CHECK(s.zhi == 3);
  CHECK(s.wlo == -2);
  CHECK(s.whi == 1);
  Window p = mul_window(a, b);
  CHECK(p.zlo == -1);
  CHECK(p.zhi == 2);  // 3 + (-1); the other bound is vacuous
  CHECK(p.wlo == -2);
  CHECK(p.whi == 1);
  CHECK(determined(a, 2, -5));
  CHECK(determined(a, -7, 0));  // below support: known zero
  CHECK(!determined(a, 4, 0));
  CHECK(!determined(b, 0, -3));
}

TEST_CASE("polynomial product") {
  LaurentWindow one_plus = LaurentWindow::term(kOne, 0, 0) +
                           LaurentWindow::term(kOne, 1, 0);
  LaurentWindow one_minus = LaurentWindow::term(kOne, 0, 0) +
                            LaurentWindow::term(c(-1), 1, 0);
  LaurentWindow prod = one_plus * one_minus;
  CHECK(prod.get(0, 0, kZero) == kOne);
  CHECK(prod.get(1, 0, kZero) == kZero);
  CHECK(prod.get(2, 0, kZero) == c(-1));
  CHECK(prod == LaurentWindow::term(kOne, 0, 0) +
                    LaurentWindow::term(c(-1), 2, 0));
}

TEST_CASE("truncated geometric product") {
  // (sum_{k<=2} z^k, exact to z^2) * (1 - z): exact only to z^2
  LaurentWindow geo(Window{0, 2, -kNoBound, 0});
  for (int k = 0; k <= 2; ++k) geo.add(k, 0, kOne);
  LaurentWindow one_minus = LaurentWindow::term(kOne, 0, 0) +
                            LaurentWindow::term(c(-1), 1, 0);
  LaurentWindow prod = geo * one_minus;
  CHECK(prod.window().zhi == 2);
  CHECK(prod.get(0, 0, kZero) == kOne);
  CHECK(prod.get(1, 0, kZero) == kZero);
  CHECK(prod.get(2, 0, kZero) == kZero);
}

TEST_CASE("shift and axis swap") {
  LaurentWindow s = LaurentWindow::term(kOne, 1, -2);
  LaurentWindow t = s.shifted(2, 1);
  CHECK(t.get(3, -1, kZero) == kOne);
  CHECK(t.window().zlo == 3);
  CHECK(t.window().whi == -1);
  LaurentWindow sw = s.axis_swapped();
  CHECK(sw.get(-2, 1, kZero) == kOne);
  LaurentWindow truncated_series(Window{0, 1, -kNoBound, 0});
  truncated_series.add(0, 0, kOne);
  CHECK_THROWS_AS(truncated_series.axis_swapped(), std::logic_error);
}

TEST_CASE("truncated to a box") {
  LaurentWindow s = LaurentWindow::term(kOne, 0, 0) +
                    LaurentWindow::term(c(2), 1, 0) +
                    LaurentWindow::term(c(3), 2, -1);
  LaurentWindow cut = s.truncated(Window{0, 1, -kNoBound, 0});
  CHECK(cut.get(1, 0, kZero) == c(2));
  CHECK(!cut.has(2, -1));
}

TEST_CASE("agree_on") {
  LaurentWindow a(Window{0, 2, -kNoBound, 0});
  a.add(0, 0, kOne);
  a.add(2, 0, c(2));
  LaurentWindow b(Window{0, 5, -kNoBound, 0});
  b.add(0, 0, kOne);
  b.add(2, 0, c(2));
  b.add(4, 0, c(9));  // outside the comparison box
  CHECK(agree_on(a, b, Window{0, 2, -1, 0}));
  LaurentWindow b2 = b + LaurentWindow::term(kOne, 1, 0);
  CHECK(!agree_on(a, b2, Window{0, 2, -1, 0}));
  // box reaches past the exact region of a
  CHECK_THROWS_AS(agree_on(a, b, Window{0, 4, -1, 0}), std::domain_error);
  CHECK_THROWS_AS(agree_on(a, b, Window{0, kNoBound, -1, 0}),
                  std::invalid_argument);
}

TEST_CASE("set outside rectangle") {
  LaurentWindow s(Window{0, 3, -kNoBound, 0});
  CHECK_THROWS_AS(s.set(0, 1, kOne), std::logic_error);
}

TEST_CASE("elementary and geometric series") {
  LaurentWindow ez = elementary_series(2, true);
  RingElement e1 = RingElement::elementary(2, 1);
  RingElement e2 = RingElement::elementary(2, 2);
  RingElement zero2 = RingElement::zero(2);
  CHECK(ez.get(0, 0, zero2) == RingElement::one(2));
  CHECK(ez.get(1, 0, zero2) == -e1);
  CHECK(ez.get(2, 0, zero2) == e2);
  CHECK(!ez.has(3, 0));

  LaurentWindow ew = elementary_series(2, false);
  CHECK(ew.get(0, 2, zero2) == e2);
  CHECK(ew.window().whi == 2);

  // 1/E_1 = sum e1^k z^k
  LaurentWindow inv = geometric_inverse(elementary_series(1, true), 4);
  RingElement x = RingElement::elementary(1, 1);
  CHECK(inv.window().zhi == 4);
  CHECK(inv.get(3, 0, RingElement::zero(1)) == x * x * x);
  LaurentWindow check = inv * elementary_series(1, true);
  CHECK(check.get(0, 0, RingElement::zero(1)) == RingElement::one(1));
  for (int k = 1; k <= 4; ++k)
    CHECK(check.get(k, 0, RingElement::zero(1)).is_zero());
}
