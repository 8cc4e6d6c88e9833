#pragma once

#include <map>
#include <vector>

#include "schubert/int.hpp"
#include "schubert/partition.hpp"
#include "schubert/schur.hpp"
#include "schubert/series.hpp"

namespace schubert {

// Element of one exterior power of the free module with basis b_0, b_1, ...
// over Z: an integer combination of wedge monomials b_{i_1} ^ ... ^ b_{i_k}
// with i_1 > ... > i_k >= 0. Everything here is the independent oracle the
// symbolic side is checked against, so it only uses first principles:
// multilinearity, antisymmetry and the derivation rules.
class WedgeElement {
public:
  // The zero element of the given exterior degree.
  explicit WedgeElement(int degree);
  // Basis monomial; indices must be strictly decreasing and non-negative.
  static WedgeElement basis(std::vector<int> indices);
  // [b]_lambda of degree r: b_{r-1+lambda_1} ^ ... ^ b_{lambda_r}.
  static WedgeElement from_partition(const Partition& lam, int r);
  // The empty wedge, unit of the exterior algebra.
  static WedgeElement unit() { return basis({}); }

  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<int>, Int>& terms() const { return terms_; }
  Int coefficient(const std::vector<int>& indices) const;

  // Adds c times the monomial with the given indices, in any order;
  // antisymmetry supplies the sign, repeated indices give zero.
  void add_term(std::vector<int> indices, Int c);

  WedgeElement operator+(const WedgeElement&) const;
  WedgeElement operator-(const WedgeElement&) const;
  WedgeElement operator-() const;
  WedgeElement operator*(const Int&) const;
  // Wedge product.
  WedgeElement operator*(const WedgeElement&) const;
  bool operator==(const WedgeElement&) const;
  bool operator!=(const WedgeElement& o) const { return !(*this == o); }

private:
  int degree_;
  std::map<std::vector<int>, Int> terms_;
};

WedgeElement wedge(const WedgeElement&, const WedgeElement&);

// Contraction beta_j: on a monomial containing b_j at position k (1-based)
// it removes it with sign (-1)^{k-1}, otherwise it gives zero. Degree-0
// input contracts to zero.
WedgeElement contract(int j, const WedgeElement&);

// The action of the elementary matrix E_{ij}: u -> b_i ^ (beta_j -| u).
WedgeElement elementary_action(int i, int j, const WedgeElement&);
// The same action computed the other way, replacing one factor b_j by b_i
// in every monomial (Leibniz rule for a one-step derivation).
WedgeElement elementary_action_leibniz(int i, int j, const WedgeElement&);

// Reads a degree-r monomial tuple as a partition: lambda_k = i_k - (r - k).
SchurExpansion to_schur(const WedgeElement&);

// One-variable series of wedge elements. Coefficients with exponents in
// [known_lo, known_hi] are exact; outside, unknown. Absent components
// inside the known range are zero.
struct WedgeSeries1 {
  std::map<int, WedgeElement> comp;
  int known_lo = -kNoBound;
  int known_hi = kNoBound;

  // Exact coefficient; zero of the given degree when absent. Throws
  // outside the known range.
  WedgeElement coefficient(int exponent, int degree) const;
  WedgeSeries1 shifted(int d) const;
};

// Componentwise equality of the two series on [lo, hi].
bool agree_on1(const WedgeSeries1& a, const WedgeSeries1& b, int lo, int hi,
               int degree);

enum class SigmaKind { plus, minus, plus_bar, minus_bar };

// The four Schubert derivations applied to u, as series in one variable:
//   plus:      sigma_+(t)  b_j -> sum_{i>=0} b_{j+i} t^i      (truncated)
//   minus:     sigma_-(t)  b_j -> sum_{0<=i<=j} b_{j-i} t^-i  (exact)
//   plus_bar:  inverse of plus                                (truncated)
//   minus_bar: inverse of minus                               (exact)
// All four are multiplicative over wedges; the inverses are computed by
// formal series inversion of the component action, never from a closed
// formula. Each component of the downward family strictly drops the total
// index sum, which is bounded below, so its inversion terminates and the
// exact (kind minus / minus_bar) results ignore `order`.
WedgeSeries1 schubert_derivation(SigmaKind kind, int order,
                                 const WedgeElement& u);

// Two-variable series of wedge elements, same window semantics as the
// symbolic side.
using WedgeSeries = WindowedSeries<WedgeElement>;

// delta(z,w) u = sum_{i,j} z^i w^-j E_{ij} u, exact in w (only finitely
// many j act), truncated at z_max in z.
WedgeSeries delta_series(const WedgeElement& u, int z_max);

// Places a one-variable series on the z or w axis of the two-variable kind.
// The z axis accepts series known from below (known_lo = -kNoBound); the
// w axis requires a fully exact series.
WedgeSeries on_z_axis(const WedgeSeries1&);
WedgeSeries on_w_axis(const WedgeSeries1&);

}
