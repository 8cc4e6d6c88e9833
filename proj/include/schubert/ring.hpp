#pragma once

#include <map>
#include <vector>

#include "schubert/int.hpp"

namespace schubert {

// Exponent vector of a monomial in e_1..e_r; length is always the arity.
using Exponents = std::vector<int>;

int weighted_degree(const Exponents&);  // deg e_k = k

// Graded reverse-lexicographic order, graded by the weighted ring degree.
struct GrevlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Element of Z[e_1..e_r], sparse, exact integer coefficients.
class RingElement {
public:
  explicit RingElement(int arity);
  static RingElement zero(int arity) { return RingElement(arity); }
  static RingElement one(int arity);
  static RingElement constant(int arity, Int c);
  // e_k for 1 <= k <= arity; e_0 = 1; e_k = 0 beyond the arity.
  static RingElement elementary(int arity, int k);
  static RingElement monomial(int arity, Exponents exps, Int coeff);

  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  Int coefficient(const Exponents& exps) const;
  const std::map<Exponents, Int, GrevlexLess>& terms() const { return terms_; }

  // Weighted degree of the leading term; -1 for the zero element.
  int degree() const;
  bool is_homogeneous() const;
  RingElement homogeneous_component(int d) const;

  void add_term(const Exponents& exps, const Int& coeff);

  RingElement& operator+=(const RingElement&);
  RingElement& operator-=(const RingElement&);
  RingElement operator+(const RingElement&) const;
  RingElement operator-(const RingElement&) const;
  RingElement operator*(const RingElement&) const;
  RingElement operator-() const;
  RingElement operator*(const Int&) const;

  bool operator==(const RingElement&) const;
  bool operator!=(const RingElement& o) const { return !(*this == o); }

private:
  int arity_;
  std::map<Exponents, Int, GrevlexLess> terms_;
};

}
