#pragma once

#include <map>
#include <optional>

#include "schubert/hseq.hpp"
#include "schubert/laurent.hpp"
#include "schubert/partition.hpp"

namespace schubert {

// Integer combination of Schur-basis classes of B_r (or of B_{r,n} when the
// box bound n is present: then every partition fits the r x (n-r) box).
class SchurExpansion {
public:
  explicit SchurExpansion(int r, std::optional<int> n = std::nullopt);

  int rank() const { return r_; }
  std::optional<int> box() const { return n_; }
  int cols() const;  // n - r; only with a box
  bool is_zero() const { return terms_.empty(); }
  const std::map<Partition, Int, PartitionLess>& terms() const {
    return terms_;
  }
  Int coefficient(const Partition& lam) const;

  void add(const Partition& lam, const Int& c);

  SchurExpansion operator+(const SchurExpansion&) const;
  SchurExpansion operator-(const SchurExpansion&) const;
  SchurExpansion operator*(const Int&) const;
  bool operator==(const SchurExpansion&) const;
  bool operator!=(const SchurExpansion& o) const { return !(*this == o); }

  // Canonical polynomial representative: sum of Schur determinants.
  RingElement to_ring_element(const HSequence& H) const;
  RingElement to_ring_element() const;

private:
  int r_;
  std::optional<int> n_;
  std::map<Partition, Int, PartitionLess> terms_;
};

// The Jacobi-Trudi determinant det(h_{lambda_j - j + i}) of size H.arity(),
// the canonical e-polynomial of the Schur class of lambda in B_r.
// Requires length(lambda) <= r.
RingElement schur_determinant(const Partition& lam, const HSequence& H);

// Writes p uniquely as an integer combination of Schur determinants.
// Exact integral back-substitution; asserts the unimodularity of the
// transition to e-monomials degree by degree.
SchurExpansion straighten(const RingElement& p, int r);

// Image in B_{r,n}: drops every class outside the r x (n-r) box.
SchurExpansion project(const SchurExpansion& x, int n);

// Applies the projection to every coefficient of a series over B_r and
// restricts the window to exponents of magnitude below n. Coefficients are
// replaced by the canonical representatives of their images.
LaurentWindow project_series(const LaurentWindow& s, int r, int n);

}
