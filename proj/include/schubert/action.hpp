#pragma once

#include <array>
#include <map>
#include <optional>

#include "schubert/laurent.hpp"
#include "schubert/schur.hpp"

namespace schubert {

// Formal integer combination of h_{index} z^{z_exp} w^{w_exp}, the layer on
// which the downward substitutions act before any h is materialized.
using FormalTwist = std::map<std::array<int, 3>, Int>;

// h_j -> h_j - h_{j-1} z^{-1} (negative indices drop).
FormalTwist twist_down_z(const FormalTwist&);
// h_j -> h_j + h_{j-1} w^{-1} + ... + h_0 w^{-j}.
FormalTwist twist_down_w(const FormalTwist&);

// The h-sequence after the downward Schubert substitutions on z and/or w.
// Entries are exact Laurent polynomials over B_r.
class TwistedHSequence {
public:
  TwistedHSequence(const HSequence& H, bool z_twist, bool w_twist)
      : H_(&H), z_twist_(z_twist), w_twist_(w_twist) {}

  int arity() const { return H_->arity(); }
  LaurentWindow entry(int j) const;

private:
  const HSequence* H_;
  bool z_twist_;
  bool w_twist_;
};

// det of the size x size matrix whose first row is w^{j-1-lambda_j} and
// whose row i >= 2 holds entry(lambda_j - j + i) of H, downward-z-twisted
// when z_twist is set. Exact. Requires length(lambda) <= size >= 1.
LaurentWindow mixed_determinant(const Partition& lam, int size,
                                const HSequence& H, bool z_twist);

// The generating series E(z,w) Delta_lambda over B_r in its determinantal
// form: (z/w)^{r-1} * (1/E_r(z)) * mixed determinant. Exact at least for
// z-exponents up to z_max (the window states the actual bounds); exact in
// w outright.
LaurentWindow action_determinantal(const Partition& lam, const HSequence& H,
                                   int z_max);

// The same series in its vertex-operator form:
// geometric(z/w) * (Delta_lambda - (z^r/w^r) E_r(w) (1/E_r(z)) * doubly
// twisted determinant). Same exactness contract.
LaurentWindow action_vertex(const Partition& lam, const HSequence& H,
                            int z_max);

enum class RaisingVariant { down_inverse, down };  // sbar_minus / sigma_minus

// Raising vertex operator B_r -> B_{r+1}: for each class,
// (1/E_{r+1}(z)) * Delta_lambda over the twisted H_{r+1}. The default
// twist is the inverse downward substitution; the plain downward variant
// is kept selectable because the two disagree and only the default matches
// the exterior-algebra oracle.
LaurentWindow vertex_raising(const SchurExpansion& x, int z_max,
                             RaisingVariant variant = RaisingVariant::down_inverse);

// Lowering vertex operator B_r -> B_{r-1}: for each class the mixed
// determinant with untwisted h-rows taken from H_{r-1}. Exact; w-exponents
// may be positive. r = 0 is an argument error.
LaurentWindow vertex_lowering(const SchurExpansion& x);

// Action of the elementary matrix E_{ij} on x, in the Schur basis: the
// coefficient of z^i w^-j of the determinantal series, straightened, and
// projected when x carries a box (the projection is applied after the
// computation over B_r). Requires i, j < n when the box is present.
SchurExpansion act_elementary(int i, int j, const SchurExpansion& x);

// Same value for boxed x computed the other way around: coefficients of
// the mixed determinant are projected first, then multiplied by the
// truncated series 1 + h_1 z + ... + h_{n-r} z^{n-r} inside B_{r,n}.
SchurExpansion act_elementary_direct(int i, int j, const SchurExpansion& x);

// Square matrix of size n (or an arbitrary finitely supported one when n is
// absent) with integer entries, acting through act_elementary.
struct GlMatrix {
  std::optional<int> n;
  std::map<std::pair<int, int>, Int> entries;

  explicit GlMatrix(std::optional<int> n = std::nullopt);
  void add(int i, int j, const Int& a);
};

SchurExpansion act_matrix(const GlMatrix& A, const SchurExpansion& x);

}
