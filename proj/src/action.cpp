#include "schubert/action.hpp"

#include <algorithm>
#include <stdexcept>

#include "schubert/linalg.hpp"

namespace schubert {

FormalTwist twist_down_z(const FormalTwist& x) {
  FormalTwist out;
  auto put = [&out](std::array<int, 3> key, const Int& c) {
    if (key[0] < 0 || c == 0) return;
    auto [it, fresh] = out.emplace(key, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) out.erase(it);
    }
  };
  for (const auto& [key, c] : x) {
    put(key, c);
    put({key[0] - 1, key[1] - 1, key[2]}, -c);
  }
  return out;
}

FormalTwist twist_down_w(const FormalTwist& x) {
  FormalTwist out;
  for (const auto& [key, c] : x)
    for (int i = 0; i <= key[0]; ++i) {
      std::array<int, 3> k{key[0] - i, key[1], key[2] - i};
      auto [it, fresh] = out.emplace(k, c);
      if (!fresh) {
        it->second += c;
        if (it->second == 0) out.erase(it);
      }
    }
  return out;
}

LaurentWindow TwistedHSequence::entry(int j) const {
  FormalTwist x;
  if (j >= 0) x.emplace(std::array<int, 3>{j, 0, 0}, 1);
  if (z_twist_) x = twist_down_z(x);
  if (w_twist_) x = twist_down_w(x);
  int zlo = 0, whi = 0;
  for (const auto& [key, c] : x) {
    zlo = std::min(zlo, key[1]);
    whi = std::max(whi, key[2]);
  }
  LaurentWindow s(Window{zlo, kNoBound, -kNoBound, whi});
  for (const auto& [key, c] : x) {
    RingElement h = H_->h(key[0]) * c;
    if (!h.is_zero()) s.add(key[1], key[2], h);
  }
  return s;
}

LaurentWindow mixed_determinant(const Partition& lam, int size,
                                const HSequence& H, bool z_twist) {
  if (size < 1) throw std::invalid_argument("mixed_determinant: size < 1");
  if (lam.length() > size)
    throw std::invalid_argument("mixed_determinant: partition too long");
  TwistedHSequence T(H, z_twist, false);
  RingElement one = RingElement::one(H.arity());
  std::vector<std::vector<LaurentWindow>> m;
  {
    std::vector<LaurentWindow> row;
    for (int j = 1; j <= size; ++j)
      row.push_back(LaurentWindow::term(one, 0, j - 1 - lam.part(j)));
    m.push_back(std::move(row));
  }
  for (int i = 2; i <= size; ++i) {
    std::vector<LaurentWindow> row;
    for (int j = 1; j <= size; ++j) row.push_back(T.entry(lam.part(j) - j + i));
    m.push_back(std::move(row));
  }
  return determinant(m, LaurentWindow::term(one, 0, 0));
}

namespace {

// Plain Schur-type determinant det(entry(lambda_j - j + i)) of the given
// size over a twisted sequence.
LaurentWindow twisted_schur_determinant(const Partition& lam, int size,
                                        const TwistedHSequence& T) {
  std::vector<std::vector<LaurentWindow>> m;
  for (int i = 1; i <= size; ++i) {
    std::vector<LaurentWindow> row;
    for (int j = 1; j <= size; ++j) row.push_back(T.entry(lam.part(j) - j + i));
    m.push_back(std::move(row));
  }
  return determinant(
      m, LaurentWindow::term(RingElement::one(T.arity()), 0, 0));
}

}

LaurentWindow action_determinantal(const Partition& lam, const HSequence& H,
                                   int z_max) {
  int r = H.arity();
  if (r < 1) throw std::invalid_argument("action: rank must be >= 1");
  if (z_max < 0) throw std::invalid_argument("action: z_max < 0");
  LaurentWindow det = mixed_determinant(lam, r, H, true);
  LaurentWindow inv =
      geometric_inverse(elementary_series(r, true), z_max - det.window().zlo);
  return (inv * det).shifted(r - 1, -(r - 1));
}

LaurentWindow action_vertex(const Partition& lam, const HSequence& H,
                            int z_max) {
  int r = H.arity();
  if (r < 1) throw std::invalid_argument("action: rank must be >= 1");
  if (z_max < 0) throw std::invalid_argument("action: z_max < 0");
  TwistedHSequence T(H, true, true);
  LaurentWindow det = twisted_schur_determinant(lam, r, T);
  // order 0 already suffices when z_max < r + zlo; never go negative
  LaurentWindow inv = geometric_inverse(
      elementary_series(r, true), std::max(z_max - det.window().zlo - r, 0));
  LaurentWindow gamma_part =
      (inv * det * elementary_series(r, false)).shifted(r, -r);
  LaurentWindow bracket =
      LaurentWindow::term(schur_determinant(lam, H), 0, 0) - gamma_part;
  LaurentWindow geo(Window{0, z_max, -kNoBound, 0});
  for (int k = 0; k <= z_max; ++k) geo.add(k, -k, RingElement::one(r));
  return bracket * geo;
}

LaurentWindow vertex_raising(const SchurExpansion& x, int z_max,
                             RaisingVariant variant) {
  if (x.box())
    throw std::invalid_argument("vertex_raising: expects a class over B_r");
  if (z_max < 0) throw std::invalid_argument("vertex_raising: z_max < 0");
  int R = x.rank() + 1;
  HSequence H(R);
  TwistedHSequence T(H, true, false);
  std::optional<LaurentWindow> acc;
  for (const auto& [lam, c] : x.terms()) {
    // the plain downward substitution lives on the w axis internally, so
    // the non-default variant computes there and transposes the exact result
    LaurentWindow det =
        variant == RaisingVariant::down_inverse
            ? twisted_schur_determinant(lam, R, T)
            : twisted_schur_determinant(lam, R,
                                        TwistedHSequence(H, false, true))
                  .axis_swapped();
    LaurentWindow inv = geometric_inverse(elementary_series(R, true),
                                          z_max - det.window().zlo);
    LaurentWindow term = (inv * det) * RingElement::constant(R, c);
    acc = acc ? *acc + term : term;
  }
  if (!acc) return LaurentWindow(Window{0, kNoBound, -kNoBound, 0});
  return *acc;
}

LaurentWindow vertex_lowering(const SchurExpansion& x) {
  if (x.box())
    throw std::invalid_argument("vertex_lowering: expects a class over B_r");
  int r = x.rank();
  if (r < 1) throw std::invalid_argument("vertex_lowering: rank must be >= 1");
  HSequence H(r - 1);
  std::optional<LaurentWindow> acc;
  for (const auto& [lam, c] : x.terms()) {
    LaurentWindow term = mixed_determinant(lam, r, H, false) *
                         RingElement::constant(r - 1, c);
    acc = acc ? *acc + term : term;
  }
  if (!acc) return LaurentWindow(Window{0, kNoBound, -kNoBound, 0});
  return *acc;
}

SchurExpansion act_elementary(int i, int j, const SchurExpansion& x) {
  if (i < 0 || j < 0)
    throw std::invalid_argument("act_elementary: negative index");
  if (x.box() && (i >= *x.box() || j >= *x.box()))
    throw std::invalid_argument("act_elementary: index outside the box size");
  int r = x.rank();
  if (r == 0) return SchurExpansion(0, x.box());
  HSequence H(r);
  RingElement acc = RingElement::zero(r);
  for (const auto& [lam, c] : x.terms()) {
    LaurentWindow s = action_determinantal(lam, H, i);
    acc += s.get(i, -j, RingElement::zero(r)) * c;
  }
  SchurExpansion out = straighten(acc, r);
  return x.box() ? project(out, *x.box()) : out;
}

SchurExpansion act_elementary_direct(int i, int j, const SchurExpansion& x) {
  if (!x.box())
    throw std::invalid_argument("act_elementary_direct: needs a box");
  int n = *x.box(), r = x.rank();
  if (i < 0 || j < 0 || i >= n || j >= n)
    throw std::invalid_argument("act_elementary_direct: index outside the box");
  SchurExpansion out(r, n);
  if (r == 0) return out;
  HSequence H(r);
  int p_target = i - (r - 1), q_target = -j + (r - 1);
  for (const auto& [lam, c] : x.terms()) {
    LaurentWindow det = mixed_determinant(lam, r, H, true);
    for (int k = 0; k <= n - r; ++k) {
      RingElement coeff =
          det.get(p_target - k, q_target, RingElement::zero(r));
      if (coeff.is_zero()) continue;
      // project first, then multiply by h_k inside B_{r,n}
      SchurExpansion cut = project(straighten(coeff, r), n);
      RingElement rep = cut.to_ring_element(H) * H.h(k);
      out = out + project(straighten(rep, r), n) * c;
    }
  }
  return out;
}

GlMatrix::GlMatrix(std::optional<int> n) : n(n) {
  if (n && *n < 0) throw std::invalid_argument("matrix: negative size");
}

void GlMatrix::add(int i, int j, const Int& a) {
  if (i < 0 || j < 0) throw std::invalid_argument("matrix: negative index");
  if (n && (i >= *n || j >= *n))
    throw std::invalid_argument("matrix: entry outside the declared size");
  if (a == 0) return;
  auto [it, fresh] = entries.emplace(std::pair{i, j}, a);
  if (!fresh) {
    it->second += a;
    if (it->second == 0) entries.erase(it);
  }
}

SchurExpansion act_matrix(const GlMatrix& A, const SchurExpansion& x) {
  if (x.box()) {
    if (A.n && *A.n != *x.box())
      throw std::invalid_argument("act_matrix: matrix size differs from the box");
    for (const auto& [ij, a] : A.entries)
      if (ij.first >= *x.box() || ij.second >= *x.box())
        throw std::invalid_argument("act_matrix: entry outside the box size");
  }
  SchurExpansion out(x.rank(), x.box());
  for (const auto& [ij, a] : A.entries)
    out = out + act_elementary(ij.first, ij.second, x) * a;
  return out;
}

}
