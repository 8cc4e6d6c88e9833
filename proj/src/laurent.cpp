#include "schubert/laurent.hpp"

namespace schubert {

LaurentWindow elementary_series(int arity, bool on_z) {
  LaurentWindow s(Window{0, kNoBound, -kNoBound, on_z ? 0 : arity});
  for (int k = 0; k <= arity; ++k) {
    RingElement ek = RingElement::elementary(arity, k);
    if (k % 2 == 1) ek = -ek;
    s.add(on_z ? k : 0, on_z ? 0 : k, ek);
  }
  return s;
}

LaurentWindow geometric_inverse(const LaurentWindow& f, int z_max) {
  if (z_max < 0) throw std::invalid_argument("geometric_inverse: z_max < 0");
  for (const auto& [k, c] : f.entries())
    if (k.second != 0)
      throw std::invalid_argument("geometric_inverse: input involves w");
  if (!f.window().known(z_max, 0) || f.window().zlo < 0)
    throw std::domain_error(
        "geometric_inverse: input window does not determine z^0..z^z_max");
  if (f.entries().empty())
    throw std::domain_error("geometric_inverse: zero series");
  int arity = f.entries().begin()->second.arity();
  RingElement one = RingElement::one(arity);
  if (!(f.get(0, 0, RingElement::zero(arity)) == one))
    throw std::domain_error("geometric_inverse: constant term is not 1");

  std::vector<RingElement> inv;
  inv.reserve(static_cast<std::size_t>(z_max) + 1);
  inv.push_back(one);
  for (int k = 1; k <= z_max; ++k) {
    RingElement c = RingElement::zero(arity);
    for (int i = 1; i <= k; ++i)
      c -= f.get(i, 0, RingElement::zero(arity)) * inv[static_cast<std::size_t>(k - i)];
    inv.push_back(std::move(c));
  }
  LaurentWindow s(Window{0, z_max, -kNoBound, 0});
  for (int k = 0; k <= z_max; ++k) s.add(k, 0, inv[static_cast<std::size_t>(k)]);
  return s;
}

}
