#pragma once

#include <mutex>
#include <vector>

#include "schubert/ring.hpp"

namespace schubert {

// The complete homogeneous sequence h_0, h_1, ... of B_r, defined by
// (sum h_j t^j) * (1 - e_1 t + ... + (-1)^r e_r t^r) = 1, so
// h_j = e_1 h_{j-1} - e_2 h_{j-2} + ... + (-1)^{r-1} e_r h_{j-r}.
// The cache grows on demand; access is internally synchronized.
class HSequence {
public:
  explicit HSequence(int arity);
  HSequence(const HSequence&);
  HSequence& operator=(const HSequence&) = delete;

  int arity() const { return arity_; }
  // h_j as an e-polynomial; zero for j < 0, one for j = 0.
  RingElement h(int j) const;

private:
  int arity_;
  mutable std::mutex mu_;
  mutable std::vector<RingElement> cache_;
};

}
