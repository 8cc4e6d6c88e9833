#include "schubert/hseq.hpp"

#include <stdexcept>

namespace schubert {

HSequence::HSequence(int arity) : arity_(arity) {
  if (arity < 0) throw std::invalid_argument("hseq: negative arity");
  cache_.push_back(RingElement::one(arity));
}

HSequence::HSequence(const HSequence& o) : arity_(o.arity_) {
  std::lock_guard<std::mutex> lock(o.mu_);
  cache_ = o.cache_;
}

RingElement HSequence::h(int j) const {
  if (j < 0) return RingElement::zero(arity_);
  std::lock_guard<std::mutex> lock(mu_);
  while (static_cast<int>(cache_.size()) <= j) {
    int m = static_cast<int>(cache_.size());
    RingElement next = RingElement::zero(arity_);
    for (int k = 1; k <= std::min(arity_, m); ++k) {
      RingElement t =
          RingElement::elementary(arity_, k) * cache_[static_cast<std::size_t>(m - k)];
      if (k % 2 == 0) next -= t; else next += t;
    }
    cache_.push_back(std::move(next));
  }
  return cache_[static_cast<std::size_t>(j)];
}

}
