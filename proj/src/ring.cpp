#include "schubert/ring.hpp"

#include <stdexcept>

namespace schubert {

int weighted_degree(const Exponents& e) {
  int d = 0;
  for (std::size_t k = 0; k < e.size(); ++k) d += static_cast<int>(k + 1) * e[k];
  return d;
}

bool GrevlexLess::operator()(const Exponents& a, const Exponents& b) const {
  int da = weighted_degree(a), db = weighted_degree(b);
  if (da != db) return da < db;
  for (std::size_t k = a.size(); k-- > 0;)
    if (a[k] != b[k]) return a[k] > b[k];
  return false;
}

RingElement::RingElement(int arity) : arity_(arity) {
  if (arity < 0) throw std::invalid_argument("ring: negative arity");
}

RingElement RingElement::one(int arity) { return constant(arity, 1); }

RingElement RingElement::constant(int arity, Int c) {
  RingElement p(arity);
  p.add_term(Exponents(static_cast<std::size_t>(arity), 0), c);
  return p;
}

RingElement RingElement::elementary(int arity, int k) {
  if (k < 0) throw std::invalid_argument("ring: e_k with k < 0");
  if (k == 0) return one(arity);
  if (k > arity) return zero(arity);
  Exponents e(static_cast<std::size_t>(arity), 0);
  e[static_cast<std::size_t>(k - 1)] = 1;
  return monomial(arity, std::move(e), 1);
}

RingElement RingElement::monomial(int arity, Exponents exps, Int coeff) {
  RingElement p(arity);
  p.add_term(exps, coeff);
  return p;
}

Int RingElement::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Int(0) : it->second;
}

int RingElement::degree() const {
  if (terms_.empty()) return -1;
  return weighted_degree(terms_.rbegin()->first);
}

bool RingElement::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = weighted_degree(terms_.begin()->first);
  for (const auto& [e, c] : terms_)
    if (weighted_degree(e) != d) return false;
  return true;
}

RingElement RingElement::homogeneous_component(int d) const {
  RingElement p(arity_);
  for (const auto& [e, c] : terms_)
    if (weighted_degree(e) == d) p.terms_.emplace(e, c);
  return p;
}

void RingElement::add_term(const Exponents& exps, const Int& coeff) {
  if (static_cast<int>(exps.size()) != arity_)
    throw std::invalid_argument("ring: exponent vector length != arity");
  for (int x : exps)
    if (x < 0) throw std::invalid_argument("ring: negative exponent");
  if (coeff == 0) return;
  auto [it, fresh] = terms_.emplace(exps, coeff);
  if (!fresh) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

RingElement& RingElement::operator+=(const RingElement& o) {
  if (arity_ != o.arity_) throw std::invalid_argument("ring: arity mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
  if (arity_ != o.arity_) throw std::invalid_argument("ring: arity mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

RingElement RingElement::operator+(const RingElement& o) const {
  RingElement p = *this;
  p += o;
  return p;
}

RingElement RingElement::operator-(const RingElement& o) const {
  RingElement p = *this;
  p -= o;
  return p;
}

RingElement RingElement::operator*(const RingElement& o) const {
  if (arity_ != o.arity_) throw std::invalid_argument("ring: arity mismatch");
  RingElement p(arity_);
  Exponents e(static_cast<std::size_t>(arity_));
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      p.add_term(e, ca * cb);
    }
  return p;
}

RingElement RingElement::operator-() const {
  RingElement p(arity_);
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
  return p;
}

RingElement RingElement::operator*(const Int& c) const {
  RingElement p(arity_);
  if (c == 0) return p;
  for (const auto& [e, k] : terms_) p.terms_.emplace(e, k * c);
  return p;
}

bool RingElement::operator==(const RingElement& o) const {
  return arity_ == o.arity_ && terms_ == o.terms_;
}

}
