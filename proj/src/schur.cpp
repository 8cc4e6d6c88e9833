#include "schubert/schur.hpp"

#include <algorithm>
#include <stdexcept>

#include "schubert/linalg.hpp"

namespace schubert {

SchurExpansion::SchurExpansion(int r, std::optional<int> n) : r_(r), n_(n) {
  if (r < 0) throw std::invalid_argument("schur: negative rank");
  if (n && *n < r) throw std::invalid_argument("schur: box needs n >= r");
}

int SchurExpansion::cols() const {
  if (!n_) throw std::logic_error("schur: no box bound");
  return *n_ - r_;
}

Int SchurExpansion::coefficient(const Partition& lam) const {
  auto it = terms_.find(lam);
  return it == terms_.end() ? Int(0) : it->second;
}

void SchurExpansion::add(const Partition& lam, const Int& c) {
  if (lam.length() > r_)
    throw std::invalid_argument("schur: partition longer than the rank");
  if (n_ && lam.part(1) > *n_ - r_)
    throw std::invalid_argument("schur: partition outside the box");
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(lam, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SchurExpansion SchurExpansion::operator+(const SchurExpansion& o) const {
  if (r_ != o.r_ || n_ != o.n_)
    throw std::invalid_argument("schur: rank or box mismatch");
  SchurExpansion s = *this;
  for (const auto& [lam, c] : o.terms_) s.add(lam, c);
  return s;
}

SchurExpansion SchurExpansion::operator-(const SchurExpansion& o) const {
  return *this + o * Int(-1);
}

SchurExpansion SchurExpansion::operator*(const Int& c) const {
  SchurExpansion s(r_, n_);
  if (c == 0) return s;
  for (const auto& [lam, k] : terms_) s.terms_.emplace(lam, k * c);
  return s;
}

bool SchurExpansion::operator==(const SchurExpansion& o) const {
  return r_ == o.r_ && n_ == o.n_ && terms_ == o.terms_;
}

RingElement SchurExpansion::to_ring_element(const HSequence& H) const {
  if (H.arity() != r_) throw std::invalid_argument("schur: arity mismatch");
  RingElement p = RingElement::zero(r_);
  for (const auto& [lam, c] : terms_) p += schur_determinant(lam, H) * c;
  return p;
}

RingElement SchurExpansion::to_ring_element() const {
  return to_ring_element(HSequence(r_));
}

RingElement schur_determinant(const Partition& lam, const HSequence& H) {
  int r = H.arity();
  if (lam.length() > r)
    throw std::invalid_argument("schur_determinant: partition longer than rank");
  std::vector<std::vector<RingElement>> m;
  for (int i = 1; i <= r; ++i) {
    std::vector<RingElement> row;
    for (int j = 1; j <= r; ++j) row.push_back(H.h(lam.part(j) - j + i));
    m.push_back(std::move(row));
  }
  return determinant(m, RingElement::one(r));
}

namespace {

// The index multiset of an e-monomial, as a partition: exponent a_k
// contributes a_k parts equal to k.
Partition index_multiset(const Exponents& exps) {
  std::vector<int> parts;
  for (std::size_t k = exps.size(); k-- > 0;)
    parts.insert(parts.end(), static_cast<std::size_t>(exps[k]),
                 static_cast<int>(k + 1));
  return Partition(std::move(parts));
}

// Lexicographic order on equal-weight partitions refines dominance, which
// is what makes the elimination below strictly triangular.
bool lex_less(const Partition& a, const Partition& b) {
  return std::lexicographical_compare(a.parts().begin(), a.parts().end(),
                                      b.parts().begin(), b.parts().end());
}

}

SchurExpansion straighten(const RingElement& p, int r) {
  if (p.arity() != r) throw std::invalid_argument("straighten: arity mismatch");
  HSequence H(r);
  SchurExpansion out(r);
  for (int d = 0; d <= p.degree(); ++d) {
    RingElement q = p.homogeneous_component(d);
    std::optional<Partition> last;
    while (!q.is_zero()) {
      // Pull out the term whose index multiset is minimal: the Schur
      // determinant of its conjugate has unit coefficient there, and all
      // its other monomials have strictly dominating (hence lex-larger)
      // multisets.
      auto best = q.terms().begin();
      Partition best_mu = index_multiset(best->first);
      for (auto it = std::next(q.terms().begin()); it != q.terms().end(); ++it) {
        Partition mu = index_multiset(it->first);
        if (lex_less(mu, best_mu)) {
          best = it;
          best_mu = std::move(mu);
        }
      }
      if (last && !lex_less(*last, best_mu))
        throw std::logic_error("straighten: transition matrix not triangular");
      last = best_mu;
      Partition lam = best_mu.conjugate();
      RingElement delta = schur_determinant(lam, H);
      Int lead = delta.coefficient(best->first);
      if (lead != 1)
        throw std::logic_error("straighten: transition matrix not unimodular");
      Int c = best->second;
      out.add(lam, c);
      q -= delta * c;
    }
  }
  return out;
}

SchurExpansion project(const SchurExpansion& x, int n) {
  if (n < x.rank()) throw std::invalid_argument("project: n < r");
  SchurExpansion out(x.rank(), n);
  for (const auto& [lam, c] : x.terms())
    if (lam.part(1) <= n - x.rank()) out.add(lam, c);
  return out;
}

LaurentWindow project_series(const LaurentWindow& s, int r, int n) {
  if (n < r) throw std::invalid_argument("project_series: n < r");
  LaurentWindow cut =
      s.truncated(Window::box(-(n - 1), n - 1, -(n - 1), n - 1));
  HSequence H(r);
  LaurentWindow out(cut.window());
  for (const auto& [k, c] : cut.entries()) {
    RingElement image =
        project(straighten(c, r), n).to_ring_element(H);
    if (!image.is_zero()) out.set(k.first, k.second, std::move(image));
  }
  return out;
}

}
