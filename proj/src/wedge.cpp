#include "schubert/wedge.hpp"

#include <algorithm>
#include <stdexcept>

namespace schubert {

namespace {

// Sorts indices strictly decreasing, tracking the sign of the permutation.
// Returns false (zero) on a repeated index.
bool canonicalize(std::vector<int>& idx, int& sign) {
  sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i)
    for (std::size_t j = i; j > 0 && idx[j] > idx[j - 1]; --j) {
      std::swap(idx[j], idx[j - 1]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (idx[i] == idx[i - 1]) return false;
  return true;
}

}

WedgeElement::WedgeElement(int degree) : degree_(degree) {
  if (degree < 0) throw std::invalid_argument("wedge: negative degree");
}

WedgeElement WedgeElement::basis(std::vector<int> indices) {
  WedgeElement u(static_cast<int>(indices.size()));
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] < 0) throw std::invalid_argument("wedge: negative index");
    if (i > 0 && indices[i] >= indices[i - 1])
      throw std::invalid_argument("wedge: indices must strictly decrease");
  }
  u.terms_.emplace(std::move(indices), 1);
  return u;
}

WedgeElement WedgeElement::from_partition(const Partition& lam, int r) {
  if (lam.length() > r)
    throw std::invalid_argument("wedge: partition longer than the degree");
  std::vector<int> idx;
  for (int k = 1; k <= r; ++k) idx.push_back(r - k + lam.part(k));
  return basis(std::move(idx));
}

Int WedgeElement::coefficient(const std::vector<int>& indices) const {
  auto it = terms_.find(indices);
  return it == terms_.end() ? Int(0) : it->second;
}

void WedgeElement::add_term(std::vector<int> indices, Int c) {
  if (static_cast<int>(indices.size()) != degree_)
    throw std::invalid_argument("wedge: wrong number of factors");
  if (c == 0) return;
  int sign = 1;
  if (!canonicalize(indices, sign)) return;
  if (sign < 0) c = -c;
  auto [it, fresh] = terms_.emplace(std::move(indices), c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

WedgeElement WedgeElement::operator+(const WedgeElement& o) const {
  if (degree_ != o.degree_)
    throw std::invalid_argument("wedge: degree mismatch");
  WedgeElement u = *this;
  for (const auto& [idx, c] : o.terms_) u.add_term(idx, c);
  return u;
}

WedgeElement WedgeElement::operator-(const WedgeElement& o) const {
  return *this + (-o);
}

WedgeElement WedgeElement::operator-() const {
  WedgeElement u(degree_);
  for (const auto& [idx, c] : terms_) u.terms_.emplace(idx, -c);
  return u;
}

WedgeElement WedgeElement::operator*(const Int& c) const {
  WedgeElement u(degree_);
  if (c == 0) return u;
  for (const auto& [idx, k] : terms_) u.terms_.emplace(idx, k * c);
  return u;
}

WedgeElement WedgeElement::operator*(const WedgeElement& o) const {
  return wedge(*this, o);
}

bool WedgeElement::operator==(const WedgeElement& o) const {
  return degree_ == o.degree_ && terms_ == o.terms_;
}

WedgeElement wedge(const WedgeElement& a, const WedgeElement& b) {
  WedgeElement u(a.degree() + b.degree());
  for (const auto& [ia, ca] : a.terms())
    for (const auto& [ib, cb] : b.terms()) {
      std::vector<int> idx = ia;
      idx.insert(idx.end(), ib.begin(), ib.end());
      u.add_term(std::move(idx), ca * cb);
    }
  return u;
}

WedgeElement contract(int j, const WedgeElement& u) {
  if (j < 0) throw std::invalid_argument("contract: negative index");
  if (u.degree() == 0) return WedgeElement(0);
  WedgeElement v(u.degree() - 1);
  for (const auto& [idx, c] : u.terms())
    for (std::size_t k = 0; k < idx.size(); ++k)
      if (idx[k] == j) {
        std::vector<int> rest = idx;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
        v.add_term(std::move(rest), k % 2 == 0 ? c : -c);
        break;
      }
  return v;
}

WedgeElement elementary_action(int i, int j, const WedgeElement& u) {
  if (i < 0 || j < 0) throw std::invalid_argument("action: negative index");
  return wedge(WedgeElement::basis({i}), contract(j, u));
}

WedgeElement elementary_action_leibniz(int i, int j, const WedgeElement& u) {
  if (i < 0 || j < 0) throw std::invalid_argument("action: negative index");
  WedgeElement v(u.degree());
  for (const auto& [idx, c] : u.terms())
    for (std::size_t k = 0; k < idx.size(); ++k)
      if (idx[k] == j) {
        std::vector<int> repl = idx;
        repl[k] = i;
        v.add_term(std::move(repl), c);
      }
  return v;
}

SchurExpansion to_schur(const WedgeElement& u) {
  int r = u.degree();
  SchurExpansion x(r);
  for (const auto& [idx, c] : u.terms()) {
    std::vector<int> parts;
    for (int k = 1; k <= r; ++k)
      parts.push_back(idx[static_cast<std::size_t>(k - 1)] - (r - k));
    x.add(Partition(std::move(parts)), c);
  }
  return x;
}

WedgeElement WedgeSeries1::coefficient(int exponent, int degree) const {
  if (exponent < known_lo || exponent > known_hi)
    throw std::domain_error(
        "wedge series: coefficient outside the known range");
  auto it = comp.find(exponent);
  return it == comp.end() ? WedgeElement(degree) : it->second;
}

WedgeSeries1 WedgeSeries1::shifted(int d) const {
  WedgeSeries1 s;
  s.known_lo = bound_add(known_lo, d);
  s.known_hi = bound_add(known_hi, d);
  for (const auto& [e, u] : comp) s.comp.emplace(e + d, u);
  return s;
}

bool agree_on1(const WedgeSeries1& a, const WedgeSeries1& b, int lo, int hi,
               int degree) {
  for (int e = lo; e <= hi; ++e)
    if (a.coefficient(e, degree) != b.coefficient(e, degree)) return false;
  return true;
}

namespace {

// Weight-m component of sigma_+ (up) or sigma_- (down) on one monomial:
// distribute m raises/drops over the factors in all ways.
void sigma_component_rec(bool up, int m, const std::vector<int>& idx,
                         std::size_t pos, std::vector<int>& acc,
                         const Int& c, WedgeElement& out) {
  if (pos == idx.size()) {
    if (m == 0) out.add_term(acc, c);
    return;
  }
  int max_step = up ? m : std::min(m, idx[pos]);
  for (int step = 0; step <= max_step; ++step) {
    acc.push_back(up ? idx[pos] + step : idx[pos] - step);
    sigma_component_rec(up, m - step, idx, pos + 1, acc, c, out);
    acc.pop_back();
  }
}

WedgeElement sigma_component(bool up, int m, const WedgeElement& u) {
  WedgeElement out(u.degree());
  std::vector<int> acc;
  for (const auto& [idx, c] : u.terms())
    sigma_component_rec(up, m, idx, 0, acc, c, out);
  return out;
}

int max_index_sum(const WedgeElement& u) {
  int best = 0;
  for (const auto& [idx, c] : u.terms()) {
    int s = 0;
    for (int i : idx) s += i;
    best = std::max(best, s);
  }
  return best;
}

}

WedgeSeries1 schubert_derivation(SigmaKind kind, int order,
                                 const WedgeElement& u) {
  if (order < 0) throw std::invalid_argument("derivation: negative order");
  WedgeSeries1 s;
  bool up = kind == SigmaKind::plus || kind == SigmaKind::plus_bar;
  bool inverse = kind == SigmaKind::plus_bar || kind == SigmaKind::minus_bar;
  bool exact = !up;  // the downward family terminates
  int last = exact ? max_index_sum(u) : order;
  std::vector<WedgeElement> comp;  // component at exponent (up ? +m : -m)
  for (int m = 0; m <= last; ++m) {
    if (!inverse) {
      comp.push_back(sigma_component(up, m, u));
    } else if (m == 0) {
      comp.push_back(u);
    } else {
      WedgeElement c(u.degree());
      for (int a = 1; a <= m; ++a)
        c = c - sigma_component(up, a, comp[static_cast<std::size_t>(m - a)]);
      comp.push_back(std::move(c));
    }
  }
  for (int m = 0; m <= last; ++m)
    if (!comp[static_cast<std::size_t>(m)].is_zero())
      s.comp.emplace(up ? m : -m, comp[static_cast<std::size_t>(m)]);
  s.known_lo = exact ? -kNoBound : (up ? -kNoBound : -order);
  s.known_hi = exact ? kNoBound : (up ? order : kNoBound);
  return s;
}

WedgeSeries delta_series(const WedgeElement& u, int z_max) {
  if (z_max < 0) throw std::invalid_argument("delta_series: z_max < 0");
  WedgeSeries s(Window{0, z_max, -kNoBound, 0});
  std::vector<int> js;
  for (const auto& [idx, c] : u.terms())
    for (int j : idx) js.push_back(j);
  std::sort(js.begin(), js.end());
  js.erase(std::unique(js.begin(), js.end()), js.end());
  for (int j : js) {
    WedgeElement cu = contract(j, u);
    if (cu.is_zero()) continue;
    for (int i = 0; i <= z_max; ++i)
      s.add(i, -j, wedge(WedgeElement::basis({i}), cu));
  }
  return s;
}

WedgeSeries on_z_axis(const WedgeSeries1& s1) {
  if (s1.known_lo > -kNoBound)
    throw std::logic_error("wedge series: not known from below in z");
  int zlo = 0;
  for (const auto& [e, u] : s1.comp) zlo = std::min(zlo, e);
  WedgeSeries s(Window{zlo, s1.known_hi, -kNoBound, 0});
  for (const auto& [e, u] : s1.comp)
    if (e <= s1.known_hi) s.add(e, 0, u);
  return s;
}

WedgeSeries on_w_axis(const WedgeSeries1& s1) {
  if (s1.known_lo > -kNoBound || s1.known_hi < kNoBound)
    throw std::logic_error("wedge series: w axis needs an exact series");
  int whi = 0;
  for (const auto& [e, u] : s1.comp) whi = std::max(whi, e);
  WedgeSeries s(Window{0, kNoBound, -kNoBound, whi});
  for (const auto& [e, u] : s1.comp) s.add(0, e, u);
  return s;
}

}
