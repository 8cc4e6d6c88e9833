#pragma once

#include <limits>
#include <map>
#include <stdexcept>
#include <utility>

namespace schubert {

inline constexpr int kNoBound = std::numeric_limits<int>::max() / 4;

// Saturating bound arithmetic: anything at +-kNoBound stays there.
inline int bound_add(int a, int b) {
  if (a >= kNoBound || b >= kNoBound) {
    if (a <= -kNoBound || b <= -kNoBound)
      throw std::logic_error("window: adding opposite unbounded ends");
    return kNoBound;
  }
  if (a <= -kNoBound || b <= -kNoBound) return -kNoBound;
  return a + b;
}

// Window of a two-variable Laurent series with B_r coefficients.
//
// The four public bounds are (z_min, z_max, w_min, w_max), but the two axes
// are deliberately asymmetric, matching how every series in this library is
// truncated (upward in z, downward in w):
//   z_min (zlo): support bound -- the true series has no terms with
//                z-exponent below it;
//   z_max (zhi): exactness bound -- every coefficient with z-exponent
//                <= zhi is represented exactly (coefficients above are
//                unknown, not zero);
//   w_min (wlo): exactness bound -- every coefficient with w-exponent
//                >= wlo is exact (below is unknown);
//   w_max (whi): support bound -- no terms above it.
// In particular the rectangle [zlo,zhi]x[wlo,whi] is exact, as is everything
// outside the support bounds (known zero). +-kNoBound marks a free side.
struct Window {
  int zlo = -kNoBound;
  int zhi = kNoBound;
  int wlo = -kNoBound;
  int whi = kNoBound;

  static Window all() { return Window{}; }
  static Window box(int zlo, int zhi, int wlo, int whi) {
    return Window{zlo, zhi, wlo, whi};
  }

  // Is the coefficient of z^ze w^we determined by this window?
  bool known(int ze, int we) const { return ze <= zhi && we >= wlo; }
  // Does the support bound force that coefficient to vanish?
  bool outside_support(int ze, int we) const { return ze < zlo || we > whi; }
  bool in_rectangle(int ze, int we) const {
    return !outside_support(ze, we) && known(ze, we);
  }

  bool operator==(const Window&) const = default;
};

// Window of a sum: exactness bounds intersect, support bounds union.
inline Window add_window(const Window& a, const Window& b) {
  return Window{std::min(a.zlo, b.zlo), std::min(a.zhi, b.zhi),
                std::max(a.wlo, b.wlo), std::max(a.whi, b.whi)};
}

// Window of a product, the standard truncated-series rule: the coefficient
// at z^p is a sum over splittings p = i + i'; it is determined as long as
// whenever one factor is unknown (i beyond its zhi) the other is forced to
// vanish (i' below its zlo), giving p <= zhi_a + zlo_b and symmetrically.
// A fully exact factor (zhi = kNoBound) imposes no constraint. Same on the
// w axis with all inequalities mirrored.
inline Window mul_window(const Window& a, const Window& b) {
  auto zterm = [](const Window& x, const Window& y) {
    return x.zhi >= kNoBound ? kNoBound : bound_add(x.zhi, y.zlo);
  };
  auto wterm = [](const Window& x, const Window& y) {
    return x.wlo <= -kNoBound ? -kNoBound : bound_add(x.wlo, y.whi);
  };
  return Window{bound_add(a.zlo, b.zlo), std::min(zterm(a, b), zterm(b, a)),
                std::max(wterm(a, b), wterm(b, a)), bound_add(a.whi, b.whi)};
}

// Finitely many exact coefficients plus the window that states where they
// are the whole truth. Coef must provide +, -, *, == and is_zero(); entries
// with zero coefficients are never stored, and entries are only stored
// inside the window rectangle.
template <class Coef>
class WindowedSeries {
public:
  using Key = std::pair<int, int>;  // (z exponent, w exponent)

  explicit WindowedSeries(Window w = Window::all()) : win_(w) {}

  // A single exact monomial; the default window is fully exact with tight
  // support bounds (loose support bounds would poison later product windows).
  static WindowedSeries term(Coef c, int ze, int we) {
    WindowedSeries s(Window{ze, kNoBound, -kNoBound, we});
    s.set(ze, we, std::move(c));
    return s;
  }
  static WindowedSeries term(Coef c, int ze, int we, Window w) {
    WindowedSeries s(w);
    s.set(ze, we, std::move(c));
    return s;
  }

  const Window& window() const { return win_; }
  const std::map<Key, Coef>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  bool has(int ze, int we) const {
    require_known(ze, we);
    return entries_.count({ze, we}) != 0;
  }
  // Exact coefficient; throws std::domain_error outside the known region,
  // telling the caller to recompute with a wider window.
  const Coef& at(int ze, int we) const {
    require_known(ze, we);
    auto it = entries_.find({ze, we});
    if (it == entries_.end())
      throw std::domain_error("series: coefficient is zero, use has()/get()");
    return it->second;
  }
  Coef get(int ze, int we, Coef zero_value) const {
    require_known(ze, we);
    auto it = entries_.find({ze, we});
    return it == entries_.end() ? zero_value : it->second;
  }

  void set(int ze, int we, Coef c) {
    if (!win_.in_rectangle(ze, we))
      throw std::logic_error("series: entry outside window rectangle");
    if (c.is_zero())
      entries_.erase({ze, we});
    else
      entries_.insert_or_assign({ze, we}, std::move(c));
  }

  void add(int ze, int we, const Coef& c) {
    if (c.is_zero()) return;
    if (!win_.in_rectangle(ze, we))
      throw std::logic_error("series: entry outside window rectangle");
    auto it = entries_.find({ze, we});
    if (it == entries_.end()) {
      entries_.emplace(Key{ze, we}, c);
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) entries_.erase(it);
    }
  }

  WindowedSeries operator+(const WindowedSeries& o) const {
    WindowedSeries s(add_window(win_, o.win_));
    for (const auto& [k, c] : entries_)
      if (s.win_.in_rectangle(k.first, k.second)) s.add(k.first, k.second, c);
    for (const auto& [k, c] : o.entries_)
      if (s.win_.in_rectangle(k.first, k.second)) s.add(k.first, k.second, c);
    return s;
  }

  WindowedSeries operator-() const {
    WindowedSeries s(win_);
    for (const auto& [k, c] : entries_) s.entries_.emplace(k, -c);
    return s;
  }

  WindowedSeries operator-(const WindowedSeries& o) const {
    return *this + (-o);
  }

  WindowedSeries operator*(const WindowedSeries& o) const {
    Window w = mul_window(win_, o.win_);
    if (w.zhi < w.zlo || w.whi < w.wlo)
      throw std::domain_error(
          "series: product window is empty; widen the input windows");
    WindowedSeries s(w);
    for (const auto& [ka, ca] : entries_)
      for (const auto& [kb, cb] : o.entries_) {
        int ze = ka.first + kb.first, we = ka.second + kb.second;
        if (s.win_.in_rectangle(ze, we)) s.add(ze, we, ca * cb);
      }
    return s;
  }

  WindowedSeries shifted(int dz, int dw) const {
    WindowedSeries s(Window{bound_add(win_.zlo, dz), bound_add(win_.zhi, dz),
                            bound_add(win_.wlo, dw), bound_add(win_.whi, dw)});
    for (const auto& [k, c] : entries_)
      s.entries_.emplace(Key{k.first + dz, k.second + dw}, c);
    return s;
  }

  WindowedSeries operator*(const Coef& c) const {
    WindowedSeries s(win_);
    if (c.is_zero()) return s;
    for (const auto& [k, v] : entries_) {
      Coef p = v * c;
      if (!p.is_zero()) s.entries_.emplace(k, std::move(p));
    }
    return s;
  }

  // The series multiplied by the indicator of the box: entries outside are
  // dropped and become known zeros, entries inside keep their status. Where
  // the box reaches past this window's exactness bounds the result stays
  // inexact there.
  WindowedSeries truncated(const Window& box) const {
    Window w{std::max(win_.zlo, box.zlo),
             box.zhi <= win_.zhi ? kNoBound : win_.zhi,
             box.wlo >= win_.wlo ? -kNoBound : win_.wlo,
             std::min(win_.whi, box.whi)};
    WindowedSeries s(w);
    for (const auto& [k, c] : entries_)
      if (box.in_rectangle(k.first, k.second) &&
          w.in_rectangle(k.first, k.second))
        s.entries_.emplace(k, c);
    return s;
  }

  // Transposes the two variables. Only valid for fully exact series; support
  // bounds are recomputed from the actual entries.
  WindowedSeries axis_swapped() const {
    if (win_.zhi < kNoBound || win_.wlo > -kNoBound)
      throw std::logic_error("series: axis swap of a truncated series");
    WindowedSeries s;
    int zlo = kNoBound, whi = -kNoBound;
    for (const auto& [k, c] : entries_) {
      zlo = std::min(zlo, k.second);
      whi = std::max(whi, k.first);
      s.entries_.emplace(Key{k.second, k.first}, c);
    }
    s.win_ = Window{zlo, kNoBound, -kNoBound, whi};
    return s;
  }

  bool operator==(const WindowedSeries& o) const {
    return win_ == o.win_ && entries_ == o.entries_;
  }

private:
  void require_known(int ze, int we) const {
    if (!win_.known(ze, we))
      throw std::domain_error(
          "series: coefficient outside the exact window; recompute with a "
          "larger truncation");
  }

  Window win_;
  std::map<Key, Coef> entries_;
};

// A coefficient is determined when it is inside the exactness region or
// forced to zero by a support bound.
inline bool determined(const Window& w, int ze, int we) {
  return w.known(ze, we) || w.outside_support(ze, we);
}

// Do the two series agree on every coefficient in the (finite) box? Throws
// if either window leaves part of the box undetermined.
template <class Coef>
bool agree_on(const WindowedSeries<Coef>& a, const WindowedSeries<Coef>& b,
              const Window& box) {
  if (box.zlo <= -kNoBound || box.zhi >= kNoBound || box.wlo <= -kNoBound ||
      box.whi >= kNoBound)
    throw std::invalid_argument("agree_on: box must be finite");
  auto cell = [](const WindowedSeries<Coef>& s, int ze,
                 int we) -> const Coef* {
    if (!determined(s.window(), ze, we))
      throw std::domain_error(
          "agree_on: box exceeds an exact window; recompute with a larger "
          "truncation");
    auto it = s.entries().find({ze, we});
    return it == s.entries().end() ? nullptr : &it->second;
  };
  for (int ze = box.zlo; ze <= box.zhi; ++ze)
    for (int we = box.wlo; we <= box.whi; ++we) {
      const Coef* ca = cell(a, ze, we);
      const Coef* cb = cell(b, ze, we);
      if ((ca == nullptr) != (cb == nullptr)) return false;
      if (ca && !(*ca == *cb)) return false;
    }
  return true;
}

}
