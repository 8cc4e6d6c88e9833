#include "schubert/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "schubert/action.hpp"
#include "schubert/format.hpp"
#include "schubert/wedge.hpp"

namespace schubert {

namespace {

struct Check {
  std::string label;
  std::function<std::string()> run;  // empty string means pass
};

using Checks = std::vector<Check>;

int rnd(std::mt19937_64& g, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(g);
}

Int rnd_coeff(std::mt19937_64& g) {
  int c = rnd(g, -9, 9);
  return Int(c == 0 ? 1 : c);
}

RingElement rnd_ring(std::mt19937_64& g, int arity, int max_deg) {
  RingElement p = RingElement::zero(arity);
  int terms = rnd(g, 1, 4);
  for (int t = 0; t < terms; ++t) {
    Exponents exps(arity, 0);
    int budget = rnd(g, 0, max_deg);
    for (int i = 0; i < arity && budget > 0; ++i) {
      int e = rnd(g, 0, budget / (i + 1));
      exps[i] = e;
      budget -= e * (i + 1);
    }
    p.add_term(exps, rnd_coeff(g));
  }
  return p;
}

Partition rnd_partition(std::mt19937_64& g, int rows, int cols) {
  std::vector<int> parts;
  for (int i = 0; i < rows; ++i) parts.push_back(rnd(g, 0, cols));
  std::sort(parts.rbegin(), parts.rend());
  return Partition(std::move(parts));
}

WedgeElement rnd_wedge(std::mt19937_64& g, int degree, int max_index) {
  WedgeElement u(degree);
  int terms = rnd(g, 1, 3);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> idx;
    while (static_cast<int>(idx.size()) < degree) {
      int i = rnd(g, 0, max_index);
      if (std::find(idx.begin(), idx.end(), i) == idx.end()) idx.push_back(i);
    }
    u.add_term(idx, rnd_coeff(g));
  }
  return u;
}

std::string wtext(const WedgeElement& u) { return to_text(to_schur(u)); }

int max_index_sum(const WedgeElement& u) {
  int best = 0;
  for (const auto& [idx, c] : u.terms()) {
    int s = 0;
    for (int i : idx) s += i;
    best = std::max(best, s);
  }
  return best;
}

// kind(t) applied to a fully exact one-variable series, by convolution.
WedgeSeries1 compose(SigmaKind kind, int order, const WedgeSeries1& s) {
  if (s.known_lo > -kNoBound || s.known_hi < kNoBound)
    throw std::logic_error("compose needs an exact series");
  WedgeSeries1 out;
  std::optional<int> min_key;
  for (const auto& [k, v] : s.comp) {
    if (v.is_zero()) continue;
    min_key = min_key ? std::min(*min_key, k) : k;
    WedgeSeries1 t = schubert_derivation(kind, order, v);
    for (const auto& [m, x] : t.comp) {
      if (x.is_zero()) continue;
      auto [it, fresh] = out.comp.emplace(k + m, x);
      if (!fresh) {
        it->second = it->second + x;
        if (it->second.is_zero()) out.comp.erase(it);
      }
    }
  }
  bool truncated = kind == SigmaKind::plus || kind == SigmaKind::plus_bar;
  out.known_lo = -kNoBound;
  out.known_hi = truncated && min_key ? *min_key + order : kNoBound;
  return out;
}

// sigma_{index} as a single operator.
WedgeElement sigma_component(int index, const WedgeElement& u) {
  return schubert_derivation(SigmaKind::plus, index, u)
      .coefficient(index, u.degree());
}

std::string partitions_label(int r, const Partition& lam) {
  return "r=" + std::to_string(r) + " lambda=" + to_text(lam);
}

// ---------------------------------------------------------------- suites

Checks suite_partitions(const VerifyOptions& o) {
  Checks cs;
  for (int rows = 0; rows <= o.max_r + 1; ++rows)
    for (int cols = 0; cols <= o.max_deg; ++cols)
      cs.push_back(
          {"box " + std::to_string(rows) + "x" + std::to_string(cols), [=] {
             auto all = enumerate_box(rows, cols);
             // binomial(rows+cols, rows) partitions fit the box
             long long expect = 1;
             for (int i = 1; i <= rows; ++i)
               expect = expect * (cols + i) / i;
             if (static_cast<long long>(all.size()) != expect)
               return "expected " + std::to_string(expect) + " partitions, got " +
                      std::to_string(all.size());
             for (size_t i = 0; i + 1 < all.size(); ++i)
               if (!partition_less(all[i], all[i + 1]))
                 return "enumeration out of order at " + to_text(all[i + 1]);
             for (const auto& lam : all) {
               if (!lam.fits_box(rows, cols))
                 return "outside the box: " + to_text(lam);
               if (lam.conjugate().conjugate() != lam)
                 return "conjugate not involutive on " + to_text(lam);
               if (!lam.conjugate().fits_box(cols, rows))
                 return "conjugate outside transposed box: " + to_text(lam);
               if (lam.weight() != lam.conjugate().weight())
                 return "conjugate changes weight of " + to_text(lam);
             }
             return std::string();
           }});
  return cs;
}

Checks suite_ring(const VerifyOptions& o) {
  Checks cs;
  std::mt19937_64 g(o.seed * 1000003 + 1);
  int trials = std::max(o.trials / 4, 8);
  for (int t = 0; t < trials; ++t) {
    int arity = rnd(g, 0, o.max_r);
    RingElement p = rnd_ring(g, arity, o.max_deg);
    RingElement q = rnd_ring(g, arity, o.max_deg);
    RingElement s = rnd_ring(g, arity, o.max_deg);
    cs.push_back({"arity " + std::to_string(arity) + " trial " +
                      std::to_string(t),
                  [=] {
                    if (!(p * q == q * p)) return std::string("p*q != q*p");
                    if (!((p * q) * s == p * (q * s)))
                      return std::string("associativity fails");
                    if (!((p + q) * s == p * s + q * s))
                      return std::string("distributivity fails");
                    if (!(p - p == RingElement::zero(p.arity())))
                      return std::string("p - p != 0");
                    RingElement sum = RingElement::zero(p.arity());
                    for (int d = 0; d <= p.degree(); ++d)
                      sum += p.homogeneous_component(d);
                    if (!(sum == p))
                      return std::string(
                          "homogeneous components do not resum");
                    return std::string();
                  }});
  }
  return cs;
}

Checks suite_windows(const VerifyOptions& o) {
  Checks cs;
  Window box{0, o.max_deg, -o.max_deg, 0};
  for (int r = 1; r <= o.max_r; ++r)
    for (const auto& lam : enumerate_box(r, o.max_deg)) {
      if (lam.weight() > o.max_deg) continue;
      cs.push_back({partitions_label(r, lam), [=] {
                      HSequence H(r);
                      LaurentWindow a1 =
                          action_determinantal(lam, H, o.max_deg);
                      LaurentWindow a2 =
                          action_determinantal(lam, H, o.max_deg + 2);
                      if (!agree_on(a1, a2, box))
                        return std::string(
                            "determinantal series changes under a larger "
                            "truncation");
                      LaurentWindow b1 = action_vertex(lam, H, o.max_deg);
                      LaurentWindow b2 = action_vertex(lam, H, o.max_deg + 2);
                      if (!agree_on(b1, b2, box))
                        return std::string(
                            "vertex series changes under a larger truncation");
                      return std::string();
                    }});
    }
  return cs;
}

Checks suite_symfunc(const VerifyOptions& o) {
  Checks cs;
  std::mt19937_64 g(o.seed * 1000003 + 2);
  for (int r = 0; r <= o.max_r; ++r) {
    cs.push_back({"h and e classes, r=" + std::to_string(r), [=] {
                    HSequence H(r);
                    for (int k = 0; k <= o.max_deg; ++k) {
                      SchurExpansion row(r);
                      if (k == 0 || r >= 1)
                        row.add(Partition(std::vector<int>{k}), 1);
                      if (!(straighten(H.h(k), r) == row))
                        return "h_" + std::to_string(k) +
                               " is not the one-row class";
                      if (k >= 1 && k <= r) {
                        std::vector<int> ones(k, 1);
                        Partition col(ones);
                        if (!(schur_determinant(col, H) ==
                              RingElement::elementary(r, k)))
                          return "one-column determinant differs from e_" +
                                 std::to_string(k);
                      }
                    }
                    return std::string();
                  }});
    int trials = std::max(o.trials / 8, 4);
    for (int t = 0; t < trials; ++t) {
      RingElement p = rnd_ring(g, r, o.max_deg);
      cs.push_back({"round trip, r=" + std::to_string(r) + " trial " +
                        std::to_string(t),
                    [=] {
                      HSequence H(r);
                      SchurExpansion x = straighten(p, r);
                      if (!(x.to_ring_element(H) == p))
                        return "straighten loses " + to_text(p);
                      for (const auto& [lam, c] : x.terms())
                        if (lam.length() > r)
                          return "class with too many rows in " + to_text(x);
                      return std::string();
                    }});
    }
  }
  return cs;
}

Checks suite_projection(const VerifyOptions& o) {
  Checks cs;
  std::mt19937_64 g(o.seed * 1000003 + 3);
  int trials = std::max(o.trials / 8, 4);
  for (int r = 1; r <= o.max_r; ++r)
    for (int n = r; n <= o.max_n; ++n) {
      for (int t = 0; t < trials; ++t) {
        RingElement p = rnd_ring(g, r, o.max_deg);
        RingElement q = rnd_ring(g, r, o.max_deg);
        cs.push_back(
            {"r=" + std::to_string(r) + " n=" + std::to_string(n) +
                 " trial " + std::to_string(t),
             [=] {
               HSequence H(r);
               SchurExpansion a = project(straighten(p * q, r), n);
               RingElement pp =
                   project(straighten(p, r), n).to_ring_element(H);
               SchurExpansion b = project(straighten(pp * q, r), n);
               if (!(a == b))
                 return std::string(
                     "projection does not absorb the projected factor");
               SchurExpansion c = project(a, n);
               if (!(c == a)) return std::string("projection not idempotent");
               return std::string();
             }});
      }
      cs.push_back({"box classes, r=" + std::to_string(r) +
                        " n=" + std::to_string(n),
                    [=] {
                      for (const auto& lam : enumerate_box(r, o.max_n - r)) {
                        SchurExpansion x(r);
                        x.add(lam, 1);
                        bool inside = lam.fits_box(r, n - r);
                        SchurExpansion px = project(x, n);
                        if (inside && px.coefficient(lam) != 1)
                          return "projection drops " + to_text(lam);
                        if (!inside && !px.is_zero())
                          return "projection keeps " + to_text(lam);
                      }
                      return std::string();
                    }});
    }
  return cs;
}

Checks suite_clifford(const VerifyOptions& o) {
  Checks cs;
  std::mt19937_64 g(o.seed * 1000003 + 4);
  int trials = std::max(o.trials / 8, 4);
  for (int r = 1; r <= o.max_r; ++r)
    for (int t = 0; t < trials; ++t) {
      WedgeElement u = rnd_wedge(g, r, o.max_n + 2);
      cs.push_back({"degree " + std::to_string(r) + " trial " +
                        std::to_string(t),
                    [=] {
                      for (int i = 0; i <= o.max_n; ++i)
                        for (int j = 0; j <= o.max_n; ++j) {
                          WedgeElement lhs =
                              wedge(WedgeElement::basis({i}), contract(j, u)) +
                              contract(j, wedge(WedgeElement::basis({i}), u));
                          WedgeElement rhs =
                              i == j ? u : WedgeElement(u.degree());
                          if (lhs != rhs)
                            return "anticommutator fails at i=" +
                                   std::to_string(i) +
                                   " j=" + std::to_string(j) + " on " +
                                   wtext(u);
                        }
                      return std::string();
                    }});
    }
  return cs;
}

Checks suite_delta_routes(const VerifyOptions& o) {
  Checks cs;
  std::mt19937_64 g(o.seed * 1000003 + 5);
  int trials = std::max(o.trials / 8, 4);
  for (int r = 1; r <= o.max_r; ++r)
    for (int t = 0; t < trials; ++t) {
      WedgeElement u = rnd_wedge(g, r, o.max_n + 2);
      cs.push_back(
          {"degree " + std::to_string(r) + " trial " + std::to_string(t),
           [=] {
             for (int i = 0; i <= o.max_n; ++i)
               for (int j = 0; j <= o.max_n; ++j)
                 if (elementary_action(i, j, u) !=
                     elementary_action_leibniz(i, j, u))
                   return "the two action routes differ at i=" +
                          std::to_string(i) + " j=" + std::to_string(j) +
                          " on " + wtext(u);
             WedgeSeries d = delta_series(u, o.max_n);
             for (int i = 0; i <= o.max_n; ++i)
               for (int j = 0; j <= o.max_n; ++j)
                 if (d.get(i, -j, WedgeElement(u.degree())) !=
                     elementary_action(i, j, u))
                   return "series cell differs from the action at i=" +
                          std::to_string(i) + " j=" + std::to_string(j);
             return std::string();
           }});
    }
  return cs;
}

Checks suite_derivations(const VerifyOptions& o) {
  Checks cs;
  std::mt19937_64 g(o.seed * 1000003 + 6);
  int trials = std::max(o.trials / 10, 4);

  // multiplicativity over wedge products and the inverse pairs
  for (int t = 0; t < trials; ++t) {
    int da = rnd(g, 1, 2), db = rnd(g, 1, 2);
    WedgeElement a = rnd_wedge(g, da, o.max_n);
    WedgeElement b = rnd_wedge(g, db, o.max_n);
    for (SigmaKind kind : {SigmaKind::plus, SigmaKind::minus,
                           SigmaKind::plus_bar, SigmaKind::minus_bar}) {
      cs.push_back(
          {"multiplicative, kind " + std::to_string(static_cast<int>(kind)) +
               " trial " + std::to_string(t),
           [=] {
             int ma = max_index_sum(a), mb = max_index_sum(b);
             int order = ma + mb + o.max_deg;
             WedgeSeries1 sa = schubert_derivation(kind, order, a);
             WedgeSeries1 sb = schubert_derivation(kind, order, b);
             WedgeSeries1 sab = schubert_derivation(kind, order, wedge(a, b));
             for (int m = -(ma + mb); m <= o.max_deg; ++m) {
               WedgeElement conv(da + db);
               // components of a below -ma and of b below -mb vanish
               for (int i = -ma; i <= m + mb; ++i)
                 conv = conv + wedge(sa.coefficient(i, da),
                                     sb.coefficient(m - i, db));
               if (conv != sab.coefficient(m, da + db))
                 return "not multiplicative at exponent " + std::to_string(m);
             }
             return std::string();
           }});
    }
  }

  // sigma o sigma-bar = identity, both directions on the downward side
  for (int t = 0; t < trials; ++t) {
    int d = rnd(g, 1, o.max_r);
    WedgeElement u = rnd_wedge(g, d, o.max_n);
    cs.push_back(
        {"inverse pair trial " + std::to_string(t), [=] {
           WedgeSeries1 down =
               compose(SigmaKind::minus, 0,
                       schubert_derivation(SigmaKind::minus_bar, 0, u));
           WedgeSeries1 down2 =
               compose(SigmaKind::minus_bar, 0,
                       schubert_derivation(SigmaKind::minus, 0, u));
           for (int m = -(max_index_sum(u) + 1); m <= 0; ++m) {
             WedgeElement expect = m == 0 ? u : WedgeElement(d);
             if (down.coefficient(m, d) != expect)
               return "minus o minus_bar misses at " + std::to_string(m);
             if (down2.coefficient(m, d) != expect)
               return "minus_bar o minus misses at " + std::to_string(m);
           }
           return std::string();
         }});
  }

  // b_0 ^ sbar_+(z) [b]_lam  =  z^r sbar_-(z) ([b]_{lam+1^r} ^ b_0)
  for (int r = 0; r <= o.max_r; ++r)
    for (const auto& lam : enumerate_box(r, 3)) {
      cs.push_back(
          {"append b_0, " + partitions_label(r, lam), [=] {
             int K = o.max_deg + r;
             WedgeElement u = WedgeElement::from_partition(lam, r);
             WedgeSeries1 lhs =
                 schubert_derivation(SigmaKind::plus_bar, K, u);
             for (auto& [k, v] : lhs.comp)
               v = wedge(WedgeElement::basis({0}), v);
             WedgeElement shifted =
                 WedgeElement::from_partition(add_ones(lam, r), r);
             WedgeSeries1 rhs = schubert_derivation(
                 SigmaKind::minus_bar, 0, wedge(shifted, WedgeElement::basis({0})));
             rhs = rhs.shifted(r);
             int lo = -(max_index_sum(u) + r + 1);
             if (!agree_on1(lhs, rhs, lo, K, r + 1))
               return std::string("the two sides differ");
             return std::string();
           }});
    }

  // sigma_-(w) sigma_+(z) = geometric(z/w) sigma_+(z) sigma_-(w) on
  // [b]^{r+1}_lam with lam of length <= r, so the last factor is b_0.
  // The rule needs that factor: already on b_1 the right side doubles.
  for (int r = 0; r <= o.max_r; ++r)
    for (const auto& lam : enumerate_box(r, 3)) {
      WedgeElement u = WedgeElement::from_partition(lam, r + 1);
      cs.push_back(
        {"two-variable exchange, " + partitions_label(r, lam), [=] {
           int Z = o.max_deg;
           int W = max_index_sum(u) + Z + 1;
           WedgeSeries lhs(Window{0, Z, -kNoBound, 0});
           WedgeSeries1 plus = schubert_derivation(SigmaKind::plus, Z, u);
           for (const auto& [k, v] : plus.comp) {
             if (k > Z) continue;
             WedgeSeries1 t2 = schubert_derivation(SigmaKind::minus, 0, v);
             for (const auto& [m, x] : t2.comp)
               if (!x.is_zero()) lhs.add(k, m, x);
           }
           WedgeSeries rhs(Window{0, Z, -kNoBound, 0});
           WedgeSeries1 minus = schubert_derivation(SigmaKind::minus, 0, u);
           for (const auto& [m, v] : minus.comp) {
             WedgeSeries1 t2 = schubert_derivation(SigmaKind::plus, Z, v);
             for (const auto& [k, x] : t2.comp)
               if (k <= Z && !x.is_zero()) rhs.add(k, m, x);
           }
           WedgeSeries geo(Window{0, Z, -kNoBound, 0});
           for (int k = 0; k <= Z; ++k) geo.add(k, -k, WedgeElement::unit());
           if (!agree_on(lhs, geo * rhs, Window{0, Z, -W, 0}))
             return std::string("exchange law fails on ") + wtext(u);
           return std::string();
         }});
    }

  // sbar_-(w) (beta_0 -| [b]^{r+1}_lam) = w^{-r} sbar_+(w) [b]^r_lam
  for (int r = 0; r <= o.max_r; ++r)
    for (const auto& lam : enumerate_box(r, 3)) {
      cs.push_back(
          {"drop b_0, " + partitions_label(r, lam), [=] {
             int K = o.max_deg + r;
             WedgeElement big = WedgeElement::from_partition(lam, r + 1);
             WedgeSeries1 lhs =
                 schubert_derivation(SigmaKind::minus_bar, 0, contract(0, big));
             WedgeSeries1 rhs = schubert_derivation(
                 SigmaKind::plus_bar, K, WedgeElement::from_partition(lam, r));
             rhs = rhs.shifted(-r);
             int lo = -(max_index_sum(big) + 1);
             if (!agree_on1(lhs, rhs, lo, K - r, r))
               return std::string("the two sides differ");
             return std::string();
           }});
    }

  // sigma_-(w) b_{n+i} = sigma_i sigma_-(w) b_n + w^{-(n+1)} sigma_-(w) b_{i-1}
  for (int n = 0; n <= o.max_deg; ++n)
    for (int i = 1; i <= o.max_deg; ++i)
      cs.push_back(
          {"single factor shift n=" + std::to_string(n) +
               " i=" + std::to_string(i),
           [=] {
             WedgeSeries1 lhs = schubert_derivation(
                 SigmaKind::minus, 0, WedgeElement::basis({n + i}));
             WedgeSeries1 a = schubert_derivation(SigmaKind::minus, 0,
                                                  WedgeElement::basis({n}));
             for (auto& [k, v] : a.comp) v = sigma_component(i, v);
             WedgeSeries1 b = schubert_derivation(SigmaKind::minus, 0,
                                                  WedgeElement::basis({i - 1}));
             b = b.shifted(-(n + 1));
             WedgeSeries1 rhs = a;
             for (const auto& [k, v] : b.comp) {
               auto [it, fresh] = rhs.comp.emplace(k, v);
               if (!fresh) it->second = it->second + v;
             }
             if (!agree_on1(lhs, rhs, -(n + i), 0, 1))
               return std::string("the two sides differ");
             return std::string();
           }});
  return cs;
}

Checks suite_bridge(const VerifyOptions& o) {
  Checks cs;
  for (int r = 0; r <= o.max_r; ++r)
    for (const auto& lam : enumerate_box(r, 3)) {
      cs.push_back({partitions_label(r, lam), [=] {
                      HSequence H(r);
                      WedgeElement u = WedgeElement::from_partition(lam, r);
                      RingElement d = schur_determinant(lam, H);
                      for (int i = 0; i <= o.max_deg; ++i) {
                        SchurExpansion lhs = to_schur(sigma_component(i, u));
                        SchurExpansion rhs = straighten(H.h(i) * d, r);
                        if (!(lhs == rhs))
                          return "h_" + std::to_string(i) +
                                 " and sigma_" + std::to_string(i) +
                                 " disagree";
                      }
                      return std::string();
                    }});
    }
  return cs;
}

Checks suite_raising_lowering(const VerifyOptions& o) {
  Checks cs;
  for (int r = 0; r < o.max_r; ++r)
    for (const auto& lam : enumerate_box(r, 3)) {
      cs.push_back(
          {"raising " + partitions_label(r, lam), [=] {
             int R = r + 1;
             int hi = o.max_deg;
             WedgeElement big = WedgeElement::from_partition(lam, R);
             WedgeSeries1 down =
                 schubert_derivation(SigmaKind::minus_bar, 0, big);
             int min_key = down.comp.empty() ? 0 : down.comp.begin()->first;
             WedgeSeries1 oracle =
                 compose(SigmaKind::plus, hi - min_key, down);
             SchurExpansion x(r);
             x.add(lam, 1);
             LaurentWindow got = vertex_raising(x, hi);
             for (int k = -(max_index_sum(big) + 1); k <= hi; ++k) {
               SchurExpansion want = to_schur(oracle.coefficient(k, R));
               SchurExpansion have =
                   straighten(got.get(k, 0, RingElement::zero(R)), R);
               if (!(want == have))
                 return "differs at z^" + std::to_string(k) + ": oracle " +
                        to_text(want) + ", series " + to_text(have);
             }
             return std::string();
           }});
    }
  for (int r = 1; r <= o.max_r; ++r)
    for (const auto& lam : enumerate_box(r, 3)) {
      cs.push_back(
          {"lowering " + partitions_label(r, lam), [=] {
             WedgeElement u = WedgeElement::from_partition(lam, r);
             // w^{r-1} sum_m w^{-m} beta_m -| u, straight from contractions
             std::map<int, WedgeElement> oracle;
             int top = r - 1 + lam.part(1);
             for (int m = 0; m <= top; ++m) {
               WedgeElement c = contract(m, u);
               if (!c.is_zero()) oracle.emplace(r - 1 - m, c);
             }
             SchurExpansion x(r);
             x.add(lam, 1);
             LaurentWindow got = vertex_lowering(x);
             for (int we = -top + r - 1; we <= r - 1; ++we) {
               auto it = oracle.find(we);
               SchurExpansion want = it == oracle.end()
                                         ? SchurExpansion(r - 1)
                                         : to_schur(it->second);
               SchurExpansion have = straighten(
                   got.get(0, we, RingElement::zero(r - 1)), r - 1);
               if (!(want == have))
                 return "differs at w^" + std::to_string(we) + ": oracle " +
                        to_text(want) + ", series " + to_text(have);
             }
             return std::string();
           }});
    }
  return cs;
}

Checks suite_two_forms(const VerifyOptions& o) {
  Checks cs;
  Window box{0, o.max_deg, -o.max_deg, 0};
  for (int r = 1; r <= o.max_r; ++r)
    for (const auto& lam : enumerate_box(r, o.max_deg)) {
      if (lam.weight() > o.max_deg) continue;
      cs.push_back({partitions_label(r, lam), [=] {
                      HSequence H(r);
                      LaurentWindow a = action_determinantal(lam, H, o.max_deg);
                      LaurentWindow b = action_vertex(lam, H, o.max_deg);
                      if (!agree_on(a, b, box))
                        return std::string("the closed forms disagree");
                      return std::string();
                    }});
    }
  return cs;
}

Checks suite_oracle_grid(const VerifyOptions& o) {
  Checks cs;
  for (int r = 1; r <= o.max_r; ++r)
    for (const auto& lam : enumerate_box(r, o.max_n - r)) {
      cs.push_back(
          {partitions_label(r, lam), [=] {
             WedgeElement u = WedgeElement::from_partition(lam, r);
             SchurExpansion x(r);
             x.add(lam, 1);
             for (int i = 0; i < o.max_n; ++i)
               for (int j = 0; j < o.max_n; ++j) {
                 SchurExpansion want = to_schur(elementary_action(i, j, u));
                 SchurExpansion have = act_elementary(i, j, x);
                 if (!(want == have))
                   return "differs from the contraction oracle at i=" +
                          std::to_string(i) + " j=" + std::to_string(j) +
                          ": " + to_text(want) + " vs " + to_text(have);
               }
             return std::string();
           }});
    }
  return cs;
}

Checks suite_grading(const VerifyOptions& o) {
  Checks cs;
  for (int r = 1; r <= o.max_r; ++r)
    for (const auto& lam : enumerate_box(r, o.max_deg)) {
      if (lam.weight() > o.max_deg) continue;
      cs.push_back(
          {partitions_label(r, lam), [=] {
             HSequence H(r);
             LaurentWindow s = action_determinantal(lam, H, o.max_deg);
             std::vector<int> allowed;
             for (int k = 1; k <= r; ++k) allowed.push_back(lam.part(k) + r - k);
             for (const auto& [key, c] : s.entries()) {
               auto [ze, we] = key;
               if (ze < 0)
                 return "support at negative z exponent " + std::to_string(ze);
               if (std::find(allowed.begin(), allowed.end(), -we) ==
                   allowed.end())
                 return "support at w^" + std::to_string(we) +
                        " outside the hook exponents";
               if (!c.is_homogeneous())
                 return "inhomogeneous coefficient at z^" +
                        std::to_string(ze) + " w^" + std::to_string(we);
               if (!c.is_zero() && c.degree() != lam.weight() + ze + we)
                 return "wrong degree at z^" + std::to_string(ze) + " w^" +
                        std::to_string(we);
             }
             return std::string();
           }});
    }
  return cs;
}

Checks suite_lie_bracket(const VerifyOptions& o) {
  Checks cs;
  std::mt19937_64 g(o.seed * 1000003 + 7);
  for (int t = 0; t < o.trials; ++t) {
    int i = rnd(g, 0, 5), j = rnd(g, 0, 5), k = rnd(g, 0, 5), l = rnd(g, 0, 5);
    Partition lam = rnd_partition(g, 3, 3);
    cs.push_back(
        {"E" + std::to_string(i) + std::to_string(j) + ",E" +
             std::to_string(k) + std::to_string(l) + " on " + to_text(lam),
         [=] {
           SchurExpansion x(3);
           x.add(lam, 1);
           SchurExpansion lhs = act_elementary(i, j, act_elementary(k, l, x)) -
                                act_elementary(k, l, act_elementary(i, j, x));
           SchurExpansion rhs(3);
           if (j == k) rhs = rhs + act_elementary(i, l, x);
           if (l == i) rhs = rhs - act_elementary(k, j, x);
           if (!(lhs == rhs))
             return "bracket law fails: " + to_text(lhs) + " vs " +
                    to_text(rhs);
           return std::string();
         }});
  }
  return cs;
}

Checks suite_finite_n(const VerifyOptions& o) {
  Checks cs;
  std::mt19937_64 g(o.seed * 1000003 + 8);
  for (int r = 1; r <= o.max_r; ++r)
    for (int n = r; n <= o.max_n; ++n) {
      // acting and then projecting = projecting and then acting
      SchurExpansion x(r);
      for (const auto& lam : enumerate_box(r, n - r + 2))
        if (rnd(g, 0, 2) == 0) x.add(lam, rnd_coeff(g));
      cs.push_back({"projection commutes, r=" + std::to_string(r) +
                        " n=" + std::to_string(n),
                    [=] {
                      for (int i = 0; i < n; ++i)
                        for (int j = 0; j < n; ++j) {
                          SchurExpansion lhs =
                              project(act_elementary(i, j, x), n);
                          SchurExpansion rhs =
                              act_elementary(i, j, project(x, n));
                          if (!(lhs.terms() == rhs.terms()))
                            return "differs at i=" + std::to_string(i) +
                                   " j=" + std::to_string(j) + " on " +
                                   to_text(x);
                        }
                      return std::string();
                    }});
      for (const auto& lam : enumerate_box(r, n - r)) {
        cs.push_back(
            {"direct route, r=" + std::to_string(r) + " n=" +
                 std::to_string(n) + " lambda=" + to_text(lam),
             [=] {
               SchurExpansion xb(r, n);
               xb.add(lam, 1);
               for (int i = 0; i < n; ++i)
                 for (int j = 0; j < n; ++j)
                   if (!(act_elementary(i, j, xb) ==
                         act_elementary_direct(i, j, xb)))
                     return "routes differ at i=" + std::to_string(i) +
                            " j=" + std::to_string(j);
               return std::string();
             }});
      }
    }
  return cs;
}

// ---------------------------------------------------------------- runner

SuiteResult run_suite(const std::string& name, Checks checks, int workers) {
  SuiteResult res;
  res.name = name;
  res.checks = static_cast<long long>(checks.size());
  std::atomic<size_t> next{0};
  std::mutex mu;
  auto work = [&] {
    for (;;) {
      size_t idx = next.fetch_add(1);
      if (idx >= checks.size()) return;
      std::string msg;
      try {
        msg = checks[idx].run();
      } catch (const std::exception& e) {
        msg = std::string("exception: ") + e.what();
      }
      if (!msg.empty()) {
        std::lock_guard<std::mutex> lock(mu);
        ++res.failures;
        if (res.counterexamples.size() < 10)
          res.counterexamples.push_back(checks[idx].label + ": " + msg);
      }
    }
  };
  int w = workers > 0 ? workers
                      : static_cast<int>(std::thread::hardware_concurrency());
  w = std::max(1, std::min<int>(w, static_cast<int>(checks.size())));
  std::vector<std::thread> pool;
  for (int t = 0; t + 1 < w; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  return res;
}

using Builder = Checks (*)(const VerifyOptions&);

const std::vector<std::pair<std::string, Builder>>& registry() {
  static const std::vector<std::pair<std::string, Builder>> reg = {
      {"partitions", suite_partitions},
      {"ring", suite_ring},
      {"windows", suite_windows},
      {"symfunc", suite_symfunc},
      {"projection", suite_projection},
      {"clifford", suite_clifford},
      {"delta-routes", suite_delta_routes},
      {"derivations", suite_derivations},
      {"bridge", suite_bridge},
      {"raising-lowering", suite_raising_lowering},
      {"two-forms", suite_two_forms},
      {"oracle-grid", suite_oracle_grid},
      {"grading", suite_grading},
      {"lie-bracket", suite_lie_bracket},
      {"finite-n", suite_finite_n},
  };
  return reg;
}

}

long long VerifyReport::checks() const {
  long long total = 0;
  for (const auto& s : suites) total += s.checks;
  return total;
}

long long VerifyReport::failures() const {
  long long total = 0;
  for (const auto& s : suites) total += s.failures;
  return total;
}

std::vector<std::string> verification_suites() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) names.push_back(name);
  return names;
}

VerifyReport run_verification(const VerifyOptions& opts,
                              const std::vector<std::string>& only) {
  for (const auto& name : only) {
    bool found = false;
    for (const auto& [known, fn] : registry()) found = found || known == name;
    if (!found) throw std::invalid_argument("unknown suite: " + name);
  }
  VerifyReport report;
  for (const auto& [name, fn] : registry()) {
    if (!only.empty() &&
        std::find(only.begin(), only.end(), name) == only.end())
      continue;
    report.suites.push_back(run_suite(name, fn(opts), opts.workers));
  }
  return report;
}

}
