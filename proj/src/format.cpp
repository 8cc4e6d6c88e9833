#include "schubert/format.hpp"

#include <algorithm>
#include <sstream>
#include <utility>
#include <vector>

#include "schubert/parse.hpp"

namespace schubert {

using nlohmann::json;

namespace {

constexpr long long kJsonIntCap = 1000000;

std::string monomial_text(const Exponents& exps, bool latex) {
  std::string out;
  for (size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (!latex && !out.empty()) out += "*";
    out += latex ? "e_" + std::to_string(i + 1) : "e" + std::to_string(i + 1);
    if (exps[i] > 1)
      out += latex ? "^{" + std::to_string(exps[i]) + "}"
                   : "^" + std::to_string(exps[i]);
  }
  return out;
}

// Joins (sign, magnitude-ish body) pieces as "a - b + c".
std::string join_signed(const std::vector<std::pair<bool, std::string>>& v) {
  if (v.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i == 0)
      out += v[i].first ? "-" : "";
    else
      out += v[i].first ? " - " : " + ";
    out += v[i].second;
  }
  return out;
}

std::string ring_text(const RingElement& p, bool latex) {
  std::vector<std::pair<bool, std::string>> parts;
  const auto& terms = p.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [exps, c] = *it;
    Int a = c < 0 ? Int(-c) : c;
    std::string mono = monomial_text(exps, latex);
    std::string body;
    if (mono.empty())
      body = a.str();
    else if (a == 1)
      body = mono;
    else
      body = a.str() + (latex ? "" : "*") + mono;
    parts.emplace_back(c < 0, std::move(body));
  }
  return join_signed(parts);
}

std::string partition_latex(const Partition& lam) {
  if (lam.length() == 0) return "\\varnothing";
  return to_text(lam);
}

std::string schur_text(const SchurExpansion& x, bool latex) {
  std::vector<std::pair<bool, std::string>> parts;
  for (const auto& [lam, c] : x.terms()) {
    Int a = c < 0 ? Int(-c) : c;
    std::string sym = latex ? "\\Delta_{" + partition_latex(lam) + "}"
                            : (lam.length() == 0 ? "S()" : "S" + to_text(lam));
    std::string body = a == 1 ? sym : a.str() + (latex ? "" : "*") + sym;
    parts.emplace_back(c < 0, std::move(body));
  }
  return join_signed(parts);
}

std::string bound_text(int v) {
  if (v >= kNoBound) return "inf";
  if (v <= -kNoBound) return "-inf";
  return std::to_string(v);
}

// Entries resorted for display: w descending, then z ascending.
std::vector<std::pair<std::pair<int, int>, const RingElement*>> display_order(
    const LaurentWindow& s) {
  std::vector<std::pair<std::pair<int, int>, const RingElement*>> v;
  for (const auto& [k, c] : s.entries()) v.push_back({k, &c});
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    if (a.first.second != b.first.second)
      return a.first.second > b.first.second;
    return a.first.first < b.first.first;
  });
  return v;
}

std::string power_latex(const char* var, int e) {
  if (e == 0) return "";
  std::string out = var;
  if (e != 1) out += "^{" + std::to_string(e) + "}";
  return out;
}

}

std::string to_text(const RingElement& p) { return ring_text(p, false); }

std::string to_text(const SchurExpansion& x) { return schur_text(x, false); }

std::string to_text(const LaurentWindow& s) {
  const Window& w = s.window();
  std::ostringstream out;
  out << "window: zlo=" << bound_text(w.zlo) << " zhi=" << bound_text(w.zhi)
      << " wlo=" << bound_text(w.wlo) << " whi=" << bound_text(w.whi);
  for (const auto& [k, c] : display_order(s))
    out << "\nz^" << k.first << " w^" << k.second << ": "
        << ring_text(*c, false);
  return out.str();
}

std::string to_latex(const RingElement& p) { return ring_text(p, true); }

std::string to_latex(const SchurExpansion& x) { return schur_text(x, true); }

std::string to_latex(const LaurentWindow& s) {
  std::vector<std::pair<bool, std::string>> parts;
  for (const auto& [k, c] : display_order(s)) {
    std::string mono = power_latex("z", k.first) + power_latex("w", k.second);
    bool neg = false;
    std::string coeff;
    if (c->terms().size() == 1) {
      RingElement a = *c;
      if (a.terms().begin()->second < 0) {
        neg = true;
        a = -a;
      }
      coeff = ring_text(a, true);
      if (coeff == "1" && !mono.empty()) coeff = "";
    } else {
      coeff = "\\left(" + ring_text(*c, true) + "\\right)";
    }
    std::string body = coeff + (coeff.empty() || mono.empty() ? "" : " ") + mono;
    parts.emplace_back(neg, std::move(body));
  }
  return join_signed(parts);
}

json to_json(const RingElement& p) {
  json out = json::array();
  const auto& terms = p.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it)
    out.push_back({{"coeff", it->second.str()}, {"exps", it->first}});
  return out;
}

json to_json(const Partition& lam) {
  json out = json::array();
  for (int k = 1; k <= lam.length(); ++k) out.push_back(lam.part(k));
  return out;
}

json to_json(const SchurExpansion& x) {
  json terms = json::array();
  for (const auto& [lam, c] : x.terms())
    terms.push_back({{"coeff", c.str()}, {"partition", to_json(lam)}});
  json n;
  if (x.box()) n = *x.box();
  return {{"n", n}, {"r", x.rank()}, {"terms", terms}};
}

json to_json(const LaurentWindow& s) {
  const Window& w = s.window();
  auto bound = [](int v) -> json {
    if (v >= kNoBound || v <= -kNoBound) return nullptr;
    return v;
  };
  json entries = json::array();
  for (const auto& [k, c] : s.entries())
    entries.push_back(
        {{"value", to_json(c)}, {"w", k.second}, {"z", k.first}});
  return {{"entries", entries},
          {"window",
           {bound(w.zlo), bound(w.zhi), bound(w.wlo), bound(w.whi)}}};
}

json to_json(const GlMatrix& A) {
  json entries = json::array();
  for (const auto& [ij, a] : A.entries)
    entries.push_back({{"a", a.str()}, {"i", ij.first}, {"j", ij.second}});
  json n;
  if (A.n) n = *A.n;
  return {{"entries", entries}, {"n", n}};
}

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw ParseError("json: " + what);
}

long long int_field(const json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  long long v = j.get<long long>();
  if (v < -kJsonIntCap || v > kJsonIntCap)
    bad(std::string(what) + " out of range");
  return v;
}

Int coeff_field(const json& j) {
  if (!j.is_string()) bad("coeff must be a decimal string");
  std::string s = j.get<std::string>();
  size_t start = s.size() > 0 && s[0] == '-' ? 1 : 0;
  if (s.size() == start) bad("empty coefficient");
  for (size_t i = start; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') bad("coefficient is not a decimal integer");
  return Int(s);
}

const json& key(const json& j, const char* name) {
  if (!j.is_object()) bad("expected an object");
  auto it = j.find(name);
  if (it == j.end()) bad(std::string("missing key \"") + name + "\"");
  return *it;
}

}

RingElement ring_from_json(const json& j, int arity) {
  if (arity < 0) bad("negative arity");
  if (!j.is_array()) bad("ring element must be an array of terms");
  RingElement out = RingElement::zero(arity);
  for (const auto& t : j) {
    const json& je = key(t, "exps");
    if (!je.is_array() || static_cast<int>(je.size()) != arity)
      bad("exps must be an array of length " + std::to_string(arity));
    Exponents exps;
    for (const auto& e : je) {
      long long v = int_field(e, "exponent");
      if (v < 0) bad("negative exponent");
      exps.push_back(static_cast<int>(v));
    }
    out.add_term(exps, coeff_field(key(t, "coeff")));
  }
  return out;
}

Partition partition_from_json(const json& j) {
  if (!j.is_array()) bad("partition must be an array");
  std::vector<int> parts;
  for (const auto& e : j)
    parts.push_back(static_cast<int>(int_field(e, "part")));
  try {
    return Partition(std::move(parts));
  } catch (const std::invalid_argument& e) {
    bad(e.what());
  }
}

SchurExpansion schur_from_json(const json& j) {
  long long r = int_field(key(j, "r"), "r");
  const json& jn = key(j, "n");
  std::optional<int> n;
  if (!jn.is_null()) n = static_cast<int>(int_field(jn, "n"));
  const json& jt = key(j, "terms");
  if (!jt.is_array()) bad("terms must be an array");
  try {
    SchurExpansion out(static_cast<int>(r), n);
    for (const auto& t : jt)
      out.add(partition_from_json(key(t, "partition")),
              coeff_field(key(t, "coeff")));
    return out;
  } catch (const std::invalid_argument& e) {
    bad(e.what());
  }
}

LaurentWindow series_from_json(const json& j, int arity) {
  const json& jw = key(j, "window");
  if (!jw.is_array() || jw.size() != 4) bad("window must be [zlo,zhi,wlo,whi]");
  auto bound = [&jw](int idx, int missing) {
    if (jw[idx].is_null()) return missing;
    return static_cast<int>(int_field(jw[idx], "window bound"));
  };
  Window w{bound(0, -kNoBound), bound(1, kNoBound), bound(2, -kNoBound),
           bound(3, kNoBound)};
  LaurentWindow out(w);
  const json& je = key(j, "entries");
  if (!je.is_array()) bad("entries must be an array");
  for (const auto& t : je) {
    int ze = static_cast<int>(int_field(key(t, "z"), "z"));
    int we = static_cast<int>(int_field(key(t, "w"), "w"));
    if (!w.in_rectangle(ze, we)) bad("entry outside the window rectangle");
    out.add(ze, we, ring_from_json(key(t, "value"), arity));
  }
  return out;
}

GlMatrix matrix_from_json(const json& j) {
  const json& jn = key(j, "n");
  std::optional<int> n;
  if (!jn.is_null()) n = static_cast<int>(int_field(jn, "n"));
  const json& je = key(j, "entries");
  if (!je.is_array()) bad("entries must be an array");
  try {
    GlMatrix A(n);
    for (const auto& t : je)
      A.add(static_cast<int>(int_field(key(t, "i"), "i")),
            static_cast<int>(int_field(key(t, "j"), "j")),
            coeff_field(key(t, "a")));
    return A;
  } catch (const std::invalid_argument& e) {
    bad(e.what());
  }
}

}
