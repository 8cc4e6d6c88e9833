#pragma once

#include <string>

#include "json.hpp"
#include "schubert/action.hpp"

namespace schubert {

// Plain-text renderings: "e1^2*e2 - e2^2", "S(2,1) - 2*S(3)", and for a
// series one "z^a w^b: poly" line per entry (w descending, z ascending)
// under a window header.
std::string to_text(const RingElement&);
std::string to_text(const SchurExpansion&);
std::string to_text(const LaurentWindow&);

std::string to_latex(const RingElement&);
std::string to_latex(const SchurExpansion&);
std::string to_latex(const LaurentWindow&);

// JSON shapes (coefficients are decimal strings, term order is the
// canonical order of the object, so emit o parse o emit is the identity on
// bytes):
//   ring      [{"coeff":"-2","exps":[1,1]}, ...]          leading term first
//   partition [2,1]
//   schur     {"n":4|null,"r":2,"terms":[{"coeff":"1","partition":[2,1]}]}
//   series    {"entries":[{"value":<ring>,"w":-1,"z":0}],
//              "window":[0,4,null,0]}                      null = unbounded
//   matrix    {"entries":[{"a":"1","i":0,"j":2}],"n":4|null}
nlohmann::json to_json(const RingElement&);
nlohmann::json to_json(const Partition&);
nlohmann::json to_json(const SchurExpansion&);
nlohmann::json to_json(const LaurentWindow&);
nlohmann::json to_json(const GlMatrix&);

// Inverses of the emitters above; all throw ParseError on malformed input.
RingElement ring_from_json(const nlohmann::json&, int arity);
Partition partition_from_json(const nlohmann::json&);
SchurExpansion schur_from_json(const nlohmann::json&);
LaurentWindow series_from_json(const nlohmann::json&, int arity);
GlMatrix matrix_from_json(const nlohmann::json&);

}
