#pragma once

#include <stdexcept>
#include <string>

#include "schubert/partition.hpp"
#include "schubert/ring.hpp"

namespace schubert {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parses an integer polynomial expression in e1..er and h1, h2, ... with
// +, -, *, ^ and parentheses; h-symbols are rewritten to e-polynomials
// immediately. Examples: "e1^2*e2 - e2^2", "h2*(h1 - e1) + 3".
RingElement parse_ring_element(const std::string& text, int r);

// "2,2", "(2,2)", "0" or "" for the empty partition.
Partition parse_partition(const std::string& text);

}
