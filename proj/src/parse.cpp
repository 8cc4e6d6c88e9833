#include "schubert/parse.hpp"

#include <cctype>

#include "schubert/hseq.hpp"

namespace schubert {

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;
  HSequence H;

  explicit Parser(const std::string& t, int r) : text(t), H(r) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("parse error at offset " + std::to_string(pos) + ": " +
                     what);
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  int parse_uint() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail("expected a number");
    long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > 1000000) fail("number too large");
      ++pos;
    }
    return static_cast<int>(v);
  }

  RingElement parse_primary() {
    skip_ws();
    if (eat('(')) {
      RingElement p = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (eat('-')) return -parse_primary();
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)))
      return RingElement::constant(H.arity(), parse_uint());
    if (c == 'e' || c == 'h') {
      ++pos;
      int k = parse_uint();
      if (c == 'e') {
        if (k < 1 || k > H.arity())
          fail("e" + std::to_string(k) + " is not a generator for r = " +
               std::to_string(H.arity()));
        return RingElement::elementary(H.arity(), k);
      }
      if (k < 1) fail("h index must be >= 1");
      return H.h(k);
    }
    fail("expected a number, e<k>, h<k> or '('");
  }

  RingElement parse_factor() {
    RingElement p = parse_primary();
    if (eat('^')) {
      int k = parse_uint();
      if (k > 64) fail("exponent too large");
      RingElement q = RingElement::one(H.arity());
      for (int i = 0; i < k; ++i) q = q * p;
      return q;
    }
    return p;
  }

  RingElement parse_term() {
    RingElement p = parse_factor();
    while (eat('*')) p = p * parse_factor();
    return p;
  }

  RingElement parse_expr() {
    RingElement p = parse_term();
    while (true) {
      if (eat('+'))
        p += parse_term();
      else if (eat('-'))
        p -= parse_term();
      else
        return p;
    }
  }
};

}

RingElement parse_ring_element(const std::string& text, int r) {
  if (r < 0) throw std::invalid_argument("parse: negative rank");
  Parser parser(text, r);
  RingElement p = parser.parse_expr();
  parser.skip_ws();
  if (parser.pos != text.size()) parser.fail("trailing input");
  return p;
}

Partition parse_partition(const std::string& text) {
  std::string body;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) body += c;
  if (!body.empty() && body.front() == '(' && body.back() == ')')
    body = body.substr(1, body.size() - 2);
  if (body.empty() || body == "0") return Partition{};
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t comma = body.find(',', pos);
    std::string piece = body.substr(pos, comma == std::string::npos
                                             ? std::string::npos
                                             : comma - pos);
    if (piece.empty() || piece.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("partition: bad part '" + piece + "'");
    parts.push_back(std::stoi(piece));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  try {
    return Partition(std::move(parts));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

}
