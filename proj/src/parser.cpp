/*
   Copyright 2026 cmdefect contributors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "cmdefect/parser.hpp"

#include <cctype>

namespace cmdefect {

namespace {

constexpr std::uint32_t kMaxExponent = 1u << 20;

struct Lexer {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t line = 1;
  std::size_t col = 1;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) advance();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool done() { return peek() == '\0'; }
  void advance() {
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line, col); }
};

class PolyParser {
 public:
  PolyParser(std::string_view text, RingPtr ring) : lex_{text}, ring_(std::move(ring)) {}

  Polynomial parse() {
    lex_.skip_ws();
    if (lex_.done()) lex_.fail("empty polynomial");
    Polynomial p = expression();
    if (!lex_.done()) lex_.fail(std::string("unexpected character '") + lex_.peek() + "'");
    return p;
  }

 private:
  Polynomial expression() {
    bool negate = false;
    char c = lex_.peek();
    if (c == '+' || c == '-') {
      negate = (c == '-');
      lex_.advance();
    }
    Polynomial acc = product();
    if (negate) acc = -acc;
    while (true) {
      c = lex_.peek();
      if (c != '+' && c != '-') break;
      lex_.advance();
      Polynomial rhs = product();
      acc = (c == '+') ? acc + rhs : acc - rhs;
    }
    return acc;
  }

  Polynomial product() {
    Polynomial acc = power();
    while (true) {
      char c = lex_.peek();
      if (c == '*') {
        lex_.advance();
        acc = acc * power();
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
                 std::isdigit(static_cast<unsigned char>(c)) || c == '(') {
        acc = acc * power();  // juxtaposition
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial power() {
    Polynomial base = atom();
    if (lex_.peek() == '^') {
      lex_.advance();
      const std::uint32_t e = natural("exponent is not a non-negative integer");
      Polynomial acc = Polynomial::constant(ring_, 1);
      for (std::uint32_t i = 0; i < e; ++i) acc = acc * base;
      return acc;
    }
    return base;
  }

  Polynomial atom() {
    char c = lex_.peek();
    if (c == '(') {
      lex_.advance();
      Polynomial inner = expression();
      if (lex_.peek() != ')') lex_.fail("expected ')'");
      lex_.advance();
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Polynomial::constant(ring_, integer_literal());
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const auto l = lex_.line, col = lex_.col;
      std::string name = identifier();
      auto idx = ring_->variable_index(name);
      if (!idx) throw ParseError("unknown variable '" + name + "'", l, col);
      return Polynomial::variable(ring_, *idx);
    }
    lex_.fail(c == '\0' ? "unexpected end of input" : std::string("unexpected character '") + c + "'");
  }

  mpq_class integer_literal() {
    lex_.skip_ws();
    std::string digits;
    while (lex_.pos < lex_.text.size() &&
           std::isdigit(static_cast<unsigned char>(lex_.text[lex_.pos]))) {
      digits += lex_.text[lex_.pos];
      lex_.advance();
    }
    return mpq_class(mpz_class(digits, 10));
  }

  std::uint32_t natural(const std::string& err) {
    lex_.skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(lex_.peek()))) lex_.fail(err);
    mpq_class v = integer_literal();
    mpz_class n = v.get_num();
    if (n > kMaxExponent) lex_.fail("exponent too large");
    return static_cast<std::uint32_t>(n.get_ui());
  }

  std::string identifier() {
    std::string s;
    while (lex_.pos < lex_.text.size()) {
      char c = lex_.text[lex_.pos];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        s += c;
        lex_.advance();
      } else {
        break;
      }
    }
    return s;
  }

  Lexer lex_;
  RingPtr ring_;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  return PolyParser(text, ring).parse();
}

}  // namespace cmdefect
