#include "pbv/expr.hpp"

#include "pbv/errors.hpp"

#include <cctype>
#include <optional>

namespace pbv {

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t line;
  std::size_t column;

  Cursor(std::string_view t, std::size_t l, std::size_t c) : text(t), line(l), column(c) {}

  bool eof() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  void advance() {
    if (text[pos] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
    ++pos;
  }

  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, column); }

  bool accept(char c) {
    skip_ws();
    if (!eof() && peek() == c) {
      advance();
      return true;
    }
    return false;
  }

  void expect(char c) {
    skip_ws();
    if (eof() || peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }
};

class PolyParser {
public:
  PolyParser(Cursor& cur, const std::vector<std::string>& names) : cur_(cur), names_(names) {}

  Poly parse_expr() {
    Poly result = parse_term(false);
    for (;;) {
      cur_.skip_ws();
      if (cur_.eof()) break;
      char c = cur_.peek();
      if (c == '+') {
        cur_.advance();
        result += parse_term(false);
      } else if (c == '-') {
        cur_.advance();
        result += parse_term(true);
      } else {
        break;
      }
    }
    return result;
  }

private:
  Poly parse_term(bool negated) {
    // unary minus binds more loosely than '^': -x^2 = -(x^2)
    for (;;) {
      cur_.skip_ws();
      if (!cur_.eof() && cur_.peek() == '-') {
        cur_.advance();
        negated = !negated;
      } else {
        break;
      }
    }
    Poly result = parse_factor();
    for (;;) {
      cur_.skip_ws();
      if (!cur_.eof() && cur_.peek() == '*') {
        cur_.advance();
        result = result * parse_factor();
      } else {
        break;
      }
    }
    return negated ? -result : result;
  }

  Poly parse_factor() {
    Poly base = parse_atom();
    cur_.skip_ws();
    if (!cur_.eof() && cur_.peek() == '^') {
      cur_.advance();
      unsigned e = parse_exponent();
      Poly r = Poly::constant(1, names_.size());
      for (unsigned i = 0; i < e; ++i) r = r * base;
      return r;
    }
    return base;
  }

  Poly parse_atom() {
    cur_.skip_ws();
    if (cur_.eof()) cur_.fail("unexpected end of expression");
    char c = cur_.peek();
    if (c == '(') {
      cur_.advance();
      Poly inner = parse_expr();
      cur_.expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_name();
    cur_.fail("unexpected character in expression");
  }

  Poly parse_number() {
    Integer num = parse_integer();
    cur_.skip_ws();
    if (!cur_.eof() && cur_.peek() == '/') {
      cur_.advance();
      cur_.skip_ws();
      std::size_t line = cur_.line, col = cur_.column;
      if (cur_.eof() || !std::isdigit(static_cast<unsigned char>(cur_.peek())))
        throw ParseError("expected denominator", line, col);
      Integer den = parse_integer();
      if (den == 0) throw ParseError("zero denominator", line, col);
      return Poly::constant(Rational(num, den), names_.size());
    }
    return Poly::constant(Rational(num), names_.size());
  }

  Integer parse_integer() {
    Integer v = 0;
    while (!cur_.eof() && std::isdigit(static_cast<unsigned char>(cur_.peek()))) {
      v = v * 10 + (cur_.peek() - '0');
      cur_.advance();
    }
    return v;
  }

  unsigned parse_exponent() {
    cur_.skip_ws();
    if (cur_.eof() || !std::isdigit(static_cast<unsigned char>(cur_.peek())))
      cur_.fail("expected non-negative integer exponent");
    unsigned v = 0;
    while (!cur_.eof() && std::isdigit(static_cast<unsigned char>(cur_.peek()))) {
      v = v * 10 + static_cast<unsigned>(cur_.peek() - '0');
      cur_.advance();
    }
    return v;
  }

  Poly parse_name() {
    std::size_t line = cur_.line, col = cur_.column;
    std::string name;
    while (!cur_.eof() &&
           (std::isalnum(static_cast<unsigned char>(cur_.peek())) || cur_.peek() == '_')) {
      name += cur_.peek();
      cur_.advance();
    }
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return Poly::generator(names_.size(), i);
    throw ParseError("undeclared generator '" + name + "'", line, col);
  }

  Cursor& cur_;
  const std::vector<std::string>& names_;
};

} // namespace

Poly parse_poly(std::string_view text, const std::vector<std::string>& gen_names, std::size_t line,
                std::size_t column) {
  Cursor cur(text, line, column);
  PolyParser parser(cur, gen_names);
  Poly p = parser.parse_expr();
  cur.skip_ws();
  if (!cur.eof()) cur.fail("trailing characters in expression");
  return p;
}

} // namespace pbv
