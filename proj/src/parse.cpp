#include "pauto/parse.hpp"

#include <cctype>

namespace pauto {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

class Parser {
 public:
  Parser(std::string_view text, bool allow_variables) : text_(text), allow_variables_(allow_variables) {}

  Poly expression() {
    Poly result = term();
    for (;;) {
      skip_space();
      if (accept('+'))
        result += term();
      else if (accept('-'))
        result -= term();
      else
        return result;
    }
  }

  void expect(char c) {
    skip_space();
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  void expect_end() {
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
  }

  [[noreturn]] void fail(const std::string& message) const {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(message, line, column);
  }

 private:
  Poly term() {
    Poly result = unary();
    for (;;) {
      skip_space();
      if (accept('*')) {
        result *= unary();
      } else if (peek() == '/') {
        const std::size_t at = pos_;
        ++pos_;
        const Poly divisor = unary();
        if (!divisor.is_constant() || divisor.is_zero()) {
          pos_ = at;
          fail(divisor.is_zero() ? "division by zero" : "division by a non-constant polynomial");
        }
        result *= Poly(divisor.coefficient({0, 0}).inverse());
      } else {
        return result;
      }
    }
  }

  Poly unary() {
    skip_space();
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = primary();
    skip_space();
    if (!accept('^')) return base;
    skip_space();
    const Integer e = integer("exponent");
    if (!e.fits_uint_p()) fail("exponent too large");
    return base.pow(static_cast<unsigned>(e.get_ui()));
  }

  Poly primary() {
    skip_space();
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return Poly(Cyclotomic(Rational(integer("number"))));
    if (accept('(')) {
      Poly inner = expression();
      expect(')');
      return inner;
    }
    if (c == 'x') {
      ++pos_;
      if (accept('1')) return variable(Poly::x1());
      if (accept('2')) return variable(Poly::x2());
      fail("unknown variable; expected x1 or x2");
    }
    if (c == 'z') {
      ++pos_;
      expect('(');
      skip_space();
      const std::size_t at = pos_;
      const Integer m = integer("root index");
      expect(')');
      return Poly(root(m, at));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) fail("unknown identifier");
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Poly variable(Poly v) {
    if (std::isalnum(static_cast<unsigned char>(peek()))) fail("unknown variable; expected x1 or x2");
    if (!allow_variables_) fail("variables are not allowed in a scalar");
    return v;
  }

  Cyclotomic root(const Integer& m, std::size_t at) {
    if (m < 1 || !m.fits_ulong_p()) {
      pos_ = at;
      fail("root index must be a positive prime power");
    }
    std::uint64_t rest = m.get_ui();
    if (rest == 1) return Cyclotomic(1);
    unsigned p = 2;
    while (rest % p != 0) ++p;
    unsigned n = 0;
    while (rest % p == 0) {
      rest /= p;
      ++n;
    }
    if (rest != 1) {
      pos_ = at;
      fail("root index " + m.get_str() + " is not a prime power");
    }
    return Cyclotomic::zeta(p, n, 1);
  }

  Integer integer(const char* what) {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail(std::string("expected ") + what);
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void skip_space() {
    while (std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::string_view text_;
  bool allow_variables_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text) {
  Parser parser(text, true);
  Poly f = parser.expression();
  parser.expect_end();
  return f;
}

Cyclotomic parse_scalar(std::string_view text) {
  Parser parser(text, false);
  Poly f = parser.expression();
  parser.expect_end();
  return f.coefficient({0, 0});
}

PlaneEndo parse_endo(std::string_view text) {
  Parser parser(text, true);
  parser.expect('(');
  Poly f1 = parser.expression();
  parser.expect(',');
  Poly f2 = parser.expression();
  parser.expect(')');
  parser.expect_end();
  return {std::move(f1), std::move(f2)};
}

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> items;
  std::string current;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      items.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  items.push_back(current);
  return items;
}

}  // namespace pauto
