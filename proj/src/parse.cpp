#include <cctype>
#include <string>

#include "loopalg/errors.hpp"
#include "loopalg/poly.hpp"

namespace loopalg {
namespace {

enum class Mode { Ambient, Indexed };

// Recursive descent over
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' integer)?
//   primary := literal | variable | '(' expr ')'
class Parser {
 public:
  Parser(std::string_view text, Mode mode, int d) : text_(text), mode_(mode), d_(d) {}

  Poly parse() {
    skip_space();
    if (at_end()) throw parse_error("empty polynomial", pos_);
    Poly p = expr();
    skip_space();
    if (!at_end()) throw parse_error(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return p;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool peek_digit() const {
    return !at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (peek_digit()) ++pos_;
    if (start == pos_) throw parse_error("expected integer", pos_);
    return std::string(text_.substr(start, pos_ - start));
  }

  Poly expr() {
    Poly p = term();
    for (;;) {
      if (accept('+')) {
        p += term();
      } else if (accept('-')) {
        p -= term();
      } else {
        return p;
      }
    }
  }

  Poly term() {
    Poly p = unary();
    while (accept('*')) p *= unary();
    return p;
  }

  Poly unary() {
    if (accept('-')) return -unary();
    return power();
  }

  Poly power() {
    Poly base = primary();
    if (accept('^')) {
      skip_space();
      const std::size_t at = pos_;
      Integer e(digits());
      if (e <= 0) throw parse_error("exponent must be a positive integer", at);
      if (!e.fits_uint_p()) throw parse_error("exponent too large", at);
      return pow(base, static_cast<std::uint32_t>(e.get_ui()));
    }
    return base;
  }

  Poly primary() {
    skip_space();
    if (at_end()) throw parse_error("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!accept(')')) throw parse_error("expected ')'", pos_);
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return literal();
    if (std::isalpha(static_cast<unsigned char>(c))) return variable();
    throw parse_error(std::string("unexpected '") + c + "'", pos_);
  }

  Poly literal() {
    Integer num(digits());
    if (mode_ == Mode::Indexed && !at_end() && text_[pos_] == '/') {
      ++pos_;
      const std::size_t at = pos_;
      Integer den(digits());
      if (den == 0) throw parse_error("zero denominator", at);
      Rational q(num, den);
      q.canonicalize();
      return Poly(q);
    }
    return Poly(Rational(num));
  }

  std::int64_t signed_index() {
    const std::size_t at = pos_;
    bool negative = false;
    if (!at_end() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    Integer j(digits());
    if (!j.fits_slong_p()) throw parse_error("Laurent index out of range", at);
    return negative ? -j.get_si() : j.get_si();
  }

  Poly variable() {
    const std::size_t start = pos_;
    const char head = text_[pos_++];
    if (head == 'y' && mode_ == Mode::Indexed) {
      if (at_end() || text_[pos_] != '_') throw parse_error("expected '_' after y", pos_);
      ++pos_;
      return Poly(VarRef::y(signed_index()));
    }
    if (head != 'x' || !peek_digit()) {
      std::size_t end = pos_;
      while (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) ++end;
      throw unknown_variable_error("unknown variable '" + std::string(text_.substr(start, end - start)) +
                                   "' at position " + std::to_string(start));
    }
    Integer coord(digits());
    if (!at_end() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      std::size_t end = pos_;
      while (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) ++end;
      throw unknown_variable_error("unknown variable '" + std::string(text_.substr(start, end - start)) +
                                   "' at position " + std::to_string(start));
    }
    const bool indexed = !at_end() && text_[pos_] == '_';
    if (indexed && mode_ == Mode::Ambient)
      throw parse_error("Laurent-indexed variables are not allowed in a hypersurface", pos_);
    if (coord < 1 || (mode_ == Mode::Ambient && coord > d_) || !coord.fits_sint_p()) {
      throw unknown_variable_error("unknown variable 'x" + coord.get_str() + "' at position " +
                                   std::to_string(start) + " (dimension " + std::to_string(d_) + ")");
    }
    const int i = static_cast<int>(coord.get_si());
    if (!indexed) return Poly(VarRef::ambient(i));
    ++pos_;
    return Poly(VarRef::x(i, signed_index()));
  }

  std::string_view text_;
  Mode mode_;
  int d_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, int d) {
  if (d < 1) throw dimension_error("ambient dimension must be at least 1, got " + std::to_string(d));
  return Parser(text, Mode::Ambient, d).parse();
}

Poly parse_indexed_poly(std::string_view text) { return Parser(text, Mode::Indexed, 0).parse(); }

}  // namespace loopalg
