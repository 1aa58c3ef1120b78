#include "quasihom/parse.hpp"

#include <cctype>

namespace quasihom {

namespace {

constexpr unsigned kMaxExponent = 64;

class Parser {
 public:
  Parser(std::string_view text, const ParamMap& params) : text_(text), params_(params) {}

  Poly parse() {
    Poly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly acc;
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = factor();
    while (true) {
      if (accept('*')) {
        acc = acc * factor();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        Poly d = factor();
        if (!d.is_constant()) throw ParseError("division by a non-constant expression", at);
        if (d.is_zero()) throw ParseError("division by zero", at);
        acc *= Rational(1) / d.constant();
      } else {
        return acc;
      }
    }
  }

  Poly factor() {
    Poly b = base();
    if (!accept('^')) return b;
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '-') fail("negative exponent");
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected a non-negative integer exponent");
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == '/')) fail("non-integer exponent");
    const std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 3 || std::stoul(digits) > kMaxExponent) {
      throw ParseError("exponent too large", start);
    }
    return b.pow(static_cast<unsigned>(std::stoul(digits)));
  }

  Poly base() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '.') fail("decimal literals are not supported");
      return Poly(Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string_view name = text_.substr(start, pos_ - start);
      for (int v = 0; v < 3; ++v) {
        if (name == kCoordNames[v]) return Poly::var(static_cast<Coord>(v));
      }
      auto it = params_.find(name);
      if (it == params_.end()) throw ParseError("unknown identifier '" + std::string(name) + "'", start);
      return Poly(it->second);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const ParamMap& params_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_expr(std::string_view text, const ParamMap& params) { return Parser(text, params).parse(); }

}  // namespace quasihom
