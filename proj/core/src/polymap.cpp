#include "kellerscope/polymap.hpp"

#include <cctype>
#include <string>

namespace kellerscope {

BiPoly jacobian(const PolyMap& F) {
  return F.P().partial_x() * F.Q().partial_y() - F.P().partial_y() * F.Q().partial_x();
}

KellerCertificate keller_check(const PolyMap& F) {
  KellerCertificate cert;
  cert.jacobian = jacobian(F);
  cert.is_keller = cert.jacobian.is_constant() && !cert.jacobian.is_zero();
  if (cert.is_keller) cert.constant_value = cert.jacobian.constant_value();
  return cert;
}

PolyMap compose(const PolyMap& F, const PolyMap& G) {
  return PolyMap(F.P().subst(G.P(), G.Q()), F.Q().subst(G.P(), G.Q()));
}

std::pair<Rat, Rat> evaluate(const PolyMap& F, const std::pair<Rat, Rat>& point) {
  return {F.P().eval(point.first, point.second), F.Q().eval(point.first, point.second)};
}

namespace {

class Parser {
public:
  explicit Parser(const std::string& text) : s_(text) {}

  BiPoly parse_expr_all() {
    BiPoly e = expr();
    skip_ws();
    if (pos_ < s_.size()) fail("unexpected trailing input");
    return e;
  }

  BiPoly expr() {
    skip_ws();
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    BiPoly acc = term();
    if (neg) acc = -acc;
    for (;;) {
      skip_ws();
      char c = peek();
      if (c == '+' || c == '-') {
        ++pos_;
        BiPoly t = term();
        acc = (c == '+') ? acc + t : acc - t;
      } else {
        return acc;
      }
    }
  }

private:
  const std::string& s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < s_.size(); ++i) {
      if (s_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw UsageError("parse error at line " + std::to_string(line) + ", column " +
                     std::to_string(col) + ": " + msg);
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  BiPoly term() {
    BiPoly acc = factor();
    for (;;) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        acc = acc * factor();
      } else {
        char c = peek();
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '(')
          fail("implicit multiplication is not allowed; use '*'");
        return acc;
      }
    }
  }

  BiPoly factor() {
    BiPoly b = base();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      if (peek() == '-') fail("negative exponent");
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a nonnegative integer exponent");
      long e = read_integer();
      if (e > 64) fail("exponent too large (cap 64)");
      b = b.pow(static_cast<int>(e));
    }
    return b;
  }

  BiPoly base() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      ++pos_;
      BiPoly e = expr();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      if (name == "x") return BiPoly::var_x();
      if (name == "y") return BiPoly::var_y();
      pos_ = start;
      fail("unknown variable '" + name + "' (only x and y are allowed)");
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = read_digits();
      skip_ws();
      if (peek() == '/') {
        std::size_t save = pos_;
        ++pos_;
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) {
          pos_ = save;
          fail("expected a positive integer denominator");
        }
        std::string den = read_digits();
        Rat r = Rat::parse(num + "/" + den);
        return BiPoly::constant(r);
      }
      return BiPoly::constant(Rat::parse(num));
    }
    if (c == '\0') fail("unexpected end of input");
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  long read_integer() {
    std::string d = read_digits();
    if (d.size() > 9) fail("integer literal too long for an exponent");
    return std::stol(d);
  }
};

}  // namespace

BiPoly parse_poly(const std::string& text) {
  Parser p(text);
  return p.parse_expr_all();
}

PolyMap parse_map(const std::string& text) {
  std::size_t semi = text.find(';');
  if (semi == std::string::npos)
    throw UsageError("a map needs the form \"P ; Q\" (no ';' found)");
  if (text.find(';', semi + 1) != std::string::npos)
    throw UsageError("a map needs exactly one ';'");
  BiPoly P = parse_poly(text.substr(0, semi));
  BiPoly Q = parse_poly(text.substr(semi + 1));
  return PolyMap(std::move(P), std::move(Q));
}

std::string print_poly(const BiPoly& p) { return p.str(); }

std::string print_map(const PolyMap& F) { return print_poly(F.P()) + " ; " + print_poly(F.Q()); }

}  // namespace kellerscope
