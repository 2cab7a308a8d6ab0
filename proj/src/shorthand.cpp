#include "mst/shorthand.hpp"

#include <cctype>
#include <charconv>
#include <regex>

#include "mst/errors.hpp"

namespace mst {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  RationalFn parse_all() {
    RationalFn f = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return f;
  }

  RationalFn expr() {
    skip_ws();
    bool negate = false;
    if (peek() == '+' || peek() == '-') negate = s_[pos_++] == '-';
    RationalFn acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip_ws();
      const char c = peek();
      if (c != '+' && c != '-') return acc;
      ++pos_;
      const RationalFn rhs = term();
      acc = c == '+' ? acc + rhs : acc - rhs;
    }
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  std::size_t pos() const { return pos_; }
  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

 private:
  static bool starts_primary(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == 'z' || c == 'i' || c == '(';
  }

  RationalFn term() {
    RationalFn acc = power();
    for (;;) {
      skip_ws();
      const char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * power();
      } else if (c == '/') {
        ++pos_;
        const std::size_t at = pos_;
        const RationalFn d = power();
        if (d.is_zero()) throw ParseError("division by zero", at);
        acc = acc / d;
      } else if (starts_primary(c)) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  RationalFn power() {
    skip_ws();
    const bool is_z = peek() == 'z';
    RationalFn base = primary();
    skip_ws();
    if (peek() != '^') return base;
    ++pos_;
    skip_ws();
    bool neg = false;
    if (peek() == '+' || peek() == '-') neg = s_[pos_++] == '-';
    const int k = integer();
    if (is_z) return RationalFn::monomial(neg ? -k : k);
    RationalFn out = RationalFn::constant(1.0);
    for (int i = 0; i < k; ++i) out = out * base;
    if (neg) {
      if (out.is_zero()) fail("negative power of zero");
      out = out.inverse();
    }
    return out;
  }

  RationalFn primary() {
    skip_ws();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      RationalFn inner = expr();
      expect(')');
      return inner;
    }
    if (c == 'z') {
      ++pos_;
      return RationalFn::monomial(1);
    }
    if (c == 'i') {
      ++pos_;
      return RationalFn::constant(cplx(0.0, 1.0));
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const double v = number();
      if (peek() == 'i') {
        ++pos_;
        return RationalFn::constant(cplx(0.0, v));
      }
      return RationalFn::constant(v);
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  double number() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (peek() == '.') {
      ++pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    if (peek() == 'e' || peek() == 'E') {
      std::size_t p = pos_ + 1;
      if (p < s_.size() && (s_[p] == '+' || s_[p] == '-')) ++p;
      if (p < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p]))) {
        pos_ = p;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      }
    }
    double v = 0.0;
    const auto r = std::from_chars(s_.data() + start, s_.data() + pos_, v);
    if (r.ec != std::errc() || r.ptr != s_.data() + pos_) throw ParseError("malformed number", start);
    return v;
  }

  int integer() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    int v = 0;
    const auto r = std::from_chars(s_.data() + start, s_.data() + pos_, v);
    if (start == pos_ || r.ec != std::errc()) throw ParseError("expected an integer exponent", start);
    return v;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

const std::regex kPower(R"(^\s*z\s*(\^\s*(\d+))?\s*$)");
const std::regex kBlaschke(R"(^\s*blaschke\s*\()");

bool looks_blaschke(const std::string& s) {
  return std::regex_search(s, kPower) || std::regex_search(s, kBlaschke);
}

}  // namespace

RationalFn parse_rational_expression(const std::string& s) {
  Parser p(s);
  return p.parse_all();
}

BlaschkeProduct parse_blaschke_shorthand(const std::string& s) {
  std::smatch m;
  if (std::regex_match(s, m, kPower)) return BlaschkeProduct::power(m[2].matched ? std::stoi(m[2].str()) : 1);
  if (!std::regex_search(s, m, kBlaschke)) throw ParseError("expected z^n or blaschke(...)", 0);

  const std::size_t open = static_cast<std::size_t>(m.length(0)) - 1;
  const std::size_t close = s.rfind(')');
  if (close == std::string::npos || close < open) throw ParseError("missing ')'", s.size());
  for (std::size_t i = close + 1; i < s.size(); ++i)
    if (!std::isspace(static_cast<unsigned char>(s[i]))) throw ParseError("trailing characters after ')'", i);

  std::vector<cplx> zeros;
  std::size_t start = open + 1;
  const std::string body = s.substr(start, close - start);
  if (body.find_first_not_of(" \t") == std::string::npos) return BlaschkeProduct();
  while (start <= close) {
    std::size_t comma = s.find(',', start);
    if (comma == std::string::npos || comma > close) comma = close;
    const std::string arg = s.substr(start, comma - start);
    RationalFn v;
    try {
      v = parse_rational_expression(arg);
    } catch (const ParseError& e) {
      throw ParseError("bad Blaschke zero \"" + arg + "\"", start + e.position());
    }
    if (!v.is_polynomial() || v.num().degree() > 0) throw ParseError("Blaschke zero must be a constant", start);
    zeros.push_back(v.num()[0]);
    start = comma + 1;
  }
  return BlaschkeProduct(std::move(zeros));
}

std::variant<BlaschkeProduct, RationalFn> parse_shorthand(const std::string& s) {
  if (looks_blaschke(s)) return parse_blaschke_shorthand(s);
  return parse_rational_expression(s);
}

}  // namespace mst
