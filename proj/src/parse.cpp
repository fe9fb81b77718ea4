#include "fsing/parse.hpp"

#include <cctype>

namespace fsing {

namespace {

constexpr std::uint64_t kMaxExponent = 65535;

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Parser {
 public:
  Parser(std::string_view text, QRingPtr ring) : s_(text), ring_(std::move(ring)) {}

  QPoly run() {
    skip();
    if (pos_ == s_.size()) throw ParseError("empty expression", pos_);
    QPoly r = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return r;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  QPoly expr() {
    QPoly acc = term();
    while (true) {
      if (eat('+')) acc = acc + term();
      else if (eat('-')) acc = acc - term();
      else return acc;
    }
  }

  QPoly term() {
    QPoly acc = unary();
    while (true) {
      if (eat('*')) {
        acc = acc * unary();
      } else if (eat('/')) {
        std::size_t at = pos_;
        QPoly d = unary();
        if (!d.is_constant()) throw ParseError("division by a non-constant", at);
        if (d.is_zero()) throw ParseError("division by zero", at);
        acc = acc.scaled(Fraction(1) / d.constant_term());
      } else {
        return acc;
      }
    }
  }

  QPoly unary() {
    if (eat('-')) return -unary();
    return power();
  }

  QPoly power() {
    QPoly base = atom();
    if (!eat('^')) return base;
    skip();
    std::size_t at = pos_;
    if (pos_ == s_.size() || !digit(s_[pos_])) throw ParseError("expected a nonnegative integer exponent", at);
    std::uint64_t n = 0;
    while (pos_ < s_.size() && digit(s_[pos_])) {
      n = n * 10 + static_cast<std::uint64_t>(s_[pos_++] - '0');
      if (n > kMaxExponent) throw ParseError("exponent too large", at);
    }
    return base.pow(n);
  }

  QPoly atom() {
    skip();
    if (pos_ == s_.size()) throw ParseError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      QPoly inner = expr();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (digit(c)) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && digit(s_[pos_])) ++pos_;
      BigInt v(std::string(s_.substr(start, pos_ - start)));
      return QPoly::constant(ring_, Fraction(v));
    }
    if (ident_start(c)) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      const auto& names = ring_->names();
      for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return QPoly::variable(ring_, i);
      throw ParseError("unknown variable '" + name + "'", start);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view s_;
  QRingPtr ring_;
  std::size_t pos_ = 0;
};

}  // namespace

QPoly parse_poly(std::string_view text, const QRingPtr& ring) { return Parser(text, ring).run(); }

Poly parse_poly(std::string_view text, const FpRingPtr& ring) {
  auto q = make_q_ring(ring->arity(), ring->names());
  return reduce_mod_p(parse_poly(text, q), ring);
}

QPoly parse_poly(std::string_view text, const std::vector<std::string>& names) {
  return parse_poly(text, make_q_ring(names.size(), names));
}

std::vector<std::string> scan_variables(std::string_view text) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < text.size();) {
    if (ident_start(text[i])) {
      std::size_t start = i;
      while (i < text.size() && ident_char(text[i])) ++i;
      std::string name(text.substr(start, i - start));
      bool seen = false;
      for (const auto& n : out) seen = seen || n == name;
      if (!seen) out.push_back(name);
    } else {
      ++i;
    }
  }
  return out;
}

MonomialIdeal parse_monomial_gens(std::string_view text, const std::vector<std::string>& names) {
  auto ring = make_q_ring(names.size(), names);
  std::vector<ExponentVector> gens;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    QPoly g(ring);
    try {
      g = parse_poly(text.substr(start, comma - start), ring);
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()).substr(0, std::string(e.what()).rfind(" at position")),
                       start + e.position);
    }
    if (!g.is_monomial() || !(g.terms()[0].coeff == Fraction(1)))
      throw ParseError("generator is not a monic monomial", start);
    gens.push_back(g.terms()[0].exp);
    start = comma + 1;
  }
  return MonomialIdeal(names.size(), gens);
}

}  // namespace fsing
