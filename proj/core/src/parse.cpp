#include "lowvf/parse.hpp"

#include <cctype>

namespace lowvf {

namespace {

class Parser {
 public:
  Parser(std::string_view text, int var_count, std::string_view prefix)
      : s_(text), nvars_(var_count), prefix_(prefix) {}

  Poly run() {
    skip_ws();
    if (eof()) fail("empty polynomial");
    bool negate = consume('-');
    Poly acc = parse_term();
    if (negate) acc = -acc;
    skip_ws();
    while (!eof()) {
      std::size_t at = pos_;
      char op = s_[pos_++];
      if (op != '+' && op != '-') fail_at("expected '+' or '-'", at);
      Poly t = parse_term();
      acc = (op == '+') ? acc + t : acc - t;
      skip_ws();
    }
    return acc;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eof() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  bool consume(char c) {
    if (!eof() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const {
    throw ParseError(what, at);
  }

  bool at_digit() const {
    return !eof() && std::isdigit(static_cast<unsigned char>(peek()));
  }
  bool at_prefix() const { return s_.substr(pos_).starts_with(prefix_); }

  mpz_class parse_uint(const char* what) {
    if (!at_digit()) fail(what);
    std::string digits;
    while (at_digit()) digits += s_[pos_++];
    return mpz_class(digits);
  }

  Rational parse_coeff() {
    std::size_t at = pos_;
    mpz_class num = parse_uint("expected digit");
    skip_ws();
    if (consume('/')) {
      skip_ws();
      mpz_class den = parse_uint("expected denominator digits");
      if (den == 0) fail_at("zero denominator", at);
      Rational q(num, den);
      q.canonicalize();
      return q;
    }
    return Rational(num);
  }

  // var ['^' uint]; returns the factor as (variable index, exponent).
  std::pair<int, int> parse_factor() {
    std::size_t at = pos_;
    pos_ += prefix_.size();
    if (!at_digit()) fail("expected variable index");
    mpz_class idx = parse_uint("expected variable index");
    if (idx < 1 || idx > nvars_) fail_at("variable index out of range", at);
    int exponent = 1;
    skip_ws();
    if (consume('^')) {
      skip_ws();
      std::size_t eat = pos_;
      mpz_class e = parse_uint("expected exponent digits");
      if (e > 100000) fail_at("exponent too large", eat);
      exponent = static_cast<int>(e.get_si());
    }
    return {static_cast<int>(idx.get_si()) - 1, exponent};
  }

  Poly parse_term() {
    skip_ws();
    Rational coeff(1);
    bool have_coeff = false;
    if (at_digit()) {
      coeff = parse_coeff();
      have_coeff = true;
      skip_ws();
      if (consume('*')) {
        skip_ws();
        if (!at_prefix()) fail("expected variable after '*'");
      }
    }
    std::vector<int> exps(nvars_, 0);
    bool have_factor = false;
    skip_ws();
    while (at_prefix()) {
      auto [var, e] = parse_factor();
      exps[var] += e;
      have_factor = true;
      skip_ws();
    }
    if (!have_coeff && !have_factor) fail("expected term");
    return Poly::term(Monomial(std::move(exps)), coeff);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  int nvars_;
  std::string_view prefix_;
};

}  // namespace

Poly parse_poly(std::string_view text, int var_count, std::string_view prefix) {
  if (var_count < 1) throw std::invalid_argument("parse_poly: var_count < 1");
  return Parser(text, var_count, prefix).run();
}

}  // namespace lowvf
