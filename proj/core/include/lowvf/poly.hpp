#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lowvf/monomial.hpp"
#include "lowvf/rational.hpp"

namespace lowvf {

// Sparse multivariate polynomial with exact rational coefficients.
// Terms are kept in graded-lex order and never store a zero coefficient,
// so equal polynomials have identical term maps. All operations are pure.
class Poly {
 public:
  using TermMap = std::map<Monomial, Rational, GradedLexLess>;

  explicit Poly(int var_count);
  static Poly constant(int var_count, const Rational& c);
  static Poly variable(int var_count, int var);  // 0-based index
  static Poly term(const Monomial& m, const Rational& c);

  int var_count() const { return var_count_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;  // -1 for the zero polynomial
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Rational coeff(const Monomial& m) const;
  Rational constant_term() const;

  Poly operator+(const Poly& other) const;
  Poly operator-(const Poly& other) const;
  Poly operator*(const Poly& other) const;
  Poly operator-() const;
  Poly scaled(const Rational& c) const;
  Poly pow(int k) const;

  // Product/power discarding all terms of total degree >= order.
  Poly mul_trunc(const Poly& other, int order) const;
  Poly pow_trunc(int k, int order) const;

  Poly truncated(int order) const;  // keep degree < order
  Poly derivative(int var) const;   // formal partial, 0-based index

  bool operator==(const Poly&) const = default;

  // Canonical text form, graded-lex ascending: "-3/2 + x1 x2^2".
  std::string str(std::string_view prefix = "x") const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  void check_same_vars(const Poly& other) const;

  int var_count_;
  TermMap terms_;
};

// Substitute subst[i] for the i-th variable of psi. Every element of
// subst must share one variable count, which becomes the result's.
Poly compose(const Poly& psi, const std::vector<Poly>& subst);

// A polynomial truncated to total degree < order.
class Jet {
 public:
  Jet(Poly poly, int order);
  const Poly& poly() const { return poly_; }
  int order() const { return order_; }
  bool operator==(const Jet&) const = default;

 private:
  Poly poly_;
  int order_;
};

Jet truncate(const Poly& a, int order);

}  // namespace lowvf
