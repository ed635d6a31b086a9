#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace lowvf {

// Power product x1^e1 ... xk^ek stored as its exponent vector.
// The empty product (all exponents zero) is the unit.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exps);
  static Monomial unit(int var_count);

  int var_count() const { return static_cast<int>(exps_.size()); }
  int degree() const;
  int exp(int var) const { return exps_[var]; }
  const std::vector<int>& exponents() const { return exps_; }

  Monomial times(const Monomial& other) const;
  bool divides(const Monomial& other) const;  // componentwise <=
  bool is_unit() const;

  bool operator==(const Monomial&) const = default;

  // "x1^2 x3"; the unit renders as "1".
  std::string str(std::string_view prefix = "x") const;

 private:
  std::vector<int> exps_;
};

// Graded lexicographic order used everywhere for canonical enumeration:
// lower total degree first; within a degree x1^2 precedes x1 x2 precedes
// x2^2 (lexicographically larger exponent vector first).
struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Enumerations in GradedLexLess order.
std::vector<Monomial> monomials_of_degree(int var_count, int degree);
std::vector<Monomial> monomials_below_order(int var_count, int order);

unsigned long long binomial(int n, int k);

}  // namespace lowvf
