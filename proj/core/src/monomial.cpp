#include "lowvf/monomial.hpp"

#include <numeric>
#include <stdexcept>

namespace lowvf {

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
  for (int e : exps_)
    if (e < 0) throw std::invalid_argument("monomial: negative exponent");
}

Monomial Monomial::unit(int var_count) {
  return Monomial(std::vector<int>(var_count, 0));
}

int Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0);
}

Monomial Monomial::times(const Monomial& other) const {
  if (other.var_count() != var_count())
    throw std::invalid_argument("monomial: variable count mismatch");
  std::vector<int> e(exps_);
  for (int i = 0; i < var_count(); ++i) e[i] += other.exps_[i];
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  if (other.var_count() != var_count()) return false;
  for (int i = 0; i < var_count(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::is_unit() const {
  for (int e : exps_)
    if (e != 0) return false;
  return true;
}

std::string Monomial::str(std::string_view prefix) const {
  std::string out;
  for (int i = 0; i < var_count(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += ' ';
    out += prefix;
    out += std::to_string(i + 1);
    if (exps_[i] > 1) {
      out += '^';
      out += std::to_string(exps_[i]);
    }
  }
  return out.empty() ? "1" : out;
}

bool GradedLexLess::operator()(const Monomial& a, const Monomial& b) const {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.exponents() > b.exponents();  // larger vector first within a degree
}

static void emit_degree(int var_count, int degree, std::vector<int>& prefix,
                        std::vector<Monomial>& out) {
  if (var_count == 1) {
    prefix.push_back(degree);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int e = degree; e >= 0; --e) {
    prefix.push_back(e);
    emit_degree(var_count - 1, degree - e, prefix, out);
    prefix.pop_back();
  }
}

std::vector<Monomial> monomials_of_degree(int var_count, int degree) {
  if (var_count < 1) throw std::invalid_argument("monomials_of_degree: var_count < 1");
  std::vector<Monomial> out;
  std::vector<int> prefix;
  emit_degree(var_count, degree, prefix, out);
  return out;
}

std::vector<Monomial> monomials_below_order(int var_count, int order) {
  std::vector<Monomial> out;
  for (int d = 0; d < order; ++d) {
    auto level = monomials_of_degree(var_count, d);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

unsigned long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace lowvf
