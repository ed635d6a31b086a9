#include "lowvf/poly.hpp"

#include <stdexcept>

namespace lowvf {

Poly::Poly(int var_count) : var_count_(var_count) {
  if (var_count < 1) throw std::invalid_argument("poly: var_count < 1");
}

Poly Poly::constant(int var_count, const Rational& c) {
  Poly p(var_count);
  p.add_term(Monomial::unit(var_count), c);
  return p;
}

Poly Poly::variable(int var_count, int var) {
  if (var < 0 || var >= var_count)
    throw std::out_of_range("poly: variable index out of range");
  std::vector<int> e(var_count, 0);
  e[var] = 1;
  return term(Monomial(std::move(e)), 1);
}

Poly Poly::term(const Monomial& m, const Rational& c) {
  Poly p(m.var_count());
  p.add_term(m, c);
  return p;
}

int Poly::total_degree() const {
  if (terms_.empty()) return -1;
  return terms_.rbegin()->first.degree();
}

Rational Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Poly::constant_term() const { return coeff(Monomial::unit(var_count_)); }

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Poly::check_same_vars(const Poly& other) const {
  if (other.var_count_ != var_count_)
    throw std::invalid_argument("poly: variable count mismatch");
}

Poly Poly::operator+(const Poly& other) const {
  check_same_vars(other);
  Poly out(*this);
  for (const auto& [m, c] : other.terms_) out.add_term(m, c);
  return out;
}

Poly Poly::operator-(const Poly& other) const {
  check_same_vars(other);
  Poly out(*this);
  for (const auto& [m, c] : other.terms_) out.add_term(m, -c);
  return out;
}

Poly Poly::operator*(const Poly& other) const {
  check_same_vars(other);
  Poly out(var_count_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : other.terms_) out.add_term(ma.times(mb), ca * cb);
  return out;
}

Poly Poly::operator-() const {
  Poly out(var_count_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Poly Poly::scaled(const Rational& c) const {
  Poly out(var_count_);
  if (c == 0) return out;
  for (const auto& [m, q] : terms_) out.terms_.emplace(m, c * q);
  return out;
}

Poly Poly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("poly: negative power");
  Poly out = constant(var_count_, 1);
  for (int i = 0; i < k; ++i) out = out * *this;
  return out;
}

Poly Poly::mul_trunc(const Poly& other, int order) const {
  check_same_vars(other);
  Poly out(var_count_);
  for (const auto& [ma, ca] : terms_) {
    int da = ma.degree();
    if (da >= order) break;  // graded order: everything after is no smaller
    for (const auto& [mb, cb] : other.terms_) {
      if (da + mb.degree() >= order) break;
      out.add_term(ma.times(mb), ca * cb);
    }
  }
  return out;
}

Poly Poly::pow_trunc(int k, int order) const {
  if (k < 0) throw std::invalid_argument("poly: negative power");
  Poly out = constant(var_count_, 1).truncated(order);
  for (int i = 0; i < k; ++i) out = out.mul_trunc(*this, order);
  return out;
}

Poly Poly::truncated(int order) const {
  Poly out(var_count_);
  for (const auto& [m, c] : terms_) {
    if (m.degree() >= order) break;
    out.terms_.emplace(m, c);
  }
  return out;
}

Poly Poly::derivative(int var) const {
  if (var < 0 || var >= var_count_)
    throw std::out_of_range("poly: variable index out of range");
  Poly out(var_count_);
  for (const auto& [m, c] : terms_) {
    int e = m.exp(var);
    if (e == 0) continue;
    std::vector<int> exps = m.exponents();
    exps[var] = e - 1;
    out.add_term(Monomial(std::move(exps)), c * e);
  }
  return out;
}

std::string Poly::str(std::string_view prefix) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    if (first) {
      if (neg) out += '-';
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    if (m.is_unit()) {
      out += to_string(a);
    } else {
      if (a != 1) {
        out += to_string(a);
        out += ' ';
      }
      out += m.str(prefix);
    }
  }
  return out;
}

Poly compose(const Poly& psi, const std::vector<Poly>& subst) {
  if (subst.empty()) throw std::invalid_argument("compose: empty substitution");
  if (static_cast<int>(subst.size()) != psi.var_count())
    throw std::invalid_argument("compose: arity mismatch");
  int nvars = subst[0].var_count();
  for (const auto& s : subst)
    if (s.var_count() != nvars)
      throw std::invalid_argument("compose: substitution variable counts differ");

  // Lazy power cache per substituted variable.
  std::vector<std::vector<Poly>> powers(subst.size(), {Poly::constant(nvars, 1)});
  auto power = [&](int i, int e) -> const Poly& {
    auto& cache = powers[i];
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * subst[i]);
    return cache[e];
  };

  Poly out(nvars);
  for (const auto& [m, c] : psi.terms()) {
    Poly prod = Poly::constant(nvars, c);
    for (int i = 0; i < psi.var_count(); ++i)
      if (m.exp(i) > 0) prod = prod * power(i, m.exp(i));
    out = out + prod;
  }
  return out;
}

Jet::Jet(Poly poly, int order) : poly_(poly.truncated(order)), order_(order) {
  if (order < 1) throw std::invalid_argument("jet: order < 1");
}

Jet truncate(const Poly& a, int order) { return Jet(a, order); }

}  // namespace lowvf
