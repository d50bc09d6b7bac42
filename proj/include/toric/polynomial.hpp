#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "toric/error.hpp"
#include "toric/integer.hpp"

namespace toric {

/// Dense univariate polynomial, coefficient i multiplies var^i.
///
/// Always normalized: no trailing zero coefficients, and the zero polynomial
/// holds no coefficients at all.
template <class Coeff>
class Polynomial {
public:
  using coefficient_type = Coeff;

  Polynomial() = default;
  explicit Polynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
  Polynomial(std::initializer_list<Coeff> coeffs) : coeffs_(coeffs) { normalize(); }
  explicit Polynomial(const Coeff& c) : coeffs_{c} { normalize(); }
  explicit Polynomial(int c) : Polynomial(Coeff(c)) {}

  static Polynomial constant(Coeff c) { return Polynomial(std::vector<Coeff>{std::move(c)}); }

  static Polynomial monomial(Coeff c, std::size_t exponent) {
    std::vector<Coeff> v(exponent + 1);
    v[exponent] = std::move(c);
    return Polynomial(std::move(v));
  }

  /// The variable itself.
  static Polynomial var() { return monomial(Coeff(1), 1); }

  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

  const std::vector<Coeff>& coefficients() const noexcept { return coeffs_; }

  /// Coefficient of var^i, zero beyond the degree.
  Coeff coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Coeff(0); }

  const Coeff& leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }

  bool is_constant() const noexcept { return coeffs_.size() <= 1; }

  template <class Value>
  Value evaluate(const Value& x) const {
    Value acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc *= x;
      acc += Value(*it);
    }
    return acc;
  }

  /// this(inner(var)), by Horner's rule.
  Polynomial compose(const Polynomial& inner) const {
    Polynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * inner + constant(*it);
    }
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
  }

  Polynomial& operator*=(const Coeff& c) {
    for (auto& x : coeffs_) x *= c;
    normalize();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& x : a.coeffs_) x = -x;
    return a;
  }
  friend Polynomial operator*(Polynomial a, const Coeff& c) { return a *= c; }
  friend Polynomial operator*(const Coeff& c, Polynomial a) { return a *= c; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }

  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Human-readable form in ascending powers, e.g. "1+4z+3z^2".
  std::string to_string(const std::string& var = "t") const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const Coeff& c = coeffs_[i];
      if (c == 0) continue;
      const bool negative = c < 0;
      const Coeff mag = negative ? Coeff(-c) : c;
      if (negative) os << '-';
      else if (!first) os << '+';
      if (i == 0 || mag != 1) os << mag;
      if (i >= 1) os << var;
      if (i >= 2) os << '^' << i;
      first = false;
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

using IntPolynomial = Polynomial<Integer>;
using RationalPolynomial = Polynomial<Rational>;

inline RationalPolynomial to_rational(const IntPolynomial& p) {
  std::vector<Rational> c;
  c.reserve(p.coefficients().size());
  for (const auto& x : p.coefficients()) c.emplace_back(x);
  return RationalPolynomial(std::move(c));
}

/// Converts back to integer coefficients; throws if any coefficient is not integral.
inline IntPolynomial to_integer(const RationalPolynomial& p) {
  std::vector<Integer> c;
  c.reserve(p.coefficients().size());
  for (const auto& x : p.coefficients()) {
    if (!is_integer(x)) throw std::domain_error("non-integral coefficient " + x.get_str());
    c.emplace_back(x.get_num());
  }
  return IntPolynomial(std::move(c));
}

/// Quotient and remainder of long division over the rationals.
inline std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& num,
                                                               const RationalPolynomial& den) {
  if (den.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = num.coefficients();
  const std::size_t dsz = den.coefficients().size();
  if (rem.size() < dsz) return {RationalPolynomial{}, num};
  std::vector<Rational> quot(rem.size() - dsz + 1);
  const Rational& lead = den.leading();
  for (std::size_t k = quot.size(); k-- > 0;) {
    Rational q = rem[k + dsz - 1] / lead;
    if (q == 0) continue;
    for (std::size_t j = 0; j < dsz; ++j) rem[k + j] -= q * den.coefficients()[j];
    quot[k] = std::move(q);
  }
  return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
}

/// num / den, which must divide exactly.
inline RationalPolynomial divide_exact(const RationalPolynomial& num, const RationalPolynomial& den) {
  auto [q, r] = divmod(num, den);
  if (!r.is_zero()) {
    throw std::domain_error("inexact polynomial division: (" + num.to_string() + ") / (" + den.to_string() + ")");
  }
  return q;
}

inline Rational divide_exact(const Rational& num, const Rational& den) {
  if (den == 0) throw std::domain_error("rational division by zero");
  return num / den;
}

} // namespace toric
