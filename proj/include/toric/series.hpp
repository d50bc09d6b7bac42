#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "toric/error.hpp"
#include "toric/integer.hpp"
#include "toric/polynomial.hpp"

namespace toric {

// Coefficient-ring hooks. A ring R used in USeries<R> must be a Q-algebra:
// it supports +, -, *, and multiplication by a Rational.

inline bool is_unit(const Rational& c) { return c != 0; }
inline Rational unit_inverse(const Rational& c) {
  if (c == 0) throw series_error("constant term is not invertible");
  return Rational(1) / c;
}
inline bool is_zero(const Rational& c) { return c == 0; }

inline bool is_unit(const RationalPolynomial& c) { return c.degree() == 0; }
inline RationalPolynomial unit_inverse(const RationalPolynomial& c) {
  if (c.degree() != 0) throw series_error("constant term " + c.to_string() + " is not a unit");
  return RationalPolynomial::constant(Rational(1) / c.leading());
}
inline bool is_zero(const RationalPolynomial& c) { return c.is_zero(); }

/// Truncated univariate power series sum_{i <= order} c_i x^i over a ring R.
template <class R>
class USeries {
public:
  using ring_type = R;

  explicit USeries(int order = 0) : c_(static_cast<std::size_t>(checked(order)) + 1) {}
  USeries(int order, std::vector<R> coeffs) : c_(static_cast<std::size_t>(checked(order)) + 1) {
    for (std::size_t i = 0; i < coeffs.size() && i < c_.size(); ++i) c_[i] = std::move(coeffs[i]);
  }

  static USeries constant(int order, R value) {
    USeries s(order);
    s.c_[0] = std::move(value);
    return s;
  }

  /// c * x^k
  static USeries monomial(int order, R c, int k) {
    USeries s(order);
    if (k <= order) s.c_[k] = std::move(c);
    return s;
  }

  static USeries x(int order) { return monomial(order, R(1), 1); }

  int order() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const R& operator[](int i) const { return c_.at(i); }
  R& operator[](int i) { return c_.at(i); }
  const std::vector<R>& coefficients() const noexcept { return c_; }

  USeries& operator+=(const USeries& o) {
    same_order(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  USeries& operator-=(const USeries& o) {
    same_order(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  USeries& operator*=(const Rational& k) {
    for (auto& x : c_) x = x * k;
    return *this;
  }

  friend USeries operator+(USeries a, const USeries& b) { return a += b; }
  friend USeries operator-(USeries a, const USeries& b) { return a -= b; }
  friend USeries operator-(USeries a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend USeries operator*(USeries a, const Rational& k) { return a *= k; }
  friend USeries operator*(const Rational& k, USeries a) { return a *= k; }

  friend USeries operator*(const USeries& a, const USeries& b) {
    a.same_order(b);
    USeries out(a.order());
    const int n = a.order();
    for (int i = 0; i <= n; ++i) {
      if (is_zero(a.c_[i])) continue;
      for (int j = 0; i + j <= n; ++j) {
        if (is_zero(b.c_[j])) continue;
        out.c_[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return out;
  }
  USeries& operator*=(const USeries& o) { return *this = *this * o; }

  /// Adds a constant to the x^0 coefficient.
  friend USeries operator+(USeries a, const R& c) {
    a.c_[0] += c;
    return a;
  }
  friend USeries operator+(const R& c, USeries a) { return std::move(a) + c; }
  friend USeries operator-(USeries a, const R& c) {
    a.c_[0] -= c;
    return a;
  }
  friend USeries operator-(const R& c, USeries a) { return -std::move(a) + c; }

  /// Every coefficient multiplied by the ring element c.
  USeries scaled(const R& c) const {
    USeries out(order());
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] * c;
    return out;
  }

  USeries truncated(int order) const {
    if (order > this->order()) throw series_error("cannot extend a truncated series");
    return USeries(order, std::vector<R>(c_.begin(), c_.begin() + order + 1));
  }

  /// Exact division by x^k; the k lowest coefficients must vanish. The order drops by k.
  USeries shifted_down(int k) const {
    if (k > order()) throw series_error("shift exceeds the truncation order");
    for (int i = 0; i < k; ++i) {
      if (!is_zero(c_[i])) throw series_error("series is not divisible by x^" + std::to_string(k));
    }
    return USeries(order() - k, std::vector<R>(c_.begin() + k, c_.end()));
  }

  /// f(c x)
  USeries dilated(const R& c) const {
    USeries out(order());
    R power(1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      out.c_[i] = c_[i] * power;
      power = power * c;
    }
    return out;
  }

  friend bool operator==(const USeries& a, const USeries& b) { return a.c_ == b.c_; }

private:
  static int checked(int order) {
    if (order < 0) throw series_error("negative truncation order");
    return order;
  }
  void same_order(const USeries& o) const {
    if (o.order() != order()) throw series_error("series orders differ");
  }

  std::vector<R> c_;
};

/// 1 / a; a's constant term must be a unit of R.
template <class R>
USeries<R> inverse(const USeries<R>& a) {
  const int n = a.order();
  USeries<R> b(n);
  const R inv0 = unit_inverse(a[0]);
  b[0] = inv0;
  for (int d = 1; d <= n; ++d) {
    R acc(0);
    for (int k = 1; k <= d; ++k) {
      if (!is_zero(a[k])) acc += a[k] * b[d - k];
    }
    b[d] = -(acc * inv0);
  }
  return b;
}

/// num / den. When den's constant term is a unit this is num * inverse(den).
/// Otherwise den is cleared coefficientwise: with k0 the lowest index where
/// den is nonzero, q_n solves den_{k0} q_n = num_{n+k0} - sum_{k>k0} den_k
/// q_{n+k0-k} by exact division in R, and the result has order
/// num.order() - k0.
template <class R>
USeries<R> operator/(const USeries<R>& num, const USeries<R>& den) {
  if (num.order() != den.order()) throw series_error("series orders differ");
  if (is_unit(den[0])) return num * inverse(den);
  int k0 = 0;
  while (k0 <= den.order() && is_zero(den[k0])) ++k0;
  if (k0 > den.order()) throw series_error("division by a series that vanishes to the truncation order");
  for (int i = 0; i < k0; ++i) {
    if (!is_zero(num[i])) throw series_error("numerator does not vanish where the denominator does");
  }
  const int n = num.order() - k0;
  USeries<R> q(n);
  for (int i = 0; i <= n; ++i) {
    R rhs = num[i + k0];
    for (int k = k0 + 1; k <= den.order() && k <= i + k0; ++k) {
      if (!is_zero(den[k])) rhs -= den[k] * q[i + k0 - k];
    }
    try {
      q[i] = divide_exact(rhs, den[k0]);
    } catch (const std::domain_error& e) {
      throw series_error(std::string("series division: ") + e.what());
    }
  }
  return q;
}

/// Square root with constant term 1.
template <class R>
USeries<R> sqrt(const USeries<R>& a) {
  if (a[0] != R(1)) throw series_error("sqrt requires constant term 1");
  const int n = a.order();
  USeries<R> s(n);
  s[0] = R(1);
  const Rational half(1, 2);
  for (int d = 1; d <= n; ++d) {
    R acc = a[d];
    for (int k = 1; k < d; ++k) acc -= s[k] * s[d - k];
    s[d] = acc * half;
  }
  return s;
}

namespace detail {
template <class R>
void require_zero_constant(const USeries<R>& u) {
  if (!is_zero(u[0])) throw series_error("argument series must have zero constant term");
}
} // namespace detail

/// exp(u) for u(0) = 0, from d f_d = sum_k k u_k f_{d-k}.
template <class R>
USeries<R> exp(const USeries<R>& u) {
  detail::require_zero_constant(u);
  const int n = u.order();
  USeries<R> f(n);
  f[0] = R(1);
  for (int d = 1; d <= n; ++d) {
    R acc(0);
    for (int k = 1; k <= d; ++k) {
      if (!is_zero(u[k])) acc += (u[k] * f[d - k]) * Rational(k);
    }
    f[d] = acc * Rational(1, d);
  }
  return f;
}

/// (cos u, sin u) when sign = -1, (cosh u, sinh u) when sign = +1.
template <class R>
std::pair<USeries<R>, USeries<R>> circular_pair(const USeries<R>& u, int sign) {
  detail::require_zero_constant(u);
  const int n = u.order();
  USeries<R> c(n), s(n);
  c[0] = R(1);
  for (int d = 1; d <= n; ++d) {
    R ac(0), as(0);
    for (int k = 1; k <= d; ++k) {
      if (is_zero(u[k])) continue;
      ac += (u[k] * s[d - k]) * Rational(k);
      as += (u[k] * c[d - k]) * Rational(k);
    }
    c[d] = ac * Rational(sign, d);
    s[d] = as * Rational(1, d);
  }
  return {std::move(c), std::move(s)};
}

template <class R> USeries<R> cosh(const USeries<R>& u) { return circular_pair(u, +1).first; }
template <class R> USeries<R> sinh(const USeries<R>& u) { return circular_pair(u, +1).second; }
template <class R> USeries<R> sech(const USeries<R>& u) { return inverse(cosh(u)); }
template <class R> USeries<R> tanh(const USeries<R>& u) {
  auto [c, s] = circular_pair(u, +1);
  return s * inverse(c);
}
template <class R> USeries<R> cos(const USeries<R>& u) { return circular_pair(u, -1).first; }
template <class R> USeries<R> sin(const USeries<R>& u) { return circular_pair(u, -1).second; }
template <class R> USeries<R> sec(const USeries<R>& u) { return inverse(cos(u)); }
template <class R> USeries<R> tan(const USeries<R>& u) {
  auto [c, s] = circular_pair(u, -1);
  return s * inverse(c);
}

/// n! [x^n] f for every n: reads an exponential generating function.
template <class R>
std::vector<R> egf_values(const USeries<R>& f) {
  std::vector<R> out;
  Integer fact(1);
  for (int n = 0; n <= f.order(); ++n) {
    if (n > 0) fact *= n;
    out.push_back(f[n] * Rational(fact));
  }
  return out;
}

/// Rational polynomial whose coefficients are the coefficients of a series
/// in an auxiliary variable s, restricted to even powers of s, with s^2 -> z.
/// Throws if any odd power of s has a nonzero coefficient.
inline RationalPolynomial substitute_square(const RationalPolynomial& p) {
  std::vector<Rational> out;
  for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
    if (k % 2 == 1) {
      if (p.coefficients()[k] != 0) throw series_error("odd power of the square-root variable survives");
      continue;
    }
    out.push_back(p.coefficients()[k]);
  }
  return RationalPolynomial(std::move(out));
}

using RationalSeries = USeries<Rational>;
using PolySeries = USeries<RationalPolynomial>;

} // namespace toric
