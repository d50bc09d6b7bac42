#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "toric/polynomial.hpp"
#include "toric/series.hpp"

namespace toric {

/// A weight sequence w_0, w_1, ... given by a few initial values followed by
/// a constant tail.
struct WeightSequence {
  std::vector<IntPolynomial> initial;
  IntPolynomial eventual;

  const IntPolynomial& at(std::size_t k) const { return k < initial.size() ? initial[k] : eventual; }
};

/// Weights of a Motzkin path: up steps weigh 1, a horizontal step at height k
/// weighs horizontal.at(k), and a down step between heights k-1 and k weighs
/// down.at(k - 1).
struct WeightSpec {
  WeightSequence horizontal;
  WeightSequence down;

  /// sigma = (a, s, s, ...), tau = (b, u, u, ...).
  static WeightSpec from_parameters(const IntPolynomial& a, const IntPolynomial& s, const IntPolynomial& b,
                                    const IntPolynomial& u) {
    return WeightSpec{WeightSequence{{a}, s}, WeightSequence{{b}, u}};
  }
};

/// B_0..B_N: weighted Motzkin paths from (0,0) to (n,0) staying weakly
/// above the axis. Dynamic programming over (position, height) with heights
/// capped at N/2.
inline std::vector<IntPolynomial> generalized_catalan(const WeightSpec& w, int N) {
  if (N < 0) throw std::invalid_argument("generalized_catalan: negative length");
  const int max_height = N / 2;
  std::vector<IntPolynomial> cur(max_height + 2), next(max_height + 2);
  cur[0] = IntPolynomial(1);
  std::vector<IntPolynomial> out{cur[0]};
  for (int step = 1; step <= N; ++step) {
    std::fill(next.begin(), next.end(), IntPolynomial{});
    const int reachable = std::min(step - 1, max_height);
    for (int h = 0; h <= reachable; ++h) {
      if (cur[h].is_zero()) continue;
      if (h + 1 <= max_height) next[h + 1] += cur[h];
      next[h] += cur[h] * w.horizontal.at(h);
      if (h >= 1) next[h - 1] += cur[h] * w.down.at(h - 1);
    }
    std::swap(cur, next);
    out.push_back(cur[0]);
  }
  return out;
}

/// Closed form of sum_n B_n z^n for sigma = (a, s, s, ...), tau = (b, u, u, ...):
///   [(2u - b) + (bs - 2au) z - b sqrt(1 - 2s z + (s^2 - 4u) z^2)]
///   / [2(u - b) + 2(bs - 2au + ab) z + 2(a^2 u - abs + b^2) z^2],
/// expanded to the given order. When the denominator's constant term is not a
/// unit the quotient is solved coefficientwise with exact polynomial division.
inline PolySeries gfgc_series(const IntPolynomial& a_, const IntPolynomial& s_, const IntPolynomial& b_,
                              const IntPolynomial& u_, int order) {
  if (order < 0) throw std::invalid_argument("gfgc_series: negative order");
  const RationalPolynomial a = to_rational(a_), s = to_rational(s_), b = to_rational(b_), u = to_rational(u_);
  const RationalPolynomial two(2);
  const int work = order + 2; // the denominator may vanish to order 2
  const PolySeries z = PolySeries::x(work);

  const PolySeries radicand = PolySeries::constant(work, RationalPolynomial(1)) - z.scaled(two * s) +
                              (z * z).scaled(s * s - RationalPolynomial(4) * u);
  const PolySeries num = PolySeries::constant(work, two * u - b) + z.scaled(b * s - two * a * u) -
                         sqrt(radicand).scaled(b);
  const PolySeries den = PolySeries::constant(work, two * (u - b)) + z.scaled(two * (b * s - two * a * u + a * b)) +
                         (z * z).scaled(two * (a * a * u - a * b * s + b * b));
  return (num / den).truncated(order);
}

} // namespace toric
