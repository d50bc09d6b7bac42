#pragma once

#include <cstdint>
#include <vector>

#include "toric/graph.hpp"
#include "toric/integer.hpp"
#include "toric/polynomial.hpp"

namespace toric {

/// How the engine evaluates a mask whose components are all even.
enum class SnumRoute {
  /// Product over components when disconnected, submask sum when connected.
  component_product,
  /// Submask sum for every even-component mask, connected or not.
  submask_sum,
};

namespace detail {

// Every partial sum in the table is bounded by the ordered Bell number of n,
// which fits a signed 128-bit integer for n <= 30.
inline constexpr int int128_safe_vertices = 30;

template <class Acc>
std::vector<Acc> signed_table(const Graph& g, SnumRoute route) {
  const int n = g.vertex_count();
  const std::uint64_t size = std::uint64_t{1} << n;
  std::vector<Acc> s(size, Acc(0));
  s[0] = Acc(1);
  // Proper submasks precede a mask in numeric order, so every lookup below
  // reads a finished entry.
  for (std::uint64_t m = 1; m < size; ++m) {
    const VertexSet set(static_cast<VertexSet::mask_type>(m));
    if (set.size() % 2 == 1) continue; // some component is odd

    Acc product(1);
    bool odd_component = false;
    int components = 0;
    for (VertexSet rest = set; !rest.empty();) {
      const VertexSet c = g.component_of(rest.front(), rest);
      if (c.size() % 2 == 1) {
        odd_component = true;
        break;
      }
      ++components;
      if (route == SnumRoute::component_product) product *= s[c.mask()];
      rest = rest - c;
    }
    if (odd_component) continue;

    if (components > 1 && route == SnumRoute::component_product) {
      s[m] = product;
      continue;
    }
    Acc sum(0);
    const auto mask = static_cast<VertexSet::mask_type>(m);
    for (VertexSet::mask_type sub = (mask - 1) & mask;; sub = (sub - 1) & mask) {
      sum += s[sub];
      if (sub == 0) break;
    }
    s[m] = -sum;
  }
  return s;
}

template <class Fn>
void with_signed_table(const Graph& g, SnumRoute route, Fn&& fn) {
  if (g.vertex_count() <= int128_safe_vertices) {
    const auto table = signed_table<__int128>(g, route);
    fn([&](std::uint64_t m) { return from_int128(table[m]); }, table.size());
  } else {
    const auto table = signed_table<Integer>(g, route);
    fn([&](std::uint64_t m) { return table[m]; }, table.size());
  }
}

} // namespace detail

/// s(G|S) for every vertex subset S, indexed by mask.
inline std::vector<Integer> signed_a_number_table(const Graph& g, SnumRoute route = SnumRoute::component_product,
                                                  int cap = default_vertex_cap) {
  check_cap(g.vertex_count(), cap);
  std::vector<Integer> out;
  detail::with_signed_table(g, route, [&](auto&& at, std::size_t size) {
    out.reserve(size);
    for (std::uint64_t m = 0; m < size; ++m) out.push_back(at(m));
  });
  return out;
}

/// The signed a-number s(G).
inline Integer signed_a_number(const Graph& g, SnumRoute route = SnumRoute::component_product,
                               int cap = default_vertex_cap) {
  check_cap(g.vertex_count(), cap);
  Integer result;
  detail::with_signed_table(g, route, [&](auto&& at, std::size_t size) { result = at(size - 1); });
  return result;
}

/// sa(G;t) = sum over vertex subsets V' of s(G|V') t^{|V \ V'|}.
inline IntPolynomial signed_a_polynomial(const Graph& g, SnumRoute route = SnumRoute::component_product,
                                         int cap = default_vertex_cap) {
  check_cap(g.vertex_count(), cap);
  const int n = g.vertex_count();
  std::vector<Integer> coeffs(n + 1);
  detail::with_signed_table(g, route, [&](auto&& at, std::size_t size) {
    for (std::uint64_t m = 0; m < size; ++m) {
      const int k = std::popcount(m);
      if (k % 2 == 1) continue;
      coeffs[n - k] += at(m);
    }
  });
  return IntPolynomial(std::move(coeffs));
}

/// c-vector (c_0, ..., c_n) from sa(G;t) on n vertices:
/// c_i = (-1)^{i/2} [t^{n-i}] sa for even i, 0 for odd i.
inline std::vector<Integer> c_numbers_from_sa(int n, const IntPolynomial& sa) {
  std::vector<Integer> c(n + 1);
  for (int i = 0; i <= n; i += 2) {
    c[i] = sa.coeff(n - i);
    if ((i / 2) % 2 == 1) c[i] = -c[i];
  }
  return c;
}

/// sa(G;t) = sum_j (-1)^j c_{2j} t^{n-2j}, from the even c-numbers
/// (c_0, c_2, ...).
inline IntPolynomial sa_from_even_c_numbers(int n, const std::vector<Integer>& even_c) {
  std::vector<Integer> coeffs(n + 1);
  for (std::size_t j = 0; j < even_c.size() && 2 * static_cast<int>(j) <= n; ++j) {
    coeffs[n - 2 * j] = (j % 2 == 0) ? even_c[j] : Integer(-even_c[j]);
  }
  return IntPolynomial(std::move(coeffs));
}

/// Poincare polynomial sum_i c_{2i} z^i from sa(G;t) on n vertices.
inline IntPolynomial poincare_from_sa(int n, const IntPolynomial& sa) {
  const auto c = c_numbers_from_sa(n, sa);
  std::vector<Integer> betti;
  for (int i = 0; 2 * i <= n; ++i) betti.push_back(c[2 * i]);
  return IntPolynomial(std::move(betti));
}

struct InvariantReport {
  int vertices = 0;
  Integer snum;
  Integer anum;
  Integer bnum;
  std::vector<Integer> c;     // c_0 .. c_n
  IntPolynomial sa_poly;      // in t
  std::vector<Integer> betti; // beta_0 .. beta_{floor(n/2)}
  Integer euler;
  IntPolynomial poincare;     // in z

  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

/// All invariants derived from the signed a-polynomial.
inline InvariantReport report_from_sa(int n, const IntPolynomial& sa) {
  InvariantReport r;
  r.vertices = n;
  r.sa_poly = sa;
  r.snum = sa.coeff(0);
  // s vanishes on odd vertex counts, so a = 0 there.
  r.anum = (n % 2 == 1) ? Integer(0) : (((n / 2) % 2 == 0) ? r.snum : Integer(-r.snum));
  for (const auto& x : sa.coefficients()) r.bnum += x;
  r.c = c_numbers_from_sa(n, sa);
  for (int i = 0; 2 * i <= n; ++i) r.betti.push_back(r.c[2 * i]);
  r.euler = r.bnum;
  r.poincare = IntPolynomial(r.betti);
  return r;
}

inline InvariantReport invariant_report(const Graph& g, int cap = default_vertex_cap) {
  return report_from_sa(g.vertex_count(), signed_a_polynomial(g, SnumRoute::component_product, cap));
}

inline IntPolynomial poincare_polynomial(const Graph& g, int cap = default_vertex_cap) {
  return poincare_from_sa(g.vertex_count(), signed_a_polynomial(g, SnumRoute::component_product, cap));
}

} // namespace toric
