#pragma once

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "toric/graph.hpp"
#include "toric/integer.hpp"
#include "toric/invariants.hpp"
#include "toric/polynomial.hpp"
#include "toric/series.hpp"

namespace toric {

/// Catalan triangle C(n+k, k) - C(n+k, k-1).
inline Integer catalan_triangle(long n, long k) {
  if (n < 0 || k < 0) throw std::invalid_argument("catalan_triangle: negative argument");
  return binomial(n + k, k) - binomial(n + k, k - 1);
}

inline Integer catalan(long n) { return catalan_triangle(n, n); }

/// Euler zigzag numbers A_0..A_N.
struct ZigzagTable {
  std::vector<Integer> values;

  const Integer& operator[](std::size_t n) const { return values.at(n); }
  std::size_t size() const noexcept { return values.size(); }
};

/// Zigzag numbers from the Seidel boustrophedon triangle:
/// E(n,0) = [n == 0], E(n,k) = E(n,k-1) + E(n-1,n-k), A_n = E(n,n).
inline ZigzagTable zigzag(int N) {
  if (N < 0) throw std::invalid_argument("zigzag: negative size");
  ZigzagTable out;
  std::vector<Integer> prev{1};
  out.values.push_back(1);
  for (int n = 1; n <= N; ++n) {
    std::vector<Integer> row(n + 1);
    row[0] = 0;
    for (int k = 1; k <= n; ++k) row[k] = row[k - 1] + prev[n - k];
    out.values.push_back(row[n]);
    prev = std::move(row);
  }
  return out;
}

/// Euler polynomials E_0(t)..E_N(t) from sum_n E_n(t) x^n/n! = 2 e^{xt} / (e^x + 1).
inline std::vector<RationalPolynomial> euler_polynomials(int N) {
  if (N < 0) throw std::invalid_argument("euler_polynomials: negative size");
  const RationalPolynomial t = RationalPolynomial::var();
  const PolySeries x = PolySeries::x(N);
  const PolySeries ext = exp(x.scaled(t));
  const PolySeries ex = exp(x);
  const PolySeries f = (ext * Rational(2)) * inverse(ex + RationalPolynomial(1));
  return egf_values(f);
}

inline RationalPolynomial euler_polynomial(int n) { return euler_polynomials(n).back(); }

/// Even c-numbers (c_0, c_2, ..., c_{2 floor(n/2)}) of a path, cycle, complete
/// or star graph from their closed forms. Cycles on one and two vertices
/// follow the closed form (they coincide with K_1 and K_2).
inline std::vector<Integer> family_c_numbers(const GraphFamily& f) {
  if (std::holds_alternative<CompleteMultipartite>(f)) {
    throw std::invalid_argument("family_c_numbers: use the multipartite recurrence for complete multipartite graphs");
  }
  std::vector<Integer> c;
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Path>) {
          if (x.n < 0) throw std::invalid_argument("negative path size");
          for (long i = 0; 2 * i <= x.n; ++i) c.push_back(catalan_triangle(x.n - i, i));
        } else if constexpr (std::is_same_v<T, Cycle>) {
          if (x.n < 0) throw std::invalid_argument("negative cycle size");
          for (long i = 0; 2 * i <= x.n; ++i) {
            if (i == 0 && x.n == 0) c.push_back(1);
            else if (2 * i == x.n) c.push_back(binomial(x.n, x.n / 2) / 2);
            else c.push_back(binomial(x.n, i));
          }
        } else if constexpr (std::is_same_v<T, Complete>) {
          if (x.n < 0) throw std::invalid_argument("negative complete graph size");
          const auto A = zigzag(x.n);
          for (long i = 0; 2 * i <= x.n; ++i) c.push_back(binomial(x.n, 2 * i) * A[2 * i]);
        } else if constexpr (std::is_same_v<T, Star>) {
          if (x.m < 0) throw std::invalid_argument("negative star size");
          const long n = x.m + 1;
          const auto A = zigzag(static_cast<int>(n));
          c.push_back(1);
          for (long i = 1; 2 * i <= n; ++i) c.push_back(binomial(x.m, 2 * i - 1) * A[2 * i - 1]);
        }
      },
      f);
  return c;
}

/// sa(G;t) of a path/cycle/complete/star graph via its closed-form c-numbers.
inline IntPolynomial family_sa_polynomial(const GraphFamily& f) {
  const int n = std::visit(
      [](const auto& x) -> int {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Star>) return x.m + 1;
        else if constexpr (std::is_same_v<T, CompleteMultipartite>) return 0;
        else return x.n;
      },
      f);
  return sa_from_even_c_numbers(n, family_c_numbers(f));
}

/// Signed a-numbers of complete multipartite graphs from the recurrence
///   sum_{i <= p} prod_j C(p_j, i_j) s(K_i) = [at most one p_j > 0]   (sum p even),
/// solved bottom-up over sub-tuples in order of total size. Values are
/// memoized by the sorted tuple of nonzero parts.
class MultipartiteSolver {
public:
  /// Soft bound on the total number of vertices.
  static constexpr long size_limit = 40;

  Integer snum(std::vector<int> parts) {
    const auto key = canonical(parts);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    solve_below(key);
    return memo_.at(key);
  }

  /// sa(K_{p_1..p_m};t) = sum_{p' <= p} prod C(p_i, p'_i) s(K_{p'}) t^{sum(p_i - p'_i)}.
  IntPolynomial sa_polynomial(const std::vector<int>& parts) {
    const auto key = canonical(parts);
    solve_below(key);
    const long n = total(key);
    std::vector<Integer> coeffs(n + 1);
    for_each_subtuple(key, [&](const std::vector<int>& sub, const Integer& weight) {
      const long k = total(sub);
      if (k % 2 == 1) return;
      const Integer& s = memo_.at(canonical(sub));
      if (s != 0) coeffs[n - k] += weight * s;
    });
    return IntPolynomial(std::move(coeffs));
  }

private:
  using Key = std::vector<int>;

  static long total(const Key& k) { return std::accumulate(k.begin(), k.end(), 0L); }

  static Key canonical(std::vector<int> parts) {
    for (int p : parts) {
      if (p < 0) throw std::invalid_argument("part sizes must be nonnegative");
    }
    parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
    std::sort(parts.begin(), parts.end(), std::greater<>());
    if (total(parts) > size_limit) {
      throw std::invalid_argument("multipartite recurrence limited to " + std::to_string(size_limit) + " vertices");
    }
    return parts;
  }

  // Calls fn(sub, prod_j C(p_j, sub_j)) for every sub <= p componentwise.
  template <class Fn>
  static void for_each_subtuple(const Key& p, Fn&& fn) {
    Key sub(p.size(), 0);
    std::function<void(std::size_t, const Integer&)> rec = [&](std::size_t j, const Integer& w) {
      if (j == p.size()) {
        fn(sub, w);
        return;
      }
      for (int i = 0; i <= p[j]; ++i) {
        sub[j] = i;
        rec(j + 1, w * binomial(p[j], i));
      }
      sub[j] = 0;
    };
    rec(0, Integer(1));
  }

  // Fills memo_ for every sub-tuple of p, smallest total size first.
  void solve_below(const Key& p) {
    if (memo_.count(p)) return;
    std::vector<Key> subs;
    for_each_subtuple(p, [&](const Key& sub, const Integer&) { subs.push_back(canonical(sub)); });
    std::sort(subs.begin(), subs.end(), [](const Key& a, const Key& b) {
      const long ta = total(a), tb = total(b);
      return ta != tb ? ta < tb : a < b;
    });
    subs.erase(std::unique(subs.begin(), subs.end()), subs.end());
    for (const Key& q : subs) {
      if (memo_.count(q)) continue;
      const long n = total(q);
      if (n % 2 == 1) {
        memo_[q] = 0;
        continue;
      }
      Integer rhs = q.size() <= 1 ? 1 : 0;
      for_each_subtuple(q, [&](const Key& sub, const Integer& w) {
        if (sub == q) return;
        if (total(sub) % 2 == 1) return;
        const Integer& s = memo_.at(canonical(sub));
        if (s != 0) rhs -= w * s;
      });
      memo_[q] = rhs;
    }
  }

  std::map<Key, Integer> memo_;
};

inline Integer multipartite_snum(const std::vector<int>& parts) {
  MultipartiteSolver solver;
  return solver.snum(parts);
}

inline IntPolynomial multipartite_sa_polynomial(const std::vector<int>& parts) {
  MultipartiteSolver solver;
  return solver.sa_polynomial(parts);
}

/// Poincare polynomials of M(K_{p,q}) for 0 <= p <= p_max, 0 <= q <= q_max;
/// entry [p][q].
inline std::vector<std::vector<IntPolynomial>> table5(int p_max, int q_max) {
  if (p_max < 0 || q_max < 0) throw std::invalid_argument("table bounds must be nonnegative");
  MultipartiteSolver solver;
  std::vector<std::vector<IntPolynomial>> out(p_max + 1);
  for (int p = 0; p <= p_max; ++p) {
    for (int q = 0; q <= q_max; ++q) {
      out[p].push_back(poincare_from_sa(p + q, solver.sa_polynomial({p, q})));
    }
  }
  return out;
}

enum class SequenceKind { snum, anum, bnum };

/// Row n = 0..upto of the s-, a- or b-numbers of a family: "path", "cycle",
/// "complete", "star" (index n is K_{1,n}) or "bipartite-row:q" (index p is K_{p,q}).
inline std::vector<Integer> invariant_sequence(SequenceKind what, std::string_view family, int upto) {
  if (upto < 0) throw std::invalid_argument("sequence length must be nonnegative");
  std::optional<int> row;
  if (family.rfind("bipartite-row:", 0) == 0) {
    const auto arg = family.substr(14);
    int q = -1;
    auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), q);
    if (ec != std::errc{} || ptr != arg.data() + arg.size() || q < 0) {
      throw std::invalid_argument("bad bipartite row '" + std::string(family) + "'");
    }
    row = q;
  } else if (family != "path" && family != "cycle" && family != "complete" && family != "star") {
    throw std::invalid_argument("unknown sequence family '" + std::string(family) + "'");
  }
  MultipartiteSolver solver;
  std::vector<Integer> out;
  for (int n = 0; n <= upto; ++n) {
    IntPolynomial sa;
    int vertices = n;
    if (row) {
      sa = solver.sa_polynomial({n, *row});
      vertices = n + *row;
    } else if (family == "path") {
      sa = family_sa_polynomial(Path{n});
    } else if (family == "cycle") {
      sa = family_sa_polynomial(Cycle{n});
    } else if (family == "complete") {
      sa = family_sa_polynomial(Complete{n});
    } else {
      sa = family_sa_polynomial(Star{n});
      vertices = n + 1;
    }
    const auto r = report_from_sa(vertices, sa);
    out.push_back(what == SequenceKind::snum ? r.snum : what == SequenceKind::anum ? r.anum : r.bnum);
  }
  return out;
}

} // namespace toric
