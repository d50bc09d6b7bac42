#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "toric/graph.hpp"
#include "toric/integer.hpp"
#include "toric/polynomial.hpp"

namespace toric::testing {

/// Straight transcription of the recursive definition of s(G) on an
/// adjacency matrix, memoized by vertex subset.
class BruteForce {
public:
  explicit BruteForce(const Graph& g) : n_(g.vertex_count()), adj_(n_, std::vector<bool>(n_)) {
    for (const Edge& e : g.edges()) adj_[e.u][e.v] = adj_[e.v][e.u] = true;
  }

  Integer s(std::uint32_t subset) {
    if (auto it = memo_.find(subset); it != memo_.end()) return it->second;
    Integer value;
    if (subset == 0) {
      value = 1;
    } else {
      auto comps = components(subset);
      bool odd = false;
      for (auto c : comps) odd = odd || (__builtin_popcount(c) % 2 == 1);
      if (odd) {
        value = 0;
      } else if (comps.size() > 1) {
        value = 1;
        for (auto c : comps) value *= s(c);
      } else {
        value = 0;
        for (std::uint32_t sub = (subset - 1) & subset;; sub = (sub - 1) & subset) {
          value -= s(sub);
          if (sub == 0) break;
        }
      }
    }
    memo_[subset] = value;
    return value;
  }

  IntPolynomial sa() {
    std::vector<Integer> c(n_ + 1);
    const std::uint32_t full = n_ == 32 ? ~0u : ((1u << n_) - 1);
    for (std::uint32_t sub = 0;; ++sub) {
      c[n_ - __builtin_popcount(sub)] += s(sub);
      if (sub == full) break;
    }
    return IntPolynomial(std::move(c));
  }

private:
  std::vector<std::uint32_t> components(std::uint32_t subset) const {
    std::vector<std::uint32_t> out;
    std::uint32_t left = subset;
    while (left) {
      int start = __builtin_ctz(left);
      std::uint32_t comp = 1u << start;
      std::vector<int> stack{start};
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < n_; ++v) {
          if (adj_[u][v] && (subset >> v & 1) && !(comp >> v & 1)) {
            comp |= 1u << v;
            stack.push_back(v);
          }
        }
      }
      out.push_back(comp);
      left &= ~comp;
    }
    return out;
  }

  int n_;
  std::vector<std::vector<bool>> adj_;
  std::map<std::uint32_t, Integer> memo_;
};

inline IntPolynomial brute_sa(const Graph& g) { return BruteForce(g).sa(); }

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) es.push_back({u, v});
  return Graph(n, es);
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline IntPolynomial ipoly(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return IntPolynomial(std::move(v));
}

} // namespace toric::testing
