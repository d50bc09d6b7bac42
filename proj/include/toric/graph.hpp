#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "toric/error.hpp"

namespace toric {

/// Default bound on the number of vertices the invariant engine accepts.
inline constexpr int default_vertex_cap = 20;

/// Largest cap any override may request; a VertexSet is one 32-bit word.
inline constexpr int max_vertex_cap = 32;

inline void check_cap(int vertices, int cap) {
  if (cap < 0 || cap > max_vertex_cap) {
    throw std::invalid_argument("vertex cap must lie in [0, " + std::to_string(max_vertex_cap) + "]");
  }
  if (vertices > cap) throw cap_exceeded(vertices, cap);
}

/// Subset of the vertices {0, ..., n-1} of a graph, as a bitmask.
class VertexSet {
public:
  using mask_type = std::uint32_t;

  constexpr VertexSet() noexcept = default;
  constexpr explicit VertexSet(mask_type mask) noexcept : mask_(mask) {}

  /// {0, ..., n-1}
  static constexpr VertexSet full(int n) noexcept {
    return VertexSet(n >= 32 ? ~mask_type{0} : ((mask_type{1} << n) - 1));
  }
  static constexpr VertexSet singleton(int v) noexcept { return VertexSet(mask_type{1} << v); }

  constexpr mask_type mask() const noexcept { return mask_; }
  constexpr int size() const noexcept { return std::popcount(mask_); }
  constexpr bool empty() const noexcept { return mask_ == 0; }
  constexpr bool contains(int v) const noexcept { return (mask_ >> v) & 1u; }
  /// Least vertex; undefined for the empty set.
  constexpr int front() const noexcept { return std::countr_zero(mask_); }

  constexpr VertexSet with(int v) const noexcept { return VertexSet(mask_ | (mask_type{1} << v)); }
  constexpr VertexSet without(int v) const noexcept { return VertexSet(mask_ & ~(mask_type{1} << v)); }
  constexpr bool is_subset_of(VertexSet o) const noexcept { return (mask_ & ~o.mask_) == 0; }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) noexcept { return VertexSet(a.mask_ | b.mask_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) noexcept { return VertexSet(a.mask_ & b.mask_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) noexcept { return VertexSet(a.mask_ & ~b.mask_); }
  friend constexpr bool operator==(VertexSet a, VertexSet b) noexcept = default;

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (mask_type m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }

private:
  mask_type mask_ = 0;
};

struct Edge {
  int u;
  int v;
};

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Immutable once built; every constructor validates simplicity.
class Graph {
public:
  Graph() = default;

  Graph(int n, std::span<const Edge> edges, std::vector<std::string> labels = {})
      : n_(checked_count(n)), adj_(static_cast<std::size_t>(n)) {
    if (!labels.empty() && static_cast<int>(labels.size()) != n) {
      throw std::invalid_argument("label count does not match vertex count");
    }
    for (const Edge& e : edges) {
      if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) throw std::invalid_argument("edge endpoint out of range");
      if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
      adj_[e.u] = adj_[e.u].with(e.v);
      adj_[e.v] = adj_[e.v].with(e.u);
    }
    labels_ = std::move(labels);
  }

  Graph(int n, std::initializer_list<Edge> edges) : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  /// Null graph with no vertices.
  static Graph null() { return Graph(); }

  static Graph edgeless(int n) { return Graph(n, std::span<const Edge>{}); }

  int vertex_count() const noexcept { return n_; }
  VertexSet vertices() const noexcept { return VertexSet::full(n_); }
  VertexSet neighbors(int v) const { return adj_.at(v); }
  bool adjacent(int u, int v) const { return adj_.at(u).contains(v); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  std::size_t edge_count() const noexcept {
    std::size_t twice = 0;
    for (const auto& a : adj_) twice += a.size();
    return twice / 2;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u) {
      for (int v : adj_[u].to_vector()) {
        if (u < v) out.push_back({u, v});
      }
    }
    return out;
  }

  /// Vertices of the component of `start` inside the induced subgraph on `within`.
  VertexSet component_of(int start, VertexSet within) const noexcept {
    VertexSet seen = VertexSet::singleton(start);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
      VertexSet next;
      for (VertexSet::mask_type m = frontier.mask(); m != 0; m &= m - 1) {
        next = next | adj_[std::countr_zero(m)];
      }
      frontier = (next & within) - seen;
      seen = seen | frontier;
    }
    return seen;
  }

  /// Induced subgraph on `s`, renumbered in increasing vertex order.
  Graph induced(VertexSet s) const {
    std::vector<int> keep = s.to_vector();
    std::vector<int> index(n_, -1);
    for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<int>(i);
    std::vector<Edge> es;
    std::vector<std::string> ls;
    for (int u : keep) {
      if (u >= n_) throw std::invalid_argument("vertex set outside the graph");
      if (!labels_.empty()) ls.push_back(labels_[u]);
      for (int v : (adj_[u] & s).to_vector()) {
        if (u < v) es.push_back({index[u], index[v]});
      }
    }
    return Graph(static_cast<int>(keep.size()), es, std::move(ls));
  }

  /// Relabels vertex v as perm[v].
  Graph permuted(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("permutation size mismatch");
    std::vector<Edge> es;
    for (const Edge& e : edges()) es.push_back({perm[e.u], perm[e.v]});
    return Graph(n_, es);
  }

  /// Same vertex count and edge set; labels are ignored.
  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

private:
  static int checked_count(int n) {
    if (n < 0 || n > max_vertex_cap) {
      throw std::invalid_argument("vertex count " + std::to_string(n) + " outside [0, " +
                                  std::to_string(max_vertex_cap) + "]");
    }
    return n;
  }

  int n_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<std::string> labels_;
};

/// Components of the induced subgraph g|s, ordered by least vertex.
inline std::vector<VertexSet> connected_components(const Graph& g, VertexSet s) {
  if (!s.is_subset_of(g.vertices())) throw std::invalid_argument("vertex set outside the graph");
  std::vector<VertexSet> out;
  VertexSet rest = s;
  while (!rest.empty()) {
    VertexSet c = g.component_of(rest.front(), rest);
    out.push_back(c);
    rest = rest - c;
  }
  return out;
}

inline bool is_connected(const Graph& g) {
  return g.vertex_count() == 0 || g.component_of(0, g.vertices()) == g.vertices();
}

/// g1 followed by g2 with g2's vertices shifted by |V(g1)|; no cross edges.
inline Graph disjoint_union(const Graph& g1, const Graph& g2, int cap = default_vertex_cap) {
  const int n1 = g1.vertex_count();
  const int n = n1 + g2.vertex_count();
  check_cap(n, cap);
  std::vector<Edge> es = g1.edges();
  for (const Edge& e : g2.edges()) es.push_back({e.u + n1, e.v + n1});
  return Graph(n, es);
}

// Graph families.

struct Path { int n; };
struct Cycle { int n; };
struct Complete { int n; };
/// K_{1,m}: centre 0 plus m leaves, m+1 vertices.
struct Star { int m; };
struct CompleteMultipartite { std::vector<int> parts; };

using GraphFamily = std::variant<Path, Cycle, Complete, Star, CompleteMultipartite>;

inline int family_vertex_count(const GraphFamily& f) {
  return std::visit(
      [](const auto& x) -> int {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Star>) return x.m + 1;
        else if constexpr (std::is_same_v<T, CompleteMultipartite>) {
          long total = 0;
          for (int p : x.parts) total += p;
          return total > max_vertex_cap ? max_vertex_cap + 1 : static_cast<int>(total);
        } else {
          return x.n;
        }
      },
      f);
}

inline void validate_family(const GraphFamily& f) {
  std::visit(
      [](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Star>) {
          if (x.m < 0) throw std::invalid_argument("star size must be nonnegative");
        } else if constexpr (std::is_same_v<T, CompleteMultipartite>) {
          for (int p : x.parts) {
            if (p < 0) throw std::invalid_argument("part sizes must be nonnegative");
          }
        } else {
          if (x.n < 0) throw std::invalid_argument("family size must be nonnegative");
          if constexpr (std::is_same_v<T, Cycle>) {
            if (x.n == 1 || x.n == 2) throw std::invalid_argument("cycle on " + std::to_string(x.n) + " vertices is not simple");
          }
        }
      },
      f);
}

/// Canonical graph of a family: walk order for paths and cycles, star centre
/// 0, multipartite parts numbered consecutively.
inline Graph build_family(const GraphFamily& f, int cap = default_vertex_cap) {
  validate_family(f);
  const int n = family_vertex_count(f);
  check_cap(n, cap);
  std::vector<Edge> es;
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Path>) {
          for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
        } else if constexpr (std::is_same_v<T, Cycle>) {
          for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
          if (n >= 3) es.push_back({n - 1, 0});
        } else if constexpr (std::is_same_v<T, Complete>) {
          for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) es.push_back({i, j});
        } else if constexpr (std::is_same_v<T, Star>) {
          for (int i = 1; i < n; ++i) es.push_back({0, i});
        } else {
          std::vector<int> part_of;
          for (std::size_t p = 0; p < x.parts.size(); ++p) part_of.insert(part_of.end(), x.parts[p], static_cast<int>(p));
          for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
              if (part_of[i] != part_of[j]) es.push_back({i, j});
        }
      },
      f);
  return Graph(n, es);
}

} // namespace toric
