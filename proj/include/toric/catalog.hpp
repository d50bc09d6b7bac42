#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "toric/closed_forms.hpp"
#include "toric/graph.hpp"
#include "toric/invariants.hpp"
#include "toric/motzkin.hpp"
#include "toric/mseries.hpp"
#include "toric/series.hpp"

namespace toric {

/// One generating-function identity that can be expanded and checked.
struct CatalogEntry {
  std::string id;
  /// The identity in plain ASCII.
  std::string identity;
  /// Series variables, primary first; t and s (s^2 = z) are auxiliary.
  std::vector<std::string> variables;
  /// Number of graph-size variables (1, 2 or 3); `order` bounds their total degree.
  int arity;
  int default_order;
  /// How the expansion is truncated in terms of the order N.
  std::string truncation;
};

struct Mismatch {
  std::string where;
  std::string expected;
  std::string actual;
};

struct VerificationReport {
  std::string id;
  int order = 0;
  bool passed = false;
  std::size_t checked = 0;
  std::optional<Mismatch> mismatch;
  /// Set when the expansion itself failed (e.g. an odd power of s survived).
  std::string error;
};

class unknown_identity : public std::invalid_argument {
public:
  explicit unknown_identity(const std::string& id) : std::invalid_argument("unknown identity '" + id + "'") {}
};

namespace detail {

/// Collects coefficient comparisons and keeps the first mismatch.
class Checker {
public:
  void expect(const std::string& where, const Rational& expected, const Rational& actual) {
    ++checked_;
    if (expected != actual && !mismatch_) mismatch_ = Mismatch{where, expected.get_str(), actual.get_str()};
  }

  void expect(const std::string& where, const RationalPolynomial& expected, const RationalPolynomial& actual) {
    ++checked_;
    if (expected != actual && !mismatch_) mismatch_ = Mismatch{where, expected.to_string(), actual.to_string()};
  }

  void expect(const std::string& where, const IntPolynomial& expected, const RationalPolynomial& actual) {
    expect(where, to_rational(expected), actual);
  }

  void expect(const std::string& where, const Integer& expected, const Rational& actual) {
    expect(where, Rational(expected), actual);
  }

  VerificationReport finish(std::string id, int order) const {
    VerificationReport r;
    r.id = std::move(id);
    r.order = order;
    r.checked = checked_;
    r.mismatch = mismatch_;
    r.passed = !mismatch_ && checked_ > 0;
    return r;
  }

private:
  std::size_t checked_ = 0;
  std::optional<Mismatch> mismatch_;
};

inline std::string at(const std::string& what, long n) { return what + "[" + std::to_string(n) + "]"; }

inline std::string tuple_string(const std::vector<int>& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

inline RationalPolynomial tpoly(std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  for (long x : coeffs) c.emplace_back(x);
  return RationalPolynomial(std::move(c));
}

inline RationalPolynomial rconst(long v) { return RationalPolynomial(Rational(v)); }

inline Rational factorial_q(long n) { return Rational(factorial(n)); }

/// Reference invariants computed by the engine on concrete graphs.
class References {
public:
  explicit References(int cap) : cap_(cap) {}

  const IntPolynomial& sa(const GraphFamily& f) {
    const std::string key = family_key(f);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    return cache_[key] = signed_a_polynomial(build_family(f, cap_), SnumRoute::component_product, cap_);
  }

  /// Cycles on fewer than three vertices degenerate to paths (null graph, K_1, K_2).
  const IntPolynomial& cycle_sa(int n) { return n < 3 ? sa(Path{n}) : sa(Cycle{n}); }

  static int vertices(const GraphFamily& f) { return family_vertex_count(f); }

private:
  static std::string family_key(const GraphFamily& f) {
    return std::visit(
        [](const auto& x) -> std::string {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, Path>) return "P" + std::to_string(x.n);
          else if constexpr (std::is_same_v<T, Cycle>) return "C" + std::to_string(x.n);
          else if constexpr (std::is_same_v<T, Complete>) return "K" + std::to_string(x.n);
          else if constexpr (std::is_same_v<T, Star>) return "S" + std::to_string(x.m);
          else return "M" + tuple_string(x.parts);
        },
        f);
  }

  int cap_;
  std::map<std::string, IntPolynomial> cache_;
};

inline Integer snum_of(const IntPolynomial& sa) { return sa.coeff(0); }
inline Integer bnum_of(const IntPolynomial& sa) {
  Integer b = 0;
  for (const auto& c : sa.coefficients()) b += c;
  return b;
}
inline Integer anum_of(int n, const IntPolynomial& sa) {
  if (n % 2 == 1) return 0;
  return (n / 2) % 2 == 0 ? sa.coeff(0) : Integer(-sa.coeff(0));
}

// Univariate building blocks.

inline RationalSeries rx(int order) { return RationalSeries::x(order); }
inline RationalSeries rone(int order) { return RationalSeries::constant(order, Rational(1)); }
inline PolySeries px(int order) { return PolySeries::x(order); }
inline PolySeries pone(int order) { return PolySeries::constant(order, RationalPolynomial(1)); }

/// sum_n sa(P_n;t) x^n = (-1 + 2tx + sqrt(1+4x^2)) / (2tx - 2(t^2-1)x^2)
inline PolySeries path_sa_closed_form(int order) {
  const int work = order + 1;
  const auto x = px(work);
  const auto t = RationalPolynomial::var();
  const auto r = sqrt(pone(work) + (x * x).scaled(rconst(4)));
  const auto num = x.scaled(rconst(2) * t) + r - RationalPolynomial(1);
  const auto den = x.scaled(rconst(2) * t) - (x * x).scaled(rconst(2) * tpoly({-1, 0, 1}));
  return (num / den).truncated(order);
}

/// sum_n sa(P_2n;t) x^2n = (-(t^2+1) - (t^2-1) sqrt(1+4x^2)) / (-2t^2 + 2(t^2-1)^2 x^2)
inline PolySeries path_even_sa_closed_form(int order) {
  const auto x = px(order);
  const auto r = sqrt(pone(order) + (x * x).scaled(rconst(4)));
  const auto tm1 = tpoly({-1, 0, 1});
  const auto num = PolySeries::constant(order, -tpoly({1, 0, 1})) - r.scaled(tm1);
  const auto den = PolySeries::constant(order, tpoly({0, 0, -2})) + (x * x).scaled(rconst(2) * tm1 * tm1);
  return num / den;
}

/// sum_n sa(C_n;t) x^n = 1/2 + 1/(2 sqrt(1+4x^2)) * ((t^2+1)x + t sqrt(1+4x^2)) / (t - (t^2-1)x)
inline PolySeries cycle_sa_closed_form(int order) {
  const auto x = px(order);
  const auto t = RationalPolynomial::var();
  const auto r = sqrt(pone(order) + (x * x).scaled(rconst(4)));
  const auto inner = (x.scaled(tpoly({1, 0, 1})) + r.scaled(t)) /
                     (PolySeries::constant(order, t) - x.scaled(tpoly({-1, 0, 1})));
  return pone(order) * Rational(1, 2) + (inverse(r) * inner) * Rational(1, 2);
}

/// Graph-size tuples p with |p| <= n, in lexicographic order.
inline std::vector<std::vector<int>> tuples_up_to(int m, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> p(m, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == m) {
      out.push_back(p);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      p[i] = v;
      rec(i + 1, left - v);
    }
    p[i] = 0;
  };
  rec(0, n);
  return out;
}

inline Rational tuple_factorial(const std::vector<int>& p) {
  Rational f(1);
  for (int x : p) f *= factorial_q(x);
  return f;
}

inline std::vector<std::string> multipartite_vars(int m, const char* aux) {
  std::vector<std::string> v;
  for (int i = 1; i <= m; ++i) v.push_back("x" + std::to_string(i));
  if (aux) v.emplace_back(aux);
  return v;
}

/// ((1-m) + sum_i f(c x_i)) / f(c sum_i x_i) for f = cosh (circular = false)
/// or cos (circular = true); c is 1 or the auxiliary variable s.
inline MSeries multipartite_core(const std::shared_ptr<const MonomialLayout>& L, int m, bool circular,
                                 bool scale_by_aux) {
  auto scale = [&](const MSeries& u) { return scale_by_aux ? u * MSeries::var(L, m) : u; };
  auto f = [&](const MSeries& u) { return circular ? cos(scale(u)) : cosh(scale(u)); };
  MSeries num = MSeries::constant(L, Rational(1 - m));
  MSeries sum(L);
  for (int i = 0; i < m; ++i) {
    const MSeries xi = MSeries::var(L, i);
    num += f(xi);
    sum += xi;
  }
  return num / f(sum);
}

inline MSeries exp_of_sum(const std::shared_ptr<const MonomialLayout>& L, int m, bool times_t) {
  MSeries sum(L);
  for (int i = 0; i < m; ++i) sum += MSeries::var(L, i);
  if (times_t) sum = sum * MSeries::var(L, m);
  return exp(sum);
}

/// Engine references for complete multipartite graphs.
inline IntPolynomial multipartite_reference(References& refs, const std::vector<int>& p) {
  return refs.sa(CompleteMultipartite{p});
}

enum class MultipartiteKind { snum, anum, sa, bnum, poincare };

inline void check_multipartite(Checker& ck, References& refs, int m, int order, MultipartiteKind kind) {
  MultipartiteSolver solver;
  const auto tuples = tuples_up_to(m, order);
  switch (kind) {
  case MultipartiteKind::snum:
  case MultipartiteKind::anum:
  case MultipartiteKind::bnum: {
    const auto L = MonomialLayout::get(multipartite_vars(m, nullptr), order);
    MSeries f = multipartite_core(L, m, kind == MultipartiteKind::anum, false);
    if (kind == MultipartiteKind::bnum) f = exp_of_sum(L, m, false) * f;
    for (const auto& p : tuples) {
      const IntPolynomial sa = multipartite_reference(refs, p);
      const int n = static_cast<int>(std::accumulate(p.begin(), p.end(), 0));
      const Rational actual = f.coeff(p) * tuple_factorial(p);
      const std::string where = "K" + tuple_string(p);
      if (kind == MultipartiteKind::snum) {
        ck.expect(where, snum_of(sa), actual);
        ck.expect(where + " via recurrence", solver.snum(p), actual);
      } else if (kind == MultipartiteKind::anum) {
        ck.expect(where, anum_of(n, sa), actual);
      } else {
        ck.expect(where, bnum_of(sa), actual);
      }
    }
    break;
  }
  case MultipartiteKind::sa: {
    const int D = 2 * order;
    const auto L = MonomialLayout::get(multipartite_vars(m, "t"), D);
    const MSeries f = exp_of_sum(L, m, true) * multipartite_core(L, m, false, false);
    std::vector<int> e(m + 1);
    for (const auto& p : tuples) {
      const IntPolynomial sa = multipartite_reference(refs, p);
      const IntPolynomial closed = solver.sa_polynomial(p);
      const int n = static_cast<int>(std::accumulate(p.begin(), p.end(), 0));
      std::copy(p.begin(), p.end(), e.begin());
      for (int k = 0; n + k <= D; ++k) {
        e[m] = k;
        const Rational actual = f.coeff(e) * tuple_factorial(p);
        const std::string where = "K" + tuple_string(p) + " t^" + std::to_string(k);
        ck.expect(where, sa.coeff(k), actual);
        ck.expect(where + " via recurrence", closed.coeff(k), actual);
      }
    }
    break;
  }
  case MultipartiteKind::poincare: {
    const int D = 2 * order;
    const auto L = MonomialLayout::get(multipartite_vars(m, "s"), D);
    const MSeries f = exp_of_sum(L, m, false) * multipartite_core(L, m, true, true);
    const auto collapsed = f.substitute_square(m);
    for (const auto& p : tuples) {
      const int n = static_cast<int>(std::accumulate(p.begin(), p.end(), 0));
      const IntPolynomial P = poincare_from_sa(n, multipartite_reference(refs, p));
      std::vector<int> key(p);
      key.push_back(0);
      for (int j = 0; n + 2 * j <= D; ++j) {
        key[m] = j;
        const Rational actual = collapsed.at(key) * tuple_factorial(p);
        ck.expect("K" + tuple_string(p) + " z^" + std::to_string(j), P.coeff(j), actual);
      }
    }
    break;
  }
  }
}

/// Row EGF sum_p s(K_{p,q}) x^p/p! read off the bivariate EGF of signed
/// a-numbers as the coefficient of y^q/q!.
inline RationalSeries sa_q_series_impl(int q, int order) {
  if (q < 0 || order < 0) throw std::invalid_argument("sa_q_series: negative argument");
  const auto L = MonomialLayout::get({"x", "y"}, order + q);
  const MSeries f = multipartite_core(L, 2, false, false);
  RationalSeries row(order);
  for (int p = 0; p <= order; ++p) row[p] = f.coeff({p, q}) * factorial_q(q);
  return row;
}

using Runner = std::function<void(Checker&, References&, int order)>;

struct CatalogItem {
  CatalogEntry entry;
  Runner run;
};

inline std::vector<CatalogItem> build_catalog() {
  std::vector<CatalogItem> items;
  auto add = [&](std::string id, std::string identity, std::vector<std::string> vars, int arity, int order, Runner run) {
    items.push_back({CatalogEntry{std::move(id), std::move(identity), std::move(vars), arity, order, {}}, std::move(run)});
  };

  add("path_sa_gf", "sum_n sa(P_n;t) x^n = (-1+2tx+sqrt(1+4x^2)) / (2tx-2(t^2-1)x^2)", {"x", "t"}, 1, 12,
      [](Checker& ck, References& refs, int N) {
        const auto f = path_sa_closed_form(N);
        for (int n = 0; n <= N; ++n) ck.expect(at("P", n), refs.sa(Path{n}), f[n]);
      });

  add("path_even_sa_gf",
      "sum_n sa(P_2n;t) x^2n = (-(t^2+1)-(t^2-1)sqrt(1+4x^2)) / (-2t^2+2(t^2-1)^2 x^2)", {"x", "t"}, 1, 12,
      [](Checker& ck, References& refs, int N) {
        const auto f = path_even_sa_closed_form(N);
        for (int n = 0; n <= N; ++n) {
          ck.expect(at("P", n), n % 2 == 0 ? refs.sa(Path{n}) : IntPolynomial{}, f[n]);
        }
      });

  add("cycle_sa_gf",
      "sum_n sa(C_n;t) x^n = 1/2 + 1/(2 sqrt(1+4x^2)) * ((t^2+1)x + t sqrt(1+4x^2)) / (t-(t^2-1)x)", {"x", "t"}, 1,
      12, [](Checker& ck, References& refs, int N) {
        const auto f = cycle_sa_closed_form(N);
        for (int n = 0; n <= N; ++n) {
          ck.expect(at("C", n), refs.cycle_sa(n), f[n]);
          ck.expect(at("C", n) + " closed form", family_sa_polynomial(Cycle{n}), f[n]);
        }
      });

  add("complete_sa_egf", "sum_n sa(K_n;t) x^n/n! = e^{tx} sech x", {"x", "t"}, 1, 12,
      [](Checker& ck, References& refs, int N) {
        const auto x = px(N);
        const auto v = egf_values(exp(x.scaled(RationalPolynomial::var())) * sech(x));
        for (int n = 0; n <= N; ++n) {
          ck.expect(at("K", n), refs.sa(Complete{n}), v[n]);
          ck.expect(at("K", n) + " closed form", family_sa_polynomial(Complete{n}), v[n]);
        }
      });

  add("star_sa_egf", "sum_n sa(K_{1,n};t) x^n/n! = e^{tx} (t - tanh x)", {"x", "t"}, 1, 12,
      [](Checker& ck, References& refs, int N) {
        const auto x = px(N);
        const auto t = RationalPolynomial::var();
        const auto v = egf_values(exp(x.scaled(t)) * (PolySeries::constant(N, t) - tanh(x)));
        for (int n = 0; n <= N; ++n) {
          ck.expect(at("K_{1,n}", n), refs.sa(Star{n}), v[n]);
          ck.expect(at("K_{1,n}", n) + " closed form", family_sa_polynomial(Star{n}), v[n]);
        }
      });

  add("catalan_triangle_gf", "sum_{n,i} Cat_{n,i} w^i z^n = Cat(wz) / (1 - z Cat(wz)), Cat(x) = (1-sqrt(1-4x))/(2x)",
      {"z", "w"}, 1, 12, [](Checker& ck, References&, int N) {
        const int work = N + 1;
        const auto z = px(work);
        const auto w = RationalPolynomial::var();
        const auto r = sqrt(pone(work) - z.scaled(rconst(4) * w));
        const auto cat = (pone(work) - r) / z.scaled(rconst(2) * w); // order N
        const auto f = cat * inverse(pone(N) - px(N) * cat);
        for (int n = 0; n <= N; ++n) {
          std::vector<Rational> row;
          for (int i = 0; i <= n; ++i) row.emplace_back(catalan_triangle(n, i));
          ck.expect(at("z^", n), RationalPolynomial(row), f[n]);
        }
      });

  add("central_binomial_gf",
      "sum_n C(2n,n) z^n = 1/sqrt(1-4z); sum_{n,k} C(2n+k,n) w^k z^n = 1/sqrt(1-4z) * 1/(1 - w (1-sqrt(1-4z))/(2z))",
      {"z", "w"}, 1, 12, [](Checker& ck, References&, int N) {
        const auto z = rx(N);
        const auto f = inverse(sqrt(rone(N) - z * Rational(4)));
        for (int n = 0; n <= N; ++n) ck.expect(at("C(2n,n)", n), binomial(2 * n, n), f[n]);

        const int D = 2 * N;
        const auto L = MonomialLayout::get({"z", "w"}, D);
        const auto zz = rx(D + 1);
        const auto root = sqrt(rone(D + 1) - zz * Rational(4));
        const auto cat = ((rone(D + 1) - root) * Rational(1, 2)).shifted_down(1);
        const MSeries inv_root = MSeries::embed(L, 0, inverse(root.truncated(D)));
        const MSeries g = inv_root * inverse(MSeries::constant(L, 1) - MSeries::var(L, 1) * MSeries::embed(L, 0, cat));
        for (int n = 0; n <= N; ++n) {
          for (int k = 0; k <= N; ++k) {
            ck.expect("C(2n+k,n) n=" + std::to_string(n) + " k=" + std::to_string(k), binomial(2 * n + k, n),
                      g.coeff({n, k}));
          }
        }
      });

  add("zigzag_egf", "sum_n A_n z^n/n! = sec z + tan z", {"z"}, 1, 12, [](Checker& ck, References&, int N) {
    const auto z = rx(N);
    const auto v = egf_values(sec(z) + tan(z));
    const auto A = zigzag(N);
    for (int n = 0; n <= N; ++n) ck.expect(at("A", n), A[n], v[n]);
  });

  // t = 0: signed a-numbers.
  add("snum_t0_path", "sum_n s(P_n) x^n = (-1+sqrt(1+4x^2))/(2x^2) = sum_m (-1)^m Cat_m x^2m", {"x"}, 1, 12,
      [](Checker& ck, References& refs, int N) {
        const auto x = rx(N + 2);
        const auto f = ((sqrt(rone(N + 2) + x * x * Rational(4)) - Rational(1)) * Rational(1, 2)).shifted_down(2);
        for (int n = 0; n <= N; ++n) {
          ck.expect(at("s(P)", n), snum_of(refs.sa(Path{n})), f[n]);
          const Integer series = n % 2 ? Integer(0) : Integer(alternating_sign(n / 2) * catalan(n / 2));
          ck.expect(at("(-1)^m Cat_m", n), series, f[n]);
        }
      });

  add("snum_t0_cycle", "sum_n s(C_n) x^n = 1/2 + 1/(2 sqrt(1+4x^2)) = 1 + sum_{m>=1} (-1)^m/2 C(2m,m) x^2m", {"x"}, 1,
      12, [](Checker& ck, References& refs, int N) {
        const auto x = rx(N);
        const auto f = (rone(N) + inverse(sqrt(rone(N) + x * x * Rational(4)))) * Rational(1, 2);
        for (int n = 0; n <= N; ++n) {
          ck.expect(at("s(C)", n), snum_of(refs.cycle_sa(n)), f[n]);
          Rational series = n == 0 ? Rational(1) : Rational(0);
          if (n > 0 && n % 2 == 0) series = Rational(alternating_sign(n / 2) * binomial(n, n / 2)) / 2;
          ck.expect(at("series", n), series, f[n]);
        }
      });

  add("snum_t0_complete", "sum_n s(K_n) x^n/n! = sech x = sum_m (-1)^m A_2m x^2m/(2m)!", {"x"}, 1, 12,
      [](Checker& ck, References& refs, int N) {
        const auto v = egf_values(sech(rx(N)));
        const auto A = zigzag(N);
        for (int n = 0; n <= N; ++n) {
          ck.expect(at("s(K)", n), snum_of(refs.sa(Complete{n})), v[n]);
          ck.expect(at("(-1)^m A_2m", n), n % 2 ? Integer(0) : Integer(alternating_sign(n / 2) * A[n]), v[n]);
        }
      });

  add("snum_t0_star", "sum_n s(K_{1,n}) x^n/n! = -tanh x = sum_{m>=1} (-1)^m A_{2m-1} x^{2m-1}/(2m-1)!", {"x"}, 1,
      12, [](Checker& ck, References& refs, int N) {
        const auto v = egf_values(-tanh(rx(N)));
        const auto A = zigzag(N);
        for (int n = 0; n <= N; ++n) {
          ck.expect(at("s(K_{1,n})", n), snum_of(refs.sa(Star{n})), v[n]);
          ck.expect(at("(-1)^m A_{2m-1}", n), n % 2 ? Integer(alternating_sign((n + 1) / 2) * A[n]) : Integer(0),
                    v[n]);
        }
      });

  // t = 1: b-numbers.
  add("bnum_t1_path", "sum_n b(P_n) x^n = 1 + (-1+sqrt(1+4x^2))/(2x) = 1 + sum_m (-1)^m Cat_m x^{2m+1}", {"x"}, 1,
      12, [](Checker& ck, References& refs, int N) {
        const auto x = rx(N + 1);
        const auto f =
            rone(N) + ((sqrt(rone(N + 1) + x * x * Rational(4)) - Rational(1)) * Rational(1, 2)).shifted_down(1);
        for (int n = 0; n <= N; ++n) {
          ck.expect(at("b(P)", n), bnum_of(refs.sa(Path{n})), f[n]);
          Integer series = n == 0 ? 1 : 0;
          if (n % 2 == 1) series = alternating_sign((n - 1) / 2) * catalan((n - 1) / 2);
          ck.expect(at("series", n), series, f[n]);
        }
      });

  add("bnum_t1_cycle", "sum_n b(C_n) x^n = 1 + x/sqrt(1+4x^2) = 1 + sum_m (-1)^m C(2m,m) x^{2m+1}", {"x"}, 1, 12,
      [](Checker& ck, References& refs, int N) {
        const auto x = rx(N);
        const auto f = rone(N) + x * inverse(sqrt(rone(N) + x * x * Rational(4)));
        for (int n = 0; n <= N; ++n) {
          ck.expect(at("b(C)", n), bnum_of(refs.cycle_sa(n)), f[n]);
          Integer series = n == 0 ? 1 : 0;
          if (n % 2 == 1) series = alternating_sign((n - 1) / 2) * binomial(n - 1, (n - 1) / 2);
          ck.expect(at("series", n), series, f[n]);
        }
      });

  add("bnum_t1_complete", "sum_n b(K_n) x^n/n! = 1 + tanh x = 1 + sum_m (-1)^m A_{2m+1} x^{2m+1}/(2m+1)!", {"x"}, 1,
      12, [](Checker& ck, References& refs, int N) {
        const auto v = egf_values(rone(N) + tanh(rx(N)));
        const auto A = zigzag(N);
        for (int n = 0; n <= N; ++n) {
          ck.expect(at("b(K)", n), bnum_of(refs.sa(Complete{n})), v[n]);
          Integer series = n == 0 ? 1 : 0;
          if (n % 2 == 1) series = alternating_sign((n - 1) / 2) * A[n];
          ck.expect(at("series", n), series, v[n]);
        }
      });

  add("bnum_t1_star", "sum_n b(K_{1,n}) x^n/n! = sech x = sum_m (-1)^m A_2m x^2m/(2m)!", {"x"}, 1, 12,
      [](Checker& ck, References& refs, int N) {
        const auto v = egf_values(sech(rx(N)));
        const auto A = zigzag(N);
        for (int n = 0; n <= N; ++n) {
          ck.expect(at("b(K_{1,n})", n), bnum_of(refs.sa(Star{n})), v[n]);
          ck.expect(at("series", n), n % 2 ? Integer(0) : Integer(alternating_sign(n / 2) * A[n]), v[n]);
        }
      });

  // Poincare polynomials; z enters as a polynomial coefficient variable, or
  // through s with s^2 = z.
  add("poincare_path", "sum_n P_{M(P_n)}(z) x^n = (-1+2x+sqrt(1-4zx^2)) / (2x-2(1+z)x^2)", {"x", "z"}, 1, 12,
      [](Checker& ck, References& refs, int N) {
        const int work = N + 1;
        const auto x = px(work);
        const auto z = RationalPolynomial::var();
        const auto r = sqrt(pone(work) - (x * x).scaled(rconst(4) * z));
        const auto num = x * Rational(2) + r - RationalPolynomial(1);
        const auto den = x * Rational(2) - (x * x).scaled(rconst(2) * tpoly({1, 1}));
        const auto f = (num / den).truncated(N);
        for (int n = 0; n <= N; ++n) ck.expect(at("P_M(P)", n), poincare_from_sa(n, refs.sa(Path{n})), f[n]);
      });

  add("poincare_cycle",
      "sum_n P_{M(C_n)}(z) x^n = 1/2 + 1/(2 sqrt(1-4zx^2)) * ((1-z)x + sqrt(1-4zx^2)) / (1-(1+z)x)", {"x", "z"}, 1,
      12, [](Checker& ck, References& refs, int N) {
        const auto x = px(N);
        const auto z = RationalPolynomial::var();
        const auto r = sqrt(pone(N) - (x * x).scaled(rconst(4) * z));
        const auto inner = (x.scaled(tpoly({1, -1})) + r) * inverse(pone(N) - x.scaled(tpoly({1, 1})));
        const auto f = pone(N) * Rational(1, 2) + (inverse(r) * inner) * Rational(1, 2);
        for (int n = 0; n <= N; ++n) ck.expect(at("P_M(C)", n), poincare_from_sa(n, refs.cycle_sa(n)), f[n]);
      });

  add("poincare_complete", "sum_n P_{M(K_n)}(z) x^n/n! = e^x sec(x sqrt z)", {"x", "s"}, 1, 12,
      [](Checker& ck, References& refs, int N) {
        const auto x = px(N);
        const auto s = RationalPolynomial::var();
        const auto v = egf_values(exp(x) * sec(x.scaled(s)));
        for (int n = 0; n <= N; ++n) {
          ck.expect(at("P_M(K)", n), poincare_from_sa(n, refs.sa(Complete{n})), substitute_square(v[n]));
        }
      });

  add("poincare_star", "sum_n P_{M(K_{1,n})}(z) x^n/n! = e^x (1 + sqrt z tan(x sqrt z))", {"x", "s"}, 1, 12,
      [](Checker& ck, References& refs, int N) {
        const auto x = px(N);
        const auto s = RationalPolynomial::var();
        const auto v = egf_values(exp(x) * (pone(N) + tan(x.scaled(s)).scaled(s)));
        for (int n = 0; n <= N; ++n) {
          ck.expect(at("P_M(K_{1,n})", n), poincare_from_sa(n + 1, refs.sa(Star{n})), substitute_square(v[n]));
        }
      });

  // Complete bipartite and tripartite graphs.
  struct Multi {
    const char* stem;
    MultipartiteKind kind;
    const char* formula2;
    const char* formula3;
    const char* aux;
  };
  const Multi multis[] = {
      {"snum_egf", MultipartiteKind::snum, "sum s(K_{p,q}) x^p/p! y^q/q! = (cosh x + cosh y - 1)/cosh(x+y)",
       "sum s(K_{p1,p2,p3}) prod x_i^p_i/p_i! = (-2 + sum cosh x_i)/cosh(x1+x2+x3)", nullptr},
      {"anum_egf", MultipartiteKind::anum, "sum a(K_{p,q}) x^p/p! y^q/q! = (cos x + cos y - 1)/cos(x+y)",
       "sum a(K_{p1,p2,p3}) prod x_i^p_i/p_i! = (-2 + sum cos x_i)/cos(x1+x2+x3)", nullptr},
      {"sa_egf", MultipartiteKind::sa,
       "sum sa(K_{p,q};t) x^p/p! y^q/q! = e^{t(x+y)} (cosh x + cosh y - 1)/cosh(x+y)",
       "sum sa(K_{p1,p2,p3};t) prod x_i^p_i/p_i! = e^{t(x1+x2+x3)} (-2 + sum cosh x_i)/cosh(x1+x2+x3)", "t"},
      {"bnum_egf", MultipartiteKind::bnum, "sum b(K_{p,q}) x^p/p! y^q/q! = e^{x+y} (cosh x + cosh y - 1)/cosh(x+y)",
       "sum b(K_{p1,p2,p3}) prod x_i^p_i/p_i! = e^{x1+x2+x3} (-2 + sum cosh x_i)/cosh(x1+x2+x3)", nullptr},
      {"poincare_gf", MultipartiteKind::poincare,
       "sum P_{M(K_{p,q})}(z) x^p/p! y^q/q! = e^{x+y} (cos(x sqrt z) + cos(y sqrt z) - 1)/cos(x sqrt z + y sqrt z)",
       "sum P_{M(K_{p1,p2,p3})}(z) prod x_i^p_i/p_i! = e^{x1+x2+x3} (-2 + sum cos(x_i sqrt z))/cos(sum x_i sqrt z)",
       "s"},
  };
  for (const Multi& mt : multis) {
    for (int m : {2, 3}) {
      const std::string id = std::string(m == 2 ? "bipartite_" : "multipartite_") + mt.stem;
      const MultipartiteKind kind = mt.kind;
      add(id, m == 2 ? mt.formula2 : mt.formula3, multipartite_vars(m, mt.aux), m, m == 2 ? 10 : 8,
          [m, kind](Checker& ck, References& refs, int N) { check_multipartite(ck, refs, m, N, kind); });
    }
  }

  add("sa_q_closed_forms",
      "SA_q(x) = d^q/dy^q|_{y=0} (cosh x + cosh y - 1)/cosh(x+y): SA_0 = 1, SA_1 = -tanh x, SA_2 = -2sech^2 x + "
      "sech x + 1, SA_3 = (6sech^2 x - 3sech x - 1) tanh x, SA_4 = 24sech^4 x - 12sech^3 x - 20sech^2 x + 7sech x + 1",
      {"x", "y"}, 1, 12, [](Checker& ck, References& refs, int N) {
        const auto S = sech(rx(N));
        const auto T = tanh(rx(N));
        const auto S2 = S * S;
        const std::vector<RationalSeries> closed{
            rone(N),
            -T,
            S2 * Rational(-2) + S + rone(N),
            (S2 * Rational(6) - S * Rational(3) - rone(N)) * T,
            S2 * S2 * Rational(24) - S2 * S * Rational(12) - S2 * Rational(20) + S * Rational(7) + rone(N),
        };
        for (int q = 0; q <= 4; ++q) {
          const auto row = sa_q_series_impl(q, N);
          for (int p = 0; p <= N; ++p) {
            const std::string where = "SA_" + std::to_string(q) + " x^" + std::to_string(p);
            ck.expect(where, closed[q][p], row[p]);
            ck.expect(where + " s(K_{p,q})", snum_of(refs.sa(CompleteMultipartite{{p, q}})), row[p] * factorial_q(p));
          }
        }
      });

  add("euler_polynomial_egf",
      "sum_n E_n(t) x^n/n! = 2e^{xt}/(e^x+1), with sa(K_n;t) = 2^n E_n((t+1)/2)", {"x", "t"}, 1, 12,
      [](Checker& ck, References& refs, int N) {
        const auto E = euler_polynomials(N);
        const RationalPolynomial half_shift{Rational(1, 2), Rational(1, 2)};
        Rational pow2(1);
        for (int n = 0; n <= N; ++n) {
          ck.expect(at("2^n E_n((t+1)/2)", n), refs.sa(Complete{n}), E[n].compose(half_shift) * pow2);
          pow2 *= 2;
        }
      });

  add("generalized_catalan_gf",
      "B(z) = [(2u-b) + (bs-2au)z - b sqrt(1-2sz+(s^2-4u)z^2)] / [2(u-b) + 2(bs-2au+ab)z + 2(a^2u-abs+b^2)z^2]",
      {"z", "t"}, 1, 12, [](Checker& ck, References& refs, int N) {
        const IntPolynomial t = IntPolynomial::var();
        const IntPolynomial zero, one(1), minus_one(-1);
        const IntPolynomial t2m1 = t * t - one;
        struct Params {
          const char* name;
          IntPolynomial a, s, b, u;
        };
        const std::vector<Params> params{
            {"(t,0,-1,-1)", t, zero, minus_one, minus_one},
            {"(0,0,t^2-1,-1)", zero, zero, t2m1, minus_one},
            {"(0,0,-1,t^2-1)", zero, zero, minus_one, t2m1},
            {"(0,0,1,1)", zero, zero, one, one},
            {"(1,1,1,1)", one, one, one, one},
        };
        for (const auto& p : params) {
          const auto paths = generalized_catalan(WeightSpec::from_parameters(p.a, p.s, p.b, p.u), N);
          const auto closed = gfgc_series(p.a, p.s, p.b, p.u, N);
          for (int n = 0; n <= N; ++n) ck.expect(std::string(p.name) + " " + at("B", n), paths[n], closed[n]);
        }
        const auto path_weights = generalized_catalan(WeightSpec::from_parameters(t, zero, minus_one, minus_one), N);
        const auto even_weights = generalized_catalan(WeightSpec::from_parameters(zero, zero, t2m1, minus_one), N);
        const auto even_gf = path_even_sa_closed_form(N);
        for (int n = 0; n <= N; ++n) {
          ck.expect(at("B = sa(P)", n), refs.sa(Path{n}), to_rational(path_weights[n]));
          ck.expect(at("B = even path GF", n), to_rational(even_weights[n]), even_gf[n]);
        }
      });

  for (auto& item : items) {
    auto& e = item.entry;
    if (e.id == "sa_q_closed_forms") e.truncation = "total degree N+q in (x,y)";
    else if (e.id == "central_binomial_gf") e.truncation = "degree N in z; total degree 2N in (z,w)";
    else if (e.arity == 1) e.truncation = "degree N in " + e.variables.front();
    else if (static_cast<int>(e.variables.size()) > e.arity) e.truncation = "total degree 2N in all variables";
    else e.truncation = "total degree N";
  }
  return items;
}

/// Alternative spellings accepted by verify_identity.
inline std::string canonical_identity_id(std::string_view id) {
  static const std::map<std::string, std::string, std::less<>> aliases{
      {"path_snum_t0", "snum_t0_path"},         {"cycle_snum_t0", "snum_t0_cycle"},
      {"complete_snum_t0", "snum_t0_complete"}, {"star_snum_t0", "snum_t0_star"},
      {"path_bnum_t1", "bnum_t1_path"},         {"cycle_bnum_t1", "bnum_t1_cycle"},
      {"complete_bnum_t1", "bnum_t1_complete"}, {"star_bnum_t1", "bnum_t1_star"},
  };
  if (auto it = aliases.find(id); it != aliases.end()) return it->second;
  return std::string(id);
}

inline const std::vector<CatalogItem>& catalog_items() {
  static const std::vector<CatalogItem> items = build_catalog();
  return items;
}

} // namespace detail

/// The identity catalog in a fixed order.
inline std::vector<CatalogEntry> identity_catalog() {
  std::vector<CatalogEntry> out;
  for (const auto& item : detail::catalog_items()) out.push_back(item.entry);
  return out;
}

/// Expands one identity to the given order (its default when absent) and
/// compares every coefficient against independently computed invariants.
inline VerificationReport verify_identity(std::string_view id, std::optional<int> order = std::nullopt,
                                          int cap = default_vertex_cap) {
  const auto& items = detail::catalog_items();
  const std::string key = detail::canonical_identity_id(id);
  auto it = std::find_if(items.begin(), items.end(), [&](const auto& item) { return item.entry.id == key; });
  if (it == items.end()) throw unknown_identity(std::string(id));
  const int N = order.value_or(it->entry.default_order);
  if (N < 0) throw std::invalid_argument("order must be nonnegative");
  detail::Checker ck;
  detail::References refs(cap);
  try {
    it->run(ck, refs, N);
  } catch (const series_error& e) {
    auto r = ck.finish(it->entry.id, N);
    r.passed = false;
    r.error = e.what();
    return r;
  }
  return ck.finish(it->entry.id, N);
}

/// sum_p s(K_{p,q}) x^p/p!, the coefficient of y^q/q! in the bivariate EGF.
inline RationalSeries sa_q_series(int q, int order) { return detail::sa_q_series_impl(q, order); }

} // namespace toric
