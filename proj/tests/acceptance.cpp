// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "toric/toric.hpp"
#include "test_support.hpp"

using namespace toric;
using toric::testing::brute_sa;

namespace {

/// Collects the reason of the first failed check in a criterion.
struct Outcome {
  bool ok = true;
  std::string detail;
  long checks = 0;

  template <class A, class B>
  void equal(const A& expected, const B& actual, const std::string& what) {
    ++checks;
    if (!(expected == actual) && ok) {
      ok = false;
      std::ostringstream os;
      os << what << ": expected " << expected << ", got " << actual;
      detail = os.str();
    }
  }

  void require(bool cond, const std::string& what) {
    ++checks;
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::ostream& operator<<(std::ostream& os, const std::vector<Integer>& v) {
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os << ']';
}

int failures = 0;

void criterion(int number, const std::string& title, double limit_seconds, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (out.ok && secs > limit_seconds) {
    out.ok = false;
    out.detail = "runtime above " + std::to_string(limit_seconds) + " s";
  }
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2f s / %.0f s", secs, limit_seconds);
  std::cout << (out.ok ? "PASS" : "FAIL") << "  [" << number << "] " << title << "  (" << out.checks << " checks, "
            << timing << ")";
  if (!out.ok) std::cout << "  -- " << out.detail;
  std::cout << std::endl;
  if (!out.ok) ++failures;
}

const IntPolynomial& engine_sa(const GraphFamily& f) {
  static std::map<std::string, IntPolynomial> cache;
  const Graph g = build_family(f);
  const std::string key = encode_graph6(g);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, signed_a_polynomial(g)).first;
  return it->second;
}

Integer snum(const GraphFamily& f) { return engine_sa(f).coeff(0); }
Integer bnum(const GraphFamily& f) { return engine_sa(f).evaluate(Integer(1)); }

Integer sign(long n) { return alternating_sign(n); }

} // namespace

int main() {
  criterion(1, "Table of Poincare polynomials of M(K_{p,q}), p <= 6, q <= 3", 10, [](Outcome& o) {
    // Rows p = 0..6, columns q = 0..3, as printed.
    const char* printed[7][4] = {
        {"1", "1", "1", "1"},
        {"1", "1+z", "1+2z", "1+3z+2z^2"},
        {"1", "1+2z", "1+4z+3z^2", "1+6z+13z^2"},
        {"1", "1+3z+2z^2", "1+6z+13z^2", "1+9z+39z^2+31z^3"},
        {"1", "1+4z+8z^2", "1+8z+34z^2+27z^3", "1+12z+86z^2+205z^3"},
        {"1", "1+5z+20z^2+16z^3", "1+10z+70z^2+167z^3", "1+15z+160z^2+763z^3+617z^4"},
        {"1", "1+6z+40z^2+96z^3", "1+12z+125z^2+597z^3+483z^4", "1+18z+267z^2+2123z^3+5151z^4"},
    };
    const auto table = table5(6, 3);
    for (int p = 0; p <= 6; ++p) {
      for (int q = 0; q <= 3; ++q) {
        const std::string where = "K_{" + std::to_string(p) + "," + std::to_string(q) + "}";
        o.equal(std::string(printed[p][q]), table[p][q].to_string("z"), where);
        if (p + q <= 9) {
          const Graph g = build_family(CompleteMultipartite{{p, q}});
          o.equal(table[p][q], poincare_from_sa(p + q, brute_sa(g)), where + " brute force");
          o.equal(table[p][q], poincare_polynomial(g), where + " engine");
        }
      }
    }
  });

  criterion(2, "Closed forms for P_n, C_n, K_n, K_{1,n-1} against the engine, n <= 12", 60, [](Outcome& o) {
    for (int n = 0; n <= 12; ++n) {
      std::vector<std::pair<std::string, GraphFamily>> fams{
          {"P", Path{n}}, {"K", Complete{n}}, {"K_{1,n-1}", Star{std::max(n - 1, 0)}}};
      if (n >= 3) fams.emplace_back("C", Cycle{n});
      for (const auto& [name, f] : fams) {
        if (name == "K_{1,n-1}" && n == 0) continue;
        const int v = family_vertex_count(f);
        const auto engine_c = c_numbers_from_sa(v, engine_sa(f));
        std::vector<Integer> even;
        for (int i = 0; i <= v; i += 2) even.push_back(engine_c[i]);
        o.equal(even, family_c_numbers(f), name + std::to_string(n) + " c-vector");
      }
    }
    const auto A = zigzag(13);
    for (int m = 0; 2 * m <= 12; ++m) {
      const Integer s_path = sign(m) * catalan(m);
      o.equal(s_path, snum(Path{2 * m}), "s(P_2n)");
      o.equal(abs(s_path), Integer(abs(snum(Path{2 * m}))), "a(P_2n)");
      o.equal(A[2 * m] * sign(m), snum(Complete{2 * m}), "s(K_2n)");
      if (m >= 2) o.equal(Integer(sign(m) * binomial(2 * m, m) / 2), snum(Cycle{2 * m}), "s(C_2n)");
      if (m >= 1) o.equal(A[2 * m - 1] * sign(m), snum(Star{2 * m - 1}), "s(K_{1,2n-1})");
    }
    for (int m = 0; 2 * m + 1 <= 12; ++m) {
      o.equal(sign(m) * catalan(m), bnum(Path{2 * m + 1}), "b(P_2n+1)");
      o.equal(Integer(0), bnum(Path{2 * m + 2}), "b(P_2n+2)");
      o.equal(A[2 * m + 1] * sign(m), bnum(Complete{2 * m + 1}), "b(K_2n+1)");
      o.equal(Integer(0), bnum(Complete{2 * m + 2}), "b(K_2n+2)");
      if (m >= 1) o.equal(Integer(sign(m) * binomial(2 * m, m)), bnum(Cycle{2 * m + 1}), "b(C_2n+1)");
      o.equal(A[2 * m] * sign(m), bnum(Star{2 * m}), "b(K_{1,2n})");
    }
  });

  criterion(3, "Identity catalog at orders 12 / 10 / 8", 120, [](Outcome& o) {
    for (const auto& e : identity_catalog()) {
      const auto r = verify_identity(e.id);
      o.require(r.passed, e.id + (r.mismatch ? " mismatch at " + r.mismatch->where : std::string()) + r.error);
      const int expected_order = e.arity == 1 ? 12 : e.arity == 2 ? 10 : 8;
      o.equal(expected_order, r.order, e.id + " order");
    }
  });

  criterion(4, "Complete multipartite recurrence: m = 2 with p+q <= 16, m = 3 with sum <= 12", 120, [](Outcome& o) {
    for (int p = 0; p <= 16; ++p) {
      for (int q = 0; p + q <= 16; ++q) {
        if ((p + q) % 2) continue;
        Integer sum = 0;
        for (int i = 0; i <= p; ++i)
          for (int j = 0; j <= q; ++j) sum += binomial(p, i) * binomial(q, j) * snum(CompleteMultipartite{{i, j}});
        const Integer rhs = (p == 0 || q == 0) ? 1 : 0;
        o.equal(rhs, sum, "K_{" + std::to_string(p) + "," + std::to_string(q) + "}");
      }
    }
    for (int a = 0; a <= 12; ++a) {
      for (int b = 0; a + b <= 12; ++b) {
        for (int c = 0; a + b + c <= 12; ++c) {
          if ((a + b + c) % 2) continue;
          Integer sum = 0;
          for (int i = 0; i <= a; ++i)
            for (int j = 0; j <= b; ++j)
              for (int k = 0; k <= c; ++k)
                sum += binomial(a, i) * binomial(b, j) * binomial(c, k) * snum(CompleteMultipartite{{i, j, k}});
          const int nonzero = (a > 0) + (b > 0) + (c > 0);
          o.equal(Integer(nonzero <= 1 ? 1 : 0), sum, "K_{" + std::to_string(a) + "," + std::to_string(b) + "," +
                                                          std::to_string(c) + "}");
        }
      }
    }
  });

  criterion(5, "Randomized properties on 600 graphs with |V| <= 10", 120, [](Outcome& o) {
    std::mt19937_64 rng(20240601);
    std::uniform_real_distribution<double> density(0.05, 0.95);
    for (int trial = 0; trial < 600; ++trial) {
      const int n1 = static_cast<int>(rng() % 7);
      const int n2 = static_cast<int>(rng() % (11 - n1));
      const Graph g1 = toric::testing::random_graph(rng, n1, density(rng));
      const Graph g2 = toric::testing::random_graph(rng, n2, density(rng));
      const Graph u = disjoint_union(g1, g2);
      const std::string tag = "case " + std::to_string(trial) + " (" + encode_graph6(u) + ")";

      const auto sa1 = signed_a_polynomial(g1), sa2 = signed_a_polynomial(g2), sau = signed_a_polynomial(u);
      o.equal(sa1 * sa2, sau, tag + " multiplicativity");

      const auto perm = toric::testing::random_permutation(rng, u.vertex_count());
      o.equal(sau, signed_a_polynomial(u.permuted(perm)), tag + " isomorphism invariance");

      const auto comps = connected_components(u, u.vertices());
      const bool odd = std::any_of(comps.begin(), comps.end(), [](VertexSet c) { return c.size() % 2 == 1; });
      const auto r = report_from_sa(u.vertex_count(), sau);
      if (odd) o.equal(Integer(0), r.snum, tag + " odd component");
      for (const auto& c : r.c) o.require(c >= 0, tag + " negative c-number");
      o.equal(r.anum, r.c.back(), tag + " c_n = a");
      o.equal(sau.evaluate(Integer(1)), r.bnum, tag + " b = sa(1)");
      o.equal(r.snum, signed_a_number(u, SnumRoute::submask_sum), tag + " routes");
    }
  });

  criterion(6, "2^n E_n((t+1)/2) = sa(K_n;t), n <= 12", 60, [](Outcome& o) {
    const auto E = euler_polynomials(12);
    const RationalPolynomial shift{Rational(1, 2), Rational(1, 2)};
    Rational scale(1);
    for (int n = 0; n <= 12; ++n) {
      o.equal(to_rational(engine_sa(Complete{n})), E[n].compose(shift) * scale, "n=" + std::to_string(n));
      scale *= 2;
    }
  });

  criterion(7, "Weighted Motzkin paths against sa(P_n;t) and the closed-form expansion, n <= 12", 60, [](Outcome& o) {
    const IntPolynomial t = IntPolynomial::var(), zero, minus_one(-1), t2m1 = t * t - IntPolynomial(1);
    const auto path = generalized_catalan(WeightSpec::from_parameters(t, zero, minus_one, minus_one), 12);
    for (int n = 0; n <= 12; ++n) o.equal(engine_sa(Path{n}), path[n], "B_" + std::to_string(n) + " = sa(P_n)");
    struct P {
      std::string name;
      IntPolynomial a, s, b, u;
    };
    const std::vector<P> parameterizations{
        {"(t,0,-1,-1)", t, zero, minus_one, minus_one},
        {"(0,0,-1,t^2-1)", zero, zero, minus_one, t2m1},
        {"(0,0,t^2-1,-1)", zero, zero, t2m1, minus_one},
    };
    for (const auto& p : parameterizations) {
      const auto dp = generalized_catalan(WeightSpec::from_parameters(p.a, p.s, p.b, p.u), 12);
      const auto gf = gfgc_series(p.a, p.s, p.b, p.u, 12);
      for (int n = 0; n <= 12; ++n) o.equal(to_rational(dp[n]), gf[n], p.name + " B_" + std::to_string(n));
    }
    const auto even = generalized_catalan(WeightSpec::from_parameters(zero, zero, t2m1, minus_one), 12);
    for (int n = 0; n <= 12; n += 2) o.equal(engine_sa(Path{n}), even[n], "even path B_" + std::to_string(n));
  });

  criterion(8, "Spot values", 10, [](Outcome& o) {
    const auto diamond = invariant_report(parse_edge_list("A B\nA C\nA D\nB C\nB D\n"));
    o.equal(toric::testing::ipoly({4, 0, -5, 0, 1}), diamond.sa_poly, "sa(diamond)");
    o.equal(Integer(0), diamond.bnum, "b(diamond)");
    o.equal(Integer(-61), signed_a_number(build_family(Complete{6})), "s(K_6)");
    o.equal(std::vector<Integer>{1, 9, 39, 31}, invariant_report(build_family(CompleteMultipartite{{3, 3}})).betti,
            "betti(K_{3,3})");
    o.equal(Integer(8), invariant_report(build_family(CompleteMultipartite{{2, 3}})).euler, "chi(K_{2,3})");
  });

  std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
