// Prints a handful of invariants computed through the library.
#include <iostream>

#include "toric/toric.hpp"

int main() {
  using namespace toric;

  const Graph diamond = parse_edge_list("A B\nA C\nA D\nB C\nB D\n");
  const auto r = invariant_report(diamond);
  std::cout << "sa(diamond;t) = " << r.sa_poly.to_string("t") << ", b = " << r.bnum << '\n';

  std::cout << "s(K_6) = " << signed_a_number(build_family(Complete{6})) << '\n';

  const auto k33 = invariant_report(build_family(CompleteMultipartite{{3, 3}}));
  std::cout << "P(M(K_{3,3}))(z) = " << k33.poincare.to_string("z") << '\n';

  const auto k23 = invariant_report(build_family(CompleteMultipartite{{2, 3}}));
  std::cout << "chi(M(K_{2,3})) = " << k23.euler << '\n';

  const auto v = verify_identity("complete_sa_egf", 10);
  std::cout << "e^{tx} sech x to order 10: " << (v.passed ? "pass" : "fail") << " (" << v.checked
            << " coefficients)\n";
}
