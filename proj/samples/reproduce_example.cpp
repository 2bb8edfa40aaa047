// Generators for V_12 (x) V_13 in characteristic 7, checked by brute force.

#include <iostream>

#include "jt/document.hpp"
#include "jt/jt.hpp"

int main() {
  const jt::Params P(7, 12, 13);
  const jt::Decomposition d = jt::decompose(P);
  const jt::GeneratorSet gens = jt::build_generators(P, d);

  std::cout << "lambda = " << d << "\n";
  for (const auto& g : gens)
    std::cout << "y_" << g.i << " = " << jt::format_vector(P, g.y) << "   [" << jt::to_string(g.tag) << "]\n";

  std::cout << "A_11^{-1} mod 7:\n" << jt::ny_inverse(P, 11).inverse();

  const auto report = jt::verify_all(P, d, gens);
  std::cout << "verified: " << std::boolalpha << report.total_ok << "\n";
  return report.total_ok ? 0 : 1;
}
