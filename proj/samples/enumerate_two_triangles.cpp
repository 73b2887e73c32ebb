// Two disjoint triangles over GF(7): the toric set, its ideal and h-vector.
#include <iostream>

#include "toric/toric.hpp"

int main() {
  using namespace toric;
  const auto f = FiniteField::make(7, 1);
  const auto A = incidence_configuration(two_triangles());
  const auto X = enumerate_projective(A, f, {100'000'000, 4});
  std::cout << "|X| = " << X.size() << "\n";

  const auto I = vanishing_ideal_elimination(A, f);
  std::cout << I.generators().size() << " generators, e.g. " << to_string(I.generators().front()) << "\n";

  const auto hp = hilbert_series(I);
  std::cout << "h =";
  for (auto x : hp.h) std::cout << ' ' << x;
  std::cout << "\nregularity " << hp.regularity << ", degree " << hp.degree << "\n";
}
