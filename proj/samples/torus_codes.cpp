// Exact minimum distances of the codes on the projective torus in P^2, q = 5.
#include <iostream>

#include "toric/toric.hpp"

int main() {
  using namespace toric;
  const auto f = FiniteField::make(5, 1);
  const auto T = PointConfiguration::torus(3);
  const auto X = enumerate_projective(T, f);
  const auto I = vanishing_ideal_saturation(T, f);
  CodeOptions opt;
  opt.torus_dim = 2;
  for (std::uint32_t d = 1; d <= 6; ++d) {
    const auto p = code_parameters(X, I, d, opt);
    std::cout << "d=" << d << "  [" << p.m << ", " << p.k << ", " << *p.exact << "]  formula "
              << *p.formula << "\n";
  }
}
