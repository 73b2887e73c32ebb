// K5 over GF(7): Singleton bound vs graph bound, d = 1..20.
#include <iostream>

#include "toric/toric.hpp"

int main() {
  using namespace toric;
  const auto f = FiniteField::make(7, 1);
  const auto A = incidence_configuration(Graph::complete(5));
  const auto X = enumerate_projective(A, f);
  const auto I = vanishing_ideal_saturation(A, f);
  std::cout << "d\tk\tb_d\tgraph\n";
  for (std::uint32_t d = 1; d <= 20; ++d) {
    const auto k = hilbert_function_gb(I, d);
    std::cout << d << '\t' << k << '\t' << singleton_bound(X.size(), k) << '\t'
              << graph_bound(5, 7, d).value << "\n";
  }
}
