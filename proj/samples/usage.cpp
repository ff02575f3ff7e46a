// Builds a charged bipartition, walks the Heisenberg crystal and prints the
// result of a few operators.

#include <iostream>

#include "hfock/abacus.hpp"
#include "hfock/heisenberg.hpp"
#include "hfock/kashiwara.hpp"

int main() {
  using namespace hfock;

  const ChargedMultipartition vacuum = ChargedMultipartition::empty({0, 1}, 3);
  const ChargedMultipartition x = tc(vacuum, {2, 1});
  std::cout << "tc_(2,1) of the vacuum: " << to_string(x) << "\n";

  const KappaResult k = kappa(x);
  std::cout << "kappa: " << to_string(k.kappa) << "\n";
  std::cout << "doubly highest weight vertex: " << to_string(k.doubly_hw) << "\n";

  if (auto y = f_tilde(x, 0)) std::cout << "f_0: " << to_string(*y) << "\n";
  if (auto y = b_minus(x, {1})) std::cout << "b_-(1): " << to_string(*y) << "\n";

  std::cout << "level-rank dual: " << to_string(level_rank_dual(x)) << "\n";
  return 0;
}
