// Entanglement of the nearest-neighbor pair in a short Heisenberg ring,
// swept across the separability threshold.
#include <iostream>

#include "xent/xent.hpp"

int main() {
  const xent::ChainSpec spec{4, -1.0, xent::Boundary::periodic, {0, 1}};
  const double t_star = xent::threshold_temperature(spec, 0.1, 10.0);
  std::cout << "n = " << spec.n << " ring, j = " << spec.j << ", T* = " << xent::fmt17(t_star)
            << "\n\n";

  std::cout << xent::kSweepCsvHeader << "\n";
  for (const auto& row : xent::run_sweep(spec, 0.1, 2.0, 12, xent::Spacing::linear)) {
    std::cout << xent::to_csv_line(row) << "\n";
  }
  return 0;
}
