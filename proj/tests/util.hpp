#pragma once

// Shared helpers for the test suites.

#include <complex>
#include <cstddef>

#include "xent/matrix.hpp"
#include "xent/rng.hpp"

namespace test_util {

inline xent::cmat random_hermitian(std::size_t n, xent::RandomStream& rs) {
  xent::cmat a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a(i, j) = std::complex<double>(rs.uniform(-1.0, 1.0), rs.uniform(-1.0, 1.0));
  return a.hermitized();
}

// Gram construction M M^dagger / Tr: Hermitian, PSD, unit trace.
inline xent::cmat random_density(std::size_t n, xent::RandomStream& rs) {
  xent::cmat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = std::complex<double>(rs.uniform(-1.0, 1.0), rs.uniform(-1.0, 1.0));
  xent::cmat g = m * m.adjoint();
  g *= std::complex<double>(1.0 / g.trace().real(), 0.0);
  return g.hermitized();
}

}  // namespace test_util
