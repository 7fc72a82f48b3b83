#pragma once

// Tensor-product index bookkeeping: partial transpose on the second qubit of
// a two-qubit state and the partial trace of an N-site state down to a pair.
// Basis convention everywhere: |q_0 q_1 ... q_{N-1}> with site 0 the most
// significant bit, so a pair index reads 2*q_first + q_second.

#include <cstddef>
#include <string>

#include "xent/errors.hpp"
#include "xent/matrix.hpp"

namespace xent {

// Number of spin-1/2 sites for a 2^n dimensional matrix.
template <typename Real>
std::size_t qubit_count(const complex_matrix<Real>& m) {
  if (!m.is_square() || m.rows() == 0) throw usage_error("expected a square matrix");
  std::size_t n = 0, d = m.rows();
  while ((d & 1) == 0) {
    d >>= 1;
    ++n;
  }
  if (d != 1 || n == 0) {
    throw usage_error("matrix dimension " + std::to_string(m.rows()) + " is not a power of two");
  }
  return n;
}

// Transpose the indices of the second factor of a 2x2 bipartite state:
// entry ((i,j),(k,l)) -> ((i,l),(k,j)). Involutive and trace-preserving.
template <typename Real>
complex_matrix<Real> partial_transpose_second(const complex_matrix<Real>& rho) {
  if (!rho.is_square() || rho.rows() != 4) {
    throw usage_error("partial_transpose_second: expected a 4x4 matrix");
  }
  complex_matrix<Real> out(4, 4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l)
          out(2 * i + l, 2 * k + j) = rho(2 * i + j, 2 * k + l);
  return out;
}

namespace detail {

// Insert a zero bit at position `pos` (counted from the least significant bit).
inline std::size_t insert_bit(std::size_t x, std::size_t pos) {
  const std::size_t low = x & ((std::size_t{1} << pos) - 1);
  return ((x >> pos) << (pos + 1)) | low;
}

}  // namespace detail

// Trace out every site except i < j, returning the 4x4 reduced state of the
// pair in the (i, j) order. Preserves trace and hermiticity exactly.
template <typename Real>
complex_matrix<Real> partial_trace_pair(const complex_matrix<Real>& rho, std::size_t i,
                                        std::size_t j) {
  const std::size_t n = qubit_count(rho);
  if (!(i < j && j < n)) {
    throw usage_error("partial_trace_pair: need sites 0 <= i < j < " + std::to_string(n) +
                      ", got (" + std::to_string(i) + ", " + std::to_string(j) + ")");
  }
  const std::size_t pi = n - 1 - i;  // bit position of site i (higher bit)
  const std::size_t pj = n - 1 - j;
  complex_matrix<Real> out(4, 4);
  const std::size_t rest = std::size_t{1} << (n - 2);
  for (std::size_t r = 0; r < rest; ++r) {
    const std::size_t base = detail::insert_bit(detail::insert_bit(r, pj), pi);
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < 2; ++b) {
        const std::size_t row = base | (a << pi) | (b << pj);
        for (std::size_t c = 0; c < 2; ++c)
          for (std::size_t d = 0; d < 2; ++d) {
            const std::size_t col = base | (c << pi) | (d << pj);
            out(2 * a + b, 2 * c + d) += rho(row, col);
          }
      }
  }
  return out;
}

}  // namespace xent
