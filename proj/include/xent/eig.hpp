#pragma once

// Cyclic Jacobi eigensolver for complex hermitian matrices, and the spectral
// calculus built on it (matrix exponential, spectral functions). Dimensions
// here never exceed 2^max_sites(), so robustness wins over speed: each 2x2
// rotation reduces the off-diagonal mass, sweeps stop when the off-diagonal
// Frobenius mass falls below tol * ||a||, with a hard cap of 100 sweeps.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "xent/errors.hpp"
#include "xent/matrix.hpp"

namespace xent {

template <typename Real = double>
struct eig_result {
  std::vector<Real> eigenvalues;       // ascending
  complex_matrix<Real> eigenvectors;   // orthonormal columns, a = V diag(w) V^dagger
};

namespace detail {

template <typename Real>
Real off_diagonal_norm(const complex_matrix<Real>& a) {
  Real s = 0;
  const std::size_t n = a.rows();
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) s += std::norm(a(p, q));
  return std::sqrt(2 * s);
}

// One complex Jacobi rotation zeroing a(p,q). The 2x2 hermitian block
// [[app, m e^{i phi}], [m e^{-i phi}, aqq]] is reduced to the real symmetric
// case by the phase diag(1, e^{-i phi}), then rotated by the classic
// tangent-of-smaller-angle Givens pair (c, s).
template <typename Real>
void jacobi_rotate(complex_matrix<Real>& a, complex_matrix<Real>& v, std::size_t p, std::size_t q) {
  using C = std::complex<Real>;
  const C apq = a(p, q);
  const Real mag = std::abs(apq);
  if (mag == Real(0)) return;
  const C phase = apq / mag;  // e^{i phi}

  const Real app = a(p, p).real();
  const Real aqq = a(q, q).real();
  const Real tau = (aqq - app) / (2 * mag);
  const Real t = (tau >= Real(0)) ? Real(1) / (tau + std::sqrt(1 + tau * tau))
                                  : Real(-1) / (-tau + std::sqrt(1 + tau * tau));
  const Real c = Real(1) / std::sqrt(1 + t * t);
  const Real s = t * c;

  // Combined unitary on the (p,q) plane: J = diag(1, e^{-i phi}) . [[c, s], [-s, c]],
  // i.e. J_pp = c, J_pq = s, J_qp = -s conj(phase), J_qq = c conj(phase).
  const C jqp = -s * std::conj(phase);
  const C jqq = c * std::conj(phase);

  const std::size_t n = a.rows();
  for (std::size_t r = 0; r < n; ++r) {  // columns: A <- A J
    const C arp = a(r, p), arq = a(r, q);
    a(r, p) = arp * c + arq * jqp;
    a(r, q) = arp * s + arq * jqq;
  }
  for (std::size_t col = 0; col < n; ++col) {  // rows: A <- J^dagger A
    const C apc = a(p, col), aqc = a(q, col);
    a(p, col) = c * apc + std::conj(jqp) * aqc;
    a(q, col) = s * apc + std::conj(jqq) * aqc;
  }
  for (std::size_t r = 0; r < n; ++r) {  // eigenvectors: V <- V J
    const C vrp = v(r, p), vrq = v(r, q);
    v(r, p) = vrp * c + vrq * jqp;
    v(r, q) = vrp * s + vrq * jqq;
  }

  // The rotated block is diagonal by construction; pin it to kill drift.
  a(p, p) = C(app - t * mag, 0);
  a(q, q) = C(aqq + t * mag, 0);
  a(p, q) = C(0, 0);
  a(q, p) = C(0, 0);
}

}  // namespace detail

template <typename Real = double>
eig_result<Real> hermitian_eig(const complex_matrix<Real>& a, Real tol = Real(1e-13)) {
  if (!a.is_square()) throw usage_error("hermitian_eig: matrix must be square");
  const std::size_t n = a.rows();
  if (!a.is_hermitian(Real(1e-12) * std::max(Real(1), a.max_abs()))) {
    throw usage_error("hermitian_eig: input is not hermitian within tolerance");
  }

  complex_matrix<Real> work = a.hermitized();
  complex_matrix<Real> vecs = complex_matrix<Real>::identity(n);
  const Real scale = work.frobenius_norm();
  const Real threshold = tol * scale;

  if (scale > Real(0)) {
    constexpr int kMaxSweeps = 100;
    bool converged = false;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
      if (detail::off_diagonal_norm(work) <= threshold) {
        converged = true;
        break;
      }
      for (std::size_t p = 0; p + 1 < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) detail::jacobi_rotate(work, vecs, p, q);
    }
    if (!converged && detail::off_diagonal_norm(work) > threshold) {
      throw numeric_error("hermitian_eig: no convergence after 100 sweeps, off-diagonal residual " +
                          std::to_string(detail::off_diagonal_norm(work)));
    }
  }

  eig_result<Real> out;
  out.eigenvalues.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.eigenvalues[i] = work(i, i).real();

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return out.eigenvalues[x] < out.eigenvalues[y]; });

  std::vector<Real> sorted(n);
  complex_matrix<Real> sorted_vecs(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    sorted[k] = out.eigenvalues[order[k]];
    for (std::size_t r = 0; r < n; ++r) sorted_vecs(r, k) = vecs(r, order[k]);
  }
  out.eigenvalues = std::move(sorted);
  out.eigenvectors = std::move(sorted_vecs);
  return out;
}

// V f(diag) V^dagger for a previously diagonalized hermitian matrix.
template <typename Real, typename F>
complex_matrix<Real> spectral_apply(const eig_result<Real>& e, F&& f) {
  const std::size_t n = e.eigenvalues.size();
  complex_matrix<Real> m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::complex<Real> acc{};
      for (std::size_t k = 0; k < n; ++k) {
        acc += e.eigenvectors(i, k) * Real(f(e.eigenvalues[k])) * std::conj(e.eigenvectors(j, k));
      }
      m(i, j) = acc;
    }
  }
  return m.hermitized();
}

// exp(s a) for hermitian a; positive definite for every hermitian input.
template <typename Real = double>
complex_matrix<Real> mat_exp_hermitian(const complex_matrix<Real>& a, Real s) {
  const auto e = hermitian_eig(a);
  return spectral_apply(e, [s](Real w) { return std::exp(s * w); });
}

}  // namespace xent
