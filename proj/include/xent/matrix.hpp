#pragma once

// Dense complex matrices and the Hilbert-Schmidt geometry used throughout:
// <a,b> = Tr(a.b) and ||a|| = sqrt(Tr a^2) for hermitian a, b. Sizes stay
// small (tensor products of at most max_sites() spin-1/2 sites), so storage
// is a flat row-major vector and products are naive O(n^3).

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdlib>
#include <string>
#include <vector>

#include "xent/errors.hpp"

namespace xent {

#ifndef XENT_DEFAULT_MAX_SITES
#define XENT_DEFAULT_MAX_SITES 10
#endif

// Site ceiling for tensor-product dimensions (matrices up to 2^max_sites()).
// The environment variable XENT_NMAX overrides the build-time default.
inline std::size_t max_sites() {
  static const std::size_t cached = [] {
    if (const char* env = std::getenv("XENT_NMAX")) {
      char* end = nullptr;
      const long parsed = std::strtol(env, &end, 10);
      if (end != env && *end == '\0' && parsed >= 2 && parsed <= 24) {
        return static_cast<std::size_t>(parsed);
      }
    }
    return static_cast<std::size_t>(XENT_DEFAULT_MAX_SITES);
  }();
  return cached;
}

inline std::size_t max_dim() { return std::size_t{1} << max_sites(); }

template <typename Real = double>
class complex_matrix {
 public:
  using scalar = std::complex<Real>;

  complex_matrix() = default;
  complex_matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static complex_matrix identity(std::size_t n) {
    complex_matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Real(1);
    return m;
  }

  static complex_matrix diagonal(const std::vector<Real>& d) {
    complex_matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  complex_matrix& operator+=(const complex_matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }

  complex_matrix& operator-=(const complex_matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }

  complex_matrix& operator*=(scalar s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend complex_matrix operator+(complex_matrix a, const complex_matrix& b) { return a += b; }
  friend complex_matrix operator-(complex_matrix a, const complex_matrix& b) { return a -= b; }
  friend complex_matrix operator*(complex_matrix a, scalar s) { return a *= s; }
  friend complex_matrix operator*(scalar s, complex_matrix a) { return a *= s; }
  friend complex_matrix operator*(complex_matrix a, Real s) { return a *= scalar(s); }
  friend complex_matrix operator*(Real s, complex_matrix a) { return a *= scalar(s); }

  friend complex_matrix operator-(const complex_matrix& a) {
    complex_matrix m(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) m.data_[k] = -a.data_[k];
    return m;
  }

  friend complex_matrix operator*(const complex_matrix& a, const complex_matrix& b) {
    if (a.cols_ != b.rows_) {
      throw usage_error("matrix product: inner dimensions differ (" +
                        std::to_string(a.cols_) + " vs " + std::to_string(b.rows_) + ")");
    }
    complex_matrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const scalar aik = a(i, k);
        if (aik == scalar()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += aik * b(k, j);
      }
    }
    return m;
  }

  complex_matrix adjoint() const {
    complex_matrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
  }

  scalar trace() const {
    scalar t{};
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  Real max_abs() const {
    Real m = 0;
    for (const auto& x : data_) m = std::max(m, std::abs(x));
    return m;
  }

  Real frobenius_norm() const {
    Real s = 0;
    for (const auto& x : data_) s += std::norm(x);
    return std::sqrt(s);
  }

  bool is_hermitian(Real tol) const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i; j < cols_; ++j)
        if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
    return true;
  }

  // (A + A^dagger)/2; cleans hermiticity round-off after spectral assembly.
  complex_matrix hermitized() const {
    complex_matrix m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        m(i, j) = (( *this)(i, j) + std::conj((*this)(j, i))) * Real(0.5);
    return m;
  }

 private:
  void require_same_shape(const complex_matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
      throw usage_error("matrix shapes differ (" + std::to_string(rows_) + "x" +
                        std::to_string(cols_) + " vs " + std::to_string(o.rows_) + "x" +
                        std::to_string(o.cols_) + ")");
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<scalar> data_;
};

using cmat = complex_matrix<double>;

// Hilbert-Schmidt inner product Tr(a.b). Hermitian inputs give a real value;
// the imaginary residue is checked against 1e-12 (scaled) and discarded.
template <typename Real>
Real hs_inner(const complex_matrix<Real>& a, const complex_matrix<Real>& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
    throw usage_error("hs_inner: operands must be square with equal dimension");
  }
  std::complex<Real> t{};
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t += a(i, j) * b(j, i);
  const Real scale = std::max(Real(1), a.max_abs() * b.max_abs() * Real(n));
  if (std::abs(t.imag()) > Real(1e-12) * scale) {
    throw numeric_error("hs_inner: imaginary residue " + std::to_string(t.imag()) +
                        " exceeds tolerance; operands are not hermitian");
  }
  return t.real();
}

// ||a|| = sqrt(Tr a^2) for hermitian a (the Frobenius norm).
template <typename Real>
Real hs_norm(const complex_matrix<Real>& a) {
  return a.frobenius_norm();
}

// Tensor product, dim = a.dim * b.dim, left factor most significant.
template <typename Real>
complex_matrix<Real> kron(const complex_matrix<Real>& a, const complex_matrix<Real>& b) {
  if (a.rows() * b.rows() > max_dim() || a.cols() * b.cols() > max_dim()) {
    throw usage_error("kron: product dimension exceeds 2^" + std::to_string(max_sites()) +
                      " (raise XENT_NMAX to go larger)");
  }
  complex_matrix<Real> m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const std::complex<Real> aij = a(i, j);
      if (aij == std::complex<Real>()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          m(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return m;
}

}  // namespace xent
