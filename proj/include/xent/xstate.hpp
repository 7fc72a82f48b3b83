#pragma once

// The two-parameter X-form family of two-qubit states
//
//         ( v  0  0  0 )
//   rho = ( 0  w  z  0 ),   w = 1/2 - v,   eigenvalues {v, v, w - |z|, w + |z|},
//         ( 0  z* w  0 )
//         ( 0  0  0  v )
//
// in the (|uu>, |ud>, |du>, |dd>) product basis. Positivity is w >= |z|;
// entanglement is v < |z| (equivalently a negative partial-transpose
// eigenvalue). The family carries the nearest-neighbor physics of isotropic
// spin-1/2 chains via v = 1/4 + <Sz Sz>, z = 2 <Sx Sx>.

#include <cmath>
#include <complex>
#include <string>

#include <json.hpp>

#include "xent/bipartite.hpp"
#include "xent/eig.hpp"
#include "xent/errors.hpp"
#include "xent/matrix.hpp"

namespace xent {

// Eigenvalues above this floor count as non-negative; absorbs round-off from
// Gibbs / partial-trace pipelines.
inline constexpr double kPsdEigenvalueFloor = -1e-10;

class XState {
 public:
  XState(double v, std::complex<double> z) : v_(v), z_(z) {
    // Tolerate construction round-off at the parameter boundaries.
    constexpr double slack = 1e-12;
    if (v_ < 0.0) {
      if (v_ < -slack) throw domain_error("XState: v = " + std::to_string(v_) + " is negative");
      v_ = 0.0;
    }
    if (v_ > 0.5) {
      if (v_ > 0.5 + slack) throw domain_error("XState: v = " + std::to_string(v_) + " exceeds 1/2");
      v_ = 0.5;
    }
    const double r = std::abs(z_);
    if (r > 0.5) {
      if (r > 0.5 + slack) throw domain_error("XState: |z| = " + std::to_string(r) + " exceeds 1/2");
      z_ *= 0.5 / r;
    }
  }

  static XState singlet() { return XState(0.0, -0.5); }
  static XState maximally_mixed() { return XState(0.25, 0.0); }

  double v() const { return v_; }
  double w() const { return 0.5 - v_; }
  std::complex<double> z() const { return z_; }
  double abs_z() const { return std::abs(z_); }

  // w >= |z| up to the shared eigenvalue floor.
  bool is_psd() const { return w() - abs_z() >= kPsdEigenvalueFloor; }

 private:
  double v_;
  std::complex<double> z_;
};

struct Correlators {
  double czz = 0.0;  // <S_i^z S_j^z>
  double cxx = 0.0;  // <S_i^x S_j^x>
};

// v = 1/4 + czz, z = 2 cxx. Correlators must respect the spin-1/2 bound 1/4.
inline XState from_correlators(const Correlators& c) {
  constexpr double slack = 1e-12;
  if (std::abs(c.czz) > 0.25 + slack) {
    throw domain_error("from_correlators: czz = " + std::to_string(c.czz) +
                       " breaks the spin-1/2 bound |czz| <= 1/4");
  }
  if (std::abs(c.cxx) > 0.25 + slack) {
    throw domain_error("from_correlators: cxx = " + std::to_string(c.cxx) +
                       " breaks the spin-1/2 bound |cxx| <= 1/4");
  }
  return XState(0.25 + c.czz, std::complex<double>(2.0 * c.cxx, 0.0));
}

// Matrix realization. With enforce_psd the negative-eigenvalue case w < |z|
// is rejected; pass false to realize members of the v >= |z| family whose
// coherence exceeds 1/4, which are legitimate inputs to the closed forms.
inline cmat to_matrix(const XState& x, bool enforce_psd = true) {
  if (enforce_psd && !x.is_psd()) {
    throw domain_error("to_matrix: state is not positive semidefinite, eigenvalue w - |z| = " +
                       std::to_string(x.w() - x.abs_z()));
  }
  cmat m(4, 4);
  m(0, 0) = x.v();
  m(3, 3) = x.v();
  m(1, 1) = x.w();
  m(2, 2) = x.w();
  m(1, 2) = x.z();
  m(2, 1) = std::conj(x.z());
  return m;
}

// Strict v < |z|; the boundary v = |z| belongs to the separable set.
inline bool is_entangled(const XState& x) { return x.v() < x.abs_z(); }

// Hermitian, unit-trace, positive semidefinite within the shared floor.
inline void validate_density_matrix(const cmat& rho) {
  if (!rho.is_square()) throw domain_error("density matrix must be square");
  const double scale = std::max(1.0, rho.max_abs());
  if (!rho.is_hermitian(1e-10 * scale)) throw domain_error("density matrix is not hermitian");
  if (std::abs(rho.trace().real() - 1.0) > 1e-10 || std::abs(rho.trace().imag()) > 1e-10) {
    throw domain_error("density matrix trace is " + std::to_string(rho.trace().real()) +
                       ", expected 1");
  }
  const auto eig = hermitian_eig(rho);
  if (eig.eigenvalues.front() < kPsdEigenvalueFloor) {
    throw domain_error("density matrix has negative eigenvalue " +
                       std::to_string(eig.eigenvalues.front()));
  }
}

struct PptResult {
  bool is_ppt = false;
  double min_eigenvalue = 0.0;
};

// Peres-Horodecki test: for 2x2 systems, a positive partial transpose is
// necessary and sufficient for separability.
inline PptResult ppt_check(const cmat& rho) {
  if (!rho.is_square() || rho.rows() != 4) throw domain_error("ppt_check: expected a 4x4 state");
  validate_density_matrix(rho);
  const auto eig = hermitian_eig(partial_transpose_second(rho));
  return PptResult{eig.eigenvalues.front() >= kPsdEigenvalueFloor, eig.eigenvalues.front()};
}

inline void to_json(nlohmann::json& j, const XState& x) {
  j = nlohmann::json{{"v", x.v()}, {"z_re", x.z().real()}, {"z_im", x.z().imag()}};
}

inline XState xstate_from_json(const nlohmann::json& j) {
  return XState(j.at("v").get<double>(),
                {j.at("z_re").get<double>(), j.at("z_im").get<double>()});
}

}  // namespace xent
