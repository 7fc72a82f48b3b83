#pragma once

// Heisenberg chain H = -J sum_i S_i . S_{i+1} (k_B = hbar = 1, J < 0
// antiferromagnetic, singlet two-spin ground state). Hamiltonian assembly by
// tensor products, Gibbs states via eigendecomposition, nearest-neighbor
// correlators, and the reduction to the X-state parameters
// v = 1/4 + <Sz Sz>, z = 2 <Sx Sx>.

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <utility>

#include "xent/bipartite.hpp"
#include "xent/eig.hpp"
#include "xent/errors.hpp"
#include "xent/matrix.hpp"
#include "xent/xstate.hpp"

namespace xent {

enum class Boundary { open, periodic };

inline const char* to_string(Boundary b) { return b == Boundary::open ? "open" : "periodic"; }

struct ChainSpec {
  std::size_t n = 2;
  double j = -1.0;  // exchange coupling; j < 0 is the antiferromagnetic regime
  Boundary boundary = Boundary::open;
  std::pair<std::size_t, std::size_t> pair{0, 1};  // sites of the reduced state

  bool is_antiferromagnetic() const { return j < 0.0; }

  void validate() const {
    if (n < 2 || n > max_sites()) {
      throw usage_error("chain size n = " + std::to_string(n) + " outside [2, " +
                        std::to_string(max_sites()) + "] (raise XENT_NMAX for larger chains)");
    }
    if (!(pair.first < pair.second && pair.second < n)) {
      throw usage_error("pair (" + std::to_string(pair.first) + ", " +
                        std::to_string(pair.second) + ") needs 0 <= i < j < n = " +
                        std::to_string(n));
    }
    if (!std::isfinite(j)) throw usage_error("coupling j must be finite");
  }
};

struct ThermalPoint {
  double temperature;
  double beta;

  explicit ThermalPoint(double t) : temperature(t), beta(1.0 / t) {
    if (!(t > 0.0) || !std::isfinite(t)) {
      throw domain_error("temperature must be positive and finite, got " + std::to_string(t));
    }
  }
};

namespace detail {

inline cmat spin_x() {
  cmat s(2, 2);
  s(0, 1) = 0.5;
  s(1, 0) = 0.5;
  return s;
}

inline cmat spin_y() {
  cmat s(2, 2);
  s(0, 1) = std::complex<double>(0.0, -0.5);
  s(1, 0) = std::complex<double>(0.0, 0.5);
  return s;
}

inline cmat spin_z() {
  cmat s(2, 2);
  s(0, 0) = 0.5;
  s(1, 1) = -0.5;
  return s;
}

// op_a at site i, op_b at site j (i < j), identities elsewhere. Site 0 is the
// leftmost tensor factor, i.e. the most significant index bits.
inline cmat embed_pair(const cmat& op_a, const cmat& op_b, std::size_t n, std::size_t i,
                       std::size_t j) {
  cmat acc = cmat::identity(1);
  for (std::size_t site = 0; site < n; ++site) {
    const cmat& factor = (site == i) ? op_a : (site == j) ? op_b : cmat::identity(2);
    acc = kron(acc, factor);
  }
  return acc;
}

}  // namespace detail

// H = -j sum over bonds of (Sx Sx + Sy Sy + Sz Sz); n-1 bonds open, n bonds
// periodic (the n = 2 periodic ring counts the (0,1) bond twice).
inline cmat build_hamiltonian(const ChainSpec& spec) {
  spec.validate();
  const std::size_t dim = std::size_t{1} << spec.n;
  cmat h(dim, dim);
  if (spec.j == 0.0) return h;

  const cmat ops[3] = {detail::spin_x(), detail::spin_y(), detail::spin_z()};
  const std::size_t bonds = (spec.boundary == Boundary::periodic) ? spec.n : spec.n - 1;
  for (std::size_t b = 0; b < bonds; ++b) {
    std::size_t i = b, j = b + 1;
    if (j == spec.n) {  // wrap bond; S_i.S_j is symmetric so reorder freely
      i = 0;
      j = spec.n - 1;
    }
    for (const cmat& s : ops) h += detail::embed_pair(s, s, spec.n, i, j);
  }
  h *= std::complex<double>(-spec.j, 0.0);
  return h.hermitized();
}

namespace detail {

// rho = e^{-beta h} / Z from a cached eigendecomposition. Exponents are
// shifted by their maximum so every weight is in (0, 1] and Z >= 1.
inline cmat gibbs_from_eig(const eig_result<double>& e, double beta) {
  double top = -beta * e.eigenvalues[0];
  for (double w : e.eigenvalues) top = std::max(top, -beta * w);
  double z = 0.0;
  for (double w : e.eigenvalues) z += std::exp(-beta * w - top);
  if (!std::isfinite(z) || z <= 0.0) {
    throw numeric_error("gibbs_state: partition function not finite at beta = " +
                        std::to_string(beta) + "; raise the temperature floor");
  }
  return spectral_apply(e, [&](double w) { return std::exp(-beta * w - top) / z; });
}

}  // namespace detail

inline cmat gibbs_state(const cmat& h, const ThermalPoint& t) {
  return detail::gibbs_from_eig(hermitian_eig(h), t.beta);
}

namespace detail {

// Deviation of a 4x4 pair state from the X form
// [[v,0,0,0],[0,w,z,0],[0,z*,w,0],[0,0,0,v]] with w = 1/2 - v: equal corners,
// equal centers, zeros elsewhere.
inline double x_form_residual(const cmat& rho) {
  double r = 0.0;
  static constexpr std::size_t zero_slots[][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 0}, {1, 3},
                                                  {2, 0}, {2, 3}, {3, 0}, {3, 1}, {3, 2}};
  for (const auto& s : zero_slots) r = std::max(r, std::abs(rho(s[0], s[1])));
  r = std::max(r, std::abs(rho(0, 0) - rho(3, 3)));
  r = std::max(r, std::abs(rho(1, 1) - rho(2, 2)));
  r = std::max(r, std::abs(rho(1, 2) - std::conj(rho(2, 1))));
  return r;
}

inline Correlators correlators_from_pair_state(const cmat& reduced) {
  static const cmat xx = kron(spin_x(), spin_x());
  static const cmat yy = kron(spin_y(), spin_y());
  static const cmat zz = kron(spin_z(), spin_z());
  const double czz = hs_inner(reduced, zz);
  const double cxx = hs_inner(reduced, xx);
  const double cyy = hs_inner(reduced, yy);
  const double residual = x_form_residual(reduced);
  if (std::abs(cyy - cxx) > 1e-10 || residual > 1e-10) {
    throw model_error("pair state is not isotropic X-form (|cyy - cxx| = " +
                      std::to_string(std::abs(cyy - cxx)) + ", X residual = " +
                      std::to_string(residual) + "); v, z correlator mapping inapplicable");
  }
  return Correlators{czz, cxx};
}

}  // namespace detail

// czz = Tr(rho Sz_i Sz_j), cxx likewise, evaluated on the reduced pair state.
// Also checks cyy = cxx and the X form, which the v/z mapping assumes.
inline Correlators pair_correlators(const cmat& rho, std::size_t i, std::size_t j) {
  return detail::correlators_from_pair_state(partial_trace_pair(rho, i, j));
}

// Thermal chain with the Hamiltonian eigendecomposition computed once and
// shared across temperatures. Immutable after construction; const methods are
// safe to call concurrently.
class ThermalChain {
 public:
  explicit ThermalChain(const ChainSpec& spec)
      : spec_(spec), eig_(hermitian_eig(build_hamiltonian(spec))) {}

  const ChainSpec& spec() const { return spec_; }
  const eig_result<double>& hamiltonian_eig() const { return eig_; }

  cmat state(const ThermalPoint& t) const { return detail::gibbs_from_eig(eig_, t.beta); }

  Correlators correlators(const ThermalPoint& t) const {
    return pair_correlators(state(t), spec_.pair.first, spec_.pair.second);
  }

  // Correlator-built XState, cross-checked entrywise against the actual
  // reduced density matrix.
  XState xstate(const ThermalPoint& t) const {
    const cmat reduced = partial_trace_pair(state(t), spec_.pair.first, spec_.pair.second);
    const Correlators c = detail::correlators_from_pair_state(reduced);
    const XState x = from_correlators(c);
    const double dev = (reduced - to_matrix(x, /*enforce_psd=*/false)).max_abs();
    if (dev > 1e-10) {
      throw model_error("reduced pair state deviates from its correlator X-state by " +
                        std::to_string(dev));
    }
    return x;
  }

 private:
  ChainSpec spec_;
  eig_result<double> eig_;
};

inline XState thermal_xstate(const ChainSpec& spec, const ThermalPoint& t) {
  return ThermalChain(spec).xstate(t);
}

// Bisection on f(T) = |z(T)| - v(T), the entanglement margin of the thermal
// pair state; T* is its zero (f > 0 entangled, f <= 0 separable, f monotone
// down in T for the antiferromagnetic chain).
inline double threshold_temperature(const ChainSpec& spec, double t_lo, double t_hi,
                                    double tol = 1e-8) {
  if (!(t_lo > 0.0 && t_hi > t_lo)) {
    throw usage_error("threshold bracket needs 0 < t_lo < t_hi, got [" + std::to_string(t_lo) +
                      ", " + std::to_string(t_hi) + "]");
  }
  if (!(tol > 0.0)) throw usage_error("threshold tol must be positive");
  const ThermalChain chain(spec);
  const auto margin = [&](double t) {
    const XState x = chain.xstate(ThermalPoint(t));
    return x.abs_z() - x.v();
  };
  double f_lo = margin(t_lo);
  double f_hi = margin(t_hi);
  if (!(f_lo > 0.0) || f_hi > 0.0) {
    throw usage_error("threshold bracket [" + std::to_string(t_lo) + ", " + std::to_string(t_hi) +
                      "] does not straddle the boundary: margin(t_lo) = " + std::to_string(f_lo) +
                      ", margin(t_hi) = " + std::to_string(f_hi));
  }
  int guard = 0;
  while (t_hi - t_lo > tol) {
    if (++guard > 200) {
      throw numeric_error("threshold bisection failed to shrink the bracket below " +
                          std::to_string(tol));
    }
    const double mid = 0.5 * (t_lo + t_hi);
    if (margin(mid) > 0.0) {
      t_lo = mid;
    } else {
      t_hi = mid;
    }
  }
  return 0.5 * (t_lo + t_hi);
}

}  // namespace xent
