#pragma once

// Closed forms for X-state entanglement. Three routes that agree exactly on
// this family:
//
//   E(sigma)  = 2 (|z| - v)            Hilbert-Schmidt distance to the nearest
//                                      separable X-state rho_0 = (v = |z|, z)
//   B(sigma)  = min <rho, A> - <sigma, A> over the shared-z separable family,
//               with the optimal witness A = diag(1-2|z|, -2|z|, -2|z|, 1-2|z|)
//   C(rho)    = Wootters spin-flip concurrence, max(0, l1 - l2 - l3 - l4)
//
// A arises as (rho_0 - sigma - <rho_0, rho_0 - sigma>.1) / ||rho_0 - sigma||
// with <rho_0, rho_0 - sigma> = (|z| - v)(4|z| - 1) and
// ||rho_0 - sigma|| = 2(|z| - v).

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <string>

#include <json.hpp>

#include "xent/eig.hpp"
#include "xent/errors.hpp"
#include "xent/matrix.hpp"
#include "xent/xstate.hpp"

namespace xent {

// Witnesses degenerate when rho_0 -> sigma; refuse margins below this.
inline constexpr double kWitnessMargin = 1e-12;

struct BellOperator {
  cmat matrix;   // diag(1-2|z|, -2|z|, -2|z|, 1-2|z|) for X-state inputs
  double shift;  // <rho_0, rho_0 - sigma>, the coefficient of the identity
  double scale;  // ||rho_0 - sigma||

  // |z| of the generating state, recovered from the diagonal.
  double witness_abs_z() const { return -0.5 * matrix(1, 1).real(); }
};

struct NearestSeparable {
  XState state;
  bool input_was_separable;
};

// Hilbert-Schmidt distance between two X-states,
// sqrt(4 (v_a - v_b)^2 + 2 |z_a - z_b|^2); reduces to 2|v_a - v_b| at shared z.
inline double hs_distance(const XState& a, const XState& b) {
  const double dv = a.v() - b.v();
  const std::complex<double> dz = a.z() - b.z();
  return std::sqrt(4.0 * dv * dv + 2.0 * std::norm(dz));
}

// Within the shared-z family the distance 2|v_s - v_e| is minimized on the
// separable side at v_s = |z|.
inline NearestSeparable nearest_separable(const XState& sigma) {
  if (!is_entangled(sigma)) return {sigma, true};
  return {XState(sigma.abs_z(), sigma.z()), false};
}

// E = max(0, 2(|z| - v)). Pure formula: accepts any 0 <= v <= 1/2, |z| <= 1/2.
inline double hs_entanglement(const XState& sigma) {
  return std::max(0.0, 2.0 * (sigma.abs_z() - sigma.v()));
}

inline BellOperator bell_operator(const XState& sigma) {
  const double margin = sigma.abs_z() - sigma.v();
  if (margin <= kWitnessMargin) {
    throw domain_error("witness undefined: ||rho_0 - sigma|| = 0 (state separable or on the boundary)");
  }
  const double az = sigma.abs_z();
  cmat a(4, 4);
  a(0, 0) = 1.0 - 2.0 * az;
  a(1, 1) = -2.0 * az;
  a(2, 2) = -2.0 * az;
  a(3, 3) = 1.0 - 2.0 * az;
  return BellOperator{std::move(a), margin * (4.0 * az - 1.0), 2.0 * margin};
}

// Maximal violation B = min_{v_s >= |z|} <rho_s, A> - <sigma, A>. The first
// term is 2(v_s - |z|), minimized to zero at v_s = |z|; the second is
// evaluated as an actual trace.
inline double gbi_violation(const XState& sigma, const BellOperator& a) {
  return 0.0 - hs_inner(to_matrix(sigma, /*enforce_psd=*/false), a.matrix);
}

namespace detail {

inline cmat spin_flip_y_pair() {
  // sigma_y tensor sigma_y
  cmat yy(4, 4);
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  return yy;
}

}  // namespace detail

// Wootters concurrence C = max(0, l1 - l2 - l3 - l4), the l_i being the
// decreasing square roots of the spectrum of rho (Y x Y) rho* (Y x Y).
// Computed on the hermitian form sqrt(rho) rho_tilde sqrt(rho), which shares
// that spectrum.
inline double concurrence(const cmat& rho) {
  if (!rho.is_square() || rho.rows() != 4) throw domain_error("concurrence: expected a 4x4 state");
  validate_density_matrix(rho);

  const auto eig = hermitian_eig(rho);
  const cmat sqrt_rho = spectral_apply(eig, [](double w) { return std::sqrt(std::max(0.0, w)); });

  const cmat yy = detail::spin_flip_y_pair();
  cmat rho_conj(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) rho_conj(i, j) = std::conj(rho(i, j));
  const cmat flipped = yy * rho_conj * yy;

  const cmat m = (sqrt_rho * flipped * sqrt_rho).hermitized();
  auto spectrum = hermitian_eig(m).eigenvalues;  // ascending

  double c = 0.0;
  for (std::size_t k = 0; k < 4; ++k) {
    double w = spectrum[k];
    if (w < 0.0) {
      if (w < -1e-12) {
        throw numeric_error("concurrence: spin-flip spectrum has eigenvalue " + std::to_string(w));
      }
      w = 0.0;
    }
    const double lambda = std::sqrt(w);
    c += (k == 3) ? lambda : -lambda;  // descending sum l1 - l2 - l3 - l4
  }
  return std::clamp(c, 0.0, 1.0);
}

struct EntanglementReport {
  double e_hs = 0.0;
  double b_gbi = 0.0;
  double concurrence = 0.0;
  XState nearest = XState::maximally_mixed();
  std::optional<BellOperator> witness;
};

// All three measures for one valid state. The witness is present only when
// the state is entangled by a margin; on and below the boundary B equals E
// (both zero for separable input) without a realizable witness.
inline EntanglementReport analyze(const XState& sigma) {
  if (!sigma.is_psd()) {
    throw domain_error("analyze: state is not positive semidefinite, eigenvalue w - |z| = " +
                       std::to_string(sigma.w() - sigma.abs_z()));
  }
  EntanglementReport report;
  report.e_hs = hs_entanglement(sigma);
  report.nearest = nearest_separable(sigma).state;
  report.concurrence = concurrence(to_matrix(sigma));
  if (sigma.abs_z() - sigma.v() > kWitnessMargin) {
    report.witness = bell_operator(sigma);
    report.b_gbi = gbi_violation(sigma, *report.witness);
  } else {
    report.b_gbi = report.e_hs;
  }
  return report;
}

inline void to_json(nlohmann::json& j, const BellOperator& a) {
  j = nlohmann::json{{"diag",
                      {a.matrix(0, 0).real(), a.matrix(1, 1).real(), a.matrix(2, 2).real(),
                       a.matrix(3, 3).real()}},
                     {"shift", a.shift},
                     {"scale", a.scale}};
}

inline void to_json(nlohmann::json& j, const EntanglementReport& r) {
  j = nlohmann::json{{"e_hs", r.e_hs},
                     {"b_gbi", r.b_gbi},
                     {"concurrence", r.concurrence},
                     {"nearest", r.nearest}};
  if (r.witness) {
    j["witness"] = *r.witness;
  } else {
    j["witness"] = nullptr;
  }
}

}  // namespace xent
