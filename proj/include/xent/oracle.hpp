#pragma once

// Independent brute-force verifiers for the closed forms: 1-D golden-section
// minimization over the fixed-z separable family, projected gradient descent
// over the free-z families, randomized witness audits, and the analytic
// two-spin Gibbs formulas. Tests and `verify` call these; production code
// never does.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>

#include <json.hpp>

#include "xent/entanglement.hpp"
#include "xent/errors.hpp"
#include "xent/matrix.hpp"
#include "xent/rng.hpp"
#include "xent/xstate.hpp"

namespace xent {

enum class SeparableFamily { fixed_z, free_z, psd_constrained_free_z };

inline const char* to_string(SeparableFamily f) {
  switch (f) {
    case SeparableFamily::fixed_z:
      return "fixed-z";
    case SeparableFamily::free_z:
      return "free-z";
    default:
      return "psd-constrained-free-z";
  }
}

struct MinimizationResult {
  double minimum = 0.0;
  XState argmin = XState::maximally_mixed();
  std::uint64_t evaluations = 0;
  SeparableFamily family = SeparableFamily::fixed_z;
};

// Minimize hs_distance(XState(v_s, sigma.z), sigma) over v_s in [|z|, 1/2] by
// golden-section refinement. The objective is 2|v_s - v_e|, so the expected
// argmin is v_s = |z| for entangled input.
inline MinimizationResult min_distance_fixed_z(const XState& sigma, double grid_tol = 1e-7) {
  if (!(grid_tol > 0.0)) throw usage_error("min_distance_fixed_z: grid_tol must be positive");
  if (!is_entangled(sigma)) return {0.0, sigma, 0, SeparableFamily::fixed_z};

  const std::complex<double> z = sigma.z();
  const auto f = [&](double vs) { return hs_distance(XState(vs, z), sigma); };

  double a = sigma.abs_z(), b = 0.5;
  std::uint64_t evals = 0;
  constexpr double invphi = 0.6180339887498949;  // (sqrt 5 - 1)/2
  if (b - a > grid_tol) {
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = f(c), fd = f(d);
    evals += 2;
    while (b - a > grid_tol) {
      if (fc < fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - invphi * (b - a);
        fc = f(c);
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + invphi * (b - a);
        fd = f(d);
      }
      ++evals;
    }
  }
  const double vs = 0.5 * (a + b);
  ++evals;
  return {f(vs), XState(vs, z), evals, SeparableFamily::fixed_z};
}

enum class PsdConstraint { without_psd, with_psd };

namespace detail {

// Feasible regions in the (v, r = |z|) half-plane, r >= 0:
//   cone: r <= v                      (separability of the X form)
//   lens: r <= v and r <= 1/2 - v    (separability and positivity)
// Both are rotationally symmetric in the phase of z, so the Euclidean
// projection acts on (v, r) and keeps the phase.
struct VrPoint {
  double v;
  double r;
};

inline VrPoint project_cone(VrPoint p) {
  if (p.r <= p.v) return p;
  if (p.v <= -p.r) return {0.0, 0.0};
  const double t = 0.5 * (p.v + p.r);
  return {t, t};
}

inline VrPoint project_segment(VrPoint p, VrPoint a, VrPoint b) {
  const double ux = b.v - a.v, uy = b.r - a.r;
  const double len2 = ux * ux + uy * uy;
  double t = ((p.v - a.v) * ux + (p.r - a.r) * uy) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return {a.v + t * ux, a.r + t * uy};
}

inline VrPoint project_lens(VrPoint p) {
  if (p.r >= 0.0 && p.r <= p.v && p.r <= 0.5 - p.v) return p;
  const VrPoint apex_l{0.0, 0.0}, apex_r{0.5, 0.0}, top{0.25, 0.25};
  VrPoint best{0.0, 0.0};
  double best_d2 = std::numeric_limits<double>::infinity();
  for (const VrPoint& cand : {project_segment(p, apex_l, top), project_segment(p, top, apex_r),
                              project_segment(p, apex_l, apex_r)}) {
    const double dv = cand.v - p.v, dr = cand.r - p.r;
    const double d2 = dv * dv + dr * dr;
    if (d2 < best_d2) {
      best_d2 = d2;
      best = cand;
    }
  }
  return best;
}

struct FreeZPoint {
  double v;
  std::complex<double> z;
};

// Phase-preserving shrink of z to |z| <= r. The rescale itself can round an
// ulp high, so shave it back under when it does.
inline std::complex<double> with_radius_at_most(std::complex<double> z, double r) {
  const double rz = std::abs(z);
  if (rz <= r) return z;
  z *= r / rz;
  if (std::abs(z) > r) z *= 1.0 - 4.0 * std::numeric_limits<double>::epsilon();
  return z;
}

inline FreeZPoint project_feasible(FreeZPoint p, PsdConstraint constraint) {
  const double r = std::abs(p.z);
  const VrPoint q = (constraint == PsdConstraint::with_psd) ? project_lens({p.v, r})
                                                            : project_cone({p.v, r});
  std::complex<double> z{};
  if (q.r > 0.0) z = (r > 0.0) ? p.z * (q.r / r) : std::complex<double>(q.r, 0.0);
  const double cap = (constraint == PsdConstraint::with_psd) ? std::min(q.v, 0.5 - q.v) : q.v;
  return {q.v, with_radius_at_most(z, cap)};
}

}  // namespace detail

// Stationarity of the distance quadratic on the cone boundary r = v gives the
// reference values for entangled sigma: argmin radius t = (2 v_e + |z|)/3 and
// minimum (2/sqrt 3)(|z| - v_e). For the psd-constrained family this holds
// while t <= 1/4 (lens vertex inactive).
inline double free_z_cone_minimum(const XState& sigma) {
  return std::max(0.0, 2.0 * (sigma.abs_z() - sigma.v()) / std::sqrt(3.0));
}

inline XState free_z_cone_argmin(const XState& sigma) {
  if (!is_entangled(sigma)) return sigma;
  const double t = (2.0 * sigma.v() + sigma.abs_z()) / 3.0;
  return XState(t, detail::with_radius_at_most(sigma.z() * (t / sigma.abs_z()), t));
}

// Minimize sqrt(4 (v_s - v_e)^2 + 2 |z_s - z|^2) over the free-z separable
// family by projected gradient descent on the squared objective, 8 starts
// (the projection of sigma plus 7 random feasible points), step halving, and
// convergence when the projected displacement times the gradient norm drops
// below tol.
inline MinimizationResult min_distance_free_z(const XState& sigma, PsdConstraint constraint,
                                              double tol = 1e-8, std::uint64_t seed = 12345) {
  const SeparableFamily family = (constraint == PsdConstraint::with_psd)
                                     ? SeparableFamily::psd_constrained_free_z
                                     : SeparableFamily::free_z;
  if (!(tol > 0.0)) throw usage_error("min_distance_free_z: tol must be positive");
  if (!is_entangled(sigma)) return {0.0, sigma, 0, family};

  const double ve = sigma.v();
  const std::complex<double> ze = sigma.z();
  const auto objective = [&](const detail::FreeZPoint& p) {
    const double dv = p.v - ve;
    return 4.0 * dv * dv + 2.0 * std::norm(p.z - ze);
  };

  constexpr int kStarts = 8;
  constexpr int kMaxIters = 10000;
  std::uint64_t evals = 0;
  bool converged_any = false;
  detail::FreeZPoint best{0.25, 0.0};
  double best_f = std::numeric_limits<double>::infinity();

  for (int start = 0; start < kStarts; ++start) {
    detail::FreeZPoint x{};
    if (start == 0) {
      x = detail::project_feasible({ve, ze}, constraint);
    } else {
      RandomStream rs = RandomStream::substream(seed, static_cast<std::uint64_t>(start));
      const double v = rs.uniform(0.0, 0.5);
      const double r_cap = (constraint == PsdConstraint::with_psd) ? std::min(v, 0.5 - v) : v;
      const double r = rs.uniform(0.0, r_cap);
      x = {v, std::polar(r, rs.uniform(0.0, 2.0 * std::numbers::pi))};
    }

    double fx = objective(x);
    ++evals;
    double step = 0.25;
    bool converged = false;
    for (int it = 0; it < kMaxIters; ++it) {
      const double gv = 8.0 * (x.v - ve);
      const std::complex<double> gz = 4.0 * (x.z - ze);
      const double gnorm = std::sqrt(gv * gv + std::norm(gz));
      if (gnorm == 0.0) {
        converged = true;
        break;
      }
      detail::FreeZPoint next{};
      double fn = 0.0;
      bool moved = false;
      while (step > 1e-18) {
        next = detail::project_feasible({x.v - step * gv, x.z - step * gz}, constraint);
        fn = objective(next);
        ++evals;
        if (fn < fx) {
          moved = true;
          break;
        }
        step *= 0.5;
      }
      if (!moved) {
        converged = true;  // no descent direction left within step resolution
        break;
      }
      const double dv = next.v - x.v;
      const double displacement = std::sqrt(dv * dv + std::norm(next.z - x.z));
      x = next;
      fx = fn;
      if (displacement * gnorm < tol) {
        converged = true;
        break;
      }
    }
    converged_any = converged_any || converged;
    if (fx < best_f) {
      best_f = fx;
      best = x;
    }
  }

  const XState argmin(best.v, best.z);
  const double minimum = hs_distance(argmin, sigma);
  if (!converged_any) {
    throw numeric_error("min_distance_free_z: no start converged; best distance so far " +
                        std::to_string(minimum));
  }
  return {minimum, argmin, evals, family};
}

enum class StateClass { any, entangled, separable };

// Uniform v in [0, 1/2], |z| uniform over the PSD-allowed interval of the
// requested class, uniform phase. Entangled draws keep |z| - v > 1e-9 so the
// states admit a well-conditioned witness; draws with no entangled room
// (v >= 1/4) are rejected and retried, deterministically per stream.
inline XState random_xstate(StateClass cls, RandomStream& rs) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const double v = rs.uniform(0.0, 0.5);
    const double psd_cap = 0.5 - v;
    double r = 0.0;
    if (cls == StateClass::any) {
      r = rs.uniform(0.0, psd_cap);
    } else if (cls == StateClass::separable) {
      r = rs.uniform(0.0, std::min(v, psd_cap));
    } else {
      if (v >= psd_cap) continue;
      r = v + (psd_cap - v) * (1.0 - rs.uniform());  // in (v, psd_cap]
      if (r - v <= 1e-9) continue;
    }
    return XState(v, std::polar(r, rs.uniform(0.0, 2.0 * std::numbers::pi)));
  }
  throw numeric_error("random_xstate: rejection sampling failed to produce the requested class");
}

struct WitnessAudit {
  double min_fixed_z;
  double min_full_family;
};

// Audit <rho, A> >= 0 over two candidate meanings of the separable set: the
// fixed-z family {XState(v_s, z): v_s >= |z|} (which includes non-PSD members,
// as the construction of rho_0 does) and the full PSD separable X family with
// free z. Inner products are evaluated on actual matrices, not closed forms.
// The deterministic candidates v_s = |z| and (v, z) = (0, 0) pin the two
// attained minima; the sampled points can only confirm them.
inline WitnessAudit witness_audit(const BellOperator& a, std::size_t samples,
                                  std::uint64_t seed) {
  const double az = a.witness_abs_z();
  // A is diagonal, so <rho, A> only sees the diagonal of rho and the phase of
  // z never enters; the fixed-z family is sampled at real z = |z|.
  double min_fixed = hs_inner(to_matrix(XState(az, az), /*enforce_psd=*/false), a.matrix);
  RandomStream fixed = RandomStream::substream(seed, 1);
  for (std::size_t k = 1; k < samples; ++k) {
    const XState rho_s(fixed.uniform(az, 0.5), az);
    min_fixed = std::min(min_fixed, hs_inner(to_matrix(rho_s, /*enforce_psd=*/false), a.matrix));
  }

  double min_full = hs_inner(to_matrix(XState(0.0, 0.0)), a.matrix);
  RandomStream full = RandomStream::substream(seed, 2);
  for (std::size_t k = 1; k < samples; ++k) {
    const XState rho_s = random_xstate(StateClass::separable, full);
    min_full = std::min(min_full, hs_inner(to_matrix(rho_s), a.matrix));
  }
  return {min_fixed, min_full};
}

// Closed-form two-spin Gibbs physics for H = -j S_1.S_2: level energies
// 3j/4 (singlet) and -j/4 (triplet), singlet weight p_s = 1/(1 + 3 e^{beta j}),
// <S.S> = 1/4 - p_s, and czz = cxx = <S.S>/3 by isotropy.
inline double two_spin_singlet_weight(double j, double temperature) {
  if (!(temperature > 0.0)) throw domain_error("two_spin_singlet_weight: temperature must be positive");
  return 1.0 / (1.0 + 3.0 * std::exp(j / temperature));
}

inline Correlators two_spin_correlators(double j, double temperature) {
  const double c = (0.25 - two_spin_singlet_weight(j, temperature)) / 3.0;
  return {c, c};
}

// v = |z| happens at p_s = 1/2, i.e. e^{beta |j|} = 3.
inline double two_spin_threshold(double j) {
  if (!(j < 0.0)) throw domain_error("two_spin_threshold: no threshold for j >= 0");
  return -j / std::log(3.0);
}

inline void to_json(nlohmann::json& j, const MinimizationResult& r) {
  j = nlohmann::json{{"minimum", r.minimum},
                     {"argmin", r.argmin},
                     {"evaluations", r.evaluations},
                     {"family", to_string(r.family)}};
}

}  // namespace xent
