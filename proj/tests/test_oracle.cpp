#include <catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <cstddef>

#include <json.hpp>

#include "xent/entanglement.hpp"
#include "xent/errors.hpp"
#include "xent/matrix.hpp"
#include "xent/oracle.hpp"
#include "xent/rng.hpp"
#include "xent/xstate.hpp"

using xent::PsdConstraint;
using xent::StateClass;
using xent::XState;

TEST_CASE("fixed-z grid search") {
  const auto singlet = xent::min_distance_fixed_z(XState::singlet());
  REQUIRE(std::abs(singlet.minimum - 1.0) <= 1e-6);
  REQUIRE(std::abs(singlet.argmin.v() - 0.5) <= 1e-6);
  REQUIRE(singlet.family == xent::SeparableFamily::fixed_z);
  REQUIRE(singlet.evaluations > 0);

  const auto mid = xent::min_distance_fixed_z(XState(0.1, 0.3));
  REQUIRE(std::abs(mid.minimum - 0.4) <= 1e-6);
  REQUIRE(std::abs(mid.argmin.v() - 0.3) <= 1e-6);

  const XState sep(0.3, 0.2);
  const auto trivial = xent::min_distance_fixed_z(sep);
  REQUIRE(trivial.minimum == 0.0);
  REQUIRE(trivial.evaluations == 0);
  REQUIRE(trivial.argmin.v() == sep.v());

  REQUIRE_THROWS_AS(xent::min_distance_fixed_z(XState::singlet(), 0.0), xent::usage_error);
}

TEST_CASE("fixed-z search agrees with the closed form") {
  xent::RandomStream rs(23);
  for (int rep = 0; rep < 1000; ++rep) {
    const XState sigma = xent::random_xstate(StateClass::entangled, rs);
    const auto r = xent::min_distance_fixed_z(sigma);
    REQUIRE(std::abs(r.minimum - xent::hs_entanglement(sigma)) <= 1e-6);
    REQUIRE(r.argmin.abs_z() == sigma.abs_z());
    REQUIRE(!xent::is_entangled(r.argmin));
    const double direct =
        xent::hs_norm(xent::to_matrix(r.argmin, false) - xent::to_matrix(sigma, false));
    REQUIRE(std::abs(r.minimum - direct) <= 1e-10);
  }
}

TEST_CASE("free-z minimization without the psd constraint") {
  const auto singlet = xent::min_distance_free_z(XState::singlet(), PsdConstraint::without_psd);
  REQUIRE(std::abs(singlet.minimum - 0.577350269189625765) <= 1e-6);
  // Cone projection lands at v = r = (2 v_e + |z|)/3 = 1/6.
  REQUIRE(std::abs(singlet.argmin.v() - 1.0 / 6.0) <= 1e-4);
  REQUIRE(std::abs(singlet.argmin.z().real() + 1.0 / 6.0) <= 1e-4);
  REQUIRE(std::abs(singlet.argmin.z().imag()) <= 1e-6);
  REQUIRE(singlet.family == xent::SeparableFamily::free_z);

  const auto mid = xent::min_distance_free_z(XState(0.1, 0.3), PsdConstraint::without_psd);
  REQUIRE(std::abs(mid.minimum - 0.230940107675850306) <= 1e-6);

  const auto sep = xent::min_distance_free_z(XState(0.3, 0.2), PsdConstraint::without_psd);
  REQUIRE(sep.minimum <= 1e-8);

  REQUIRE_THROWS_AS(
      xent::min_distance_free_z(XState::singlet(), PsdConstraint::without_psd, 0.0),
      xent::usage_error);
}

TEST_CASE("psd constraint does not move the singlet optimum") {
  // The cone argmin (1/6, 1/6) already satisfies w >= |z|.
  const auto r = xent::min_distance_free_z(XState::singlet(), PsdConstraint::with_psd);
  REQUIRE(std::abs(r.minimum - 0.577350269189625765) <= 1e-4);
  REQUIRE(r.family == xent::SeparableFamily::psd_constrained_free_z);
  REQUIRE(r.argmin.is_psd());
}

TEST_CASE("free-z never beats its closed form and never exceeds fixed-z") {
  xent::RandomStream rs(29);
  for (int rep = 0; rep < 50; ++rep) {
    const XState sigma = xent::random_xstate(StateClass::entangled, rs);
    const auto free = xent::min_distance_free_z(sigma, PsdConstraint::without_psd);
    const auto fixed = xent::min_distance_fixed_z(sigma);
    REQUIRE(std::abs(free.minimum - xent::free_z_cone_minimum(sigma)) <= 1e-6);
    REQUIRE(free.minimum <= fixed.minimum + 1e-6);
    REQUIRE(!xent::is_entangled(free.argmin));

    const XState closed = xent::free_z_cone_argmin(sigma);
    REQUIRE(std::abs(xent::hs_distance(closed, sigma) - free.minimum) <= 1e-6);
  }
}

TEST_CASE("witness audit") {
  const auto a = xent::bell_operator(XState::singlet());
  const auto audit = xent::witness_audit(a, 200, 7);
  // <rho, A> = 2(v - |z|) over fixed-z states: infimum 0 at v = |z|.
  REQUIRE(std::abs(audit.min_fixed_z) <= 1e-12);
  // Full separable family reaches -2|z| at diag(0, 1/2, 1/2, 0).
  REQUIRE(std::abs(audit.min_full_family + 1.0) <= 1e-12);

  const auto again = xent::witness_audit(a, 200, 7);
  REQUIRE(audit.min_fixed_z == again.min_fixed_z);
  REQUIRE(audit.min_full_family == again.min_full_family);

  xent::RandomStream rs(31);
  for (int rep = 0; rep < 100; ++rep) {
    const XState sigma = xent::random_xstate(StateClass::entangled, rs);
    const auto w = xent::witness_audit(xent::bell_operator(sigma), 50, 1000 + rep);
    REQUIRE(w.min_fixed_z >= -1e-10);
    REQUIRE(w.min_full_family >= -2.0 * sigma.abs_z() - 1e-10);
  }
}

TEST_CASE("random xstate classes") {
  xent::RandomStream rs(37);
  for (int rep = 0; rep < 1000; ++rep) {
    const XState any = xent::random_xstate(StateClass::any, rs);
    REQUIRE(any.is_psd());
    const XState ent = xent::random_xstate(StateClass::entangled, rs);
    REQUIRE(ent.v() < ent.abs_z());
    const XState sep = xent::random_xstate(StateClass::separable, rs);
    REQUIRE(sep.v() >= sep.abs_z());
    REQUIRE(sep.is_psd());
  }

  xent::RandomStream a(42), b(42);
  for (int rep = 0; rep < 100; ++rep) {
    const XState xa = xent::random_xstate(StateClass::any, a);
    const XState xb = xent::random_xstate(StateClass::any, b);
    REQUIRE(xa.v() == xb.v());
    REQUIRE(xa.z() == xb.z());
  }
}

TEST_CASE("two-spin closed forms") {
  const auto c = xent::two_spin_correlators(-1.0, 0.5);
  REQUIRE(std::abs(c.czz + 0.153744864742531287) <= 1e-15);
  REQUIRE(c.cxx == c.czz);
  REQUIRE(std::abs(xent::two_spin_singlet_weight(-1.0, 0.5) - 0.71123459422759386) <= 1e-15);
  REQUIRE(std::abs(xent::two_spin_threshold(-1.0) - 0.910239226626837394) <= 1e-15);
  REQUIRE_THROWS_AS(xent::two_spin_threshold(0.0), xent::domain_error);
  REQUIRE_THROWS_AS(xent::two_spin_threshold(1.0), xent::domain_error);
  REQUIRE_THROWS_AS(xent::two_spin_singlet_weight(-1.0, 0.0), xent::domain_error);
}

TEST_CASE("minimization result json") {
  const nlohmann::json j = xent::min_distance_fixed_z(XState::singlet());
  REQUIRE(j.at("family").get<std::string>() == "fixed-z");
  REQUIRE(j.at("argmin").contains("v"));
  REQUIRE(j.at("evaluations").get<long long>() > 0);
  REQUIRE(std::abs(j.at("minimum").get<double>() - 1.0) <= 1e-6);
}
