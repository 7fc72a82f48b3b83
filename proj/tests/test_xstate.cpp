#include <catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <string>

#include <json.hpp>

#include "xent/errors.hpp"
#include "xent/matrix.hpp"
#include "xent/rng.hpp"
#include "xent/xstate.hpp"

using xent::XState;

TEST_CASE("construction clamps round-off and rejects real violations") {
  REQUIRE(XState(0.5 + 1e-13, 0.0).v() == 0.5);
  REQUIRE(XState(-1e-13, 0.0).v() == 0.0);
  REQUIRE(std::abs(XState(0.0, std::complex<double>(0.5 + 1e-13, 0.0)).abs_z() - 0.5) <= 1e-15);
  REQUIRE_THROWS_AS(XState(0.6, 0.0), xent::domain_error);
  REQUIRE_THROWS_AS(XState(-0.1, 0.0), xent::domain_error);
  REQUIRE_THROWS_AS(XState(0.1, std::complex<double>(0.4, 0.4)), xent::domain_error);
}

TEST_CASE("named states and derived fields") {
  const XState s = XState::singlet();
  REQUIRE(s.v() == 0.0);
  REQUIRE(s.z() == std::complex<double>(-0.5, 0.0));
  REQUIRE(s.w() == 0.5);
  REQUIRE(s.abs_z() == 0.5);
  REQUIRE(s.is_psd());

  const XState m = XState::maximally_mixed();
  REQUIRE(m.v() == 0.25);
  REQUIRE(m.w() == 0.25);
  REQUIRE(m.abs_z() == 0.0);
}

TEST_CASE("positivity is w >= |z| with the shared floor") {
  REQUIRE(XState(0.1, 0.3).is_psd());   // w = 0.4
  REQUIRE(XState(0.0, 0.5).is_psd());   // pure singlet boundary
  REQUIRE(!XState(0.4, 0.2).is_psd());  // w = 0.1 < |z|
}

TEST_CASE("from_correlators maps the singlet and validates ranges") {
  const XState s = xent::from_correlators({-0.25, -0.25});
  REQUIRE(s.v() == 0.0);
  REQUIRE(s.z() == std::complex<double>(-0.5, 0.0));

  try {
    xent::from_correlators({0.3, 0.0});
    FAIL("czz out of range accepted");
  } catch (const xent::domain_error& e) {
    REQUIRE(std::string(e.what()).find("czz") != std::string::npos);
  }
  try {
    xent::from_correlators({0.0, -0.3});
    FAIL("cxx out of range accepted");
  } catch (const xent::domain_error& e) {
    REQUIRE(std::string(e.what()).find("cxx") != std::string::npos);
  }
}

TEST_CASE("to_matrix lays out the X pattern") {
  const XState x(0.1, std::complex<double>(0.2, -0.1));
  const xent::cmat m = xent::to_matrix(x);
  REQUIRE(m(0, 0) == std::complex<double>(0.1, 0.0));
  REQUIRE(m(3, 3) == std::complex<double>(0.1, 0.0));
  REQUIRE(m(1, 1) == std::complex<double>(0.4, 0.0));
  REQUIRE(m(2, 2) == std::complex<double>(0.4, 0.0));
  REQUIRE(m(1, 2) == x.z());
  REQUIRE(m(2, 1) == std::conj(x.z()));
  REQUIRE(std::abs(m(0, 3)) == 0.0);
  REQUIRE(std::abs(m(0, 1)) == 0.0);
  REQUIRE(std::abs(m.trace().real() - 1.0) <= 1e-15);
}

TEST_CASE("to_matrix enforces positivity unless told otherwise") {
  const XState bad(0.4, 0.2);
  try {
    xent::to_matrix(bad);
    FAIL("non-PSD state accepted");
  } catch (const xent::domain_error& e) {
    REQUIRE(std::string(e.what()).find("-0.1") != std::string::npos);
  }
  REQUIRE(xent::to_matrix(bad, false).rows() == 4);
}

TEST_CASE("entanglement verdict is strict") {
  REQUIRE(!xent::is_entangled(XState(0.3, 0.3)));
  REQUIRE(xent::is_entangled(XState(0.29, 0.3)));
  REQUIRE(!xent::is_entangled(XState(0.31, 0.3)));
}

TEST_CASE("validate_density_matrix catches each defect") {
  xent::RandomStream rs(41);
  REQUIRE_NOTHROW(xent::validate_density_matrix(xent::to_matrix(XState(0.1, 0.3))));

  xent::cmat off_trace = xent::cmat::identity(4);
  REQUIRE_THROWS_AS(xent::validate_density_matrix(off_trace), xent::domain_error);

  xent::cmat non_herm(4, 4);
  non_herm(0, 1) = 1.0;
  non_herm(0, 0) = 1.0;
  REQUIRE_THROWS_AS(xent::validate_density_matrix(non_herm), xent::domain_error);

  const xent::cmat negative = xent::cmat::diagonal({-0.1, 1.1, 0.0, 0.0});
  REQUIRE_THROWS_AS(xent::validate_density_matrix(negative), xent::domain_error);
}

TEST_CASE("ppt_check matches the closed form v >= |z|") {
  xent::RandomStream rs(42);
  for (int rep = 0; rep < 500; ++rep) {
    const double v = rs.uniform(0.0, 0.5);
    const double r = rs.uniform(0.0, 0.5 - v);
    const XState x(v, std::polar(r, rs.uniform(0.0, 6.28)));
    const auto result = xent::ppt_check(xent::to_matrix(x));
    REQUIRE(result.is_ppt == !xent::is_entangled(x));
    // PT spectrum is {w, w, v +- |z|}; the minimum is min(w, v - |z|).
    const double want_min = std::min(x.w(), v - r);
    REQUIRE(std::abs(result.min_eigenvalue - want_min) <= 1e-12);
  }
  REQUIRE_THROWS_AS(xent::ppt_check(xent::cmat::identity(8)), xent::domain_error);
}

TEST_CASE("xstate json round trip") {
  const XState x(0.12, std::complex<double>(-0.2, 0.05));
  nlohmann::json j = x;
  REQUIRE(j.at("v").get<double>() == 0.12);
  const XState back = xent::xstate_from_json(j);
  REQUIRE(back.v() == x.v());
  REQUIRE(back.z() == x.z());
}
