#include <catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "xent/errors.hpp"
#include "xent/matrix.hpp"
#include "xent/rng.hpp"
#include "xent/xstate.hpp"

#include "util.hpp"

using xent::cmat;

TEST_CASE("hs_inner on reference pairs") {
  const cmat quarter = std::complex<double>(0.25, 0.0) * cmat::identity(4);
  REQUIRE(std::abs(xent::hs_inner(quarter, quarter) - 0.25) <= 1e-15);

  // <sigma_singlet, diag(0,-1,-1,0)> = -w - w = -1
  const cmat singlet = xent::to_matrix(xent::XState::singlet());
  const cmat a = cmat::diagonal({0.0, -1.0, -1.0, 0.0});
  REQUIRE(std::abs(xent::hs_inner(singlet, a) + 1.0) <= 1e-15);
}

TEST_CASE("hs_inner against the identity is the trace") {
  xent::RandomStream rs(11);
  for (int rep = 0; rep < 20; ++rep) {
    const cmat a = test_util::random_hermitian(4, rs);
    REQUIRE(std::abs(xent::hs_inner(a, cmat::identity(4)) - a.trace().real()) <= 1e-12);
  }
}

TEST_CASE("hs_inner is symmetric") {
  xent::RandomStream rs(12);
  for (int rep = 0; rep < 50; ++rep) {
    const cmat a = test_util::random_hermitian(4, rs);
    const cmat b = test_util::random_hermitian(4, rs);
    REQUIRE(std::abs(xent::hs_inner(a, b) - xent::hs_inner(b, a)) <= 1e-12);
  }
}

TEST_CASE("hs_inner rejects bad input") {
  REQUIRE_THROWS_AS(xent::hs_inner(cmat::identity(2), cmat::identity(4)), xent::usage_error);

  // Tr(a b) = i for these nilpotents: the real-part contract must refuse.
  cmat a(2, 2), b(2, 2);
  a(0, 1) = 1.0;
  b(1, 0) = std::complex<double>(0.0, 1.0);
  REQUIRE_THROWS_AS(xent::hs_inner(a, b), xent::numeric_error);
}

TEST_CASE("hs_norm basics") {
  REQUIRE(xent::hs_norm(cmat(4, 4)) == 0.0);
  REQUIRE(std::abs(xent::hs_norm(cmat::identity(4)) - 2.0) <= 1e-15);
}

TEST_CASE("hs_norm of rho_0 - sigma equals 2(|z| - v)") {
  xent::RandomStream rs(13);
  for (int rep = 0; rep < 100; ++rep) {
    const double v = rs.uniform(0.0, 0.24);
    const double r = rs.uniform(v + 1e-6, 0.5 - v);
    const xent::XState sigma(v, std::polar(r, rs.uniform(0.0, 6.28)));
    const cmat diff = xent::to_matrix(xent::XState(r, sigma.z()), false) -
                      xent::to_matrix(sigma, false);
    REQUIRE(std::abs(xent::hs_norm(diff) - 2.0 * (r - v)) <= 1e-12);
  }
}

TEST_CASE("norm squared equals self inner product") {
  xent::RandomStream rs(14);
  for (int rep = 0; rep < 50; ++rep) {
    const cmat a = test_util::random_hermitian(8, rs);
    const double n = xent::hs_norm(a);
    REQUIRE(std::abs(n * n - xent::hs_inner(a, a)) <= 1e-12 * std::max(1.0, n * n));
  }
}

TEST_CASE("kron reference products") {
  const cmat i4 = xent::kron(cmat::identity(2), cmat::identity(2));
  REQUIRE((i4 - cmat::identity(4)).max_abs() == 0.0);

  const cmat sz = cmat::diagonal({0.5, -0.5});
  const cmat zz = xent::kron(sz, sz);
  const cmat want = cmat::diagonal({0.25, -0.25, -0.25, 0.25});
  REQUIRE((zz - want).max_abs() <= 1e-15);
}

TEST_CASE("kron mixed-product identity") {
  xent::RandomStream rs(15);
  const cmat a = test_util::random_hermitian(2, rs);
  const cmat b = test_util::random_hermitian(2, rs);
  const cmat c = test_util::random_hermitian(2, rs);
  const cmat d = test_util::random_hermitian(2, rs);
  const cmat lhs = xent::kron(a, b) * xent::kron(c, d);
  const cmat rhs = xent::kron(a * c, b * d);
  REQUIRE((lhs - rhs).max_abs() <= 1e-12);
}

TEST_CASE("kron refuses to exceed the dimension cap") {
  const cmat big = cmat::identity(xent::max_dim());
  REQUIRE_THROWS_AS(xent::kron(big, cmat::identity(2)), xent::usage_error);
}

TEST_CASE("adjoint, trace, hermitized") {
  xent::RandomStream rs(16);
  cmat m(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      m(i, j) = std::complex<double>(rs.uniform(-1, 1), rs.uniform(-1, 1));

  const cmat h = m.hermitized();
  REQUIRE(h.is_hermitian(1e-15));
  REQUIRE((m.adjoint().adjoint() - m).max_abs() == 0.0);
  REQUIRE(std::abs(h.trace().imag()) <= 1e-15);
}
