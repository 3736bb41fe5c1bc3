#include <doctest.h>

#include "angelesco/equilibrium.hpp"

#include <random>

using namespace angelesco;

namespace {
double d(const Real& x) { return static_cast<double>(x); }
}  // namespace

TEST_CASE("equilibrium: curve constants at a = -2") {
  PrecisionGuard g(50);
  const auto c = curve_constants(Real(-2), 50);
  CHECK(d(abs(c.zstar - Real("4.33292801285898977859359254054e-3"))) < 1e-30);
  CHECK(d(abs(c.x0 - Real("-4.00902569419553177230764356992e-3"))) < 1e-30);
  CHECK(d(abs(c.b + Real(1) / 63)) < 1e-45);
}

TEST_CASE("equilibrium: symmetric case a = -1") {
  PrecisionGuard g(50);
  const auto c = curve_constants(Real(-1), 50);
  CHECK(c.zstar == 0);
  CHECK(c.x0 == 0);
  CHECK(c.b == 0);
}

TEST_CASE("equilibrium: branch identities at random points") {
  PrecisionGuard g(40);
  const auto c = curve_constants(Real(-0.6), 40);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int k = 0; k < 20; ++k) {
    const Complex z(Real(u(rng)), Real(u(rng)));
    const auto v = zeta_branches(z, c);
    CHECK(d(v.sum_residual()) < 1e-25);
    CHECK(d(v.product_residual(c)) < 1e-25);
  }
}

TEST_CASE("equilibrium: branch points and cuts") {
  PrecisionGuard g(40);
  const auto c = curve_constants(Real(-2), 40);
  CHECK_THROWS_AS(zeta_branches(Complex(0), c), DomainError);
  CHECK_THROWS_AS(zeta_branches(Complex(Real(-0.5)), c, 0), BranchError);
  CHECK_THROWS_AS(curve_constants(Real(1), 40), Error);
}

TEST_CASE("equilibrium: masses and Lagrange constants at a = -2") {
  PrecisionGuard g(40);
  const auto c = curve_constants(Real(-2), 40);
  const DensityModel m(c);
  CHECK(d(abs(m.mass(1, Real(1e-30)) - Real(0.5))) < 1e-20);
  CHECK(d(abs(m.mass(2, Real(1e-30)) - Real(0.5))) < 1e-20);
  const auto pd = potentials_and_constants(c);
  CHECK(d(abs(pd.l1 - Real("0.583105038814124"))) < 1e-13);
  CHECK(d(abs(pd.l2 - Real("1.18208491309891"))) < 1e-13);
  CHECK(d(abs(pd.l1 - pd.l1_g)) < 1e-20);
  CHECK(d(abs(pd.l2 - pd.l2_g)) < 1e-20);
  CHECK(d(pd.l1_deviation) < 1e-20);
}

TEST_CASE("equilibrium: density sign pattern around x0") {
  PrecisionGuard g(40);
  const auto c = curve_constants(Real(-2), 40);
  const DensityModel m(c);
  // a < -1: x0 < 0 lies in (a, 0); psi_1 changes sign there.
  CHECK(m.at(1, Real(-1)) > 0);
  CHECK(m.at(2, Real(0.5)) > 0);
  CHECK(m.at(1, c.x0 / 2) * m.at(1, Real(-1)) < 0);
}

TEST_CASE("equilibrium: Lagrange sum at a = -1") {
  PrecisionGuard g(40);
  const auto pd = potentials_and_constants(curve_constants(Real(-1), 40));
  CHECK(d(abs(pd.l1 + pd.l2 - Real(1.5) * log(Real(27) / 4))) < 1e-20);
  CHECK(d(abs(pd.l1 - Real("1.43215687866333"))) < 1e-13);
}

TEST_CASE("equilibrium: phase maps at a = -1") {
  PrecisionGuard g(40);
  const auto pm = phase_maps(curve_constants(Real(-1), 40));
  CHECK(d(abs(pm.fprime0 - sqrt(Real(2)))) < 1e-10);
  CHECK(d(abs(pm.tau0)) < 1e-10);
  CHECK(pm.min_re_lambda2 > 0);
}

TEST_CASE("equilibrium: riemann map") {
  PrecisionGuard g(40);
  CHECK(d(abs(riemann_map(Complex(-1), Real(-1)) - Complex(-1))) < 1e-35);
  CHECK(d(abs(riemann_map(Complex(1), Real(-1)) - Complex(1))) < 1e-35);
  CHECK_THROWS_AS(riemann_map(Complex(Real(1) / sqrt(Real(3))), Real(-1)), PoleError);
}
