#include <doctest.h>

#include "angelesco/asymptotics.hpp"

#include <cmath>

using namespace angelesco;

namespace {
double d(const Real& x) { return static_cast<double>(x); }
}  // namespace

TEST_CASE("asymptotics: Szego constants of the Jacobi-Angelesco factors") {
  PrecisionGuard g(40);
  const Real k = log(Real(2)) - log(Real(3)) / 2;
  const auto p = WeightParams::jacobi_angelesco(Rational(-1), Rational(1), Rational(0), Rational(1));
  CHECK(d(abs(cj_constant(1, p, 40) - k)) < 1e-30);
  CHECK(d(abs(cj_constant(2, p, 40) - k)) < 1e-30);
  CHECK(d(abs(cj_constant(1, p, 40) - Real("0.143841036225890"))) < 1e-14);
  const auto q = WeightParams::jacobi_angelesco(Rational(-1), Rational(-1, 2), Rational(1, 3), Rational(3, 4));
  CHECK(d(abs(cj_constant(1, q, 40) - Real(0.75) * k)) < 1e-30);
  CHECK(d(abs(cj_constant(2, q, 40) + Real(0.5) * k)) < 1e-30);
}

TEST_CASE("asymptotics: constant factors give zero") {
  PrecisionGuard g(40);
  auto p = WeightParams::plain(Rational(-1));
  p.h1 = AnalyticFactor::constant_factor(Rational(7));
  CHECK(cj_constant(1, p, 40) == 0);
  CHECK(cj_constant(2, p, 40) == 0);
}

TEST_CASE("asymptotics: scaling a factor leaves c_j unchanged") {
  PrecisionGuard g(40);
  auto p = WeightParams::plain(Rational(-1));
  p.h1 = AnalyticFactor::power(Rational(1), {{Rational(3), Rational(2)}});
  auto q = p;
  q.h1 = AnalyticFactor::power(Rational(5), {{Rational(3), Rational(2)}});
  CHECK(d(abs(cj_constant(1, p, 40) - cj_constant(1, q, 40))) < 1e-30);
}

TEST_CASE("asymptotics: C_n anchors") {
  PrecisionGuard g(40);
  const auto p = WeightParams::plain(Rational(-1));
  const Real c4 = Cn_constant(4, Real(0), p, 40);
  const Real want = 2 / sqrt(3 * pi()) * Real(256) / 531441;
  CHECK(d(abs(c4 - want) / want) < 1e-35);
  CHECK(std::abs(d(c4) - 3.138e-4) < 1e-7);
  const Real c5 = Cn_constant(5, Real(0), p, 40);
  CHECK(d(abs(c5 / c4 - sqrt(Real(5) / 4) * 4 / 27)) < 1e-35);
  const Complex r = mh_rhs(Complex(0), 4, Real(0), p, 40);
  CHECK(std::abs(d(r.real()) - 1.9717e-3) < 1e-7);
  CHECK(d(mh_rhs(Complex(0), 5, Real(0), p, 40).real()) < 0);
}

TEST_CASE("asymptotics: zero value formula and consistency") {
  PrecisionGuard g(40);
  for (unsigned long n : {4ul, 9ul, 30ul}) {
    const Real v = pnn_zero_asymptotic(n, Real(0), Real(0), Real(0), Real(0));
    const Real s = abs(v) / (sqrt(Real(n)) * pow(Real(4) / 27, Real(n)));
    CHECK(d(abs(s - 2 * sqrt(pi() / 3))) < 1e-35);
  }
  const auto p = WeightParams::jacobi_angelesco(Rational(-1), Rational(1, 2), Rational(1, 4), Rational(-1, 3));
  const Real tau(0.7);
  const Complex rhs = mh_rhs(Complex(0), 12, tau, p, 40);
  const Real z0 = pnn_zero_asymptotic(12, tau, Real(0.5), Real(0.25), Real(-1) / 3);
  CHECK(d(abs(rhs.real() / z0 - 1)) < 1e-25);
}

TEST_CASE("asymptotics: comparison at the origin") {
  PrecisionGuard g(40);
  const auto rep = mh_compare(Complex(0), Rational(0), {16, 64}, WeightParams::plain(Rational(-1)), 40);
  REQUIRE(rep.rows.size() == 2);
  CHECK(rep.rows[0].lhs_exact);
  CHECK(std::abs(d(rep.rows[0].ratio_minus_1) - 6.09414605045659e-3) < 1e-12);
  CHECK(std::abs(d(rep.rows[1].ratio_minus_1) - 1.52024008965224e-3) < 1e-12);
  CHECK_THROWS_AS(mh_compare(Complex(0), Rational(0), {64, 16}, WeightParams::plain(Rational(-1)), 40),
                  ValidationError);
}

TEST_CASE("asymptotics: exponent fit") {
  CHECK(std::abs(fit_decay_exponent({16, 64, 256}, {0.25, 0.125, 0.0625}) - 0.5) < 1e-12);
}

TEST_CASE("asymptotics: scaling identity is exact at tau = 0") {
  PrecisionGuard g(40);
  const auto r = lagrange_scaling_check(Rational(0), {8, 32}, 40);
  for (const auto& row : r.rows) CHECK(d(abs(row.deviation)) < 1e-20);
}
