#include <doctest.h>

#include "angelesco/mop.hpp"

#include <boost/multiprecision/gmp.hpp>

using namespace angelesco;

namespace {
Rational binom(unsigned n, unsigned k) {
  Rational r(1);
  for (unsigned i = 0; i < k; ++i) r = r * Rational(n - i) / Rational(i + 1);
  return r;
}
Rational ipow(const Rational& b, unsigned e) {
  Rational r(1);
  for (unsigned i = 0; i < e; ++i) r *= b;
  return r;
}
}  // namespace

TEST_CASE("mop: P11 on the symmetric plain case") {
  const auto P = solve_mop({1, 1}, WeightParams::plain(Rational(-1)), 60);
  REQUIRE(P.exact.has_value());
  CHECK((*P.exact)[0] == Rational(-1, 3));
  CHECK((*P.exact)[1] == 0);
  CHECK((*P.exact)[2] == 1);
}

TEST_CASE("mop: exact value at zero matches a^n / binom(3n, n)") {
  for (Rational a : {Rational(-1), Rational(-3, 2)}) {
    for (unsigned n : {1u, 2u, 5u, 9u}) {
      const auto P = solve_mop({n, n}, WeightParams::plain(a), 160);
      REQUIRE(P.exact.has_value());
      CHECK((*P.exact)[0] == ipow(a, n) / binom(3 * n, n));
    }
  }
}

TEST_CASE("mop: double sum agrees with the moment solve") {
  const Rational a(-3, 2), al(1, 2), be(-1, 2), ga(1, 2);
  const auto p = WeightParams::jacobi_angelesco(a, al, be, ga);
  const unsigned n = 5;
  const auto P = solve_mop({n, n}, p, 160);
  const auto C = classical_pnn_coeffs(n, al, be, ga, a);
  PrecisionGuard g(160);
  for (unsigned k = 0; k <= 2 * n; ++k) {
    const Real c = to_real(C[k]);
    const Real err = abs(P.coeffs[k] - c) / (abs(c) + 1);
    CHECK(static_cast<double>(err) < 1e-30);
  }
}

TEST_CASE("mop: closed form at zero with exponents") {
  // binom(n+beta, n) a^n / binom(3n+alpha+beta+gamma, n)
  const Rational v = classical_pnn_at_zero(2, Rational(0), Rational(1), Rational(0), Rational(-1));
  // binom(3,2) / binom(7,2) = 3/21
  CHECK(v == Rational(1, 7));
  CHECK(gbinom(Rational(1, 2), 2) == Rational(-1, 8));
}

TEST_CASE("mop: zeros are simple and split n1 / n2") {
  const auto p = WeightParams::jacobi_angelesco(Rational(-1), Rational(1, 2), Rational(0), Rational(-1, 2));
  const auto P = solve_mop({6, 4}, p, 160);
  const auto z = poly_zeros(P, p);
  CHECK(z.left.size() == 6);
  CHECK(z.right.size() == 4);
  for (const auto& x : z.left) CHECK((x > -1 && x < 0));
  for (const auto& x : z.right) CHECK((x > 0 && x < 1));
}

TEST_CASE("mop: non-constant analytic factor takes the floating path") {
  auto p = WeightParams::plain(Rational(-1));
  p.h1 = AnalyticFactor::power(Rational(1), {{Rational(2), Rational(1)}});
  const auto P = solve_mop({3, 3}, p, 100);
  CHECK_FALSE(P.exact.has_value());
  CHECK(P.orthogonality_residual < 1e-80);
  CHECK(P.accurate_digits > 60);
}

TEST_CASE("mop: scaled evaluation at zero is exact for tau = 0") {
  const auto v = eval_scaled(Complex(0), ScalingParams{Rational(0), 16}, WeightParams::plain(Rational(-1)), 40);
  CHECK(v.exact);
  PrecisionGuard g(v.digits);
  const Real want = to_real(Rational(1) / binom(48, 16));
  CHECK(static_cast<double>(abs(v.value.real() - want) / want) < 1e-60);
}
