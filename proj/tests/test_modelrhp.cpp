#include <doctest.h>

#include "angelesco/modelrhp.hpp"

using namespace angelesco;

namespace {
double d(const Real& x) { return static_cast<double>(x); }
}  // namespace

TEST_CASE("modelrhp: Q at the origin") {
  PrecisionGuard g(40);
  for (double b : {-0.5, 0.0, 1.3}) {
    const Real beta(b);
    const Complex q = Q_eval(Complex(0), Real(0.7), beta, {}, 40).value;
    CHECK(d(abs(q - Complex(2 * pi() / tgamma(beta + 1))) / abs(q)) < 1e-30);
  }
}

TEST_CASE("modelrhp: Q(1) at tau = 0, beta = 0") {
  PrecisionGuard g(40);
  const Complex q = Q_eval(Complex(1), Real(0), Real(0), {}, 40).value;
  CHECK(d(abs(q - Complex(Real("4.74493250409357")))) < 1e-13);
  const Complex s = Q_series_tau0(Complex(1), Real(0), 2000, 40).value;
  CHECK(d(abs(q - s)) < 1e-30);
}

TEST_CASE("modelrhp: series and contour agree, contours are interchangeable") {
  PrecisionGuard g(40);
  for (const Complex& z : {Complex(Real(3), Real(4)), Complex(Real(-2.5), Real(1)), Complex(Real(0), Real(-5))}) {
    const Complex a = Q_eval(z, Real(0), Real(0.5), {}, 40).value;
    const Complex b = Q_series_tau0(z, Real(0.5), 2000, 40).value;
    const Complex c = Q_eval(z, Real(0), Real(0.5), ContourSpec::alternate(), 40).value;
    CHECK(d(abs(a - b) / abs(b)) < 1e-25);
    CHECK(d(abs(a - c) / abs(c)) < 1e-25);
  }
}

TEST_CASE("modelrhp: jumps and monodromy") {
  PrecisionGuard g(30);
  const Real beta(0.5), tau(-1);
  for (const auto& ray : jump_table(beta)) CHECK(d(jump_residual(ray, Real(1.5), tau, beta, 30)) < 1e-8);
  CHECK(d(monodromy_residual(Real(-1), tau, beta, 30)) < 1e-20);
}

TEST_CASE("modelrhp: q and Q solve their ODEs") {
  PrecisionGuard g(30);
  const Complex z(Real(0.8), Real(-1.1));
  for (int j = 1; j <= 3; ++j) CHECK(d(q_ode_residual(j, z, Real(1), Real(1.3), 30)) < 1e-20);
  CHECK(d(Q_ode_residual(z, Real(1), Real(1.3), 30)) < 1e-20);
  CHECK(d(Q_relation_check(Complex(Real(1.5), Real(0.5)), Real(0.3), Real(0), 30)) < 1e-20);
}

TEST_CASE("modelrhp: sectors and branch errors") {
  PrecisionGuard g(30);
  CHECK(sector_of(Complex(Real(1), Real(0.5))) == 1);
  CHECK(sector_of(Complex(Real(0), Real(1))) == 2);
  CHECK(sector_of(Complex(Real(-1), Real(0.5))) == 3);
  CHECK(sector_of(Complex(Real(-1), Real(-0.5))) == -3);
  CHECK_THROWS_AS(sector_of(Complex(Real(1), Real(1))), BranchError);
  CHECK_THROWS_AS(q_derivs(1, Complex(Real(-1)), Real(0), Real(0)), BranchError);
  CHECK_THROWS_AS(q_derivs(1, Complex(0), Real(0), Real(0)), DomainError);
}

TEST_CASE("modelrhp: 3x3 helpers") {
  PrecisionGuard g(30);
  const Mat3 A = {{{Complex(2), Complex(1), Complex(0)},
                   {Complex(0), Complex(3), Complex(Real(0), Real(1))},
                   {Complex(1), Complex(0), Complex(1)}}};
  const Mat3 I = mat_mul(A, mat_inverse(A));
  CHECK(d(mat_max_norm(mat_sub(I, mat_identity()))) < 1e-28);
  // Omega matrices are invertible.
  const auto mm = ModelMatrices::build(Real(0.7), Real(0.5));
  CHECK(d(abs(mat_det(mm.OmegaPlus))) > 1);
}

TEST_CASE("modelrhp: asymptotic remainder shrinks with the first correction") {
  PrecisionGuard g(30);
  const Complex z(Real(9.6), Real(12.8));
  const auto r0 = psi_asymptotic_check(z, Real(0.7), Real(0.5), 0);
  const auto r1 = psi_asymptotic_check(z, Real(0.7), Real(0.5), 1);
  CHECK(d(r1.norm) < d(r0.norm));
  CHECK(d(r0.self_check) < 1e-20);
}
