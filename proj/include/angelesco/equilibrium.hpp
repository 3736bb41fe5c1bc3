#pragma once

// Modified vector equilibrium problem solved through its spectral curve
//   zeta^3 - p(z) zeta - r(z) = 0,
//   p = (3z - 2z* - 1 - a) / (4 z (z-a)(z-1)),  r = (z - z*) / (4 z^2 (z-a)(z-1)).
// Branches zeta_0, zeta_1, zeta_2 are labelled at z = 10 and continued along
// paths that stay off the real axis until the last leg.

#include "angelesco/errors.hpp"
#include "angelesco/precision.hpp"

#include <array>
#include <complex>
#include <functional>
#include <vector>

namespace angelesco {

struct CurveData {
  Real a;
  Real zstar;  ///< middle root of 64z^3 - 48(a+1)z^2 - (15a^2-78a+15)z - (a+1)^3
  Real x0;     ///< middle root of the x0 cubic; the density zero
  Real b;      ///< (a+1)^3 / (9(a^2-a+1))
  Real c0, c1; ///< zeta_1(s) = c0 s^{-2/3} + c1 s^{-1/3} + O(1) near 0
  unsigned digits = 0;

  Complex p(const Complex& z) const;
  Complex r(const Complex& z) const;
  Complex dp(const Complex& z) const;
  Complex dr(const Complex& z) const;
  /// Coefficients at a real point given its distances to a, 0 and 1, so that
  /// points rounding onto an endpoint stay resolved.
  Real p_at(const Real& x, const Real& xa, const Real& x1) const;
  Real r_at(const Real& x, const Real& xa, const Real& x1) const;
};

/// Curve constants for a < 0. Throws CurveDegeneracyError when a cubic
/// lacks three real roots.
CurveData curve_constants(const Real& a, unsigned digits);

/// The two cubics whose middle roots are z* and x0, as (c3, c2, c1, c0).
std::array<Real, 4> zstar_cubic(const Real& a);
std::array<Real, 4> x0_cubic(const Real& a);

struct BranchValues {
  Complex z;
  std::array<Complex, 3> zeta;  ///< zeta_0, zeta_1, zeta_2
  int side = 0;                 ///< +1 / -1 when z is real and taken from above / below

  Real sum_residual() const;
  Real product_residual(const CurveData& c) const;  ///< relative
};

/// Labelled roots at z. Real z inside [a,1] needs side = +1 or -1 (boundary
/// value from above or below); z in {a, 0, 1} throws DomainError.
BranchValues zeta_branches(const Complex& z, const CurveData& c, int side = +1);

/// Labelled roots along a chain of points starting at points[0]; labels at
/// points[0] come from zeta_branches with the given side.
std::vector<BranchValues> zeta_along(const std::vector<Complex>& points, const CurveData& c, int side = +1);

/// d zeta_j / dz by implicit differentiation of the cubic.
std::array<Complex, 3> zeta_derivatives(const BranchValues& v, const CurveData& c);

/// Fast density evaluator: the real root rho of the cubic deflates to the
/// conjugate pair (-rho +- i sqrt(3 rho^2 - 4p))/2, and the sign of each
/// support component is fixed once by branch tracking.
class DensityModel {
 public:
  explicit DensityModel(const CurveData& c);

  const CurveData& curve() const { return c_; }
  /// psi_j at x given its distances to the interval ends (lo, hi).
  Real operator()(int j, const Real& x, const Real& dlo, const Real& dhi) const;
  Real at(int j, const Real& x) const;
  /// Boundary value zeta_{j,+}(x) from the deflation formula.
  Complex zeta_plus(int j, const Real& x, const Real& dlo, const Real& dhi) const;
  /// Interval ends plus x0 when it lies inside.
  std::vector<Real> breaks(int j) const;
  Real mass(int j, const Real& rel_tol) const;

 private:
  CurveData c_;
  std::vector<std::pair<Real, int>> sign1_, sign2_;  // (component right end, sign)
  int sign_at(int j, const Real& x) const;
};

/// psi_j(x) with the Richardson boundary-value cross-check applied when x is
/// away from the endpoints and from x0.
Real density(int j, const Real& x, const CurveData& c);

struct RichardsonDensity {
  Real value;          ///< extrapolated (zeta_+ - zeta_-) / (2 pi i)
  Real imag_residue;   ///< imaginary part of the same quotient
  Real spread;         ///< |difference of the last two extrapolants|
};
/// Boundary values at x +- i eps, eps in {1e-6, 1e-7, 1e-8}, extrapolated.
/// Throws AccuracyError within 1e-4 of an endpoint (use the substitution
/// path, i.e. DensityModel, there).
RichardsonDensity density_richardson(int j, const Real& x, const CurveData& c);

/// A measure on [lo, hi] with a density that receives endpoint distances.
struct Measure {
  Real lo, hi;
  std::vector<Real> breaks;  ///< includes lo and hi
  std::function<Real(const Real& x, const Real& dlo, const Real& dhi)> density;
};

Measure equilibrium_measure(int j, const DensityModel& m);
Measure uniform_measure(const Real& lo, const Real& hi, const Real& mass);

Real measure_mass(const Measure& mu, const Real& rel_tol);
/// U^mu(x) = int log(1/|x - s|) dmu(s).
Real log_potential(const Measure& mu, const Real& x, const Real& rel_tol);
/// I(mu, nu) = int U^nu dmu.
Real mutual_energy(const Measure& mu, const Measure& nu, const Real& rel_tol);
/// I(mu1) + I(mu1, mu2) + I(mu2).
Real energy(const Measure& mu1, const Measure& mu2, const Real& rel_tol);

/// z(xi) = 4 a xi^3 / (2(a+1) xi^3 + 3(a-1) xi^2 - (a-1)).
Complex riemann_map(const Complex& xi, const Real& a);

struct PotentialData {
  Real l1, l2;
  Real l1_deviation, l2_deviation;  ///< max spread of the variational conditions
  Real l1_g, l2_g;                  ///< the same constants from g_j at a and 1
  std::vector<Real> points1, values1, points2, values2;
  Real mass1, mass2;
};

/// Potentials on 20 interior points of each interval; throws InvariantError
/// when a variational condition spreads by more than `tolerance`.
PotentialData potentials_and_constants(const CurveData& c, unsigned points = 20, const Real& tolerance = Real(1e-8));

/// l1, l2 from Re g_j at the hard edges (independent of the potentials).
std::pair<Real, Real> lagrange_constants_g(const CurveData& c);

/// g_j(z) = int log(z - s) dmu_j(s), principal log; z off the support.
Complex g_function(int j, const Complex& z, const DensityModel& m);

/// phi_1, phi_2 at z: integral of zeta_j - zeta_0 from 0, phi_j(0) = 0.
/// Real z takes the boundary value from the given side.
std::array<Complex, 2> phi_functions(const Complex& z, const CurveData& c, int side = +1);

struct PhaseMaps {
  Real a;
  Real c0, c1;
  Complex lambda1_0, lambda2_0;
  Real fprime0;        ///< (8/27) lambda2(0)^{3/2}
  Real tau0;           ///< lambda1(0) / lambda2(0)^{1/2}
  Real radius;         ///< circle used for the averages and checks
  Real min_re_lambda2; ///< over the check circle
  Real continuity_residual;  ///< max jump of lambda across (a,0) and (0,1) at sample points
  Real f_imag_on_reals;      ///< max |Im f| at sample real points
};

/// lambda_1, lambda_2 at z (side for real z).
std::array<Complex, 2> lambda_functions(const Complex& z, const CurveData& c, int side = +1);
Complex f_map(const Complex& z, const CurveData& c, int side = +1);
Complex tau_map(const Complex& z, const CurveData& c, int side = +1);

/// Values at 0 by circle averages; throws BranchError if Re lambda_2 <= 0 on
/// the disk of the given radius.
PhaseMaps phase_maps(const CurveData& c, const Real& radius = Real(0.25), unsigned nodes = 32);

}  // namespace angelesco
