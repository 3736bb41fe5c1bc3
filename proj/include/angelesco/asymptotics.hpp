#pragma once

// Mehler-Heine type limit of P_{n,n}(z / (sqrt2 n^{3/2}); a_n):
//   P ~ (-1)^n C_n Q(z; tau),
// with C_n built from the Szego-type constants c_1, c_2, and the
// experiments that check it.

#include "angelesco/precision.hpp"
#include "angelesco/weights.hpp"

#include <vector>

#include <json.hpp>

namespace angelesco {

/// c_j = -(1/pi) int_{Delta_j} (log h_j(x) - log h_j(0)) d arg xi_{j,+}(x) at
/// a = -1, with xi_j the uniformising coordinate of the spectral curve
/// (z = 2 xi^3 / (3 xi^2 - 1)). Jacobi-Angelesco factors are re-anchored at
/// a = -1; other factors are used as given. Constant factors return exactly 0.
/// Throws ValidationError when h_j <= 0 on Delta_j.
Real cj_constant(int j, const WeightParams& p, unsigned digits);

struct AsymptoticConstants {
  Real c1, c2, Cn;
  unsigned long n = 0;
  Real tau;
  WeightParams params;
};

Real Cn_from(unsigned long n, const Real& tau, const Real& alpha, const Real& beta, const Real& gamma, const Real& c1,
             const Real& c2);
AsymptoticConstants asymptotic_constants(unsigned long n, const Real& tau, const WeightParams& p, unsigned digits);
Real Cn_constant(unsigned long n, const Real& tau, const WeightParams& p, unsigned digits);

/// (-1)^n C_n Q(z; tau).
Complex mh_rhs(const Complex& z, unsigned long n, const Real& tau, const WeightParams& p, unsigned digits);

/// (-1)^n (2pi/Gamma(1+beta)) (3pi)^{-1/2} (2/3)^{alpha+beta+gamma} e^{-tau^2}
/// n^{beta+1/2} e^{-sqrt2 tau sqrt n} (4/27)^n.
Real pnn_zero_asymptotic(unsigned long n, const Real& tau, const Real& alpha, const Real& beta, const Real& gamma);

/// Least-squares slope of -log|err| against log n.
double fit_decay_exponent(const std::vector<double>& n, const std::vector<double>& err);

struct ComparisonRow {
  unsigned long n = 0;
  Complex lhs, rhs, ratio;
  Real ratio_minus_1;  ///< |ratio - 1|
  unsigned lhs_digits = 0;
  bool lhs_exact = false;
};

struct ComparisonReport {
  Complex z;
  Rational tau;
  std::vector<ComparisonRow> rows;
  double fitted_exponent = 0;  ///< decay exponent of |ratio - 1|
};

ComparisonReport mh_compare(const Complex& z, const Rational& tau, const std::vector<unsigned long>& ladder,
                            const WeightParams& p, unsigned digits);

struct ScalingRow {
  unsigned long n = 0;
  Real a, l1, l2;
  Real deviation;  ///< e^{-(2n/3)(l1+l2)} / [(4/27)^n e^{-sqrt2 tau sqrt n} e^{-5 tau^2/6}] - 1
};

struct ScalingReport {
  Rational tau;
  std::vector<ScalingRow> rows;
  double fitted_exponent = 0;
};

ScalingReport lagrange_scaling_check(const Rational& tau, const std::vector<unsigned long>& ladder, unsigned digits);

nlohmann::json to_json(const ComparisonReport& r, unsigned digits);
nlohmann::json to_json(const ScalingReport& r, unsigned digits);
nlohmann::json to_json(const AsymptoticConstants& c, unsigned digits);

}  // namespace angelesco
