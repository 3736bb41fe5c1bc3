#pragma once

// Modified Jacobi weights on the touching intervals [a,0] and [0,1]:
//   w1(x) = (x-a)^alpha |x|^beta h1(x),   w2(x) = x^beta (1-x)^gamma h2(x).

#include "angelesco/errors.hpp"
#include "angelesco/precision.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace angelesco {

/// Strictly positive analytic factor h_j of a weight.
struct AnalyticFactor {
  enum class Kind { Constant, Power, Callable };

  struct PowerTerm {
    Rational root;   ///< r_k, outside the open interval
    Rational power;  ///< p_k
  };

  Kind kind = Kind::Constant;
  Rational constant{1};            ///< c for Constant, prefactor for Power
  std::vector<PowerTerm> terms;    ///< Power kind: c * prod |x - r_k|^p_k
  std::function<Complex(const Complex&)> callable;  ///< Callable kind
  double neighborhood = 0.0;       ///< Callable kind: declared half-width of analyticity

  static AnalyticFactor one() { return constant_factor(Rational(1)); }
  static AnalyticFactor constant_factor(const Rational& c);
  static AnalyticFactor power(const Rational& c, std::vector<PowerTerm> terms);
  static AnalyticFactor user(std::function<Complex(const Complex&)> f, double neighborhood);

  bool is_constant() const;
  std::string describe() const;
};

struct WeightParams {
  Rational a{-1};
  Rational alpha{0}, beta{0}, gamma{0};
  AnalyticFactor h1 = AnalyticFactor::one();
  AnalyticFactor h2 = AnalyticFactor::one();

  /// h1 = |x-1|^gamma and h2 = |x-a|^alpha, the Jacobi-Angelesco weights.
  static WeightParams jacobi_angelesco(const Rational& a, const Rational& alpha, const Rational& beta,
                                       const Rational& gamma);
  /// All exponents zero and h = 1.
  static WeightParams plain(const Rational& a);
};

struct ScalingParams {
  Rational tau{0};  ///< exact so a_n can be formed at any precision
  unsigned long n = 1;
};

/// Throws ValidationError when an invariant of WeightParams fails.
void validate(const WeightParams& p);

/// Interval endpoints of Delta_j.
std::pair<Real, Real> interval(int j, const WeightParams& p);

enum class EndpointFlag { Interior, ZeroLimit, InfiniteLimit, FiniteLimit };

struct WeightSample {
  Real value;
  EndpointFlag flag = EndpointFlag::Interior;
};

/// h_j at a real point of its interval.
Real eval_factor(const AnalyticFactor& h, const Real& x);
/// Continuation of h_j for interval [lo, hi] to a complex point.
Complex continue_factor(const AnalyticFactor& h, const Complex& z, const Real& lo, const Real& hi);

/// w_j(x); endpoints give the power-law limit and are flagged.
WeightSample eval_weight_flagged(int j, const Real& x, const WeightParams& p);
Real eval_weight(int j, const Real& x, const WeightParams& p);

/// Analytic continuation of w_j off the real interval.
Complex continue_weight(int j, const Complex& z, const WeightParams& p);

/// a_n = -1 + sqrt(2) tau / sqrt(n).
Real a_n(const ScalingParams& s);

/// Jacobi exponents (at lo, at hi) of interval j, including any factor of
/// h_j whose root sits exactly on an endpoint.
std::pair<Rational, Rational> jacobi_exponents(int j, const WeightParams& p);
/// The smooth part of w_j after removing the Jacobi exponents.
Real smooth_remainder(int j, const Real& x, const WeightParams& p);

/// Decimal/fraction string that parses back to the same rational.
std::string rational_to_string(const Rational& q);
/// Accepts a JSON string ("-1", "0.25", "1/3") or a JSON number.
Rational rational_from_json(const nlohmann::json& v);

nlohmann::json to_json(const AnalyticFactor& h);
AnalyticFactor factor_from_json(const nlohmann::json& j);
nlohmann::json to_json(const WeightParams& p);
WeightParams params_from_json(const nlohmann::json& j);

}  // namespace angelesco
