#pragma once

// Type II multiple orthogonal polynomials P_{n1,n2} for the weights of
// weights.hpp: moment-system solver, the explicit double sum for the
// Jacobi-Angelesco case, zeros, and evaluation at double-scaled arguments.

#include "angelesco/precision.hpp"
#include "angelesco/weights.hpp"

#include <optional>
#include <utility>
#include <vector>

#include <json.hpp>

namespace angelesco {

struct MultiIndex {
  unsigned n1 = 0, n2 = 0;
  unsigned degree() const { return n1 + n2; }
};

struct Polynomial {
  std::vector<Real> coeffs;                    ///< ascending degree, monic
  std::optional<std::vector<Rational>> exact;  ///< set when solved in rational arithmetic
  MultiIndex index;
  unsigned digits = 0;                         ///< working precision used
  double accurate_digits = 0;                  ///< agreement with a re-solve at higher precision
  double orthogonality_residual = 0;           ///< max relative residual of the defining conditions

  unsigned degree() const { return coeffs.empty() ? 0 : static_cast<unsigned>(coeffs.size() - 1); }
  Complex operator()(const Complex& z) const;
  Real operator()(const Real& x) const;
};

struct QuadratureRule {
  std::vector<Real> nodes;    ///< sorted, strictly inside (lo, hi)
  std::vector<Real> weights;  ///< positive
  Real lo, hi;
  Real p, q;                  ///< absorbed weight (x-lo)^p (hi-x)^q
  unsigned order = 0;
};

/// m-point rule exact to degree 2m-1 for (x-lo)^p (hi-x)^q on (lo, hi).
QuadratureRule gauss_jacobi_rule(const Real& lo, const Real& hi, const Real& p, const Real& q, unsigned m);

/// Guard digits g of the orthogonality-residual contract 10^-(digits-g).
inline constexpr unsigned kMopGuardDigits = 12;

/// Working precision recommended for the moment system of index n.
unsigned mop_default_digits(unsigned n);

/// int_{Delta_j} x^k w_j(x) dx.
Real modified_moment(int j, unsigned k, const WeightParams& p, unsigned digits);

/// Moments k = 0..count-1 on interval j at the current precision.
std::vector<Real> moments(int j, unsigned count, const WeightParams& p);

/// True when both analytic factors are constant, so the normalised moments
/// are rational and the system can be solved exactly.
bool exact_path_available(const WeightParams& p);

Polynomial solve_mop(const MultiIndex& idx, const WeightParams& p, unsigned digits);

/// Weights of the form (x-a)^alpha |x|^beta |x-1|^gamma on both intervals up
/// to positive constants.
bool is_jacobi_angelesco(const WeightParams& p);

/// Generalised binomial x(x-1)...(x-k+1)/k!.
Rational gbinom(const Rational& x, unsigned k);
Real gbinom(const Real& x, unsigned k);

/// Jacobi-Angelesco P_{n,n}(z; a) from the explicit double sum.
Complex classical_pnn(unsigned n, const Real& alpha, const Real& beta, const Real& gamma, const Real& a,
                      const Complex& z, unsigned digits);
/// Same formula in exact rational arithmetic.
Rational classical_pnn_exact(unsigned n, const Rational& alpha, const Rational& beta, const Rational& gamma,
                             const Rational& a, const Rational& z);
/// Monic coefficients of the double-sum polynomial (exact).
std::vector<Rational> classical_pnn_coeffs(unsigned n, const Rational& alpha, const Rational& beta,
                                           const Rational& gamma, const Rational& a);
/// binom(n+beta, n) a^n / binom(3n+alpha+beta+gamma, n), the value at z = 0.
Rational classical_pnn_at_zero(unsigned n, const Rational& alpha, const Rational& beta, const Rational& gamma,
                               const Rational& a);

struct ZeroSet {
  std::vector<Real> left;   ///< zeros in (a, 0)
  std::vector<Real> right;  ///< zeros in (0, 1)
};

/// Real zeros by a cosine-graded sign scan plus bisection; throws
/// InvariantError unless exactly n1 / n2 simple zeros are found.
ZeroSet poly_zeros(const Polynomial& P, const WeightParams& p);

struct ScaledValue {
  Complex value;
  unsigned digits = 0;
  double self_check = 0;  ///< relative difference to the re-evaluation at digits+30
  bool exact = false;
};

/// P_{n,n}(z / (sqrt2 n^{3/2}); a_n) with n = s.n.
ScaledValue eval_scaled(const Complex& z, const ScalingParams& s, const WeightParams& p_base, unsigned digits);

nlohmann::json to_json(const Polynomial& P, unsigned digits);

}  // namespace angelesco
