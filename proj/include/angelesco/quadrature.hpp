#pragma once

// Quadrature building blocks used across modules: Gauss-Legendre and
// Gauss-Jacobi rules at working precision, a tanh-sinh integrator that hands
// the integrand its distances to both endpoints, and an adaptive panel
// integrator for vector-valued integrands along parametrised paths.

#include "angelesco/errors.hpp"
#include "angelesco/precision.hpp"

#include <algorithm>
#include <functional>
#include <vector>

namespace angelesco::quad {

struct Rule {
  std::vector<Real> nodes;
  std::vector<Real> weights;
};

/// m-point Gauss-Legendre rule on [-1,1] at the current precision (cached).
const Rule& gauss_legendre(unsigned m);

/// m-point Gauss-Jacobi rule on [-1,1] for the weight (1-x)^alpha (1+x)^beta.
Rule gauss_jacobi_reference(const Real& alpha, const Real& beta, unsigned m);

/// Total mass 2^(a+b+1) B(a+1, b+1) of the reference Jacobi weight.
Real jacobi_mass(const Real& alpha, const Real& beta);

Real beta_function(const Real& x, const Real& y);

template <class T>
struct TanhSinhResult {
  T value{};
  Real abs_value{0};
  Real error_estimate{0};
  unsigned level = 0;
  bool converged = false;
};

/// Integrand receives (x, x - lo, hi - x); the distances are exact even when
/// x rounds onto an endpoint, which keeps endpoint singularities resolved.
template <class T>
using EndpointIntegrand = std::function<T(const Real&, const Real&, const Real&)>;

template <class T>
TanhSinhResult<T> tanh_sinh(const EndpointIntegrand<T>& f, const Real& lo, const Real& hi, const Real& rel_tol,
                            unsigned max_level = 10) {
  using std::abs;
  TanhSinhResult<T> out;
  const Real half = (hi - lo) / 2;
  const Real mid = lo + half;
  const Real halfpi = pi() / 2;
  const double digits = static_cast<double>(current_digits());
  // Beyond t_max every weight is below 10^-(digits+10).
  const Real tmax = asinh(Real(2.0 * 2.302585 * (digits + 10) / 3.14159)) + 1;

  auto node_pair = [&](const Real& t, T& acc, Real& acc_abs) {
    const Real u = halfpi * sinh(t);
    const Real e = exp(-2 * abs(u));
    const Real ch = cosh(u);
    const Real w = halfpi * cosh(t) / (ch * ch);
    // Distances of the two mirror nodes to their nearer endpoint.
    const Real near = 2 * half * e / (1 + e);
    const Real far = 2 * half / (1 + e);
    if (w * half == 0) return false;
    for (int sgn : {1, -1}) {
      if (t == 0 && sgn < 0) break;
      const bool right = (sgn > 0) == (u > 0);
      const Real dlo = right ? far : near;
      const Real dhi = right ? near : far;
      if (dlo == 0 || dhi == 0) continue;
      const Real x = right ? hi - dhi : lo + dlo;
      T v = f(x, dlo, dhi);
      acc += v * (w * half);
      acc_abs += abs(v) * (w * half);
    }
    return true;
  };

  Real h = 1;
  T sum{};
  Real sum_abs = 0;
  for (Real t = 0; t <= tmax; t += h) node_pair(t, sum, sum_abs);
  T prev = sum * h;
  for (unsigned level = 1; level <= max_level; ++level) {
    h /= 2;
    for (Real t = h; t <= tmax; t += 2 * h) node_pair(t, sum, sum_abs);
    T cur = sum * h;
    Real err = abs(cur - prev);
    out.value = cur;
    out.abs_value = sum_abs * h;
    out.error_estimate = err;
    out.level = level;
    if (level >= 3 && err <= rel_tol * out.abs_value) {
      out.converged = true;
      return out;
    }
    prev = cur;
  }
  return out;
}

/// Result of the adaptive panel integrator for K simultaneous integrands.
struct PanelResult {
  std::vector<Complex> values;
  Real abs_integral{0};  ///< integral of |f_0|, used for cancellation estimates
  unsigned panels = 0;
  bool converged = true;
};

/// f(s, out) fills out[0..K) with the integrand (already multiplied by the
/// path derivative) at parameter s.
using VectorIntegrand = std::function<void(const Real&, std::vector<Complex>&)>;

/// Adaptive Gauss-Legendre over the parameter interval split at `breaks`.
/// A panel is accepted when bisecting it changes every component by at most
/// eps times the total absolute integral estimated on the initial panels.
PanelResult integrate_panels(const VectorIntegrand& f, std::size_t K, const std::vector<Real>& breaks,
                             const Real& eps, unsigned nodes = 20, unsigned max_depth = 40);

}  // namespace angelesco::quad
