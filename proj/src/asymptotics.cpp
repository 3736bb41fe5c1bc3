#include "angelesco/asymptotics.hpp"

#include "angelesco/cubic.hpp"

#include "angelesco/equilibrium.hpp"
#include "angelesco/modelrhp.hpp"
#include "angelesco/mop.hpp"
#include "angelesco/quadrature.hpp"

#include <cmath>

namespace angelesco {

namespace {

// arg of the + boundary value of xi_j on Delta_j at a = -1, where xi is the
// uniformising coordinate: 2 xi^3 - 3 x xi^2 + x = 0. With xi = y + x/2 this
// is y^3 - (3/4) x^2 y - (x^3/4 - x/2) = 0; one real root, then the pair.
Real xi_arg(const Real& x) {
  if (x == 0) return Real(0);
  const Real y = single_real_root(Real(3 * x * x / 4), Real(x * x * x / 4 - x / 2));
  const Real rho = y + x / 2;
  const Real B = rho - 3 * x / 2;
  const Real C = -x / (2 * rho);
  Real disc = 4 * C - B * B;
  if (disc < 0) disc = 0;
  return atan2(Real(sqrt(disc) / 2), Real(-B / 2));
}

// (log h)'(x).
Real log_factor_derivative(const AnalyticFactor& h, const Real& x) {
  switch (h.kind) {
    case AnalyticFactor::Kind::Constant:
      return Real(0);
    case AnalyticFactor::Kind::Power: {
      Real s = 0;
      for (const auto& t : h.terms) s += to_real(t.power) / (x - to_real(t.root));
      return s;
    }
    case AnalyticFactor::Kind::Callable: {
      // Cauchy formula on a circle inside the declared neighbourhood.
      const Real rad(h.neighborhood / 2);
      const unsigned N = 64;
      Complex d(0);
      for (unsigned k = 0; k < N; ++k) {
        const Complex e = expi(2 * pi() * k / N);
        d += h.callable(Complex(x) + Complex(rad) * e) / e;
      }
      d /= Complex(Real(N) * rad);
      return d.real() / eval_factor(h, x);
    }
  }
  return Real(0);
}

}  // namespace

Real cj_constant(int j, const WeightParams& p_in, unsigned digits) {
  if (j != 1 && j != 2) throw ValidationError("cj_constant: j must be 1 or 2");
  validate(p_in);
  const WeightParams p = is_jacobi_angelesco(p_in)
                             ? WeightParams::jacobi_angelesco(Rational(-1), p_in.alpha, p_in.beta, p_in.gamma)
                             : p_in;
  const AnalyticFactor& h = j == 1 ? p.h1 : p.h2;
  if (h.is_constant()) {
    if (!(h.constant > 0)) throw ValidationError("cj_constant: log of a nonpositive factor");
    return Real(0);
  }
  PrecisionGuard guard(digits);
  auto logh = [&](const Real& x) {
    const Real v = eval_factor(h, x);
    if (!(v > 0)) throw ValidationError("cj_constant: log of a nonpositive factor");
    return Real(log(v));
  };
  // c_j = -(1/pi) int (log h - log h(0)) d arg xi_{j,+}; integrated by parts
  // so only the bounded angle enters. arg xi_1(-1) = pi, arg xi_2(1) = 0.
  const Real lo = j == 1 ? Real(-1) : Real(0), hi = j == 1 ? Real(0) : Real(1);
  for (int k = 0; k <= 16; ++k) logh(lo + (hi - lo) * k / 16);
  quad::EndpointIntegrand<Real> f = [&](const Real& x, const Real&, const Real&) {
    return xi_arg(x) * log_factor_derivative(h, x);
  };
  const Real tol = pow(Real(10), -static_cast<int>(digits) + 10);
  auto res = quad::tanh_sinh(f, lo, hi, tol, 12);
  if (!res.converged) throw AccuracyError("cj_constant: quadrature did not converge", 0.0);
  const Real boundary = j == 1 ? Real(logh(Real(-1)) - logh(Real(0))) : Real(0);
  return boundary + res.value / pi();
}

Real Cn_from(unsigned long n, const Real& tau, const Real& alpha, const Real& beta, const Real& gamma, const Real& c1,
             const Real& c2) {
  const Real nn(n);
  return exp(c1 + c2) / sqrt(3 * pi()) * pow(Real(2), beta) / pow(Real(3), (alpha + 2 * beta + gamma) / 2) *
         exp(-tau * tau) * pow(nn, beta + Real(0.5)) * exp(-sqrt(Real(2)) * tau * sqrt(nn)) *
         pow(Real(4) / 27, nn);
}

AsymptoticConstants asymptotic_constants(unsigned long n, const Real& tau, const WeightParams& p, unsigned digits) {
  if (n < 1) throw ValidationError("Cn: n must be >= 1");
  PrecisionGuard guard(digits);
  AsymptoticConstants out;
  out.c1 = cj_constant(1, p, digits);
  out.c2 = cj_constant(2, p, digits);
  out.n = n;
  out.tau = rounded(tau);
  out.params = p;
  out.Cn = Cn_from(n, out.tau, to_real(p.alpha), to_real(p.beta), to_real(p.gamma), out.c1, out.c2);
  return out;
}

Real Cn_constant(unsigned long n, const Real& tau, const WeightParams& p, unsigned digits) {
  return asymptotic_constants(n, tau, p, digits).Cn;
}

Complex mh_rhs(const Complex& z, unsigned long n, const Real& tau, const WeightParams& p, unsigned digits) {
  PrecisionGuard guard(digits);
  const Real Cn = Cn_constant(n, tau, p, digits);
  const Complex Q = Q_eval(z, tau, to_real(p.beta), {}, digits).value;
  return Complex(n % 2 ? Real(-Cn) : Cn) * Q;
}

Real pnn_zero_asymptotic(unsigned long n, const Real& tau, const Real& alpha, const Real& beta, const Real& gamma) {
  const Real nn(n);
  const Real v = 2 * pi() / tgamma(1 + beta) / sqrt(3 * pi()) * pow(Real(2) / 3, alpha + beta + gamma) *
                 exp(-tau * tau) * pow(nn, beta + Real(0.5)) * exp(-sqrt(Real(2)) * tau * sqrt(nn)) *
                 pow(Real(4) / 27, nn);
  return n % 2 ? Real(-v) : v;
}

double fit_decay_exponent(const std::vector<double>& n, const std::vector<double>& err) {
  if (n.size() != err.size() || n.size() < 2) throw ValidationError("fit: need at least two points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(n.size());
  for (std::size_t i = 0; i < n.size(); ++i) {
    const double x = std::log(n[i]), y = std::log(err[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return -(m * sxy - sx * sy) / (m * sxx - sx * sx);
}

ComparisonReport mh_compare(const Complex& z, const Rational& tau, const std::vector<unsigned long>& ladder,
                            const WeightParams& p, unsigned digits) {
  for (std::size_t i = 1; i < ladder.size(); ++i)
    if (ladder[i] <= ladder[i - 1]) throw ValidationError("mh_compare: ladder must be strictly increasing");
  PrecisionGuard guard(digits);
  ComparisonReport rep;
  rep.z = rounded(z);
  rep.tau = tau;
  const Real t = to_real(tau);
  // Q does not depend on n.
  const Complex Q = Q_eval(rep.z, t, to_real(p.beta), {}, digits).value;
  const AsymptoticConstants k = asymptotic_constants(1, t, p, digits);
  std::vector<double> ns, errs;
  for (unsigned long n : ladder) {
    ComparisonRow row;
    row.n = n;
    const ScaledValue lhs = eval_scaled(rep.z, ScalingParams{tau, n}, p, digits);
    PrecisionGuard g2(digits);
    const Real Cn = Cn_from(n, t, to_real(p.alpha), to_real(p.beta), to_real(p.gamma), k.c1, k.c2);
    row.lhs = rounded(lhs.value);
    row.rhs = Complex(n % 2 ? Real(-Cn) : Cn) * Q;
    row.ratio = row.lhs / row.rhs;
    row.ratio_minus_1 = abs(row.ratio - Complex(1));
    row.lhs_digits = lhs.digits;
    row.lhs_exact = lhs.exact;
    ns.push_back(static_cast<double>(n));
    errs.push_back(static_cast<double>(row.ratio_minus_1));
    rep.rows.push_back(row);
  }
  if (ns.size() >= 2) rep.fitted_exponent = fit_decay_exponent(ns, errs);
  return rep;
}

ScalingReport lagrange_scaling_check(const Rational& tau, const std::vector<unsigned long>& ladder, unsigned digits) {
  for (std::size_t i = 1; i < ladder.size(); ++i)
    if (ladder[i] <= ladder[i - 1]) throw ValidationError("scaling check: ladder must be strictly increasing");
  PrecisionGuard guard(digits);
  ScalingReport rep;
  rep.tau = tau;
  const Real t = to_real(tau);
  std::vector<double> ns, errs;
  for (unsigned long n : ladder) {
    ScalingRow row;
    row.n = n;
    row.a = a_n(ScalingParams{tau, n});
    const CurveData c = curve_constants(row.a, digits);
    const PotentialData pd = potentials_and_constants(c);
    row.l1 = pd.l1;
    row.l2 = pd.l2;
    const Real nn(n);
    const Real log_ratio = -(2 * nn / 3) * (row.l1 + row.l2) -
                           (nn * log(Real(4) / 27) - sqrt(Real(2)) * t * sqrt(nn) - 5 * t * t / 6);
    row.deviation = expm1(log_ratio);
    ns.push_back(static_cast<double>(n));
    errs.push_back(std::abs(static_cast<double>(row.deviation)));
    rep.rows.push_back(row);
  }
  if (ns.size() >= 2 && t != 0) rep.fitted_exponent = fit_decay_exponent(ns, errs);
  return rep;
}

namespace {

nlohmann::json complex_json(const Complex& z, unsigned digits) {
  return {{"re", to_decimal(z.real(), digits)}, {"im", to_decimal(z.imag(), digits)}};
}

}  // namespace

nlohmann::json to_json(const ComparisonReport& r, unsigned digits) {
  nlohmann::json j;
  j["z"] = complex_json(r.z, digits);
  j["tau"] = rational_to_string(r.tau);
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"n", row.n},
                    {"lhs", complex_json(row.lhs, digits)},
                    {"rhs", complex_json(row.rhs, digits)},
                    {"ratio", complex_json(row.ratio, digits)},
                    {"ratio_minus_1", to_decimal(row.ratio_minus_1, digits)},
                    {"lhs_digits", row.lhs_digits},
                    {"lhs_exact", row.lhs_exact}});
  j["rows"] = rows;
  j["fitted_exponent"] = r.fitted_exponent;
  return j;
}

nlohmann::json to_json(const ScalingReport& r, unsigned digits) {
  nlohmann::json j;
  j["tau"] = rational_to_string(r.tau);
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"n", row.n},
                    {"a", to_decimal(row.a, digits)},
                    {"l1", to_decimal(row.l1, digits)},
                    {"l2", to_decimal(row.l2, digits)},
                    {"deviation", to_decimal(row.deviation, digits)}});
  j["rows"] = rows;
  j["fitted_exponent"] = r.fitted_exponent;
  return j;
}

nlohmann::json to_json(const AsymptoticConstants& c, unsigned digits) {
  return {{"c1", to_decimal(c.c1, digits)}, {"c2", to_decimal(c.c2, digits)}, {"Cn", to_decimal(c.Cn, digits)},
          {"n", c.n},  {"tau", to_decimal(c.tau, digits)}, {"params", to_json(c.params)}};
}

}  // namespace angelesco
