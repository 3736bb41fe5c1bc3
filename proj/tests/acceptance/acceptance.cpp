// Acceptance harness: one PASS/FAIL line per criterion.
// Usage: angelesco_acceptance [k ...]   (no arguments runs all twelve)

#include "angelesco/asymptotics.hpp"
#include "angelesco/equilibrium.hpp"
#include "angelesco/modelrhp.hpp"
#include "angelesco/mop.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace angelesco;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

double d(const Real& x) { return static_cast<double>(x); }

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

// Tracks the worst value of a quantity against a bound.
struct Worst {
  std::string name;
  double bound;
  double worst = 0;
  bool ok = true;
  void add(double v) {
    if (!(v <= bound)) ok = false;
    if (std::isnan(v) || v > worst) worst = std::isnan(v) ? INFINITY : v;
  }
  std::string str() const { return name + "=" + fmt(worst) + (ok ? "" : " (>" + fmt(bound) + ")"); }
};

const std::vector<Rational> kA2{Rational(-3, 2), Rational(-1), Rational(-1, 2)};

std::vector<std::array<Rational, 3>> corner_cells() {
  std::vector<std::array<Rational, 3>> out;
  const Rational h(1, 2);
  for (int s = 0; s < 8; ++s) out.push_back({s & 1 ? h : -h, s & 2 ? h : -h, s & 4 ? h : -h});
  return out;
}

// 1. P_{n,n}(0; a) = a^n / binom(3n, n) for plain weights.
Outcome c1() {
  Worst w{"max_rel_err", 1e-30};
  for (const Rational& a : {Rational(-1), Rational(-1, 2), Rational(-2)}) {
    const WeightParams p = WeightParams::plain(a);
    for (unsigned n = 1; n <= 30; ++n) {
      const Polynomial P = solve_mop({n, n}, p, 160);
      Rational expect = 1;
      for (unsigned k = 0; k < n; ++k) expect *= a;
      expect /= gbinom(Rational(3 * n), n);
      if (P.exact) {
        w.add((*P.exact)[0] == expect ? 0.0 : 1.0);
      } else {
        PrecisionGuard g(160);
        w.add(d(abs(P.coeffs[0] - to_real(expect)) / abs(to_real(expect))));
      }
    }
  }
  return {w.ok, w.str()};
}

// 2 and 3 share the solves.
struct MopCase {
  unsigned n;
  Rational a;
  std::array<Rational, 3> e;
  Polynomial P;
};

std::vector<MopCase>& mop_cases() {
  static std::vector<MopCase> cases;
  if (!cases.empty()) return cases;
  for (const auto& e : corner_cells())
    for (const Rational& a : kA2)
      for (unsigned n = 1; n <= 12; ++n) {
        const WeightParams p = WeightParams::jacobi_angelesco(a, e[0], e[1], e[2]);
        cases.push_back({n, a, e, solve_mop({n, n}, p, 160)});
      }
  return cases;
}

Outcome c2() {
  Worst w{"max_rel_coeff_err", 1e-30};
  PrecisionGuard g(160);
  for (const auto& c : mop_cases()) {
    const auto exact = classical_pnn_coeffs(c.n, c.e[0], c.e[1], c.e[2], c.a);
    Real scale = 0;
    for (const auto& q : exact) scale = std::max(scale, Real(abs(to_real(q))));
    for (std::size_t k = 0; k < exact.size(); ++k) w.add(d(abs(c.P.coeffs[k] - to_real(exact[k])) / scale));
  }
  return {w.ok, w.str() + " cases=" + std::to_string(mop_cases().size())};
}

Outcome c3() {
  Outcome o;
  unsigned bad = 0;
  double min_gap = INFINITY;
  for (const auto& c : mop_cases()) {
    const WeightParams p = WeightParams::jacobi_angelesco(c.a, c.e[0], c.e[1], c.e[2]);
    const ZeroSet zs = poly_zeros(c.P, p);
    bool ok = zs.left.size() == c.n && zs.right.size() == c.n;
    for (const auto* v : {&zs.left, &zs.right})
      for (std::size_t i = 1; i < v->size(); ++i) {
        const double gap = d((*v)[i] - (*v)[i - 1]);
        min_gap = std::min(min_gap, gap);
        if (!(gap > 0)) ok = false;
      }
    if (!zs.left.empty() && !(zs.left.front() > to_real(c.a) && zs.left.back() < 0)) ok = false;
    if (!zs.right.empty() && !(zs.right.front() > 0 && zs.right.back() < 1)) ok = false;
    if (!ok) ++bad;
  }
  o.pass = bad == 0;
  o.detail = "bad_cases=" + std::to_string(bad) + " min_gap=" + fmt(min_gap);
  return o;
}

Real cubic_rel_residual(const std::array<Real, 4>& k, const Real& x) {
  const Real v = ((k[0] * x + k[1]) * x + k[2]) * x + k[3];
  const Real s = abs(k[0] * x * x * x) + abs(k[1] * x * x) + abs(k[2] * x) + abs(k[3]);
  return abs(v) / s;
}

// 4. Curve constants.
Outcome c4() {
  const unsigned D = 60;
  PrecisionGuard g(D);
  Worst res{"cubic_res", 1e-20};
  for (const char* a : {"-3", "-2", "-1.5", "-1", "-0.9", "-0.6", "-0.3", "-0.05"}) {
    const CurveData c = curve_constants(Real(a), D);
    if (c.a == -1) continue;  // both cubics degenerate to z^3
    res.add(d(cubic_rel_residual(zstar_cubic(c.a), c.zstar)));
    res.add(d(cubic_rel_residual(x0_cubic(c.a), c.x0)));
  }
  const CurveData c2 = curve_constants(Real(-2), D);
  const Real b_err = abs(c2.b + Real(1) / 63);
  const bool b_ok = b_err < pow(Real(10), -static_cast<int>(D) + 5);
  std::vector<double> eps, ez, ex;
  for (int k = 1; k <= 3; ++k) {
    const Real e = pow(Real(10), -k);
    const CurveData c = curve_constants(Real(-1) + e, D);
    const Real lead = e * e * e / 108;
    eps.push_back(1 / d(e));
    ez.push_back(d(abs(c.zstar + lead)));
    ex.push_back(d(abs(c.x0 - lead)));
  }
  const double fz = fit_decay_exponent(eps, ez), fx = fit_decay_exponent(eps, ex);
  const bool fit_ok = fz >= 3.8 && fx >= 3.8;
  return {res.ok && b_ok && fit_ok, res.str() + " b(-2)_err=" + fmt(d(b_err)) + " zstar_rem_exp=" + fmt(fz) +
                                        " x0_rem_exp=" + fmt(fx)};
}

// 5. zeta sum and product identities.
Outcome c5() {
  PrecisionGuard g(30);
  Worst ws{"sum_res", 1e-12}, wp{"prod_res", 1e-10};
  std::mt19937_64 rng(20251019);
  std::uniform_real_distribution<double> u(-3, 3);
  for (const char* a : {"-2", "-1", "-0.6"}) {
    const CurveData c = curve_constants(Real(a), 30);
    for (int k = 0; k < 200; ++k) {
      Complex z(Real(u(rng)), Real(u(rng)));
      if (abs(z.imag()) < Real(1e-6)) z = Complex(z.real(), Real(1e-3));
      const BranchValues v = zeta_branches(z, c);
      ws.add(d(v.sum_residual()));
      wp.add(d(v.product_residual(c)));
    }
  }
  return {ws.ok && wp.ok, ws.str() + " " + wp.str()};
}

// 6. Equilibrium measures.
Outcome c6() {
  const unsigned D = 40;
  PrecisionGuard g(D);
  Worst mass{"mass_err", 1e-10}, var{"var_spread", 1e-10};
  unsigned sign_bad = 0;
  for (const char* as : {"-2", "-1.5", "-1", "-0.6", "-0.3"}) {
    const CurveData c = curve_constants(Real(as), D);
    const DensityModel m(c);
    mass.add(d(abs(m.mass(1, Real(1e-25)) - Real(0.5))));
    mass.add(d(abs(m.mass(2, Real(1e-25)) - Real(0.5))));
    const PotentialData pd = potentials_and_constants(c, 20, Real(1e-10));
    var.add(d(pd.l1_deviation));
    var.add(d(pd.l2_deviation));
    // Sign scan: the only negative stretch lies between 0 and x0.
    const unsigned N = 199;
    for (unsigned k = 1; k <= N; ++k) {
      const Real t = Real(k) / (N + 1);
      const Real x1 = c.a * (1 - t), x2 = t;
      for (const auto& [j, x] : {std::pair<int, Real>{1, x1}, std::pair<int, Real>{2, x2}}) {
        const Real lo = j == 1 ? c.a : Real(0), hi = j == 1 ? Real(0) : Real(1);
        if (abs(x - c.x0) < Real(1e-6)) continue;
        const bool inside = (j == 1 && c.x0 < 0 && x > c.x0) || (j == 2 && c.x0 > 0 && x < c.x0);
        const Real v = m(j, x, x - lo, hi - x);
        if (inside ? !(v < 0) : !(v > 0)) ++sign_bad;
      }
    }
  }
  const PotentialData sym = potentials_and_constants(curve_constants(Real(-1), D));
  const double lsum = d(abs(sym.l1 + sym.l2 - Real(1.5) * log(Real(27) / 4)));
  const bool ok = mass.ok && var.ok && sign_bad == 0 && lsum <= 1e-6;
  return {ok, mass.str() + " " + var.str() + " sign_violations=" + std::to_string(sign_bad) +
                  " l1+l2_err=" + fmt(lsum)};
}

const std::vector<double> kBetas{-0.5, 0, 0.5, 1.3};
const std::vector<double> kTaus{-1, 0, 1};

Real exact_real(double x) { return to_real(to_rational(x)); }

// 7. Model RH problem.
Outcome c7() {
  Outcome o;
  unsigned failed = 0, total = 0;
  double worst = 0;
  std::string worst_name;
  for (double b : kBetas)
    for (double t : kTaus) {
      PrecisionGuard g(30);
      for (const auto& e : model_check_suite(exact_real(b), exact_real(t), 30)) {
        if (e.check.rfind("Q", 0) == 0) continue;  // Q checks belong to criterion 8
        ++total;
        const double r = d(e.max_residual);
        const bool ok = r <= 1e-8;
        if (!ok) ++failed;
        if (r > worst) {
          worst = r;
          worst_name = e.check;
        }
      }
    }
  // Remainder slopes on a non-real ray.
  double lo1 = INFINITY, hi1 = -INFINITY, lo0 = INFINITY, hi0 = -INFINITY;
  bool slope_ok = true;
  for (double b : kBetas)
    for (double t : kTaus) {
      if (t == 0) continue;
      PrecisionGuard g(30);
      std::vector<double> rs, n0, n1;
      for (double r : {16.0, 64.0, 256.0}) {
        const Complex z = Complex(Real(r)) * expi(Real(0.6));
        rs.push_back(r);
        const auto rem = psi_asymptotic_remainders(z, exact_real(t), exact_real(b));
        n0.push_back(d(rem[0].norm));
        n1.push_back(d(rem[1].norm));
      }
      const double e0 = fit_decay_exponent(rs, n0), e1 = fit_decay_exponent(rs, n1);
      lo0 = std::min(lo0, e0), hi0 = std::max(hi0, e0);
      lo1 = std::min(lo1, e1), hi1 = std::max(hi1, e1);
      if (std::abs(e0 - 1.0 / 3) > 0.1 || std::abs(e1 - 2.0 / 3) > 0.1) slope_ok = false;
    }
  o.pass = failed == 0 && slope_ok;
  o.detail = "checks=" + std::to_string(total) + " failed=" + std::to_string(failed) + " worst=" + fmt(worst) + " (" +
             worst_name + ") slope0=[" + fmt(-hi0) + "," + fmt(-lo0) + "] slope1=[" + fmt(-hi1) + "," + fmt(-lo1) +
             "]";
  return o;
}

// 8. Q function.
Outcome c8() {
  const unsigned D = 40;
  PrecisionGuard g(D);
  Worst q0{"Q0_rel", 1e-10}, ser{"series_rel", 1e-10}, inv{"invariance_rel", 1e-10};
  for (double bd : kBetas) {
    const Real b = exact_real(bd);
    const Real expect = 2 * pi() / tgamma(b + 1);
    for (double td : kTaus) {
      const Real t = exact_real(td);
      q0.add(d(abs(Q_eval(Complex(0), t, b, {}, D).value - Complex(expect)) / expect));
      for (const Complex& z : {Complex(Real(1.5), Real(-2)), Complex(Real(-3), Real(1)), Complex(Real(0), Real(4))}) {
        const Complex v = Q_eval(z, t, b, {}, D).value;
        const Complex w = Q_eval(z, t, b, ContourSpec::alternate(), D).value;
        inv.add(d(abs(v - w) / abs(v)));
      }
    }
    for (const Complex& z : {Complex(Real(0.5)), Complex(Real(2), Real(1)), Complex(Real(-4), Real(3)),
                             Complex(Real(0), Real(-5)), Complex(Real(5))}) {
      const Complex v = Q_eval(z, Real(0), b, {}, D).value;
      const Complex s = Q_series_tau0(z, b, 2000, D).value;
      ser.add(d(abs(v - s) / abs(s)));
    }
  }
  return {q0.ok && ser.ok && inv.ok, q0.str() + " " + ser.str() + " " + inv.str()};
}

// 9. c_j constants.
Outcome c9() {
  const unsigned D = 40;
  PrecisionGuard g(D);
  Worst w{"max_err", 1e-8};
  const Real k = ln2() - log(Real(3)) / 2;
  for (const auto& [al, ga] : {std::pair<Rational, Rational>{Rational(1, 2), Rational(-1, 2)},
                               {Rational(0), Rational(1)}, {Rational(13, 10), Rational(7, 3)}}) {
    for (const Rational& a : {Rational(-1), Rational(-2)}) {
      const WeightParams p = WeightParams::jacobi_angelesco(a, al, Rational(0), ga);
      w.add(d(abs(cj_constant(1, p, D) - to_real(ga) * k)));
      w.add(d(abs(cj_constant(2, p, D) - to_real(al) * k)));
    }
  }
  WeightParams pc = WeightParams::plain(Rational(-1));
  pc.h1 = AnalyticFactor::constant_factor(Rational(3));
  pc.h2 = AnalyticFactor::constant_factor(Rational(1, 7));
  const bool zero = cj_constant(1, pc, D) == 0 && cj_constant(2, pc, D) == 0;
  return {w.ok && zero, w.str() + std::string(" constant_factors_zero=") + (zero ? "yes" : "no")};
}

std::string row_list(const std::vector<double>& v) {
  std::string s;
  for (double x : v) s += (s.empty() ? "" : ",") + fmt(x);
  return s;
}

// 10. z = 0.
Outcome c10() {
  Outcome o;
  const std::vector<unsigned long> ladder{16, 64, 256, 1024};
  for (const Rational& tau : {Rational(0), Rational(7, 10)}) {
    const auto rep = mh_compare(Complex(0), tau, ladder, WeightParams::plain(Rational(-1)), 40);
    std::vector<double> v;
    for (const auto& r : rep.rows) v.push_back(d(r.ratio_minus_1) * std::sqrt(static_cast<double>(r.n)));
    const double mx = *std::max_element(v.begin(), v.end());
    const bool ok = mx <= 3 * v.front() && std::isfinite(mx);
    o.pass = o.pass && ok;
    o.detail += "tau=" + rational_to_string(tau) + ":[" + row_list(v) + "] ";
  }
  return o;
}

// 11. z != 0.
Outcome c11() {
  Outcome o;
  const std::vector<unsigned long> ladder{16, 64, 256};
  for (const Rational& tau : {Rational(0), Rational(7, 10)})
    for (const Complex& z : {Complex(1), Complex(Real(1), Real(0.5))}) {
      PrecisionGuard g(40);
      const auto rep = mh_compare(z, tau, ladder, WeightParams::plain(Rational(-1)), 40);
      std::vector<double> v;
      for (const auto& r : rep.rows) v.push_back(d(r.ratio_minus_1));
      bool mono = true;
      for (std::size_t i = 1; i < v.size(); ++i) mono = mono && v[i] < v[i - 1];
      const bool ok = mono && v.back() <= 0.05 && rep.fitted_exponent >= 1.0 / 6;
      o.pass = o.pass && ok;
      o.detail += "z=" + fmt(d(z.real())) + (z.imag() != 0 ? "+" + fmt(d(z.imag())) + "i" : "") +
                  ",tau=" + rational_to_string(tau) + ":[" + row_list(v) + "] exp=" + fmt(rep.fitted_exponent) + " ";
    }
  return o;
}

// 12. Lagrange constants scaling.
Outcome c12() {
  const auto rep = lagrange_scaling_check(Rational(7, 10), {64, 256, 1024}, 50);
  std::vector<double> v;
  for (const auto& r : rep.rows) v.push_back(d(r.deviation));
  const bool ok = std::abs(rep.fitted_exponent - 0.5) <= 0.15;
  return {ok, "deviation=[" + row_list(v) + "] exp=" + fmt(rep.fitted_exponent)};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<Outcome()>> criteria{c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11, c12};
  std::set<int> pick;
  for (int i = 1; i < argc; ++i) pick.insert(std::atoi(argv[i]));
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const int id = static_cast<int>(k) + 1;
    if (!pick.empty() && !pick.count(id)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("CRITERION %2d: %s  %s [%.1fs]\n", id, o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
