#include "angelesco/equilibrium.hpp"

#include "angelesco/cubic.hpp"
#include "angelesco/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace angelesco {

namespace {

using Cd = std::complex<double>;
using Roots = std::array<Cd, 3>;

Real tol_digits(int d) { return pow(Real(10), -d); }

// Double-precision copy of the curve for path tracking.
struct CurveD {
  double a, zs;
  explicit CurveD(const CurveData& c) : a(static_cast<double>(c.a)), zs(static_cast<double>(c.zstar)) {}
  Cd den(Cd z) const { return 4.0 * z * (z - a) * (z - 1.0); }
  Cd p(Cd z) const { return (3.0 * z - 2.0 * zs - 1.0 - a) / den(z); }
  Cd r(Cd z) const { return (z - zs) / (z * den(z)); }
  Cd dlogden(Cd z) const { return 1.0 / z + 1.0 / (z - a) + 1.0 / (z - 1.0); }
  Cd dp(Cd z) const { return 3.0 / den(z) - p(z) * dlogden(z); }
  Cd dr(Cd z) const { return 1.0 / (z * den(z)) - r(z) * (1.0 / z + dlogden(z)); }
  double dist(Cd z) const { return std::min({std::abs(z - a), std::abs(z), std::abs(z - 1.0)}); }
  Roots deriv(Cd z, const Roots& Z) const {
    Roots d;
    const Cd pp = p(z), dpp = dp(z), drr = dr(z);
    for (int k = 0; k < 3; ++k) d[k] = (dpp * Z[k] + drr) / (3.0 * Z[k] * Z[k] - pp);
    return d;
  }
};

double min_sep(const Roots& Z) {
  return std::min({std::abs(Z[0] - Z[1]), std::abs(Z[0] - Z[2]), std::abs(Z[1] - Z[2])});
}

// Continue labelled roots from z0 to z1 along a segment with predictor
// (implicit derivative) and Newton corrector; the step halves whenever the
// corrected roots are not clearly closest to their own predictions.
Roots continue_segment(const CurveD& cd, Cd z0, Roots Z, Cd z1) {
  double t = 0;
  const Cd dir = z1 - z0;
  const double len = std::abs(dir);
  if (len == 0) return Z;
  double h = std::min(0.1, 0.1 * cd.dist(z0)) / len;
  while (t < 1) {
    const Cd zc = z0 + t * dir;
    const double cap = 0.1 * cd.dist(zc) / len;
    h = std::min({h, cap, 1 - t});
    bool ok = false;
    Roots next;
    for (int tries = 0; tries < 60 && !ok; ++tries) {
      const Cd zn = z0 + (t + h) * dir;
      if (cd.dist(zn) < 1e-300) throw TrackingError("tracking path hits a branch point");
      const Roots d = cd.deriv(zc, Z);
      const Cd pp = cd.p(zn), rr = cd.r(zn);
      Roots pred;
      for (int k = 0; k < 3; ++k) {
        pred[k] = Z[k] + (zn - zc) * d[k];
        Cd x = pred[k];
        for (int it = 0; it < 6; ++it) {
          const Cd df = 3.0 * x * x - pp;
          if (df == 0.0) break;
          x -= (x * x * x - pp * x - rr) / df;
        }
        next[k] = x;
      }
      const double sep = min_sep(next);
      double motion = 0;
      bool finite = true;
      for (int k = 0; k < 3; ++k) {
        if (!std::isfinite(next[k].real()) || !std::isfinite(next[k].imag())) finite = false;
        motion = std::max(motion, std::abs(next[k] - pred[k]));
      }
      double scale = std::max({std::abs(next[0]), std::abs(next[1]), std::abs(next[2])});
      if (finite && sep > 1e-12 * scale && motion < 0.1 * sep) {
        ok = true;
      } else {
        h /= 2;
        if (h * len < 1e-15 * std::max(1.0, std::abs(zc))) break;
      }
    }
    if (!ok) throw TrackingError("branch tracking lost the root labels");
    t += h;
    Z = next;
    h *= 2;
  }
  return Z;
}

Roots labels_at_base(const CurveD& cd, double R) {
  Roots Z = depressed_cubic_roots(cd.p(Cd(R)), cd.r(Cd(R)));
  std::array<double, 3> re;
  for (int k = 0; k < 3; ++k) re[k] = Z[k].real();
  // zeta_0 nearest 1/R; zeta_1 the larger of the other two.
  int i0 = 0;
  for (int k = 1; k < 3; ++k)
    if (std::abs(re[k] - 1.0 / R) < std::abs(re[i0] - 1.0 / R)) i0 = k;
  int o1 = (i0 + 1) % 3, o2 = (i0 + 2) % 3;
  if (re[o1] < re[o2]) std::swap(o1, o2);
  return {Cd(re[i0]), Cd(re[o1]), Cd(re[o2])};
}

double base_point(const CurveD& cd) { return std::max(10.0, 4 * std::abs(cd.a) + 4); }

Roots track_to(const CurveD& cd, Cd z, int side) {
  const double R = base_point(cd);
  const double H = std::max(1.0, std::abs(z.imag()));
  const double s = z.imag() > 0 ? 1.0 : (z.imag() < 0 ? -1.0 : (side >= 0 ? 1.0 : -1.0));
  Roots Z = labels_at_base(cd, R);
  Cd p1(R, s * H), p2(z.real(), s * H);
  Z = continue_segment(cd, Cd(R), Z, p1);
  Z = continue_segment(cd, p1, Z, p2);
  Z = continue_segment(cd, p2, Z, z);
  return Z;
}

// Polish the double labels at working precision and keep their order.
BranchValues polish(const Complex& z, const Roots& Zd, const CurveData& c, int side) {
  BranchValues out;
  out.z = z;
  out.side = side;
  const Complex p = c.p(z), r = c.r(z);
  std::array<Complex, 3> roots;
  for (int k = 0; k < 3; ++k) roots[k] = polish_root(p, r, to_complex(Zd[k]));
  // Newton from each label must land on three distinct roots; otherwise match
  // the closed-form roots to the labels.
  auto distinct = [&]() {
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        Real s = abs(roots[i] - roots[j]);
        if (s <= Real(1e-10) * (abs(roots[i]) + abs(roots[j]))) return false;
      }
    return true;
  };
  if (!distinct()) {
    auto cand = depressed_cubic_roots(p, r);
    std::array<bool, 3> used{false, false, false};
    for (int k = 0; k < 3; ++k) {
      int best = -1;
      double bd = 0;
      for (int m = 0; m < 3; ++m) {
        if (used[m]) continue;
        double d = std::abs(to_std(cand[m]) - Zd[k]);
        if (best < 0 || d < bd) best = m, bd = d;
      }
      used[best] = true;
      roots[k] = cand[best];
    }
  }
  out.zeta = roots;
  return out;
}

std::vector<Real> unique_sorted(std::vector<Real> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

Real ts_tol(const Real& rel_tol) { return rel_tol; }

}  // namespace

// ---------------------------------------------------------------- curve

Complex CurveData::p(const Complex& z) const {
  const Complex A(a), Z(zstar);
  return (Complex(3) * z - Complex(2) * Z - Complex(1) - A) / (Complex(4) * z * (z - A) * (z - Complex(1)));
}

Complex CurveData::r(const Complex& z) const {
  const Complex A(a), Z(zstar);
  return (z - Z) / (Complex(4) * z * z * (z - A) * (z - Complex(1)));
}

Complex CurveData::dp(const Complex& z) const {
  const Complex A(a), one(1);
  const Complex den = Complex(4) * z * (z - A) * (z - one);
  const Complex dl = one / z + one / (z - A) + one / (z - one);
  return Complex(3) / den - p(z) * dl;
}

Complex CurveData::dr(const Complex& z) const {
  const Complex A(a), one(1);
  const Complex den = Complex(4) * z * (z - A) * (z - one);
  const Complex dl = one / z + one / (z - A) + one / (z - one);
  return one / (z * den) - r(z) * (one / z + dl);
}

Real CurveData::p_at(const Real& x, const Real& xa, const Real& x1) const {
  return (3 * x - 2 * zstar - 1 - a) / (4 * x * xa * x1);
}

Real CurveData::r_at(const Real& x, const Real& xa, const Real& x1) const {
  return (x - zstar) / (4 * x * x * xa * x1);
}

std::array<Real, 4> zstar_cubic(const Real& a) {
  const Real a1 = a + 1;
  return {Real(64), Real(-48 * a1), Real(-(15 * a * a - 78 * a + 15)), Real(-a1 * a1 * a1)};
}

std::array<Real, 4> x0_cubic(const Real& a) {
  const Real a1 = a + 1;
  return {Real(27 * a * a - 46 * a + 27), Real(-3 * a1 * (9 * a * a - 14 * a + 9)),
          Real(3 * a * (11 * a * a - 14 * a + 11)), Real(-a * a1 * a1 * a1)};
}

CurveData curve_constants(const Real& a_in, unsigned digits) {
  PrecisionGuard guard(digits);
  CurveData c;
  c.digits = digits;
  c.a = rounded(a_in);
  if (!(c.a < 0)) throw ValidationError("curve_constants: need a < 0");
  if (c.a == -1) {
    c.zstar = 0;
    c.x0 = 0;
    c.b = 0;
    c.c0 = 0;
    // Limit of -(2z*+a+1)/(12 a c0) as a -> -1.
    c.c1 = -cbrt(Real(2)) / 2;
    return c;
  }
  const Real a = c.a;
  {
    PrecisionGuard inner(digits + 10);
    auto zc = zstar_cubic(a);
    auto xc = x0_cubic(a);
    Real zs = real_cubic_roots(zc[0], zc[1], zc[2], zc[3])[1];
    Real x0 = real_cubic_roots(xc[0], xc[1], xc[2], xc[3])[1];
    c.zstar = zs;
    c.x0 = x0;
  }
  c.zstar = rounded(c.zstar);
  c.x0 = rounded(c.x0);
  c.b = pow(a + 1, 3) / (9 * (a * a - a + 1));
  if ((c.x0 > 0) != (a + 1 > 0)) throw CurveDegeneracyError("x0 does not have the sign of a+1");
  const Real q = -c.zstar / (4 * a);
  c.c0 = q < 0 ? Real(-cbrt(Real(-q))) : Real(cbrt(q));
  c.c1 = -(2 * c.zstar + a + 1) / (12 * a * c.c0);
  return c;
}

// ---------------------------------------------------------------- branches

Real BranchValues::sum_residual() const {
  Real scale = abs(zeta[0]) + abs(zeta[1]) + abs(zeta[2]);
  if (scale == 0) return Real(0);
  return abs(zeta[0] + zeta[1] + zeta[2]) / scale;
}

Real BranchValues::product_residual(const CurveData& c) const {
  const Complex prod = zeta[0] * zeta[1] * zeta[2];
  const Complex rhs = c.r(z);
  Real scale = abs(rhs);
  if (scale == 0) return abs(prod);
  return abs(prod - rhs) / scale;
}

BranchValues zeta_branches(const Complex& z, const CurveData& c, int side) {
  PrecisionGuard guard(c.digits);
  if ((z.imag() == 0) && (z.real() == c.a || z.real() == 0 || z.real() == 1))
    throw DomainError("zeta_branches: z is a branch point");
  const bool on_cut = z.imag() == 0 && z.real() > c.a && z.real() < 1;
  if (on_cut && side == 0) throw BranchError("zeta_branches: real z on the support needs a side");
  const CurveD cd(c);
  Roots Z = track_to(cd, to_std(z), side);
  return polish(z, Z, c, on_cut ? side : 0);
}

std::vector<BranchValues> zeta_along(const std::vector<Complex>& points, const CurveData& c, int side) {
  std::vector<BranchValues> out;
  if (points.empty()) return out;
  PrecisionGuard guard(c.digits);
  const CurveD cd(c);
  Roots Z = track_to(cd, to_std(points[0]), side);
  out.push_back(polish(points[0], Z, c, side));
  for (std::size_t i = 1; i < points.size(); ++i) {
    Z = continue_segment(cd, to_std(points[i - 1]), Z, to_std(points[i]));
    out.push_back(polish(points[i], Z, c, side));
  }
  return out;
}

std::array<Complex, 3> zeta_derivatives(const BranchValues& v, const CurveData& c) {
  const Complex p = c.p(v.z), dp = c.dp(v.z), dr = c.dr(v.z);
  std::array<Complex, 3> d;
  for (int k = 0; k < 3; ++k) d[k] = (dp * v.zeta[k] + dr) / (Complex(3) * v.zeta[k] * v.zeta[k] - p);
  return d;
}

// ---------------------------------------------------------------- density

DensityModel::DensityModel(const CurveData& c) : c_(c) {
  PrecisionGuard guard(c_.digits);
  const CurveD cd(c_);
  for (int j = 1; j <= 2; ++j) {
    auto br = breaks(j);
    auto& signs = j == 1 ? sign1_ : sign2_;
    for (std::size_t i = 0; i + 1 < br.size(); ++i) {
      const double mid = static_cast<double>((br[i] + br[i + 1]) / 2);
      Roots Z = track_to(cd, Cd(mid), +1);
      const double im = Z[j].imag();
      if (std::abs(im) < 1e-14) throw TrackingError("density sign undetermined on a support component");
      signs.emplace_back(br[i + 1], im > 0 ? 1 : -1);
    }
  }
}

std::vector<Real> DensityModel::breaks(int j) const {
  std::vector<Real> b;
  if (j == 1) {
    b = {c_.a, Real(0)};
    if (c_.x0 > c_.a && c_.x0 < 0) b.insert(b.begin() + 1, c_.x0);
  } else {
    b = {Real(0), Real(1)};
    if (c_.x0 > 0 && c_.x0 < 1) b.insert(b.begin() + 1, c_.x0);
  }
  return b;
}

int DensityModel::sign_at(int j, const Real& x) const {
  const auto& signs = j == 1 ? sign1_ : sign2_;
  for (const auto& [right, s] : signs)
    if (x <= right) return s;
  return signs.back().second;
}

Complex DensityModel::zeta_plus(int j, const Real& x, const Real& dlo, const Real& dhi) const {
  PrecisionGuard guard(c_.digits);
  Real xx, xa, x1;
  if (j == 1) {
    xa = dlo;
    xx = -dhi;
    x1 = xx - 1;
  } else {
    xx = dlo;
    x1 = -dhi;
    xa = xx - c_.a;
  }
  (void)x;
  const Real p = c_.p_at(xx, xa, x1), r = c_.r_at(xx, xa, x1);
  const Real rho = single_real_root(p, r);
  Real disc = 3 * rho * rho - 4 * p;
  if (disc < 0) disc = 0;
  const int s = sign_at(j, xx);
  return Complex(Real(-rho / 2), Real(s * sqrt(disc) / 2));
}

Real DensityModel::operator()(int j, const Real& x, const Real& dlo, const Real& dhi) const {
  return zeta_plus(j, x, dlo, dhi).imag() / pi();
}

Real DensityModel::at(int j, const Real& x) const {
  PrecisionGuard guard(c_.digits);
  const Real lo = j == 1 ? c_.a : Real(0), hi = j == 1 ? Real(0) : Real(1);
  if (!(x > lo && x < hi)) throw DomainError("density: x outside the open interval");
  return (*this)(j, x, x - lo, hi - x);
}

Real DensityModel::mass(int j, const Real& rel_tol) const { return measure_mass(equilibrium_measure(j, *this), rel_tol); }

RichardsonDensity density_richardson(int j, const Real& x, const CurveData& c) {
  PrecisionGuard guard(c.digits);
  const Real lo = j == 1 ? c.a : Real(0), hi = j == 1 ? Real(0) : Real(1);
  if (!(x > lo && x < hi)) throw DomainError("density: x outside the open interval");
  if (x - lo < Real(1e-4) || hi - x < Real(1e-4))
    throw AccuracyError("boundary-value extrapolation does not converge this close to an endpoint; "
                        "use the substitution path",
                        0.0);
  std::array<Complex, 3> q;
  const std::array<double, 3> eps{1e-6, 1e-7, 1e-8};
  for (int k = 0; k < 3; ++k) {
    const Real e(eps[k]);
    Complex zp(x, e), zm(x, Real(-e));
    Complex up = zeta_branches(zp, c).zeta[j];
    Complex dn = zeta_branches(zm, c).zeta[j];
    q[k] = (up - dn) / (Complex(2) * Complex(pi()) * imag_unit());
  }
  // Geometric ratio 10 in eps; remove the O(eps) and O(eps^2) terms.
  Complex r1 = (Complex(10) * q[1] - q[0]) / Complex(9);
  Complex r2 = (Complex(10) * q[2] - q[1]) / Complex(9);
  Complex rr = (Complex(100) * r2 - r1) / Complex(99);
  RichardsonDensity out;
  out.value = rr.real();
  out.imag_residue = abs(rr.imag());
  out.spread = abs(r2 - r1);
  return out;
}

Real density(int j, const Real& x, const CurveData& c) {
  PrecisionGuard guard(c.digits);
  DensityModel m(c);
  Real v = m.at(j, x);
  const Real lo = j == 1 ? c.a : Real(0), hi = j == 1 ? Real(0) : Real(1);
  const bool interior = x - lo > Real(1e-3) && hi - x > Real(1e-3) && abs(x - c.x0) > Real(1e-3);
  if (interior) {
    auto rd = density_richardson(j, x, c);
    if (abs(rd.value - v) > Real(1e-8) * (abs(v) + 1) || rd.imag_residue > Real(1e-8))
      throw AccuracyError("boundary-value extrapolation disagrees with the deflated density", 8.0);
  }
  return v;
}

// ---------------------------------------------------------------- measures

Measure equilibrium_measure(int j, const DensityModel& m) {
  Measure mu;
  const CurveData& c = m.curve();
  mu.lo = j == 1 ? c.a : Real(0);
  mu.hi = j == 1 ? Real(0) : Real(1);
  mu.breaks = m.breaks(j);
  const DensityModel* pm = &m;
  mu.density = [pm, j](const Real& x, const Real& dlo, const Real& dhi) { return (*pm)(j, x, dlo, dhi); };
  return mu;
}

Measure uniform_measure(const Real& lo, const Real& hi, const Real& mass) {
  Measure mu;
  mu.lo = lo;
  mu.hi = hi;
  mu.breaks = {lo, hi};
  const Real d = mass / (hi - lo);
  mu.density = [d](const Real&, const Real&, const Real&) { return d; };
  return mu;
}

namespace {

// Integrate g(s, ds) dmu(s) piece by piece; `extra` adds interior split points.
Real integrate_measure(const Measure& mu, const std::vector<Real>& extra,
                       const std::function<Real(const Real&, const Real&, const Real&, const Real&, const Real&)>& g,
                       const Real& rel_tol) {
  std::vector<Real> br = mu.breaks;
  for (const auto& e : extra)
    if (e > mu.lo && e < mu.hi) br.push_back(e);
  br = unique_sorted(br);
  Real total = 0;
  for (std::size_t i = 0; i + 1 < br.size(); ++i) {
    const Real u = br[i], v = br[i + 1];
    if (!(v > u)) continue;
    const Real off_lo = u - mu.lo, off_hi = mu.hi - v;
    quad::EndpointIntegrand<Real> f = [&](const Real& s, const Real& dl, const Real& dr) {
      const Real dens = mu.density(s, off_lo + dl, off_hi + dr);
      return g(s, dl, dr, u, v) * dens;
    };
    auto res = quad::tanh_sinh<Real>(f, u, v, ts_tol(rel_tol), 12);
    if (!res.converged) throw AccuracyError("measure quadrature did not converge", 0.0);
    total += res.value;
  }
  return total;
}

}  // namespace

Real measure_mass(const Measure& mu, const Real& rel_tol) {
  return integrate_measure(
      mu, {}, [](const Real&, const Real&, const Real&, const Real&, const Real&) { return Real(1); }, rel_tol);
}

Real log_potential(const Measure& mu, const Real& x, const Real& rel_tol) {
  return integrate_measure(
      mu, {x},
      [&x](const Real& s, const Real& dl, const Real& dr, const Real& u, const Real& v) {
        Real dist;
        if (x <= u) dist = (u - x) + dl;
        else if (x >= v) dist = (x - v) + dr;
        else dist = abs(x - s);
        return Real(-log(dist));
      },
      rel_tol);
}

Real mutual_energy(const Measure& mu, const Measure& nu, const Real& rel_tol) {
  return integrate_measure(
      mu, {},
      [&](const Real& s, const Real&, const Real&, const Real&, const Real&) { return log_potential(nu, s, rel_tol); },
      rel_tol);
}

Real energy(const Measure& mu1, const Measure& mu2, const Real& rel_tol) {
  return mutual_energy(mu1, mu1, rel_tol) + mutual_energy(mu1, mu2, rel_tol) + mutual_energy(mu2, mu2, rel_tol);
}

// ---------------------------------------------------------------- maps

Complex riemann_map(const Complex& xi, const Real& a) {
  const Complex A(a);
  const Complex x2 = xi * xi, x3 = x2 * xi;
  const Complex den = Complex(2) * (A + Complex(1)) * x3 + Complex(3) * (A - Complex(1)) * x2 - (A - Complex(1));
  const Real scale = abs(Complex(2) * (A + Complex(1)) * x3) + abs(Complex(3) * (A - Complex(1)) * x2) + abs(a - 1);
  if (abs(den) <= pow(Real(10), -static_cast<int>(current_digits()) + 5) * scale)
    throw PoleError("riemann_map: pole of the rational map");
  return Complex(4) * A * x3 / den;
}

// ---------------------------------------------------------------- potentials

Complex g_function(int j, const Complex& z, const DensityModel& m) {
  const CurveData& c = m.curve();
  PrecisionGuard guard(c.digits);
  const Real lo = j == 1 ? c.a : Real(0), hi = j == 1 ? Real(0) : Real(1);
  if (z.imag() == 0 && z.real() >= lo && z.real() <= hi) throw BranchError("g_function: z on the support");
  auto br = m.breaks(j);
  Complex total(0);
  const Real tol = tol_digits(static_cast<int>(c.digits) - 8);
  for (std::size_t i = 0; i + 1 < br.size(); ++i) {
    const Real u = br[i], v = br[i + 1];
    const Real off_lo = u - lo, off_hi = hi - v;
    quad::EndpointIntegrand<Complex> f = [&](const Real& s, const Real& dl, const Real& dr) {
      return log(z - Complex(s)) * Complex(m(j, s, off_lo + dl, off_hi + dr));
    };
    auto res = quad::tanh_sinh<Complex>(f, u, v, tol, 12);
    if (!res.converged) throw AccuracyError("g_function quadrature did not converge", 0.0);
    total += res.value;
  }
  return total;
}

namespace {

// Offsets delta_k = s zeta_k + 1/2 of the three real roots at real s outside
// [a,1], labelled (zeta_0, zeta_1, zeta_2). In delta the cubic reads
//   delta^3 - 3/2 delta^2 + C delta + D = 0
// with C, D free of cancellation, so zeta_j + 1/(2s) = delta_j / s stays
// accurate for large |s| where zeta_1 and zeta_2 nearly coincide.
std::array<Real, 3> outer_offsets(const CurveData& c, const Real& s, const Real& sa, const Real& s1) {
  const Real den = sa * s1;
  const Real C = ((2 * c.zstar - 2 * c.a - 2) * s + 3 * c.a) / (4 * den);
  const Real D = -c.a / (8 * den);
  std::array<Real, 3> d;
  if (abs(s) < 100) {
    auto r = real_cubic_roots(Real(1), Real(-1.5), C, D);
    // Map back to zeta ordering: zeta = (delta - 1/2)/s.
    std::array<Real, 3> z;
    for (int k = 0; k < 3; ++k) z[k] = (r[k] - Real(0.5)) / s;
    std::array<int, 3> idx{0, 1, 2};
    std::sort(idx.begin(), idx.end(), [&](int i, int j) { return z[i] < z[j]; });
    if (s < 0) d = {r[idx[0]], r[idx[2]], r[idx[1]]};  // zeta0 < zeta2 < zeta1
    else d = {r[idx[2]], r[idx[1]], r[idx[0]]};         // zeta2 < zeta1 < zeta0
    return d;
  }
  // Large root near 3/2 by Newton, then the small pair from the quotient
  // delta^2 + B delta + G with G = -D/d0 and B = (G - C)/d0.
  Real d0 = Real(1.5);
  const Real tol = pow(Real(10), -static_cast<int>(current_digits()));
  for (int it = 0; it < 100; ++it) {
    Real f = ((d0 - Real(1.5)) * d0 + C) * d0 + D;
    Real df = (3 * d0 - 3) * d0 + C;
    Real step = f / df;
    d0 -= step;
    if (abs(step) <= tol) break;
  }
  const Real G = -D / d0, B = (G - C) / d0;
  Real disc = B * B - 4 * G;
  if (disc < 0) disc = 0;
  const Real q = -(B + (B >= 0 ? Real(1) : Real(-1)) * sqrt(disc)) / 2;
  Real r1 = q, r2 = q == 0 ? Real(0) : Real(G / q);
  if (r1 > r2) std::swap(r1, r2);
  // s < 0: zeta_1 > zeta_2 means delta_1 < delta_2; s > 0 the reverse.
  if (s < 0) d = {d0, r1, r2};
  else d = {d0, r2, r1};
  return d;
}

}  // namespace

std::pair<Real, Real> lagrange_constants_g(const CurveData& c) {
  PrecisionGuard guard(c.digits + 10);
  const Real a = c.a;
  const Real tol = tol_digits(static_cast<int>(c.digits) - 6);
  std::array<Real, 2> left{}, right{};
  for (int j = 1; j <= 2; ++j) {
    // s = a - v with v = u/(1-u); -zeta_j - 1/(2s) = -delta_j/s.
    quad::EndpointIntegrand<Real> fl = [&](const Real&, const Real& du, const Real& dv) {
      const Real v = du / dv;
      const Real s = a - v;
      return -outer_offsets(c, s, Real(-v), s - 1)[j] / s / (dv * dv);
    };
    // s = 1 + v; zeta_j + 1/(2s) = delta_j/s.
    quad::EndpointIntegrand<Real> fr = [&](const Real&, const Real& du, const Real& dv) {
      const Real v = du / dv;
      const Real s = 1 + v;
      return outer_offsets(c, s, s - a, v)[j] / s / (dv * dv);
    };
    auto L = quad::tanh_sinh<Real>(fl, Real(0), Real(1), tol, 12);
    auto Rr = quad::tanh_sinh<Real>(fr, Real(0), Real(1), tol, 12);
    if (!L.converged || !Rr.converged) throw AccuracyError("g-route quadrature did not converge", 0.0);
    left[j - 1] = log(-a) / 2 + L.value;
    right[j - 1] = Rr.value;
  }
  PrecisionGuard out(c.digits);
  return {rounded(Real(-2 * left[0] - left[1])), rounded(Real(-right[0] - 2 * right[1]))};
}

PotentialData potentials_and_constants(const CurveData& c, unsigned points, const Real& tolerance) {
  PrecisionGuard guard(c.digits);
  DensityModel m(c);
  Measure mu1 = equilibrium_measure(1, m), mu2 = equilibrium_measure(2, m);
  const Real tol = tol_digits(static_cast<int>(c.digits) - 10);
  PotentialData out;
  out.mass1 = measure_mass(mu1, tol);
  out.mass2 = measure_mass(mu2, tol);
  for (unsigned k = 0; k < points; ++k) {
    const Real t = (Real(k) + Real(0.5)) / points;
    const Real x1 = c.a * (1 - t);  // (a, 0)
    const Real x2 = t;              // (0, 1)
    const Real u11 = log_potential(mu1, x1, tol), u21 = log_potential(mu2, x1, tol);
    const Real u12 = log_potential(mu1, x2, tol), u22 = log_potential(mu2, x2, tol);
    out.points1.push_back(x1);
    out.values1.push_back(2 * u11 + u21);
    out.points2.push_back(x2);
    out.values2.push_back(u12 + 2 * u22);
  }
  auto mean_dev = [](const std::vector<Real>& v, Real& mean, Real& dev) {
    mean = 0;
    for (const auto& x : v) mean += x;
    mean /= v.size();
    dev = 0;
    for (const auto& x : v) dev = std::max(dev, Real(abs(x - mean)));
  };
  mean_dev(out.values1, out.l1, out.l1_deviation);
  mean_dev(out.values2, out.l2, out.l2_deviation);
  auto lg = lagrange_constants_g(c);
  out.l1_g = lg.first;
  out.l2_g = lg.second;
  if (out.l1_deviation > tolerance || out.l2_deviation > tolerance)
    throw InvariantError("variational conditions are not constant within tolerance");
  return out;
}

// ---------------------------------------------------------------- phase functions

namespace {

int half_plane(const Complex& z, int side) {
  if (z.imag() > 0) return 1;
  if (z.imag() < 0) return -1;
  return side >= 0 ? 1 : -1;
}

// z^p with arg in (-pi, pi], real negative z taking the arg of the given side.
Complex zpow(const Complex& z, const Real& p, int hp) {
  Real th = arg(z);
  if (z.imag() == 0 && z.real() < 0) th = hp > 0 ? pi() : Real(-pi());
  return pow_with_arg(abs(z), th, Complex(p));
}

}  // namespace

std::array<Complex, 2> phi_functions(const Complex& z, const CurveData& c, int side) {
  PrecisionGuard guard(c.digits);
  std::array<Complex, 2> out{Complex(0), Complex(0)};
  if (z.real() == 0 && z.imag() == 0) return out;
  const int hp = half_plane(z, side);
  const Real az = abs(z);
  const Complex w = z / Complex(2) + Complex(Real(0), Real(hp * az / 2));
  const Real eps = tol_digits(static_cast<int>(c.digits) - 6);
  // Leg 1: s = w u^3 absorbs the s^{-2/3} behaviour at 0.
  quad::VectorIntegrand leg1 = [&](const Real& u, std::vector<Complex>& f) {
    const Complex s = w * Complex(u * u * u);
    auto v = zeta_branches(s, c, hp);
    const Complex ds = Complex(3) * w * Complex(u * u);
    f[0] = (v.zeta[1] - v.zeta[0]) * ds;
    f[1] = (v.zeta[2] - v.zeta[0]) * ds;
  };
  quad::VectorIntegrand leg2 = [&](const Real& t, std::vector<Complex>& f) {
    const Complex s = w + (z - w) * Complex(t);
    auto v = zeta_branches(s, c, hp);
    f[0] = (v.zeta[1] - v.zeta[0]) * (z - w);
    f[1] = (v.zeta[2] - v.zeta[0]) * (z - w);
  };
  auto r1 = quad::integrate_panels(leg1, 2, {Real(0), Real(0.5), Real(1)}, eps);
  auto r2 = quad::integrate_panels(leg2, 2, {Real(0), Real(0.5), Real(1)}, eps);
  if (!r1.converged || !r2.converged) throw AccuracyError("phi path integral did not converge", 0.0);
  out[0] = r1.values[0] + r2.values[0];
  out[1] = r1.values[1] + r2.values[1];
  return out;
}

std::array<Complex, 2> lambda_functions(const Complex& z, const CurveData& c, int side) {
  PrecisionGuard guard(c.digits);
  const int hp = half_plane(z, side);
  auto phi = phi_functions(z, c, hp);
  const Complex w = omega(), w2 = w * w;
  const Complex m13 = zpow(z, Real(-1) / 3, hp), m23 = zpow(z, Real(-2) / 3, hp);
  Complex l1, l2;
  if (hp > 0) {
    l1 = -m13 * (phi[0] + w2 * phi[1]);
    l2 = -m23 * (phi[0] + w * phi[1]);
  } else {
    l1 = -m13 * (phi[0] + w * phi[1]);
    l2 = -m23 * (phi[0] + w2 * phi[1]);
  }
  return {l1, l2};
}

Complex f_map(const Complex& z, const CurveData& c, int side) {
  auto l = lambda_functions(z, c, side);
  if (l[1].real() <= 0) throw BranchError("f_map: lambda_2 left the right half plane");
  return Complex(Real(8) / 27) * z * pow(l[1], Complex(Real(3) / 2));
}

Complex tau_map(const Complex& z, const CurveData& c, int side) {
  auto l = lambda_functions(z, c, side);
  if (l[1].real() <= 0) throw BranchError("tau_map: lambda_2 left the right half plane");
  return l[0] / sqrt(l[1]);
}

PhaseMaps phase_maps(const CurveData& c, const Real& radius, unsigned nodes) {
  PrecisionGuard guard(c.digits);
  PhaseMaps out;
  out.a = c.a;
  out.c0 = c.c0;
  out.c1 = c.c1;
  out.radius = radius;
  Complex s1(0), s2(0);
  Real min_re = Real(1e300);
  for (unsigned m = 0; m < nodes; ++m) {
    const Real th = 2 * pi() * (Real(m) + Real(0.5)) / nodes;
    const Complex z = Complex(radius) * expi(th);
    auto l = lambda_functions(z, c, +1);
    s1 += l[0];
    s2 += l[1];
    min_re = std::min(min_re, Real(l[1].real()));
  }
  out.lambda1_0 = s1 / Complex(Real(nodes));
  out.lambda2_0 = s2 / Complex(Real(nodes));
  min_re = std::min(min_re, Real(out.lambda2_0.real()));
  out.min_re_lambda2 = min_re;
  if (min_re <= 0) throw BranchError("lambda_2 leaves the right half plane on the working disk");
  const Real l2 = out.lambda2_0.real();
  out.fprime0 = Real(8) / 27 * pow(l2, Real(3) / 2);
  out.tau0 = out.lambda1_0.real() / sqrt(l2);
  // Continuity across the supports and reality of f on the real axis.
  Real jump = 0, fim = 0;
  for (const Real& x : {Real(c.a / 2), Real(c.a / 4), Real(radius / 2), Real(0.5)}) {
    auto up = lambda_functions(Complex(x), c, +1);
    auto dn = lambda_functions(Complex(x), c, -1);
    jump = std::max({jump, Real(abs(up[0] - dn[0])), Real(abs(up[1] - dn[1]))});
    if (abs(x) < radius) {
      Complex f = Complex(Real(8) / 27) * Complex(x) * pow(up[1], Complex(Real(3) / 2));
      fim = std::max(fim, Real(abs(f.imag())));
    }
  }
  out.continuity_residual = jump;
  out.f_imag_on_reals = fim;
  return out;
}

}  // namespace angelesco
