#include "angelesco/cubic.hpp"

#include "angelesco/errors.hpp"

#include <algorithm>

namespace angelesco {

namespace {

// x^3 + b x^2 + c x + d, one Newton step set on a bracketed simple root.
Real newton_monic(const Real& b, const Real& c, const Real& d, Real x) {
  const Real tol = pow(Real(10), -static_cast<int>(current_digits()));
  for (int it = 0; it < 100; ++it) {
    Real f = ((x + b) * x + c) * x + d;
    Real df = (3 * x + 2 * b) * x + c;
    if (df == 0) break;
    Real dx = f / df;
    x -= dx;
    if (abs(dx) <= tol * (1 + abs(x))) break;
  }
  return x;
}

Real cbrt_real(const Real& x) { return x < 0 ? Real(-cbrt(Real(-x))) : Real(cbrt(x)); }

}  // namespace

std::array<Real, 3> real_cubic_roots(const Real& c3, const Real& c2, const Real& c1, const Real& c0) {
  if (c3 == 0) throw ValidationError("real_cubic_roots: leading coefficient is zero");
  const Real b = c2 / c3, c = c1 / c3, d = c0 / c3;
  // x = y - b/3 gives y^3 + P y + R.
  const Real P = c - b * b / 3;
  const Real R = 2 * b * b * b / 27 - b * c / 3 + d;
  const Real disc = -(4 * P * P * P + 27 * R * R);
  const Real scale = pow(abs(P) + abs(R) + 1, Real(3));
  const Real tol = pow(Real(10), -static_cast<int>(current_digits()) + 8) * scale;
  if (disc < -tol) throw CurveDegeneracyError("cubic has complex roots");
  std::array<Real, 3> y;
  if (P == 0) {
    y = {Real(0), Real(0), Real(0)};
  } else {
    // Trigonometric form.
    const Real m = 2 * sqrt(-P / 3);
    Real arg = 3 * R / (P * m);
    if (arg > 1) arg = 1;
    if (arg < -1) arg = -1;
    const Real th = acos(arg) / 3;
    for (int k = 0; k < 3; ++k) y[k] = m * cos(th - 2 * pi() * k / 3);
  }
  std::array<Real, 3> x;
  for (int k = 0; k < 3; ++k) x[k] = newton_monic(b, c, d, y[k] - b / 3);
  std::sort(x.begin(), x.end());
  return x;
}

Complex polish_root(const Complex& p, const Complex& r, Complex z, unsigned max_iter) {
  const Real tol = pow(Real(10), -static_cast<int>(current_digits()));
  for (unsigned it = 0; it < max_iter; ++it) {
    Complex z2 = z * z;
    Complex f = z2 * z - p * z - r;
    Complex df = Complex(3) * z2 - p;
    if (df.real() == 0 && df.imag() == 0) break;
    Complex dz = f / df;
    z -= dz;
    if (abs(dz) <= tol * abs(z)) break;
  }
  return z;
}

std::array<Complex, 3> depressed_cubic_roots(const Complex& p, const Complex& r) {
  // zeta = u + p/(3u), u^3 = r/2 + sqrt(r^2/4 - p^3/27).
  const Complex half_r = r / Complex(2);
  const Complex D = half_r * half_r - p * p * p / Complex(27);
  Complex sq = sqrt(D);
  Complex u3a = half_r + sq, u3b = half_r - sq;
  Complex u3 = abs(u3a) >= abs(u3b) ? u3a : u3b;
  std::array<Complex, 3> out;
  if (abs(u3) == 0) {
    out = {Complex(0), Complex(0), Complex(0)};
    return out;
  }
  Complex u = exp(log(u3) / Complex(3));
  const Complex w = omega();
  for (int k = 0; k < 3; ++k) {
    Complex uk = k == 0 ? u : (k == 1 ? Complex(u * w) : Complex(u * w * w));
    out[k] = polish_root(p, r, uk + p / (Complex(3) * uk), 8);
  }
  return out;
}

std::array<std::complex<double>, 3> depressed_cubic_roots(std::complex<double> p, std::complex<double> r) {
  using C = std::complex<double>;
  const C D = r * r / 4.0 - p * p * p / 27.0;
  const C sq = std::sqrt(D);
  C u3 = std::abs(r / 2.0 + sq) >= std::abs(r / 2.0 - sq) ? r / 2.0 + sq : r / 2.0 - sq;
  std::array<C, 3> out;
  if (std::abs(u3) == 0) return {C(0), C(0), C(0)};
  const C u = std::pow(u3, 1.0 / 3.0);
  const C w = std::polar(1.0, 2.0 * M_PI / 3.0);
  for (int k = 0; k < 3; ++k) {
    C uk = k == 0 ? u : (k == 1 ? u * w : u * w * w);
    C z = uk + p / (3.0 * uk);
    for (int it = 0; it < 4; ++it) {
      C df = 3.0 * z * z - p;
      if (std::abs(df) == 0) break;
      z -= (z * z * z - p * z - r) / df;
    }
    out[k] = z;
  }
  return out;
}

Real single_real_root(const Real& p, const Real& r) {
  const Real half_r = r / 2;
  Real D = half_r * half_r - p * p * p / 27;
  if (D < 0) D = 0;
  const Real sq = sqrt(D);
  // Larger-magnitude branch first, the other from the product u v = p/3.
  const Real u3 = half_r >= 0 ? Real(half_r + sq) : Real(half_r - sq);
  if (u3 == 0) return Real(0);
  const Real u = cbrt_real(u3);
  Real x = u + p / (3 * u);
  // One Newton step removes the rounding of the cube root.
  const Real df = 3 * x * x - p;
  if (df != 0) x -= (x * x * x - p * x - r) / df;
  return x;
}

}  // namespace angelesco
