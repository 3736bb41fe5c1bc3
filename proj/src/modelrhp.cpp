#include "angelesco/modelrhp.hpp"

#include "angelesco/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace angelesco {

// ---------------------------------------------------------------- 3x3 algebra

Mat3 mat_identity() { return mat_diag(Complex(1), Complex(1), Complex(1)); }

Mat3 mat_diag(const Complex& a, const Complex& b, const Complex& c) {
  Mat3 M;
  for (auto& row : M) row.fill(Complex(0));
  M[0][0] = a;
  M[1][1] = b;
  M[2][2] = c;
  return M;
}

Mat3 mat_mul(const Mat3& A, const Mat3& B) {
  Mat3 C;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Complex s(0);
      for (int k = 0; k < 3; ++k) s += A[i][k] * B[k][j];
      C[i][j] = s;
    }
  return C;
}

Mat3 mat_sub(const Mat3& A, const Mat3& B) {
  Mat3 C;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) C[i][j] = A[i][j] - B[i][j];
  return C;
}

Complex mat_det(const Mat3& A) {
  return A[0][0] * (A[1][1] * A[2][2] - A[1][2] * A[2][1]) - A[0][1] * (A[1][0] * A[2][2] - A[1][2] * A[2][0]) +
         A[0][2] * (A[1][0] * A[2][1] - A[1][1] * A[2][0]);
}

Mat3 mat_inverse(const Mat3& A) {
  const Complex d = mat_det(A);
  if (d.real() == 0 && d.imag() == 0) throw DomainError("mat_inverse: singular matrix");
  Mat3 C;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int i1 = (j + 1) % 3, i2 = (j + 2) % 3, j1 = (i + 1) % 3, j2 = (i + 2) % 3;
      C[i][j] = (A[i1][j1] * A[i2][j2] - A[i1][j2] * A[i2][j1]) / d;
    }
  return C;
}

Real mat_max_norm(const Mat3& A) {
  Real m = 0;
  for (const auto& row : A) {
    Real s = 0;
    for (const auto& v : row) s += abs(v);
    m = std::max(m, s);
  }
  return m;
}

// ---------------------------------------------------------------- q_j

namespace {

Complex epow(const Real& beta, const Real& mult) { return expi(mult * beta * pi()); }

}  // namespace

std::array<Complex, 4> q_derivs(int j, const Complex& z, const Real& tau_in, const Real& beta_in,
                                const ContourSpec& spec, unsigned digits, int side) {
  if (j < 1 || j > 3) throw ValidationError("q_j: j must be 1, 2 or 3");
  PrecisionGuard guard(digits);
  const Real tau = rounded(tau_in), beta = rounded(beta_in);
  const Real az = abs(z);
  if (az == 0) throw DomainError("q_j: z = 0 is a singular point");
  Real phi;
  if (z.imag() == 0 && z.real() < 0) {
    if (side == 0) throw BranchError("q_j: z on the negative axis needs a side");
    phi = side > 0 ? pi() : Real(-pi());
  } else {
    phi = arg(z);
  }
  // Tail along the steepest direction of exp(z t); arcs at the saddle radius.
  const Real th_t = pi() - phi;
  const Real r = Real(spec.radius_scale) * std::min(Real(1), Real(1 / cbrt(az)));
  const Real c = -beta - 3;
  const Real start = j == 1 ? Real(2 * pi()) : (j == 2 ? Real(0) : pi());
  const Real smax = r + Real(spec.tail_scale) * (Real(2.5) * digits + 20) / az;
  const Complex tauc(tau), ic = imag_unit();

  // Integrand at t = s e^{i th}, times the path derivative, for d = 0..3.
  auto kernel = [&](const Real& s, const Real& th, const Complex& dt, std::vector<Complex>& out) {
    const Complex t = Complex(s) * expi(th);
    const Complex logt(log(s), th);
    const Complex t2 = t * t;
    const Complex e = exp(Complex(c) * logt + tauc / t - Complex(1) / (Complex(2) * t2) + z * t) * dt;
    out[0] = e;
    out[1] = e * t;
    out[2] = out[1] * t;
    out[3] = out[2] * t;
  };
  const Real eps = pow(Real(10), -static_cast<int>(digits) + 4);
  std::array<Complex, 4> total{};
  for (auto& v : total) v = Complex(0);
  auto add = [&](const quad::PanelResult& pr) {
    if (!pr.converged) throw AccuracyError("q_j: panel refinement did not converge", 0.0);
    for (int d = 0; d < 4; ++d) total[d] += pr.values[d];
  };

  quad::VectorIntegrand ray = [&](const Real& s, std::vector<Complex>& out) {
    kernel(s, start, expi(start), out);
  };
  add(quad::integrate_panels(ray, 4, {Real(0), Real(r / 8), Real(r / 4), Real(r / 2), r}, eps, spec.nodes));

  if (start != th_t) {
    quad::VectorIntegrand arc = [&](const Real& th, std::vector<Complex>& out) {
      kernel(r, th, ic * Complex(r) * expi(th), out);
    };
    std::vector<Real> br;
    for (int k = 0; k <= 6; ++k) br.push_back(start + (th_t - start) * k / 6);
    if (th_t < start) std::reverse(br.begin(), br.end());
    auto pr = quad::integrate_panels(arc, 4, br, eps, spec.nodes);
    // Breaks were reversed for increasing order; the arc runs start -> th_t.
    if (th_t < start)
      for (auto& v : pr.values) v = -v;
    add(pr);
  }

  quad::VectorIntegrand tail = [&](const Real& s, std::vector<Complex>& out) {
    kernel(s, th_t, expi(th_t), out);
  };
  std::vector<Real> br;
  for (int k = 0; k <= 8; ++k) br.push_back(r + (smax - r) * k / 8);
  auto pt = quad::integrate_panels(tail, 4, br, eps, spec.nodes);
  add(pt);
  // Truncation: the integrand decays like exp(-|z| s) past smax.
  {
    std::vector<Complex> endv(4);
    kernel(smax, th_t, expi(th_t), endv);
    Real tail_bound = abs(endv[3]) / az;
    if (tail_bound > eps * (pt.abs_integral + 1))
      throw AccuracyError("q_j: truncation tail above tolerance", 0.0);
  }
  if (j == 2)
    for (auto& v : total) v = -v;
  return total;
}

Complex q_j(int j, const Complex& z, const Real& tau, const Real& beta, unsigned deriv, const ContourSpec& spec,
            unsigned digits, int side) {
  if (deriv > 3) throw ValidationError("q_j: deriv must be 0..3");
  return q_derivs(j, z, tau, beta, spec, digits, side)[deriv];
}

// ---------------------------------------------------------------- Psi

int sector_of(const Complex& z) {
  const Real a = arg(z);
  const Real p = pi();
  const Real tol(1e-8);
  if (abs(z) == 0) throw DomainError("sector_of: z = 0");
  for (const Real& ray : {Real(0), Real(p / 4), Real(3 * p / 4), p, Real(-p / 4), Real(-3 * p / 4), Real(-p)})
    if (abs(a - ray) < tol) throw BranchError("psi: z lies on a jump ray; use one-sided limits");
  if (a > 0) return a < p / 4 ? 1 : (a < 3 * p / 4 ? 2 : 3);
  return a > -p / 4 ? -1 : (a > -3 * p / 4 ? -2 : -3);
}

namespace {

Mat3 assemble(const std::array<std::array<Complex, 4>, 3>& q, const Real& beta, int sector) {
  const Complex E = epow(beta, Real(2)), e = epow(beta, Real(1));
  Mat3 M;
  for (int d = 0; d < 3; ++d) {
    const Complex q1 = q[0][d], q2 = q[1][d], q3 = q[2][d];
    std::array<Complex, 3> row;
    switch (sector) {
      case 1: row = {E * q1, e * q3, q2}; break;
      case 2: row = {E * q1 + q2, e * q3, q2}; break;
      case 3: row = {E * q1 + q2 - E * q3, e * q3, q2}; break;
      case -1: row = {q2, e * q3, -E * q1}; break;
      case -2: row = {q2 + E * q1, e * q3, -E * q1}; break;
      case -3: row = {E * q1 + q2 + q3, e * q3, -E * q1}; break;
      default: throw ValidationError("psi: unknown sector");
    }
    M[d] = row;
  }
  return M;
}

std::array<std::array<Complex, 4>, 3> all_q(const Complex& z, const Real& tau, const Real& beta,
                                            const ContourSpec& spec, unsigned digits, int side) {
  std::array<std::array<Complex, 4>, 3> q;
  for (int j = 1; j <= 3; ++j) q[j - 1] = q_derivs(j, z, tau, beta, spec, digits, side);
  return q;
}

}  // namespace

Mat3 psi_sector(const Complex& z, const Real& tau, const Real& beta, int sector, const ContourSpec& spec,
                unsigned digits, int side) {
  PrecisionGuard guard(digits);
  return assemble(all_q(z, tau, beta, spec, digits, side), rounded(beta), sector);
}

Mat3 psi(const Complex& z, const Real& tau, const Real& beta, unsigned digits, const ContourSpec& spec) {
  const int s = sector_of(z);
  return psi_sector(z, tau, beta, s, spec, digits, 0);
}

Complex theta_k(int k, const Complex& z, const Real& tau) {
  if (z.imag() == 0 && z.real() <= 0) throw BranchError("theta_k: z on the cut (-inf, 0]");
  const Complex w = omega();
  Complex wk(1), w2k(1);
  for (int i = 0; i < k; ++i) wk *= w;
  for (int i = 0; i < 2 * k; ++i) w2k *= w;
  const Complex z13 = cpow(z, Real(1) / 3), z23 = cpow(z, Real(2) / 3);
  return -Complex(Real(3) / 2) * wk * z23 - Complex(tau) * w2k * z13;
}

std::array<Complex, 3> Theta(const Complex& z, const Real& tau) {
  if (z.imag() > 0) return {theta_k(1, z, tau), theta_k(3, z, tau), theta_k(2, z, tau)};
  if (z.imag() < 0) return {theta_k(2, z, tau), theta_k(3, z, tau), theta_k(1, z, tau)};
  throw BranchError("Theta: z on the real axis");
}

ModelMatrices ModelMatrices::build(const Real& tau, const Real& beta) {
  ModelMatrices m;
  const Complex w = angelesco::omega(), w2 = w * w, one(1), zero(0);
  m.omega = w;
  m.OmegaPlus = {{{-w2, one, w}, {one, -one, -one}, {-w, one, w2}}};
  m.OmegaMinus = {{{w, one, w2}, {-one, -one, -one}, {w2, one, w}}};
  const Complex b3 = expi(beta * pi() / 3);
  const Complex b3c = expi(-beta * pi() / 3);
  m.BPlus = mat_diag(b3, one, b3c);
  m.BMinus = mat_diag(b3c, one, b3);
  const Complex T(tau);
  const Complex c1 = -T / Complex(3) * (T * T / Complex(9) + Complex(beta) + one);
  const Complex c2 = -T / Complex(9);
  Mat3 up = mat_diag(c1 * w, c1, c1 * w2);
  Mat3 upo = {{{zero, w2 - w, one - w}, {w2 - one, zero, one - w}, {one - w2, w2 - w, zero}}};
  Mat3 dn = mat_diag(c1 * w2, c1, c1 * w);
  Mat3 dno = {{{zero, w2 - w, w2 - one}, {one - w, zero, one - w2}, {w - one, w - w2, zero}}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      up[i][j] += c2 * upo[i][j];
      dn[i][j] += c2 * dno[i][j];
    }
  m.Psi1Plus = up;
  m.Psi1Minus = dn;
  return m;
}

std::vector<RayJump> jump_table(const Real& beta) {
  const Complex one(1), zero(0);
  const Complex e = epow(beta, Real(1)), em = epow(beta, Real(-1));
  const double p = M_PI;
  std::vector<RayJump> t;
  t.push_back({"arg=pi/4", p / 4, 2, 1, {{{one, zero, zero}, {zero, one, zero}, {one, zero, one}}}});
  t.push_back({"arg=3pi/4", 3 * p / 4, 2, 3, {{{one, zero, zero}, {e, one, zero}, {zero, zero, one}}}});
  t.push_back({"positive axis", 0.0, 1, -1, {{{zero, zero, one}, {zero, one, zero}, {-one, zero, zero}}}});
  t.push_back({"arg=-pi/4", -p / 4, -1, -2, {{{one, zero, zero}, {zero, one, zero}, {one, zero, one}}}});
  t.push_back({"arg=-3pi/4", -3 * p / 4, -3, -2, {{{one, zero, zero}, {em, one, zero}, {zero, zero, one}}}});
  t.push_back({"negative axis", p, 3, -3, {{{zero, e, zero}, {-e, zero, zero}, {zero, zero, one}}}});
  return t;
}

Real jump_residual(const RayJump& ray, const Real& radius, const Real& tau, const Real& beta, unsigned digits) {
  PrecisionGuard guard(digits);
  const ContourSpec spec;
  Mat3 plus, minus;
  if (ray.name == "negative axis") {
    const Complex z(Real(-radius));
    plus = psi_sector(z, tau, beta, ray.plus_sector, spec, digits, +1);
    minus = psi_sector(z, tau, beta, ray.minus_sector, ContourSpec::alternate(), digits, -1);
  } else {
    // One-sided limits from just either side of the ray, on two different
    // contours, so analyticity and contour independence are both exercised.
    const Real th = pi() * Real(ray.angle) / Real(M_PI);
    const Real off = pow(Real(10), -static_cast<int>(digits / 2) - 5);
    const Complex zp = Complex(radius) * expi(Real(th + off)), zm = Complex(radius) * expi(Real(th - off));
    plus = assemble(all_q(zp, tau, beta, spec, digits, 0), rounded(beta), ray.plus_sector);
    minus = assemble(all_q(zm, tau, beta, ContourSpec::alternate(), digits, 0), rounded(beta), ray.minus_sector);
  }
  // Re-read the jump at the working precision.
  auto J = jump_table(rounded(beta));
  Mat3 Jw;
  for (const auto& r : J)
    if (r.name == ray.name) Jw = r.J;
  const Mat3 diff = mat_sub(plus, mat_mul(minus, Jw));
  return mat_max_norm(diff) / mat_max_norm(plus);
}

Real monodromy_residual(const Real& x, const Real& tau, const Real& beta_in, unsigned digits) {
  if (!(x < 0)) throw DomainError("monodromy_residual: need x < 0");
  PrecisionGuard guard(digits);
  const Real beta = rounded(beta_in);
  const Complex z(x);
  auto qp = all_q(z, tau, beta, {}, digits, +1);
  auto qm = all_q(z, tau, beta, {}, digits, -1);
  const Complex E = epow(beta, Real(2)), one(1), zero(0);
  const Mat3 M = {{{one + E, one, zero}, {-E, zero, zero}, {E, one, one}}};
  Real num = 0, scale = 0;
  for (int d = 0; d < 3; ++d)
    for (int i = 0; i < 3; ++i) {
      Complex s(0);
      for (int k = 0; k < 3; ++k) s += M[i][k] * qm[k][d];
      num = std::max(num, Real(abs(qp[i][d] - s)));
      scale = std::max(scale, Real(abs(qp[i][d])));
    }
  return num / scale;
}

Real q_ode_residual(int j, const Complex& z, const Real& tau, const Real& beta, unsigned digits) {
  PrecisionGuard guard(digits);
  auto q = q_derivs(j, z, tau, beta, {}, digits, 0);
  const Complex t3 = z * q[3], t2 = Complex(beta) * q[2], t1 = Complex(tau) * q[1], t0 = q[0];
  const Real scale = abs(t3) + abs(t2) + abs(t1) + abs(t0);
  return abs(t3 - t2 - t1 + t0) / scale;
}

// ---------------------------------------------------------------- asymptotics

namespace {

// Remainders for order 0 and 1 from a single Psi evaluation.
std::array<Mat3, 2> remainder_matrices(const Complex& z, const Real& tau, const Real& beta, unsigned digits) {
  PrecisionGuard guard(digits);
  const Real t = rounded(tau), b = rounded(beta);
  const bool up = z.imag() > 0;
  auto mm = ModelMatrices::build(t, b);
  const Mat3& Om = up ? mm.OmegaPlus : mm.OmegaMinus;
  const Mat3& B = up ? mm.BPlus : mm.BMinus;
  const Mat3& P1 = up ? mm.Psi1Plus : mm.Psi1Minus;
  const auto th = Theta(z, t);
  const Mat3 Ps = psi(z, t, b, digits);
  const Mat3 X = mat_mul(mat_mul(Ps, mat_diag(exp(-th[0]), exp(-th[1]), exp(-th[2]))), mat_inverse(B));
  const Complex pref = Complex(sqrt(2 * pi() / 3) * exp(t * t / 6)) * cpow(z, b / 3);
  const Complex z13 = cpow(z, Real(1) / 3), zm13 = cpow(z, Real(-1) / 3);
  std::array<Mat3, 2> out;
  for (int order = 0; order <= 1; ++order) {
    Mat3 corr = mat_identity();
    if (order == 1)
      for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) corr[i][k] += P1[i][k] * zm13;
    Mat3 M = mat_mul(mat_mul(mat_diag(pref * z13, pref, pref * zm13), Om), corr);
    out[order] = mat_sub(mat_mul(mat_inverse(M), X), mat_identity());
  }
  return out;
}

}  // namespace

std::array<AsymptoticRemainder, 2> psi_asymptotic_remainders(const Complex& z, const Real& tau, const Real& beta,
                                                             unsigned digits) {
  if (z.imag() == 0) throw BranchError("psi_asymptotic_check: z on the real axis");
  // The recessive columns cancel against the dominant saddle; budget digits
  // for exp(3 |z|^{2/3}) of cancellation.
  const double az = static_cast<double>(abs(z));
  if (digits == 0) digits = 30 + static_cast<unsigned>(std::ceil(3.0 * std::pow(az, 2.0 / 3.0) / std::log(10.0)));
  const auto R1 = remainder_matrices(z, tau, beta, digits);
  const auto R2 = remainder_matrices(z, tau, beta, digits + 20);
  PrecisionGuard guard(digits);
  std::array<AsymptoticRemainder, 2> out;
  for (int k = 0; k < 2; ++k) {
    out[k].digits = digits;
    out[k].norm = mat_max_norm(R1[k]);
    out[k].self_check = mat_max_norm(mat_sub(R1[k], R2[k]));
  }
  return out;
}

AsymptoticRemainder psi_asymptotic_check(const Complex& z, const Real& tau, const Real& beta, int order,
                                         unsigned digits) {
  if (order != 0 && order != 1) throw ValidationError("psi_asymptotic_check: order must be 0 or 1");
  return psi_asymptotic_remainders(z, tau, beta, digits)[order];
}

// ---------------------------------------------------------------- Q

std::array<Complex, 4> Q_derivs(const Complex& z, const Real& tau_in, const Real& beta_in, const ContourSpec& spec,
                                unsigned digits) {
  PrecisionGuard guard(digits);
  const Real tau = rounded(tau_in), beta = rounded(beta_in);
  if (!(beta > -1)) throw ValidationError("Q: need beta > -1");
  const Real az = abs(z);
  const Real r = Real(spec.radius_scale) * std::max(Real(1), Real(sqrt(az)));
  const Real L = r + Real(spec.tail_scale) * (Real(2.303) * (digits + 10) + Real(2) * az);
  const Complex ic = imag_unit(), one(1), two(2), tauc(tau), cpow_(-beta - 1);

  auto kernel = [&](const Complex& t, const Complex& dt, std::vector<Complex>& out) {
    const Complex it = one / t, it2 = it * it;
    const Complex ex = exp(cpow_ * log(t) - z * z * it2 / two + tauc * z * it + t) * dt;
    const Complex g = -z * it2 + tauc * it;
    out[0] = ex;
    out[1] = ex * g;
    out[2] = ex * (g * g - it2);
    out[3] = ex * (g * g * g - Complex(3) * g * it2);
  };
  const Real eps = pow(Real(10), -static_cast<int>(digits) + 4);
  std::array<Complex, 4> total;
  for (auto& v : total) v = Complex(0);
  auto add = [&](const quad::PanelResult& pr, bool negate) {
    if (!pr.converged) throw AccuracyError("Q: panel refinement did not converge", 0.0);
    for (int d = 0; d < 4; ++d) total[d] += negate ? Complex(-pr.values[d]) : pr.values[d];
  };
  std::vector<Real> br;
  for (int k = 0; k <= 10; ++k) br.push_back(-L + L * k / 10);
  // Upper ray, -L + i r -> i r.
  quad::VectorIntegrand upper = [&](const Real& x, std::vector<Complex>& out) { kernel(Complex(x, r), one, out); };
  add(quad::integrate_panels(upper, 4, br, eps, spec.nodes), false);
  // Right half circle, clockwise from i r to -i r.
  quad::VectorIntegrand circ = [&](const Real& th, std::vector<Complex>& out) {
    const Complex t = Complex(r) * expi(th);
    kernel(t, ic * t, out);
  };
  std::vector<Real> cb;
  for (int k = 0; k <= 6; ++k) cb.push_back(-pi() / 2 + pi() * k / 6);
  add(quad::integrate_panels(circ, 4, cb, eps, spec.nodes), true);
  // Lower ray, -i r -> -L - i r.
  quad::VectorIntegrand lower = [&](const Real& x, std::vector<Complex>& out) { kernel(Complex(x, Real(-r)), one, out); };
  add(quad::integrate_panels(lower, 4, br, eps, spec.nodes), true);
  for (auto& v : total) v = ic * v;
  return total;
}

QValue Q_eval(const Complex& z, const Real& tau, const Real& beta, const ContourSpec& spec, unsigned digits) {
  QValue q{z, tau, beta, Q_derivs(z, tau, beta, spec, digits)[0], "contour"};
  return q;
}

QValue Q_series_tau0(const Complex& z, const Real& beta_in, unsigned nterms, unsigned digits) {
  PrecisionGuard guard(digits + 10);
  const Real beta = rounded(beta_in);
  if (!(beta > -1)) throw ValidationError("Q_series_tau0: need beta > -1");
  const Complex w = -z * z / Complex(8);
  const Real tol = pow(Real(10), -static_cast<int>(digits) - 5);
  Complex term(1), sum(1);
  const Real p1 = (beta + 1) / 2, p2 = (beta + 2) / 2;
  bool done = false;
  for (unsigned k = 0; k < nterms; ++k) {
    term *= w / Complex((p1 + k) * (p2 + k) * (k + 1));
    sum += term;
    // Past the peak the terms decay faster than geometrically.
    const Real ratio = abs(w) / ((p1 + k + 1) * (p2 + k + 1) * (k + 2));
    if (ratio < Real(0.5) && abs(term) <= tol * (abs(sum) + tol)) {
      done = true;
      break;
    }
  }
  if (!done) throw AccuracyError("Q_series_tau0: nterms too small for |z|", 0.0);
  QValue q{z, Real(0), beta_in, Complex(2 * pi() / tgamma(beta + 1)) * sum, "series"};
  PrecisionGuard out(digits);
  q.value = rounded(q.value);
  return q;
}

Real Q_relation_check(const Complex& z, const Real& tau, const Real& beta_in, unsigned digits) {
  if (!(z.real() > 0)) throw DomainError("Q_relation_check: need Re z > 0");
  PrecisionGuard guard(digits);
  const Real beta = rounded(beta_in);
  const Complex E = epow(beta, Real(2));
  const Complex q1 = q_j(1, z, tau, beta, 2, {}, digits), q2 = q_j(2, z, tau, beta, 2, {}, digits);
  const Complex lhs = imag_unit() * cpow(z, -beta) * (E * q1 + q2);
  const Complex Q = Q_eval(z, tau, beta, {}, digits).value;
  return abs(lhs - Q) / abs(Q);
}

Real Q_ode_residual(const Complex& z, const Real& tau, const Real& beta, unsigned digits) {
  PrecisionGuard guard(digits);
  auto Q = Q_derivs(z, tau, beta, {}, digits);
  const Complex b(beta), t(tau), one(1), two(2);
  const Complex t3 = z * z * Q[3], t2 = two * (b + one) * z * Q[2], t1 = (b * b + b - t * z) * Q[1],
                t0 = (z - t * b) * Q[0];
  const Real scale = abs(t3) + abs(t2) + abs(t1) + abs(t0);
  return abs(t3 + t2 + t1 + t0) / scale;
}

// ---------------------------------------------------------------- suite

std::vector<CheckEntry> model_check_suite(const Real& beta, const Real& tau, unsigned digits) {
  PrecisionGuard guard(digits);
  std::vector<CheckEntry> out;
  const double bd = static_cast<double>(beta), td = static_cast<double>(tau);
  for (const auto& ray : jump_table(beta)) {
    Real worst = 0;
    for (double rad : {0.5, 2.0, 10.0}) worst = std::max(worst, jump_residual(ray, Real(rad), tau, beta, digits));
    out.push_back({"jump " + ray.name, bd, td, 3, worst, 1e-8, worst <= Real(1e-8)});
  }
  {
    Real worst = 0;
    for (double x : {-0.5, -2.0}) worst = std::max(worst, monodromy_residual(Real(x), tau, beta, digits));
    out.push_back({"monodromy", bd, td, 2, worst, 1e-8, worst <= Real(1e-8)});
  }
  // Fixed seed per cell keeps the suite deterministic.
  std::mt19937_64 rng(0x5eed + static_cast<unsigned long>(std::llround(1000 * bd + 10 * td + 7)));
  std::uniform_real_distribution<double> rad(0.5, 3.0), ang(-3.0, 3.0);
  std::vector<Complex> pts;
  for (int k = 0; k < 20; ++k) {
    const double r = rad(rng), a = ang(rng);
    pts.push_back(Complex(Real(r * std::cos(a)), Real(r * std::sin(a))));
  }
  {
    Real worst = 0;
    for (const auto& z : pts)
      for (int j = 1; j <= 3; ++j) worst = std::max(worst, q_ode_residual(j, z, tau, beta, digits));
    out.push_back({"q ode", bd, td, 20, worst, 1e-8, worst <= Real(1e-8)});
  }
  {
    Real worst = 0;
    for (const auto& z : pts) worst = std::max(worst, Q_ode_residual(z, tau, beta, digits));
    out.push_back({"Q ode", bd, td, 20, worst, 1e-8, worst <= Real(1e-8)});
  }
  {
    const Real q0 = abs(Q_eval(Complex(0), tau, beta, {}, digits).value - Complex(2 * pi() / tgamma(rounded(beta) + 1)));
    const Real rel = q0 / (2 * pi() / abs(tgamma(rounded(beta) + 1)));
    out.push_back({"Q(0)", bd, td, 1, rel, 1e-10, rel <= Real(1e-10)});
  }
  {
    Real worst = 0;
    for (const auto& z : {Complex(Real(1)), Complex(Real(2), Real(1)), Complex(Real(-1.5), Real(0.5))}) {
      const Complex a = Q_eval(z, tau, beta, {}, digits).value;
      const Complex b = Q_eval(z, tau, beta, ContourSpec::alternate(), digits).value;
      worst = std::max(worst, Real(abs(a - b) / abs(a)));
    }
    out.push_back({"Q contour invariance", bd, td, 3, worst, 1e-10, worst <= Real(1e-10)});
  }
  {
    Real worst = 0;
    for (const auto& z : {Complex(Real(1)), Complex(Real(2), Real(0.5))})
      worst = std::max(worst, Q_relation_check(z, tau, beta, digits));
    out.push_back({"Q relation", bd, td, 2, worst, 1e-9, worst <= Real(1e-9)});
  }
  return out;
}

}  // namespace angelesco
