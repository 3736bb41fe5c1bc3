#include "angelesco/mop.hpp"

#include "angelesco/quadrature.hpp"

#include <cmath>
#include <map>
#include <tuple>

namespace angelesco {

namespace {
// Reference rules are expensive at high precision and get rebuilt for every
// solve; keep them per (exponents, order, precision).
const quad::Rule& cached_reference(const Real& alpha, const Real& beta, unsigned m) {
  using Key = std::tuple<std::string, std::string, unsigned, unsigned>;
  static std::map<Key, quad::Rule> cache;
  const unsigned prec = current_digits();
  Key key{alpha.str(0, std::ios_base::scientific), beta.str(0, std::ios_base::scientific), m, prec};
  auto it = cache.find(key);
  if (it == cache.end()) {
    if (cache.size() > 64) cache.clear();
    it = cache.emplace(key, quad::gauss_jacobi_reference(alpha, beta, m)).first;
  }
  return it->second;
}

Rational qpow(const Rational& b, unsigned e) {
  Rational r(1), x(b);
  while (e) {
    if (e & 1) r *= x;
    e >>= 1;
    if (e) x *= x;
  }
  return r;
}
}  // namespace

Complex Polynomial::operator()(const Complex& z) const {
  Complex v(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * z + Complex(*it);
  return v;
}

Real Polynomial::operator()(const Real& x) const {
  Real v = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * x + *it;
  return v;
}

QuadratureRule gauss_jacobi_rule(const Real& lo, const Real& hi, const Real& p, const Real& q, unsigned m) {
  if (!(lo < hi)) throw ValidationError("gauss_jacobi_rule: need lo < hi");
  if (p <= -1 || q <= -1) throw ValidationError("gauss_jacobi_rule: exponents must exceed -1");
  if (m < 1) throw ValidationError("gauss_jacobi_rule: need m >= 1");
  // Reference weight (1-xi)^q (1+xi)^p: q sits at hi, p at lo.
  const quad::Rule& ref = cached_reference(q, p, m);
  const Real half = (hi - lo) / 2;
  const Real scale = pow(half, p + q + 1);
  QuadratureRule r;
  r.lo = lo;
  r.hi = hi;
  r.p = p;
  r.q = q;
  r.order = m;
  r.nodes.resize(m);
  r.weights.resize(m);
  for (unsigned i = 0; i < m; ++i) {
    r.nodes[i] = lo + half * (1 + ref.nodes[i]);
    r.weights[i] = ref.weights[i] * scale;
  }
  return r;
}

unsigned mop_default_digits(unsigned n) { return n <= 32 ? 160u : 6u * n + 64u; }

namespace {

bool remainder_is_constant(const AnalyticFactor& h, const Rational& lo, const Rational& hi) {
  switch (h.kind) {
    case AnalyticFactor::Kind::Constant:
      return true;
    case AnalyticFactor::Kind::Power:
      for (const auto& t : h.terms)
        if (t.power != 0 && t.root != lo && t.root != hi) return false;
      return true;
    case AnalyticFactor::Kind::Callable:
      return false;
  }
  return false;
}

Rational lo_of(int j, const WeightParams& p) { return j == 1 ? p.a : Rational(0); }
Rational hi_of(int j, const WeightParams&) { return j == 1 ? Rational(0) : Rational(1); }

// Ratio m_{k+1}/m_k for a pure Jacobi weight with exponents (el at lo, eh at hi).
Rational moment_ratio(int j, unsigned k, const Rational& a, const Rational& el, const Rational& eh) {
  if (j == 1) return a * (Rational(k) + eh + 1) / (Rational(k) + el + eh + 2);
  return (Rational(k) + el + 1) / (Rational(k) + el + eh + 2);
}

// Normalised moments m_k / m_0, exact.
std::vector<Rational> normalized_moments_exact(int j, unsigned count, const WeightParams& p) {
  auto [el, eh] = jacobi_exponents(j, p);
  std::vector<Rational> m(count);
  if (count == 0) return m;
  m[0] = 1;
  for (unsigned k = 0; k + 1 < count; ++k) m[k + 1] = m[k] * moment_ratio(j, k, p.a, el, eh);
  return m;
}

std::vector<Real> moments_closed_form(int j, unsigned count, const WeightParams& p) {
  auto [el, eh] = jacobi_exponents(j, p);
  const Real len = j == 1 ? Real(-to_real(p.a)) : Real(1);
  const Real c = smooth_remainder(j, j == 1 ? to_real(p.a) / 2 : Real(0.5), p);
  const Real rel = to_real(el), reh = to_real(eh);
  std::vector<Real> m(count);
  if (count == 0) return m;
  m[0] = c * pow(len, rel + reh + 1) * quad::beta_function(rel + 1, reh + 1);
  for (unsigned k = 0; k + 1 < count; ++k) {
    const Real kk = k;
    m[k + 1] = m[k] * (j == 1 ? to_real(p.a) * (kk + reh + 1) / (kk + rel + reh + 2)
                              : (kk + rel + 1) / (kk + rel + reh + 2));
  }
  return m;
}

std::vector<Real> moments_quadrature(int j, unsigned count, const WeightParams& p, const QuadratureRule& r) {
  std::vector<Real> m(count, Real(0));
  for (unsigned i = 0; i < r.nodes.size(); ++i) {
    Real w = r.weights[i] * smooth_remainder(j, r.nodes[i], p);
    for (unsigned k = 0; k < count; ++k) {
      m[k] += w;
      w *= r.nodes[i];
    }
  }
  return m;
}

}  // namespace

bool exact_path_available(const WeightParams& p) {
  return remainder_is_constant(p.h1, p.a, Rational(0)) && remainder_is_constant(p.h2, Rational(0), Rational(1));
}

std::vector<Real> moments(int j, unsigned count, const WeightParams& p) {
  validate(p);
  const AnalyticFactor& h = j == 1 ? p.h1 : p.h2;
  if (remainder_is_constant(h, lo_of(j, p), hi_of(j, p))) return moments_closed_form(j, count, p);
  // Smooth remainder absorbed node-wise; refine the rule until all moments settle.
  auto [el, eh] = jacobi_exponents(j, p);
  auto [lo, hi] = interval(j, p);
  const unsigned digits = current_digits();
  const Real tol = pow(Real(10), -static_cast<int>(digits) + 2);
  // Order rounded up so neighbouring degrees share cached rules.
  unsigned m = (count / 2 + 31) / 32 * 32 + digits / 2 + 20;
  std::vector<Real> prev = moments_quadrature(j, count, p, gauss_jacobi_rule(lo, hi, to_real(el), to_real(eh), m));
  double achieved = 0;
  for (int iter = 0; iter < 8; ++iter) {
    m = m * 3 / 2 + 8;
    std::vector<Real> cur =
        moments_quadrature(j, count, p, gauss_jacobi_rule(lo, hi, to_real(el), to_real(eh), m));
    Real worst = 0;
    for (unsigned k = 0; k < count; ++k) {
      Real scale = abs(cur[k]);
      Real d = abs(cur[k] - prev[k]) / (scale == 0 ? Real(1) : scale);
      worst = std::max(worst, d);
    }
    if (worst <= tol) return cur;
    achieved = worst == 0 ? digits : -static_cast<double>(log10(worst));
    prev = std::move(cur);
  }
  throw AccuracyError("modified moments did not converge", achieved);
}

Real modified_moment(int j, unsigned k, const WeightParams& p, unsigned digits) {
  if (j != 1 && j != 2) throw DomainError("interval index must be 1 or 2");
  PrecisionGuard guard(digits);
  return moments(j, k + 1, p)[k];
}

namespace {

// Gaussian elimination with partial pivoting on a dense system A x = b.
template <class T>
std::vector<T> dense_solve(std::vector<std::vector<T>> A, std::vector<T> b, bool exact) {
  const std::size_t N = b.size();
  for (std::size_t c = 0; c < N; ++c) {
    std::size_t piv = c;
    if (exact) {
      while (piv < N && A[piv][c] == 0) ++piv;
    } else {
      for (std::size_t r = c + 1; r < N; ++r)
        if (abs(A[r][c]) > abs(A[piv][c])) piv = r;
    }
    if (piv == N || A[piv][c] == 0) throw ConditioningError("moment system is singular", 1e9);
    std::swap(A[piv], A[c]);
    std::swap(b[piv], b[c]);
    for (std::size_t r = c + 1; r < N; ++r) {
      if (A[r][c] == 0) continue;
      T f = A[r][c] / A[c][c];
      for (std::size_t k = c; k < N; ++k) A[r][k] -= f * A[c][k];
      b[r] -= f * b[c];
    }
  }
  std::vector<T> x(N);
  for (std::size_t i = N; i-- > 0;) {
    T s = b[i];
    for (std::size_t k = i + 1; k < N; ++k) s -= A[i][k] * x[k];
    x[i] = s / A[i][i];
  }
  return x;
}

template <class T>
void build_system(const MultiIndex& idx, const std::vector<T>& m1, const std::vector<T>& m2,
                  std::vector<std::vector<T>>& A, std::vector<T>& b) {
  const unsigned N = idx.degree();
  A.assign(N, std::vector<T>(N, T(0)));
  b.assign(N, T(0));
  unsigned row = 0;
  for (int j = 1; j <= 2; ++j) {
    const auto& m = j == 1 ? m1 : m2;
    const unsigned nj = j == 1 ? idx.n1 : idx.n2;
    for (unsigned k = 0; k < nj; ++k, ++row) {
      for (unsigned i = 0; i < N; ++i) A[row][i] = m[k + i];
      b[row] = -m[k + N];
    }
  }
}

// Rows scaled by their largest entry so pivoting compares like with like.
void equilibrate(std::vector<std::vector<Real>>& A, std::vector<Real>& b) {
  for (std::size_t r = 0; r < A.size(); ++r) {
    Real s = abs(b[r]);
    for (const auto& v : A[r]) s = std::max(s, Real(abs(v)));
    if (s == 0) continue;
    for (auto& v : A[r]) v /= s;
    b[r] /= s;
  }
}

double orthogonality_residual(const MultiIndex& idx, const std::vector<Real>& c, const std::vector<Real>& m1,
                              const std::vector<Real>& m2) {
  const unsigned N = idx.degree();
  Real worst = 0;
  for (int j = 1; j <= 2; ++j) {
    const auto& m = j == 1 ? m1 : m2;
    const unsigned nj = j == 1 ? idx.n1 : idx.n2;
    for (unsigned k = 0; k < nj; ++k) {
      Real s = m[k + N], sa = abs(m[k + N]);
      for (unsigned i = 0; i < N; ++i) {
        s += c[i] * m[k + i];
        sa += abs(c[i] * m[k + i]);
      }
      if (sa > 0) worst = std::max(worst, Real(abs(s) / sa));
    }
  }
  return static_cast<double>(worst);
}

double normwise_agreement(const std::vector<Real>& x, const std::vector<Real>& y, unsigned cap) {
  Real scale = 0, diff = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    scale = std::max(scale, Real(abs(y[i])));
    diff = std::max(diff, Real(abs(x[i] - y[i])));
  }
  if (diff == 0 || scale == 0) return cap;
  return std::min(static_cast<double>(cap), -static_cast<double>(log10(diff / scale)));
}

}  // namespace

Polynomial solve_mop(const MultiIndex& idx, const WeightParams& p, unsigned digits) {
  validate(p);
  digits = std::max(digits, 30u);
  const unsigned N = idx.degree();
  Polynomial P;
  P.index = idx;
  P.digits = digits;
  if (N == 0) {
    PrecisionGuard guard(digits);
    P.coeffs = {Real(1)};
    P.exact = std::vector<Rational>{Rational(1)};
    P.accurate_digits = digits;
    return P;
  }
  const unsigned count = N + std::max(idx.n1, idx.n2);
  if (exact_path_available(p)) {
    std::vector<Rational> m1 = normalized_moments_exact(1, count, p), m2 = normalized_moments_exact(2, count, p);
    std::vector<std::vector<Rational>> A;
    std::vector<Rational> b;
    build_system(idx, m1, m2, A, b);
    std::vector<Rational> c = dense_solve(A, b, true);
    c.push_back(Rational(1));
    PrecisionGuard guard(digits);
    P.coeffs.reserve(c.size());
    for (const auto& q : c) P.coeffs.push_back(to_real(q));
    // Exact arithmetic: the defining conditions hold identically.
    for (int j = 1; j <= 2; ++j) {
      const auto& m = j == 1 ? m1 : m2;
      for (unsigned k = 0; k < (j == 1 ? idx.n1 : idx.n2); ++k) {
        Rational s = 0;
        for (unsigned i = 0; i <= N; ++i) s += c[i] * m[k + i];
        if (s != 0) throw InvariantError("exact moment system residual is nonzero");
      }
    }
    P.exact = std::move(c);
    P.accurate_digits = digits;
    P.orthogonality_residual = 0;
    return P;
  }

  // Numeric path: solve at digits and at digits+20; the difference measures
  // how many digits the moment matrix destroyed.
  const unsigned hi_digits = digits + 20;
  std::vector<Real> c_hi, m1h, m2h;
  {
    PrecisionGuard guard(hi_digits);
    m1h = moments(1, count, p);
    m2h = moments(2, count, p);
    std::vector<std::vector<Real>> A;
    std::vector<Real> b;
    build_system(idx, m1h, m2h, A, b);
    equilibrate(A, b);
    c_hi = dense_solve(A, b, false);
  }
  std::vector<Real> c_lo;
  {
    PrecisionGuard guard(digits);
    // The same system rounded to the working precision.
    std::vector<Real> m1, m2;
    for (const auto& v : m1h) m1.push_back(rounded(v));
    for (const auto& v : m2h) m2.push_back(rounded(v));
    std::vector<std::vector<Real>> A;
    std::vector<Real> b;
    build_system(idx, m1, m2, A, b);
    equilibrate(A, b);
    c_lo = dense_solve(A, b, false);
  }
  PrecisionGuard guard(hi_digits);
  P.accurate_digits = normwise_agreement(c_lo, c_hi, digits);
  P.orthogonality_residual = orthogonality_residual(idx, c_hi, m1h, m2h);
  const double loss = static_cast<double>(digits) - P.accurate_digits;
  if (P.accurate_digits < 10)
    throw ConditioningError("moment system lost " + std::to_string(static_cast<int>(loss)) + " digits", loss);
  if (P.orthogonality_residual > std::pow(10.0, -static_cast<double>(digits - kMopGuardDigits)) &&
      P.orthogonality_residual > 0)
    throw ConditioningError("orthogonality residual above tolerance", loss);
  PrecisionGuard out_guard(digits);
  for (auto& v : c_hi) P.coeffs.push_back(rounded(v));
  P.coeffs.push_back(Real(1));
  return P;
}

bool is_jacobi_angelesco(const WeightParams& p) {
  auto single = [](const AnalyticFactor& h, const Rational& root, const Rational& power) {
    if (h.kind == AnalyticFactor::Kind::Constant) return power == 0;
    if (h.kind != AnalyticFactor::Kind::Power) return false;
    Rational total = 0;
    for (const auto& t : h.terms) {
      if (t.power == 0) continue;
      if (t.root != root) return false;
      total += t.power;
    }
    return total == power;
  };
  return single(p.h1, Rational(1), p.gamma) && single(p.h2, p.a, p.alpha);
}

Rational gbinom(const Rational& x, unsigned k) {
  Rational v = 1;
  for (unsigned i = 0; i < k; ++i) v = v * (x - Rational(i)) / Rational(i + 1);
  return v;
}

Real gbinom(const Real& x, unsigned k) {
  Real v = 1;
  for (unsigned i = 0; i < k; ++i) v = v * (x - i) / (i + 1);
  return v;
}

namespace {

template <class T>
std::vector<T> binomial_row(const T& x, unsigned n) {
  std::vector<T> r(n + 1);
  r[0] = T(1);
  for (unsigned k = 0; k < n; ++k) r[k + 1] = r[k] * (x - T(k)) / T(k + 1);
  return r;
}

}  // namespace

Complex classical_pnn(unsigned n, const Real& alpha, const Real& beta, const Real& gamma, const Real& a,
                      const Complex& z, unsigned digits) {
  PrecisionGuard guard(digits);
  const Real nn = n;
  std::vector<Real> A = binomial_row(Real(nn + alpha), n), B = binomial_row(Real(nn + beta), n),
                    G = binomial_row(Real(nn + gamma), n);
  std::vector<Complex> pa(n + 1), pz(n + 1), p1(2 * n + 1);
  pa[0] = pz[0] = p1[0] = Complex(1);
  const Complex za = z - Complex(a), z1 = z - Complex(1);
  for (unsigned m = 1; m <= n; ++m) {
    pa[m] = pa[m - 1] * za;
    pz[m] = pz[m - 1] * z;
  }
  for (unsigned m = 1; m <= 2 * n; ++m) p1[m] = p1[m - 1] * z1;
  Complex total(0);
  for (unsigned k = 0; k <= n; ++k) {
    Complex inner(0);
    for (unsigned j = 0; j + k <= n; ++j) inner += Complex(B[j] * G[n - k - j]) * pz[n - j] * p1[k + j];
    total += Complex(A[k]) * pa[n - k] * inner;
  }
  return total / Complex(gbinom(Real(3 * nn + alpha + beta + gamma), n));
}

Rational classical_pnn_exact(unsigned n, const Rational& alpha, const Rational& beta, const Rational& gamma,
                             const Rational& a, const Rational& z) {
  std::vector<Rational> A = binomial_row(Rational(Rational(n) + alpha), n),
                        B = binomial_row(Rational(Rational(n) + beta), n),
                        G = binomial_row(Rational(Rational(n) + gamma), n);
  Rational total = 0;
  for (unsigned k = 0; k <= n; ++k)
    for (unsigned j = 0; j + k <= n; ++j) {
      Rational t = A[k] * B[j] * G[n - k - j];
      if (t == 0) continue;
      t *= qpow(Rational(z - a), n - k) * qpow(z, n - j) *
           qpow(Rational(z - 1), k + j);
      total += t;
    }
  return total / gbinom(Rational(Rational(3 * n) + alpha + beta + gamma), n);
}

std::vector<Rational> classical_pnn_coeffs(unsigned n, const Rational& alpha, const Rational& beta,
                                           const Rational& gamma, const Rational& a) {
  std::vector<Rational> A = binomial_row(Rational(Rational(n) + alpha), n),
                        B = binomial_row(Rational(Rational(n) + beta), n),
                        G = binomial_row(Rational(Rational(n) + gamma), n);
  // (x - c)^m coefficient tables.
  auto powers = [](const Rational& c, unsigned top) {
    std::vector<std::vector<Rational>> t(top + 1);
    t[0] = {Rational(1)};
    for (unsigned m = 1; m <= top; ++m) {
      t[m].assign(m + 1, Rational(0));
      for (unsigned i = 0; i < m; ++i) {
        t[m][i + 1] += t[m - 1][i];
        t[m][i] -= c * t[m - 1][i];
      }
    }
    return t;
  };
  auto pa = powers(a, n), p1 = powers(Rational(1), 2 * n);
  std::vector<Rational> out(2 * n + 1, Rational(0));
  for (unsigned k = 0; k <= n; ++k)
    for (unsigned j = 0; j + k <= n; ++j) {
      Rational t = A[k] * B[j] * G[n - k - j];
      if (t == 0) continue;
      const auto& u = pa[n - k];
      const auto& v = p1[k + j];
      const unsigned shift = n - j;
      for (unsigned i = 0; i < u.size(); ++i) {
        if (u[i] == 0) continue;
        Rational tu = t * u[i];
        for (unsigned l = 0; l < v.size(); ++l) out[i + l + shift] += tu * v[l];
      }
    }
  const Rational denom = gbinom(Rational(Rational(3 * n) + alpha + beta + gamma), n);
  for (auto& c : out) c /= denom;
  return out;
}

Rational classical_pnn_at_zero(unsigned n, const Rational& alpha, const Rational& beta, const Rational& gamma,
                               const Rational& a) {
  return gbinom(Rational(Rational(n) + beta), n) * qpow(a, n) /
         gbinom(Rational(Rational(3 * n) + alpha + beta + gamma), n);
}

ZeroSet poly_zeros(const Polynomial& P, const WeightParams& p) {
  validate(p);
  ZeroSet out;
  const unsigned deg = P.degree();
  if (deg == 0) return out;
  PrecisionGuard guard(std::max(P.digits, 30u));
  const unsigned M = std::max(16u, 8u * deg * deg);
  const Real tol = pow(Real(10), -static_cast<int>(current_digits()) + 4);
  for (int j = 1; j <= 2; ++j) {
    auto [lo, hi] = interval(j, p);
    auto& zeros = j == 1 ? out.left : out.right;
    const Real pi_ = pi();
    auto grid = [&](unsigned i) { return lo + (hi - lo) * (1 - cos(pi_ * i / M)) / 2; };
    Real xl = grid(1), fl = P(xl);
    for (unsigned i = 2; i < M; ++i) {
      Real xr = grid(i), fr = P(xr);
      if (fl == 0) {
        zeros.push_back(xl);
      } else if ((fl < 0) != (fr < 0) && fr != 0) {
        Real a = xl, b = xr, fa = fl;
        while (b - a > tol * (1 + abs(a))) {
          Real m = (a + b) / 2, fm = P(m);
          if (fm == 0) {
            a = b = m;
            break;
          }
          if ((fm < 0) == (fa < 0)) {
            a = m;
            fa = fm;
          } else {
            b = m;
          }
        }
        zeros.push_back((a + b) / 2);
      }
      xl = xr;
      fl = fr;
    }
  }
  if (out.left.size() != P.index.n1 || out.right.size() != P.index.n2)
    throw InvariantError("poly_zeros: found " + std::to_string(out.left.size()) + "+" +
                         std::to_string(out.right.size()) + " zeros, expected " + std::to_string(P.index.n1) + "+" +
                         std::to_string(P.index.n2));
  return out;
}

ScaledValue eval_scaled(const Complex& z_in, const ScalingParams& s, const WeightParams& p_base, unsigned digits) {
  validate(p_base);
  const unsigned n = static_cast<unsigned>(s.n);
  ScaledValue out;
  if (is_jacobi_angelesco(p_base)) {
    const unsigned D = std::max(digits, 2 * n + 100);
    // z = 0 with rational a_n (tau = 0): exact rational value.
    if (z_in.real() == 0 && z_in.imag() == 0 && s.tau == 0) {
      Rational v = classical_pnn_at_zero(n, p_base.alpha, p_base.beta, p_base.gamma, Rational(-1));
      PrecisionGuard guard(D);
      out.value = Complex(to_real(v));
      out.digits = D;
      out.exact = true;
      return out;
    }
    // z = 0, irrational a_n: the closed form times a_n^n.
    if (z_in.real() == 0 && z_in.imag() == 0) {
      Rational v = classical_pnn_at_zero(n, p_base.alpha, p_base.beta, p_base.gamma, Rational(1));
      PrecisionGuard guard(D);
      out.value = Complex(to_real(v) * pow(a_n(s), Real(n)));
      out.digits = D;
      return out;
    }
    auto compute = [&](unsigned d) {
      PrecisionGuard guard(d);
      const Real a = a_n(s);
      const Complex z = rounded(z_in) /
                        Complex(sqrt(Real(2)) * pow(Real(n), Real(3) / 2));
      return classical_pnn(n, to_real(p_base.alpha), to_real(p_base.beta), to_real(p_base.gamma), a, z, d);
    };
    Complex v1 = compute(D), v2 = compute(D + 30);
    PrecisionGuard guard(D + 30);
    out.self_check = static_cast<double>(abs(v1 - v2) / abs(v2));
    if (!(out.self_check <= 1e-30)) throw AccuracyError("eval_scaled: self-check failed", -std::log10(out.self_check));
    out.value = v1;
    out.digits = D;
    return out;
  }
  // General weights: moment solve with a replaced by a rational a_n.
  auto compute = [&](unsigned d) {
    PrecisionGuard guard(d + 10);
    WeightParams q = p_base;
    q.a = to_rational(a_n(s));
    Polynomial P = solve_mop({n, n}, q, d);
    PrecisionGuard g2(d);
    const Complex z = rounded(z_in) /
                      Complex(sqrt(Real(2)) * pow(Real(n), Real(3) / 2));
    return P(z);
  };
  const unsigned D = std::max(digits, mop_default_digits(n));
  Complex v1 = compute(D), v2 = compute(D + 30);
  PrecisionGuard guard(D + 30);
  out.self_check = static_cast<double>(abs(v1 - v2) / abs(v2));
  if (!(out.self_check <= 1e-30)) throw AccuracyError("eval_scaled: self-check failed", -std::log10(out.self_check));
  out.value = v1;
  out.digits = D;
  return out;
}

nlohmann::json to_json(const Polynomial& P, unsigned digits) {
  nlohmann::json j;
  j["index"] = {P.index.n1, P.index.n2};
  j["digits"] = digits;
  nlohmann::json c = nlohmann::json::array();
  for (const auto& v : P.coeffs) c.push_back(to_decimal(v, digits));
  j["coeffs"] = c;
  return j;
}

}  // namespace angelesco
