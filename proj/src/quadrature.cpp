#include "angelesco/quadrature.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <map>
#include <mutex>

namespace angelesco::quad {

namespace {

// Monic three-term recurrence coefficients of the Jacobi weight
// (1-x)^alpha (1+x)^beta on [-1,1].
template <class T>
void jacobi_recurrence(const T& alpha, const T& beta, unsigned m, std::vector<T>& a, std::vector<T>& b) {
  a.assign(m, T(0));
  b.assign(m, T(0));
  const T ab = alpha + beta;
  for (unsigned k = 0; k < m; ++k) {
    const T kk = T(k);
    const T s = 2 * kk + ab;
    if (k == 0) {
      a[0] = (beta - alpha) / (ab + 2);
    } else {
      a[k] = (beta * beta - alpha * alpha) / (s * (s + 2));
    }
    if (k == 1) {
      b[1] = 4 * (1 + alpha) * (1 + beta) / ((2 + ab) * (2 + ab) * (3 + ab));
    } else if (k > 1) {
      b[k] = 4 * kk * (kk + alpha) * (kk + beta) * (kk + ab) / (s * s * (s + 1) * (s - 1));
    }
  }
}

// Nodes in double precision from the symmetric tridiagonal Jacobi matrix.
std::vector<double> golub_welsch_nodes(double alpha, double beta, unsigned m) {
  std::vector<double> a, b;
  jacobi_recurrence<double>(alpha, beta, m, a, b);
  Eigen::VectorXd diag(m), sub(m > 1 ? m - 1 : 1);
  for (unsigned k = 0; k < m; ++k) diag(k) = a[k];
  for (unsigned k = 1; k < m; ++k) sub(k - 1) = std::sqrt(b[k]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  if (m == 1) return {a[0]};
  es.computeFromTridiagonal(diag, sub.head(m - 1), Eigen::EigenvaluesOnly);
  std::vector<double> x(es.eigenvalues().data(), es.eigenvalues().data() + m);
  std::sort(x.begin(), x.end());
  return x;
}

}  // namespace

Real beta_function(const Real& x, const Real& y) {
  if (x > 0 && y > 0) return exp(lgamma(x) + lgamma(y) - lgamma(x + y));
  return tgamma(x) * tgamma(y) / tgamma(x + y);
}

Real jacobi_mass(const Real& alpha, const Real& beta) {
  return pow(Real(2), alpha + beta + 1) * beta_function(alpha + 1, beta + 1);
}

Rule gauss_jacobi_reference(const Real& alpha, const Real& beta, unsigned m) {
  if (alpha <= -1 || beta <= -1) throw ValidationError("gauss_jacobi: exponents must exceed -1");
  if (m == 0) throw ValidationError("gauss_jacobi: need at least one node");
  std::vector<Real> a, b;
  jacobi_recurrence<Real>(alpha, beta, m, a, b);
  const std::vector<double> guess =
      golub_welsch_nodes(static_cast<double>(alpha), static_cast<double>(beta), m);
  const Real mu0 = jacobi_mass(alpha, beta);
  const Real tiny = pow(Real(10), -static_cast<int>(current_digits()) + 3);

  // Norms ||pi_k||^2 = mu0 b_1 ... b_k.
  std::vector<Real> norms(m);
  norms[0] = mu0;
  for (unsigned k = 1; k < m; ++k) norms[k] = norms[k - 1] * b[k];

  Rule rule;
  rule.nodes.resize(m);
  rule.weights.resize(m);
  for (unsigned i = 0; i < m; ++i) {
    Real x = guess[i];
    for (int it = 0; it < 60; ++it) {
      // pi_m and its derivative by the recurrence.
      Real p0 = 1, p1 = x - a[0], d0 = 0, d1 = 1;
      if (m == 1) {
        p1 = x - a[0];
      }
      for (unsigned k = 1; k < m; ++k) {
        Real p2 = (x - a[k]) * p1 - b[k] * p0;
        Real d2 = p1 + (x - a[k]) * d1 - b[k] * d0;
        p0 = p1;
        p1 = p2;
        d0 = d1;
        d1 = d2;
      }
      Real dx = p1 / d1;
      x -= dx;
      if (abs(dx) <= tiny * (1 + abs(x))) break;
    }
    // Christoffel weight 1 / sum_k pi_k(x)^2 / ||pi_k||^2.
    Real s = 0, p0 = 0, p1 = 1;
    for (unsigned k = 0; k < m; ++k) {
      s += p1 * p1 / norms[k];
      Real p2 = (x - a[k]) * p1 - (k > 0 ? b[k] * p0 : Real(0));
      p0 = p1;
      p1 = p2;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 1 / s;
  }
  return rule;
}

const Rule& gauss_legendre(unsigned m) {
  static std::mutex mu;
  static std::map<std::pair<unsigned, unsigned>, Rule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(m, current_digits());
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  return cache.emplace(key, gauss_jacobi_reference(Real(0), Real(0), m)).first->second;
}

PanelResult integrate_panels(const VectorIntegrand& f, std::size_t K, const std::vector<Real>& breaks,
                             const Real& eps, unsigned nodes, unsigned max_depth) {
  const Rule& gl = gauss_legendre(nodes);
  std::vector<Complex> buf(K);

  struct Panel {
    Real lo, hi;
    std::vector<Complex> val;
    std::vector<Real> absval;
    unsigned depth;
  };

  auto eval = [&](const Real& lo, const Real& hi) {
    Panel p{lo, hi, std::vector<Complex>(K, Complex(0)), std::vector<Real>(K, Real(0)), 0};
    const Real half = (hi - lo) / 2, mid = (hi + lo) / 2;
    for (unsigned i = 0; i < nodes; ++i) {
      const Real s = mid + half * gl.nodes[i];
      f(s, buf);
      const Real w = gl.weights[i] * half;
      for (std::size_t k = 0; k < K; ++k) {
        p.val[k] += buf[k] * Complex(w);
        p.absval[k] += abs(buf[k]) * w;
      }
    }
    return p;
  };

  std::vector<Panel> work;
  std::vector<Real> total_abs(K, Real(0));
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (breaks[i + 1] == breaks[i]) continue;
    work.push_back(eval(breaks[i], breaks[i + 1]));
    for (std::size_t k = 0; k < K; ++k) total_abs[k] += work.back().absval[k];
  }

  PanelResult out;
  out.values.assign(K, Complex(0));
  // Depth-first refinement; the stack keeps summation order deterministic.
  std::vector<Panel> stack(work.rbegin(), work.rend());
  while (!stack.empty()) {
    Panel p = std::move(stack.back());
    stack.pop_back();
    const Real mid = (p.lo + p.hi) / 2;
    Panel l = eval(p.lo, mid), r = eval(mid, p.hi);
    l.depth = r.depth = p.depth + 1;
    // Each component is judged against its own absolute integral.
    bool ok = true;
    for (std::size_t k = 0; k < K && ok; ++k) {
      const Real err = abs(l.val[k] + r.val[k] - p.val[k]);
      const Real scale = std::max(total_abs[k], Real(l.absval[k] + r.absval[k]));
      if (err > eps * scale) ok = false;
    }
    if (ok || p.depth >= max_depth) {
      if (!ok) out.converged = false;
      for (std::size_t k = 0; k < K; ++k) out.values[k] += l.val[k] + r.val[k];
      out.abs_integral += l.absval[0] + r.absval[0];
      out.panels += 2;
    } else {
      stack.push_back(std::move(r));
      stack.push_back(std::move(l));
    }
  }
  return out;
}

}  // namespace angelesco::quad
