#pragma once

// Model Riemann-Hilbert problem: the contour integrals
//   q_j(z) = int_{Gamma_j} t^{-beta-3} exp(tau/t - 1/(2t^2) + z t) dt,
// arg t in (0, 2 pi), the sectorwise matrix Psi(z; tau), and the entire
// function Q(z; tau) = i int_{Gamma_0} t^{-beta-1} exp(-z^2/(2t^2) + tau z/t + t) dt.

#include "angelesco/errors.hpp"
#include "angelesco/precision.hpp"

#include <array>
#include <string>
#include <vector>

namespace angelesco {

using Mat3 = std::array<std::array<Complex, 3>, 3>;

Mat3 mat_identity();
Mat3 mat_mul(const Mat3& A, const Mat3& B);
Mat3 mat_sub(const Mat3& A, const Mat3& B);
Mat3 mat_inverse(const Mat3& A);
Complex mat_det(const Mat3& A);
Real mat_max_norm(const Mat3& A);
Mat3 mat_diag(const Complex& a, const Complex& b, const Complex& c);

/// Shape of the integration contours. radius_scale multiplies the inner
/// radius (min(1, |z|^{-1/3}) for q_j, max(1, |z|^{1/2}) for Q); tail_scale
/// multiplies the truncation length; nodes is the Gauss-Legendre panel size.
struct ContourSpec {
  double radius_scale = 1.0;
  double tail_scale = 1.0;
  unsigned nodes = 20;

  /// A second, genuinely different contour used for invariance checks.
  static ContourSpec alternate() { return ContourSpec{1.7, 1.5, 24}; }
};

inline constexpr unsigned kModelDefaultDigits = 50;

/// q_j^{(d)}(z) for d = 0..3. For z on the negative axis side = +1 takes
/// arg z = pi, side = -1 takes arg z = -pi; side = 0 there throws BranchError.
std::array<Complex, 4> q_derivs(int j, const Complex& z, const Real& tau, const Real& beta,
                                const ContourSpec& spec = {}, unsigned digits = kModelDefaultDigits, int side = 0);
Complex q_j(int j, const Complex& z, const Real& tau, const Real& beta, unsigned deriv,
            const ContourSpec& spec = {}, unsigned digits = kModelDefaultDigits, int side = 0);

/// Sector 1, 2, 3 (upper half plane, split at pi/4 and 3pi/4) or -1, -2, -3.
/// Throws BranchError within 1e-8 radians of a ray.
int sector_of(const Complex& z);

/// Psi with the combination of the named sector (one-sided limits on rays).
Mat3 psi_sector(const Complex& z, const Real& tau, const Real& beta, int sector, const ContourSpec& spec = {},
                unsigned digits = kModelDefaultDigits, int side = 0);
Mat3 psi(const Complex& z, const Real& tau, const Real& beta, unsigned digits = kModelDefaultDigits,
         const ContourSpec& spec = {});

/// -(3/2) w^k z^{2/3} - tau w^{2k} z^{1/3}, principal powers.
Complex theta_k(int k, const Complex& z, const Real& tau);

struct ModelMatrices {
  Complex omega;
  Mat3 OmegaPlus, OmegaMinus, BPlus, BMinus, Psi1Plus, Psi1Minus;
  static ModelMatrices build(const Real& tau, const Real& beta);
};

/// Diagonal of Theta: (theta1, theta3, theta2) for Im z > 0 and
/// (theta2, theta3, theta1) for Im z < 0.
std::array<Complex, 3> Theta(const Complex& z, const Real& tau);

struct RayJump {
  std::string name;
  double angle;        ///< arg of the ray (pi for the negative axis)
  int plus_sector;     ///< sector on the + (left) side
  int minus_sector;
  Mat3 J;              ///< Psi_+ = Psi_- J
};
std::vector<RayJump> jump_table(const Real& beta);

/// Relative residual |Psi_+ - Psi_- J| / |Psi_+| at |z| = radius on the ray.
Real jump_residual(const RayJump& ray, const Real& radius, const Real& tau, const Real& beta,
                   unsigned digits = kModelDefaultDigits);
/// q(arg z = pi) = M q(arg z = -pi) on the negative axis, relative residual
/// over all q_j and derivatives 0..2.
Real monodromy_residual(const Real& x_negative, const Real& tau, const Real& beta,
                        unsigned digits = kModelDefaultDigits);
/// |z q''' - beta q'' - tau q' + q| relative to the sum of term magnitudes.
Real q_ode_residual(int j, const Complex& z, const Real& tau, const Real& beta, unsigned digits = kModelDefaultDigits);

struct AsymptoticRemainder {
  Real norm;            ///< max-norm of R(z)
  Real self_check;      ///< |R(digits) - R(digits+20)|
  unsigned digits;
};
/// R = [pref D Omega (I + order Psi1 z^{-1/3})]^{-1} Psi e^{-Theta} B^{-1} - I
/// with pref = sqrt(2pi/3) e^{tau^2/6} z^{beta/3}, D = diag(z^{1/3}, 1, z^{-1/3}).
AsymptoticRemainder psi_asymptotic_check(const Complex& z, const Real& tau, const Real& beta, int order,
                                         unsigned digits = 0);
/// Both orders at once (index = order); the Psi evaluation is shared.
std::array<AsymptoticRemainder, 2> psi_asymptotic_remainders(const Complex& z, const Real& tau, const Real& beta,
                                                             unsigned digits = 0);

struct QValue {
  Complex z;
  Real tau, beta;
  Complex value;
  std::string method;  ///< "contour" or "series"
};

/// Q and its first three z-derivatives by differentiating under the integral.
std::array<Complex, 4> Q_derivs(const Complex& z, const Real& tau, const Real& beta, const ContourSpec& spec = {},
                                unsigned digits = kModelDefaultDigits);
QValue Q_eval(const Complex& z, const Real& tau, const Real& beta, const ContourSpec& spec = {},
              unsigned digits = kModelDefaultDigits);
/// (2pi/Gamma(beta+1)) sum (-z^2/8)^k / (((beta+1)/2)_k ((beta+2)/2)_k k!).
/// Throws AccuracyError if nterms cannot reach the precision.
QValue Q_series_tau0(const Complex& z, const Real& beta, unsigned nterms = 2000,
                     unsigned digits = kModelDefaultDigits);
/// |i z^{-beta} (e^{2 beta pi i} q1'' + q2'') - Q| / |Q|, Re z > 0.
Real Q_relation_check(const Complex& z, const Real& tau, const Real& beta, unsigned digits = kModelDefaultDigits);
/// z^2 Q''' + 2(beta+1) z Q'' + (beta^2+beta-tau z) Q' + (z - tau beta) Q, relative.
Real Q_ode_residual(const Complex& z, const Real& tau, const Real& beta, unsigned digits = kModelDefaultDigits);

struct CheckEntry {
  std::string check;
  double beta, tau;
  unsigned points;
  Real max_residual;
  double tolerance;
  bool pass;
};

/// Jump, monodromy, ODE and Q checks for one (beta, tau) cell.
std::vector<CheckEntry> model_check_suite(const Real& beta, const Real& tau, unsigned digits = kModelDefaultDigits);

}  // namespace angelesco
