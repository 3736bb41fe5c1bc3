#pragma once

// Arbitrary-precision scalar types and the precision context shared by all
// modules. Every public entry point takes a digit count and installs a
// PrecisionGuard; internal code only ever allocates at the current default.

#include <boost/multiprecision/complex_adaptor.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <complex>
#include <string>

namespace angelesco {

// Expression templates are disabled so that `auto`, `?:` and generic code
// behave like ordinary value types.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;
using Complex = boost::multiprecision::number<
    boost::multiprecision::complex_adaptor<boost::multiprecision::mpfr_float_backend<0>>,
    boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;

/// Default working precision (significant decimal digits).
inline constexpr unsigned kDefaultDigits = 64;

/// Current default precision in decimal digits.
unsigned current_digits();

/// RAII scope that raises (or sets) the working precision and restores the
/// previous value on exit. The precision context is process-wide.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned digits);
  ~PrecisionGuard();
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

/// Digits from the ANGELESCO_DIGITS environment variable, or `fallback`.
unsigned default_digits_from_env(unsigned fallback = kDefaultDigits);

// Constants at the current precision.
Real pi();
Real ln2();
Real euler_gamma();
Complex imag_unit();
/// exp(i * theta)
Complex expi(const Real& theta);
/// exp(2 pi i / 3)
Complex omega();

Complex make_complex(const Real& re, const Real& im = Real(0));
Complex to_complex(std::complex<double> z);
std::complex<double> to_std(const Complex& z);
Real to_real(const Rational& q);
/// Exact rational value of a binary floating-point number.
Rational to_rational(double x);
/// Rational approximation of `x` accurate to its working precision.
Rational to_rational(const Real& x);
/// Exact parse of a decimal literal such as "-1.25e-3" into a rational.
Rational parse_rational(const std::string& text);

/// Principal branch power z^p with the cut on the negative axis.
Complex cpow(const Complex& z, const Real& p);
/// Power with an explicit argument: |z|^p exp(i p arg) for the given arg.
Complex pow_with_arg(const Real& modulus, const Real& arg, const Complex& p);

/// Copy of x rounded to the current working precision (copies otherwise keep
/// the precision of their source).
Real rounded(const Real& x);
Complex rounded(const Complex& z);

Real abs(const Complex& z);
Real arg(const Complex& z);

/// Decimal string with `digits` significant digits (scientific notation).
std::string to_decimal(const Real& x, unsigned digits);
std::string to_decimal(const Rational& q, unsigned digits);
Real parse_real(const std::string& text);

/// Decimal digits of relative agreement between a and b (capped at the
/// working precision).
double agreement_digits(const Complex& a, const Complex& b);

}  // namespace angelesco
