#include "angelesco/precision.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace angelesco {

unsigned current_digits() { return Real::default_precision(); }

PrecisionGuard::PrecisionGuard(unsigned digits) : saved_(Real::default_precision()) {
  Real::default_precision(std::max(digits, 16u));
}

PrecisionGuard::~PrecisionGuard() { Real::default_precision(saved_); }

unsigned default_digits_from_env(unsigned fallback) {
  if (const char* env = std::getenv("ANGELESCO_DIGITS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 16 && v <= 100000) return static_cast<unsigned>(v);
  }
  return fallback;
}

Real pi() {
  Real r;
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

Real ln2() {
  Real r;
  mpfr_const_log2(r.backend().data(), MPFR_RNDN);
  return r;
}

Real euler_gamma() {
  Real r;
  mpfr_const_euler(r.backend().data(), MPFR_RNDN);
  return r;
}

Complex imag_unit() { return Complex(Real(0), Real(1)); }

Complex expi(const Real& theta) { return Complex(cos(theta), sin(theta)); }

Complex omega() { return expi(2 * pi() / 3); }

Complex make_complex(const Real& re, const Real& im) { return Complex(re, im); }

Complex to_complex(std::complex<double> z) { return Complex(Real(z.real()), Real(z.imag())); }

std::complex<double> to_std(const Complex& z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

Real to_real(const Rational& q) {
  Real num(boost::multiprecision::numerator(q));
  Real den(boost::multiprecision::denominator(q));
  return num / den;
}

Rational to_rational(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("to_rational: non-finite value");
  int exp = 0;
  double mant = std::frexp(x, &exp);
  // 53-bit mantissa scaled to an integer.
  auto m = static_cast<long long>(std::ldexp(mant, 53));
  exp -= 53;
  Rational q(m);
  Integer p2 = 1;
  p2 <<= std::abs(exp);
  if (exp >= 0) q *= Rational(p2);
  else q /= Rational(p2);
  return q;
}

Rational to_rational(const Real& x) {
  if (x == 0) return Rational(0);
  // x = mant * 2^exp with an integral mantissa carrying the full precision.
  mpz_t mant;
  mpz_init(mant);
  mpfr_exp_t e = mpfr_get_z_2exp(mant, x.backend().data());
  Integer m(mant);
  mpz_clear(mant);
  Rational q(m);
  Integer p2 = 1;
  p2 <<= static_cast<unsigned long>(std::abs(static_cast<long>(e)));
  if (e >= 0) q *= Rational(p2);
  else q /= Rational(p2);
  return q;
}

Rational parse_rational(const std::string& text) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }),
          s.end());
  if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
  // Accept "p/q" fractions as well as decimal literals.
  if (auto slash = s.find('/'); slash != std::string::npos) {
    Rational num = parse_rational(s.substr(0, slash));
    Rational den = parse_rational(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("parse_rational: zero denominator");
    return num / den;
  }
  std::size_t pos = 0;
  bool neg = false;
  if (s[pos] == '+' || s[pos] == '-') neg = s[pos++] == '-';
  std::string digits;
  long scale = 0;
  bool seen_dot = false, any = false;
  for (; pos < s.size(); ++pos) {
    char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      any = true;
      if (seen_dot) ++scale;
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else {
      break;
    }
  }
  if (!any) throw std::invalid_argument("parse_rational: not a number: " + text);
  long exp10 = 0;
  if (pos < s.size()) {
    if (s[pos] != 'e' && s[pos] != 'E') throw std::invalid_argument("parse_rational: not a number: " + text);
    ++pos;
    std::size_t used = 0;
    try {
      exp10 = std::stol(s.substr(pos), &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("parse_rational: bad exponent: " + text);
    }
    if (pos + used != s.size()) throw std::invalid_argument("parse_rational: trailing characters: " + text);
  }
  // A leading 0 would make the integer parser read octal.
  const auto nz = digits.find_first_not_of('0');
  Integer mant(nz == std::string::npos ? std::string("0") : digits.substr(nz));
  long p = exp10 - scale;
  Integer ten = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(std::abs(p)));
  Rational q = p >= 0 ? Rational(mant * ten) : Rational(mant, ten);
  return neg ? Rational(-q) : q;
}

Complex cpow(const Complex& z, const Real& p) {
  if (z.real() == 0 && z.imag() == 0) {
    if (p > 0) return Complex(0);
    throw std::domain_error("cpow: zero to a non-positive power");
  }
  return exp(Complex(p) * log(z));
}

Complex pow_with_arg(const Real& modulus, const Real& argument, const Complex& p) {
  Complex logt(log(modulus), argument);
  return exp(p * logt);
}

Real rounded(const Real& x) {
  Real r(x);
  r.precision(current_digits());
  return r;
}

Complex rounded(const Complex& z) { return Complex(rounded(z.real()), rounded(z.imag())); }

Real abs(const Complex& z) { return hypot(z.real(), z.imag()); }

Real arg(const Complex& z) { return atan2(z.imag(), z.real()); }

std::string to_decimal(const Real& x, unsigned digits) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(static_cast<int>(std::max(digits, 1u)) - 1) << x;
  return os.str();
}

std::string to_decimal(const Rational& q, unsigned digits) {
  PrecisionGuard guard(digits + 10);
  return to_decimal(to_real(q), digits);
}

Real parse_real(const std::string& text) {
  Rational q = parse_rational(text);
  return to_real(q);
}

double agreement_digits(const Complex& a, const Complex& b) {
  Real scale = std::max(abs(a), abs(b));
  Real diff = abs(a - b);
  double cap = static_cast<double>(current_digits());
  if (diff == 0) return cap;
  if (scale == 0) return 0.0;
  double d = -static_cast<double>(log10(diff / scale));
  return std::min(d, cap);
}

}  // namespace angelesco
