#include "angelesco/weights.hpp"

#include <sstream>

namespace angelesco {

AnalyticFactor AnalyticFactor::constant_factor(const Rational& c) {
  AnalyticFactor h;
  h.kind = Kind::Constant;
  h.constant = c;
  return h;
}

AnalyticFactor AnalyticFactor::power(const Rational& c, std::vector<PowerTerm> terms) {
  AnalyticFactor h;
  h.kind = Kind::Power;
  h.constant = c;
  h.terms = std::move(terms);
  return h;
}

AnalyticFactor AnalyticFactor::user(std::function<Complex(const Complex&)> f, double neighborhood) {
  AnalyticFactor h;
  h.kind = Kind::Callable;
  h.callable = std::move(f);
  h.neighborhood = neighborhood;
  return h;
}

bool AnalyticFactor::is_constant() const {
  if (kind == Kind::Constant) return true;
  if (kind == Kind::Power) {
    for (const auto& t : terms)
      if (t.power != 0) return false;
    return true;
  }
  return false;
}

std::string AnalyticFactor::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Constant:
      os << rational_to_string(constant);
      break;
    case Kind::Power:
      os << rational_to_string(constant);
      for (const auto& t : terms) os << "*|x-" << rational_to_string(t.root) << "|^" << rational_to_string(t.power);
      break;
    case Kind::Callable:
      os << "callable(half-width " << neighborhood << ")";
      break;
  }
  return os.str();
}

WeightParams WeightParams::jacobi_angelesco(const Rational& a, const Rational& alpha, const Rational& beta,
                                            const Rational& gamma) {
  WeightParams p;
  p.a = a;
  p.alpha = alpha;
  p.beta = beta;
  p.gamma = gamma;
  p.h1 = AnalyticFactor::power(Rational(1), {{Rational(1), gamma}});
  p.h2 = AnalyticFactor::power(Rational(1), {{a, alpha}});
  return p;
}

WeightParams WeightParams::plain(const Rational& a) {
  WeightParams p;
  p.a = a;
  return p;
}

std::pair<Real, Real> interval(int j, const WeightParams& p) {
  if (j == 1) return {to_real(p.a), Real(0)};
  if (j == 2) return {Real(0), Real(1)};
  throw DomainError("interval index must be 1 or 2");
}

namespace {

void validate_factor(const AnalyticFactor& h, const Rational& lo, const Rational& hi, const char* name) {
  switch (h.kind) {
    case AnalyticFactor::Kind::Constant:
      if (h.constant <= 0) throw ValidationError(std::string(name) + ": constant factor must be positive");
      break;
    case AnalyticFactor::Kind::Power:
      if (h.constant <= 0) throw ValidationError(std::string(name) + ": prefactor must be positive");
      for (const auto& t : h.terms)
        if (t.root > lo && t.root < hi)
          throw ValidationError(std::string(name) + ": power-factor root inside the open interval");
      break;
    case AnalyticFactor::Kind::Callable: {
      if (!h.callable) throw ValidationError(std::string(name) + ": empty callable");
      if (!(h.neighborhood > 0)) throw ValidationError(std::string(name) + ": neighborhood half-width must be > 0");
      // Positivity probe on a grid of interior points.
      const Real l = to_real(lo), u = to_real(hi);
      for (int i = 1; i < 32; ++i) {
        Real x = l + (u - l) * i / 32;
        Complex v = h.callable(Complex(x));
        if (!(v.real() > 0) || abs(v.imag()) > abs(v.real()) * Real("1e-20"))
          throw ValidationError(std::string(name) + ": callable factor not positive on its interval");
      }
      break;
    }
  }
}

}  // namespace

void validate(const WeightParams& p) {
  if (!(p.a < 0)) throw ValidationError("a must be negative");
  if (p.alpha <= -1 || p.beta <= -1 || p.gamma <= -1) throw ValidationError("exponents must exceed -1");
  validate_factor(p.h1, p.a, Rational(0), "h1");
  validate_factor(p.h2, Rational(0), Rational(1), "h2");
}

Real eval_factor(const AnalyticFactor& h, const Real& x) {
  switch (h.kind) {
    case AnalyticFactor::Kind::Constant:
      return to_real(h.constant);
    case AnalyticFactor::Kind::Power: {
      Real v = to_real(h.constant);
      for (const auto& t : h.terms) {
        if (t.power == 0) continue;
        Real d = abs(x - to_real(t.root));
        v *= (d == 0) ? (t.power > 0 ? Real(0) : Real(std::numeric_limits<double>::infinity()))
                      : exp(to_real(t.power) * log(d));
      }
      return v;
    }
    case AnalyticFactor::Kind::Callable:
      return h.callable(Complex(x)).real();
  }
  return Real(0);
}

Complex continue_factor(const AnalyticFactor& h, const Complex& z, const Real& lo, const Real& hi) {
  switch (h.kind) {
    case AnalyticFactor::Kind::Constant:
      return Complex(to_real(h.constant));
    case AnalyticFactor::Kind::Power: {
      Complex v(to_real(h.constant));
      for (const auto& t : h.terms) {
        if (t.power == 0) continue;
        const Real r = to_real(t.root);
        // |x - r| continues as (r - z) for roots right of the interval and
        // (z - r) for roots to the left; the principal branch keeps the cut
        // away from the interval.
        Complex base = (r >= hi) ? Complex(r) - z : z - Complex(r);
        (void)lo;
        v *= cpow(base, to_real(t.power));
      }
      return v;
    }
    case AnalyticFactor::Kind::Callable: {
      const Real dx = z.real() < lo ? lo - z.real() : (z.real() > hi ? z.real() - hi : Real(0));
      const Real dist = hypot(dx, z.imag());
      if (dist > Real(h.neighborhood)) throw DomainError("continue_weight: outside the declared neighborhood");
      return h.callable(z);
    }
  }
  return Complex(0);
}

namespace {

// x^p for x >= 0 with the endpoint limits.
std::pair<Real, EndpointFlag> endpoint_power(const Real& d, const Real& p) {
  if (d > 0) return {exp(p * log(d)), EndpointFlag::Interior};
  if (p > 0) return {Real(0), EndpointFlag::ZeroLimit};
  if (p < 0) return {Real(std::numeric_limits<double>::infinity()), EndpointFlag::InfiniteLimit};
  return {Real(1), EndpointFlag::FiniteLimit};
}

}  // namespace

WeightSample eval_weight_flagged(int j, const Real& x, const WeightParams& p) {
  validate(p);
  auto [lo, hi] = interval(j, p);
  if (x < lo || x > hi) throw DomainError("eval_weight: x outside the interval");
  const Real pl = to_real(j == 1 ? p.alpha : p.beta);
  const Real ph = to_real(j == 1 ? p.beta : p.gamma);
  auto [vl, fl] = endpoint_power(x - lo, pl);
  auto [vh, fh] = endpoint_power(hi - x, ph);
  Real h = eval_factor(j == 1 ? p.h1 : p.h2, x);
  WeightSample s;
  s.flag = fl != EndpointFlag::Interior ? fl : fh;
  if (s.flag == EndpointFlag::ZeroLimit) s.value = 0;
  else if (s.flag == EndpointFlag::InfiniteLimit) s.value = Real(std::numeric_limits<double>::infinity());
  else s.value = vl * vh * h;
  return s;
}

Real eval_weight(int j, const Real& x, const WeightParams& p) { return eval_weight_flagged(j, x, p).value; }

Complex continue_weight(int j, const Complex& z, const WeightParams& p) {
  validate(p);
  auto [lo, hi] = interval(j, p);
  if (z.imag() == 0 && (z.real() <= lo || z.real() >= hi))
    throw BranchError("continue_weight: z lies on a branch cut");
  if (j == 1) {
    // (z-a)^alpha (-z)^beta h1(z)
    return cpow(z - Complex(lo), to_real(p.alpha)) * cpow(-z, to_real(p.beta)) * continue_factor(p.h1, z, lo, hi);
  }
  // z^beta (1-z)^gamma h2(z)
  return cpow(z, to_real(p.beta)) * cpow(Complex(1) - z, to_real(p.gamma)) * continue_factor(p.h2, z, lo, hi);
}

Real a_n(const ScalingParams& s) {
  if (s.n < 1) throw ValidationError("a_n: n must be >= 1");
  Real v = -1 + sqrt(Real(2)) * to_real(s.tau) / sqrt(Real(s.n));
  if (!(v < 0)) throw ValidationError("a_n: scaled endpoint must be negative");
  return v;
}

std::pair<Rational, Rational> jacobi_exponents(int j, const WeightParams& p) {
  Rational lo = j == 1 ? p.a : Rational(0), hi = j == 1 ? Rational(0) : Rational(1);
  Rational el = j == 1 ? p.alpha : p.beta, eh = j == 1 ? p.beta : p.gamma;
  const AnalyticFactor& h = j == 1 ? p.h1 : p.h2;
  if (h.kind == AnalyticFactor::Kind::Power)
    for (const auto& t : h.terms) {
      if (t.root == lo) el += t.power;
      if (t.root == hi) eh += t.power;
    }
  return {el, eh};
}

Real smooth_remainder(int j, const Real& x, const WeightParams& p) {
  Rational lo = j == 1 ? p.a : Rational(0), hi = j == 1 ? Rational(0) : Rational(1);
  const AnalyticFactor& h = j == 1 ? p.h1 : p.h2;
  if (h.kind != AnalyticFactor::Kind::Power) return eval_factor(h, x);
  Real v = to_real(h.constant);
  for (const auto& t : h.terms) {
    if (t.power == 0 || t.root == lo || t.root == hi) continue;
    v *= exp(to_real(t.power) * log(abs(x - to_real(t.root))));
  }
  return v;
}

std::string rational_to_string(const Rational& q) {
  Integer num = boost::multiprecision::numerator(q), den = boost::multiprecision::denominator(q);
  // Exact decimal when the denominator is 2^i 5^k.
  Integer d = den;
  unsigned twos = 0, fives = 0;
  while (d % 2 == 0) { d /= 2; ++twos; }
  while (d % 5 == 0) { d /= 5; ++fives; }
  if (d != 1 || std::max(twos, fives) > 60) return num.str() + (den == 1 ? "" : "/" + den.str());
  if (den == 1) return num.str();
  unsigned places = std::max(twos, fives);
  Integer scaled = num * boost::multiprecision::pow(Integer(10), places) / den;
  bool neg = scaled < 0;
  std::string digits = (neg ? Integer(-scaled) : scaled).str();
  if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
  digits.insert(digits.size() - places, ".");
  return (neg ? "-" : "") + digits;
}

Rational rational_from_json(const nlohmann::json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_number()) return to_rational(v.get<double>());
  throw ValidationError("expected a number or numeric string");
}

nlohmann::json to_json(const AnalyticFactor& h) {
  nlohmann::json j;
  switch (h.kind) {
    case AnalyticFactor::Kind::Constant:
      j["kind"] = "constant";
      j["value"] = rational_to_string(h.constant);
      break;
    case AnalyticFactor::Kind::Power: {
      j["kind"] = "power";
      j["constant"] = rational_to_string(h.constant);
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& t : h.terms)
        arr.push_back({{"root", rational_to_string(t.root)}, {"power", rational_to_string(t.power)}});
      j["factors"] = arr;
      break;
    }
    case AnalyticFactor::Kind::Callable:
      throw ValidationError("callable analytic factors cannot be serialized");
  }
  return j;
}

AnalyticFactor factor_from_json(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "constant") return AnalyticFactor::constant_factor(rational_from_json(j.at("value")));
  if (kind == "power") {
    std::vector<AnalyticFactor::PowerTerm> terms;
    for (const auto& t : j.at("factors"))
      terms.push_back({rational_from_json(t.at("root")), rational_from_json(t.at("power"))});
    Rational c = j.contains("constant") ? rational_from_json(j.at("constant")) : Rational(1);
    return AnalyticFactor::power(c, std::move(terms));
  }
  throw ValidationError("unknown analytic factor kind: " + kind);
}

nlohmann::json to_json(const WeightParams& p) {
  return {{"a", rational_to_string(p.a)},         {"alpha", rational_to_string(p.alpha)},
          {"beta", rational_to_string(p.beta)},   {"gamma", rational_to_string(p.gamma)},
          {"h1", to_json(p.h1)},                  {"h2", to_json(p.h2)}};
}

WeightParams params_from_json(const nlohmann::json& j) {
  WeightParams p;
  p.a = rational_from_json(j.at("a"));
  if (j.contains("alpha")) p.alpha = rational_from_json(j.at("alpha"));
  if (j.contains("beta")) p.beta = rational_from_json(j.at("beta"));
  if (j.contains("gamma")) p.gamma = rational_from_json(j.at("gamma"));
  if (j.contains("h1")) p.h1 = factor_from_json(j.at("h1"));
  if (j.contains("h2")) p.h2 = factor_from_json(j.at("h2"));
  validate(p);
  return p;
}

}  // namespace angelesco
