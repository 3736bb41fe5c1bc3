#include <doctest.h>

#include "angelesco/weights.hpp"

using namespace angelesco;

TEST_CASE("weights: plain weights are one inside the intervals") {
  PrecisionGuard g(40);
  const auto p = WeightParams::plain(Rational(-1));
  CHECK(eval_weight(1, Real(-0.5), p) == 1);
  CHECK(eval_weight(2, Real(0.25), p) == 1);
}

TEST_CASE("weights: jacobi-angelesco values") {
  PrecisionGuard g(40);
  const auto p = WeightParams::jacobi_angelesco(Rational(-2), Rational(1, 2), Rational(1), Rational(-1, 2));
  // w1(x) = (x+2)^{1/2} |x| |x-1|^{-1/2}
  const Real x(-1);
  const Real want = sqrt(Real(1)) * 1 / sqrt(Real(2));
  CHECK(static_cast<double>(abs(eval_weight(1, x, p) - want)) < 1e-35);
  // w2(x) = x (1-x)^{-1/2} (x+2)^{1/2}
  const Real y(0.5);
  const Real want2 = Real(0.5) / sqrt(Real(0.5)) * sqrt(Real(2.5));
  CHECK(static_cast<double>(abs(eval_weight(2, y, p) - want2)) < 1e-35);
}

TEST_CASE("weights: endpoint limits are flagged") {
  PrecisionGuard g(40);
  const auto p = WeightParams::jacobi_angelesco(Rational(-1), Rational(-1, 2), Rational(1, 2), Rational(0));
  const auto at_a = eval_weight_flagged(1, Real(-1), p);
  CHECK(at_a.flag == EndpointFlag::InfiniteLimit);
  const auto at_0 = eval_weight_flagged(2, Real(0), p);
  CHECK(at_0.flag == EndpointFlag::ZeroLimit);
  CHECK(at_0.value == 0);
}

TEST_CASE("weights: validation") {
  WeightParams p = WeightParams::plain(Rational(1, 2));
  CHECK_THROWS_AS(validate(p), ValidationError);
  p = WeightParams::plain(Rational(-1));
  p.alpha = Rational(-1);
  CHECK_THROWS_AS(validate(p), ValidationError);
  p = WeightParams::plain(Rational(-1));
  p.h1 = AnalyticFactor::power(Rational(1), {{Rational(-1, 2), Rational(1)}});
  CHECK_THROWS_AS(validate(p), ValidationError);
  p.h1 = AnalyticFactor::constant_factor(Rational(-3));
  CHECK_THROWS_AS(validate(p), ValidationError);
}

TEST_CASE("weights: scaled endpoint") {
  PrecisionGuard g(40);
  CHECK(a_n(ScalingParams{Rational(0), 7}) == -1);
  const Real v = a_n(ScalingParams{Rational(7, 10), 64});
  CHECK(static_cast<double>(abs(v - (Real(-1) + sqrt(Real(2)) * to_real(Rational(7, 10)) / 8))) < 1e-35);
  CHECK_THROWS_AS(a_n(ScalingParams{Rational(100), 1}), ValidationError);
}

TEST_CASE("weights: json round trip") {
  const auto p = WeightParams::jacobi_angelesco(Rational(-3, 2), Rational(1, 3), Rational(0), Rational(-1, 4));
  const auto q = params_from_json(to_json(p));
  CHECK(q.a == p.a);
  CHECK(q.alpha == p.alpha);
  CHECK(q.gamma == p.gamma);
  CHECK(q.h1.terms.size() == 1);
  CHECK(q.h2.terms.at(0).root == Rational(-3, 2));
  CHECK(rational_from_json(nlohmann::json("0.25")) == Rational(1, 4));
  CHECK(rational_from_json(nlohmann::json("-1/3")) == Rational(-1, 3));
}

TEST_CASE("weights: jacobi exponents absorb endpoint roots") {
  const auto p = WeightParams::jacobi_angelesco(Rational(-1), Rational(1, 2), Rational(1, 3), Rational(1, 4));
  const auto e1 = jacobi_exponents(1, p);
  const auto e2 = jacobi_exponents(2, p);
  CHECK(e1.first == Rational(1, 2));
  CHECK(e1.second == Rational(1, 3));
  CHECK(e2.first == Rational(1, 3));
  CHECK(e2.second == Rational(1, 4));
}
