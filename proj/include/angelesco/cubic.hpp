#pragma once

// Root finders for the two cubic shapes that occur: real cubics with three
// real roots, and the depressed cubic zeta^3 - p zeta - r = 0 with complex
// coefficients.

#include "angelesco/precision.hpp"

#include <array>
#include <complex>

namespace angelesco {

/// Three real roots of c3 x^3 + c2 x^2 + c1 x + c0, ascending. Throws
/// CurveDegeneracyError when the discriminant is negative.
std::array<Real, 3> real_cubic_roots(const Real& c3, const Real& c2, const Real& c1, const Real& c0);

/// Roots of zeta^3 - p zeta - r (Cardano, then Newton polish), no ordering.
std::array<Complex, 3> depressed_cubic_roots(const Complex& p, const Complex& r);
std::array<std::complex<double>, 3> depressed_cubic_roots(std::complex<double> p, std::complex<double> r);

/// Newton refinement of one root of zeta^3 - p zeta - r from a start value.
Complex polish_root(const Complex& p, const Complex& r, Complex z, unsigned max_iter = 60);

/// The unique real root when zeta^3 - p zeta - r has one real root and a
/// conjugate pair (27 r^2 >= 4 p^3); clamps a slightly negative discriminant.
Real single_real_root(const Real& p, const Real& r);

}  // namespace angelesco
