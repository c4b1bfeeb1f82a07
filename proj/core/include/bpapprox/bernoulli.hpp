#pragma once

#include "bpapprox/rational_poly.hpp"

namespace bpapprox {

/// Degree cap for the public exact-polynomial constructors.  Double-precision
/// recurrences for Bernoulli coefficients lose all accuracy near n ~ 20, so
/// everything here is exact big-rational arithmetic; the cap bounds the
/// big-integer growth.
inline constexpr unsigned kDegreeCap = 64;

/// Exact Bernoulli polynomial B_n (monic, degree n), from the generating
/// function t e^{xt}/(e^t - 1).  Convention B_1(0) = -1/2.
/// Throws std::domain_error("degree cap...") for n > cap.
const RationalPoly& bernoulli_polynomial(unsigned n, unsigned cap = kDegreeCap);

/// Exact Euler polynomial E_n, from e^{xt}/(e^t + 1).  Satisfies
/// E_n(x) + E_n(x+1) = 2 x^n exactly.
const RationalPoly& euler_polynomial(unsigned n, unsigned cap = kDegreeCap);

/// Bernoulli number B_n = B_n(0), exact.
const Rational& bernoulli_number(unsigned n, unsigned cap = kDegreeCap);

/// The 1-periodic function B_n({x}) with {x} = x - floor(x).
double bernoulli_periodic(unsigned n, double x);

namespace detail {

/// Internal tables may exceed the public cap: the kernel tail expansions
/// need B_m, E_m up to roughly cap + 48.
inline constexpr unsigned kInternalDegreeCap = 160;

/// B_m(x) in double via compensated Horner on exactly rounded coefficients.
/// Relative accuracy ~1e-14 on [0,1] (the cancellation between binomial
/// terms is mild there).
double bernoulli_value(unsigned m, double x);

/// E_m(x) in double, same scheme.
double euler_value(unsigned m, double x);

/// Exact E_m evaluated at a rational point (used for the theta shifts,
/// where half the values are exactly zero).
Rational euler_value_exact(unsigned m, const Rational& x);

/// The scale-free Bernoulli value b_m(a) = B_m(a) (2pi)^m / m!, bounded by 4
/// on [0,1] for all m.  For m beyond the internal table it is summed from
/// the Fourier expansion of B_m, which converges like j^-m.
double normalized_bernoulli(unsigned m, double a);

/// (2pi)^m / m!, cached.
double two_pi_pow_over_factorial(unsigned m);

}  // namespace detail

}  // namespace bpapprox
