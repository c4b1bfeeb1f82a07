#pragma once

#include <complex>

#include "bpapprox/bernoulli.hpp"

namespace bpapprox {

using Complex = std::complex<double>;

/// Parameters of the real-line interpolation kernels.
struct KernelParams {
  unsigned n = 0;      ///< power of the interpolated function sgn(x) x^n / x_+^n
  double delta = 1.0;  ///< exponential-type scale, > 0
  double alpha = 0.0;  ///< interpolation shift in [0,1] (d-family only)
  void validate() const;
};

/// Digamma (k=0) or trigamma (k=1), to <= 1e-13 relative error.  Upward
/// recurrence to argument >= 14, then the asymptotic series.
/// Throws std::domain_error at nonpositive-integer poles.
double polygamma(int k, double x);
double digamma(double x);
double trigamma(double x);

/// The one-sided interpolation H_n(x; alpha): entire in x, with
/// H_n(.; alpha_n) <= sgn(x) x^n <= H_n(.; beta_n) pointwise.  The sgn_+
/// lattice sum is resummed exactly into trigamma differences; the removable
/// singularities at alpha + Z are absorbed into sinc^2 factors, so the
/// evaluation is stable at and near every lattice point.
double eval_H(unsigned n, double x, double alpha);

/// d_n(x; delta, alpha) = delta^{-n} H_n(delta x; alpha) - sgn(x) x^n.
/// O(x^{-2}) at infinity; beyond |delta x| ~ max(16, 2.2(n+2)) it switches
/// to the asymptotic tail series (the naive difference would cancel to
/// noise there).
double eval_d(unsigned n, double x, double delta, double alpha);

/// Fourier transform of d_n.  Closed form -2 n!/(2 pi i t)^{n+1} for
/// |t| >= delta; Bernoulli series inside, analytically recentered at the
/// boundary for |t|/delta > 3/4 so the transform stays evaluable (and
/// continuous to ~1e-12) arbitrarily close to |t| = delta.
Complex dhat(unsigned n, double t, double delta, double alpha);

/// The best-L1 interpolation G_n(x; theta_n) (shift fixed to theta_n).
double eval_G(unsigned n, double x);

/// phi_n(x; delta) = delta^{-n} G_n(delta x; theta_n) - x_+^n, with the
/// convention x_+^0 = 1 at x = 0.
double eval_phi(unsigned n, double x, double delta);

/// Fourier transform of phi_n: -n!/(2 pi i t)^{n+1} for |t| >= delta/2,
/// the generating-function series below (the 1/z pole cancels, so t = 0 is
/// a plain series value).
Complex phihat(unsigned n, double t, double delta);

namespace detail {
/// n! as a double (n <= 170).
double factorial(unsigned n);
/// Switch radius between the exact midrange evaluation and the tail series.
double kernel_asym_radius(unsigned n);
double kernel_asym_radius_l1(unsigned n);
}  // namespace detail

}  // namespace bpapprox
