#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

namespace bpapprox {

enum class PeriodicKernel { kP, kQ };

/// Input of the periodic Hilbert-type form: well-spaced nodes on the circle
/// and complex weights.
struct FormInput {
  std::vector<double> lambdas;  ///< distinct nodes, reduced to [0,1)
  std::vector<std::complex<double>> weights;
  unsigned m = 1;  ///< kernel order
  PeriodicKernel kernel = PeriodicKernel::kQ;

  FormInput() = default;
  FormInput(std::vector<double> nodes, std::vector<std::complex<double>> w, unsigned order,
            PeriodicKernel k);

  /// Circular min-gap min_{r != s} ||lambda_r - lambda_s||; throws on
  /// coincident nodes.
  double min_gap() const;

  /// Reads "lambda re im" per line.
  static FormInput from_stream(std::istream& in, unsigned m, PeriodicKernel k);
  static FormInput from_file(const std::string& path, unsigned m, PeriodicKernel k);
};

/// Hurwitz zeta sum_{k>=0} (a+k)^{-m} for integer m >= 2 and a > 0, via 50
/// direct terms plus an Euler-Maclaurin tail; <= 1e-13 relative error.
double hurwitz_zeta(unsigned m, double a);

/// Periodized kernels p_m(x) = sum_k (x+k)^{-m} and
/// q_m(x) = sum_k (-1)^k (x+k)^{-m}, {x} in (0,1).  m = 1 uses the closed
/// forms pi cot(pi x) and pi/sin(pi x); m >= 2 assembles Hurwitz values.
double kernel_p(unsigned m, double x);
double kernel_q(unsigned m, double x);

/// Optimal constants of the real-line inequality:
///   L_m(d) = (2 pi)^m B_m(alpha_{m-1})/(m! d^m),
///   U_m(d) = -(2 pi)^m B_m(beta_{m-1})/(m! d^m);  both > 0.
struct OptimalConstants {
  double L;
  double U;
};
OptimalConstants optimal_constants(unsigned m, double delta);

/// The Hermitian form sum_{r != s} i^{-m} a_r conj(a_s) K_m(l_r - l_s).
std::complex<double> form_value(const FormInput& fi);

/// Bounds report: the form value against the applicable two-sided bounds
/// (odd m: [-L, U]; even m: the zeta-shifted constants), slack on each side
/// and the pass flag slack >= -1e-9 * sum |a_r|^2.
struct BoundsReport {
  double form = 0.0;       ///< real part of the Hermitian form
  double form_imag = 0.0;  ///< imaginary residue (diagnostic)
  double lower = 0.0;
  double upper = 0.0;
  double slack = 0.0;  ///< min(form - lower, upper - form)
  double weight_mass = 0.0;
  double delta = 0.0;
  bool pass = false;
};
BoundsReport verify_bounds(const FormInput& fi);

/// zeta(m) for integer m >= 2 (hurwitz_zeta at a = 1).
double zeta_int(unsigned m);

}  // namespace bpapprox
