#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "bpapprox/bernoulli.hpp"

namespace bpapprox {

enum class ApproxKind { kMinorant, kMajorant, kBestL1 };

/// Selects one construction: the approximant of the Bernoulli periodic
/// function B_{n+1}({x}) by a trigonometric polynomial of degree <= N.
struct ApproxSpec {
  unsigned n = 0;
  unsigned N = 0;
  ApproxKind kind = ApproxKind::kMinorant;
};

/// Real trigonometric polynomial sum_{|k| <= N} c_k e(kx) stored as the
/// coefficients for k = 0..N only; c_{-k} = conj(c_k) is implied and never
/// stored, so the polynomial is real-valued by construction.
class TrigPoly {
 public:
  TrigPoly() : coeffs_(1, {0.0, 0.0}) {}
  explicit TrigPoly(std::vector<std::complex<double>> coeffs_0_to_N);

  unsigned degree() const { return static_cast<unsigned>(coeffs_.size()) - 1; }
  /// c_k for any |k| <= N (negative k via conjugate symmetry).
  std::complex<double> coeff(int k) const;
  const std::vector<std::complex<double>>& coeffs() const { return coeffs_; }
  std::complex<double>& coeff_ref(unsigned k) { return coeffs_[k]; }

  /// Value at x: c_0 + 2 sum_{k>=1} Re(c_k e(kx)), a fixed summation order.
  double eval(double x) const;

  /// sum |c_k| over all |k| <= N (coefficient mass).
  double coeff_mass() const;

 private:
  std::vector<std::complex<double>> coeffs_;
};

inline double eval_trig(const TrigPoly& t, double x) { return t.eval(x); }

/// Flat serialization record shared with the CLI: degree plus (k, re, im)
/// for k = 0..N.
struct TrigPolyRecord {
  unsigned degree = 0;
  struct Entry {
    unsigned k;
    double re;
    double im;
  };
  std::vector<Entry> coeffs;
};
TrigPolyRecord to_record(const TrigPoly& t);
TrigPoly from_record(const TrigPolyRecord& r);

/// The sharp one-sided approximants of B_{n+1}({x}) of degree <= N.  With
/// delta = N+1 and shift beta_n (minorant) or alpha_n (majorant):
///   c_0 = B_{n+1}(shift)/(N+1)^{n+1}
///   c_k = -((n+1)/2) (dhat(k; N+1, shift) + 2 n!/(2 pi i k)^{n+1})
TrigPoly build_extremal(unsigned n, unsigned N, ApproxKind side);

/// The best-L1 approximant of B_{n+1}({x}), delta = 2N+2:
///   c_0 = -(n+1) phihat(0; 2N+2)
///   c_k = -(n+1) (phihat(k; 2N+2) + n!/(2 pi i k)^{n+1})
TrigPoly build_best_l1(unsigned n, unsigned N);

/// Dispatch on kind.
TrigPoly build_approx(const ApproxSpec& spec);

/// Mean gap integral( B_{n+1}({x}) - T(x) ) dx over one period; since the
/// periodic function has mean zero this is exactly -c_0.
double mean_error(const TrigPoly& t, unsigned n);

/// L1 distance integral |T - B_{n+1}| over [0,1], by adaptive quadrature on
/// panels split at the sign-change nodes k/(2N+2).  Absolute error <= tol.
double l1_error(const TrigPoly& t, unsigned n, double tol);

/// Largest wrong-side deviation of T against B_{n+1}({x}) over a uniform
/// grid of `gridsize` points augmented with the interpolation nodes and 16
/// jittered points around each node.  Positive means the one-sided bound is
/// violated.
double sup_violation(const TrigPoly& t, unsigned n, ApproxKind side, unsigned gridsize);

/// Approximant of the periodic monomial x^n on [0,1) assembled by Bernoulli
/// inversion: (1/(n+1)) sum_{k=0}^n C(n+1,k) T_k with T_0 = 1 and T_k the
/// selected approximant of B_k({x}).  All combination weights are positive,
/// so one-sidedness is inherited.
TrigPoly monomial_approx(unsigned n, unsigned N, ApproxKind kind);

/// The sharp L1 distance of Theorem-2 type: |E_{n+1}(theta_n)|/(2N+2)^{n+1}.
double sharp_l1_constant(unsigned n, unsigned N);

}  // namespace bpapprox
