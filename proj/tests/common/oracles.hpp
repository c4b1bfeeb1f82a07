#pragma once

// Independent numerical oracles used only by tests: convergent series with
// Euler-Maclaurin tails, truncated Fourier expansions, and a panel
// Gauss-Legendre transform with analytic oscillatory tails.  Nothing here
// calls into the construction paths it is used to check, except where a
// test explicitly cross-validates two library routes.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

namespace oracles {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// zeta(s) for s >= 2, direct terms plus Euler-Maclaurin tail.
inline double zeta_series(double s, int terms = 2000) {
  double acc = 0.0;
  for (int j = terms; j >= 1; --j) acc += std::pow(j, -s);
  double K = terms + 1.0;
  double f = std::pow(K, -s);
  acc += f * K / (s - 1.0) + 0.5 * f + s * f / (12.0 * K) -
         s * (s + 1.0) * (s + 2.0) * f / (720.0 * K * K * K);
  return acc;
}

// Euler-Mascheroni via H_K - ln K with EM correction.
inline double euler_gamma() {
  const int K = 100000;
  double h = 0.0;
  for (int j = K; j >= 1; --j) h += 1.0 / j;
  return h - std::log((double)K) - 0.5 / K + 1.0 / (12.0 * (double)K * K);
}

// Truncated Fourier expansion of the periodic Bernoulli function:
//   B_n({x}) = -2 n!/(2 pi)^n sum_{k>=1} cos(2 pi k x - pi n/2)/k^n
inline double bernoulli_fourier(unsigned n, double x, long K) {
  double nf = 1.0;
  for (unsigned j = 2; j <= n; ++j) nf *= j;
  double scale = -2.0 * nf / std::pow(kTwoPi, (double)n);
  double acc = 0.0;
  for (long k = K; k >= 1; --k)
    acc += std::cos(kTwoPi * k * x - kPi * n / 2.0) / std::pow((double)k, (double)n);
  return scale * acc;
}
// Analytic bound for the truncation tail above (n >= 2).
inline double bernoulli_fourier_tail(unsigned n, long K) {
  double nf = 1.0;
  for (unsigned j = 2; j <= n; ++j) nf *= j;
  return 2.0 * nf / std::pow(kTwoPi, (double)n) * std::pow((double)K, 1.0 - (double)n) /
         ((double)n - 1.0);
}

// 10-point Gauss-Legendre nodes/weights on [-1, 1].
struct GL10 {
  static constexpr double x[5] = {0.1488743389816312, 0.4333953941292472,
                                  0.6794095682990244, 0.8650633666889845,
                                  0.9739065285171717};
  static constexpr double w[5] = {0.2955242247147529, 0.2692667193099963,
                                  0.2190863625159820, 0.1494513491505806,
                                  0.0666713443086881};
};

// Integral of f e(-t x) over [a, b] with fixed panel width aimed at the
// combined oscillation rate.
inline std::complex<double> oscillatory_integral(const std::function<double(double)>& f,
                                                 double a, double b, double t,
                                                 double panels_per_unit) {
  long np = std::lround((b - a) * panels_per_unit) + 1;
  double h = (b - a) / np;
  std::complex<double> acc{0.0, 0.0};
  for (long p = 0; p < np; ++p) {
    double mid = a + (p + 0.5) * h;
    std::complex<double> panel{0.0, 0.0};
    for (int i = 0; i < 5; ++i) {
      for (double sgn : {-1.0, 1.0}) {
        double x = mid + sgn * 0.5 * h * GL10::x[i];
        double ph = -kTwoPi * t * x;
        panel += GL10::w[i] * f(x) * std::complex<double>{std::cos(ph), std::sin(ph)};
      }
    }
    acc += panel * (0.5 * h);
  }
  return acc;
}

// E_m(omega, Z) = integral_Z^inf u^{-m} e(omega u) du by repeated parts;
// exact at omega = 0.
inline std::complex<double> power_tail(int m, double omega, double Z, int depth = 8) {
  if (omega == 0.0) return std::pow(Z, 1.0 - m) / (m - 1.0);
  std::complex<double> i2pw{0.0, kTwoPi * omega};
  double ph = kTwoPi * omega * Z;
  std::complex<double> eZ{std::cos(ph), std::sin(ph)};
  std::complex<double> acc{0.0, 0.0};
  std::complex<double> coef{1.0, 0.0};
  double zpow = std::pow(Z, -(double)m);
  for (int j = 0; j < depth; ++j) {
    acc += coef * (-eZ * zpow / i2pw);
    coef *= (double)(m + j) / i2pw;
    zpow /= Z;
  }
  return acc;
}

// One oscillatory component of an envelope tail: amp * sum_j c_j E_{m0+j}
// evaluated at frequency (freq - t/delta) in the u = delta x variable.
inline std::complex<double> envelope_tail_component(const std::vector<double>& c, int m0,
                                                    std::complex<double> amp, double freq,
                                                    double t, double delta, double X) {
  double Z = delta * X;
  double om = freq - t / delta;
  std::complex<double> piece{0.0, 0.0};
  for (size_t j = 0; j < c.size(); ++j) piece += c[j] * power_tail(m0 + (int)j, om, Z);
  return amp * piece / delta;
}

}  // namespace oracles
