#include "bpapprox/kernels.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace bpapprox {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline double sgn(double x) { return (x > 0.0) - (x < 0.0); }

// (-i)^k and i^k, k >= 0.
inline Complex ineg_pow(unsigned k) {
  switch (k & 3u) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, -1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, 1.0};
  }
}
inline Complex ipos_pow(unsigned k) { return std::conj(ineg_pow(k)); }

inline Complex unit_exp(double x) {  // e(x) = exp(2 pi i x)
  return {std::cos(kTwoPi * x), std::sin(kTwoPi * x)};
}

inline double sinc_pi(double w) {  // sin(pi w)/(pi w)
  return w == 0.0 ? 1.0 : std::sin(kPi * w) / (kPi * w);
}

void check_kernel_index(unsigned n, const char* what) {
  if (n + 1 > kDegreeCap)
    throw std::domain_error(std::string("degree cap exceeded in ") + what +
                            ": n=" + std::to_string(n));
}

void check_shift(double alpha, const char* what) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw std::domain_error(std::string(what) + ": shift must lie in [0,1]");
}

// ---------------------------------------------------------------------------
// Per-(n, alpha) derived data for the d-family.  bvals holds B_m(alpha) for
// m = 0..n+T; asym holds the 1/z tail coefficients
//   c_t = 2 (B_n(a) {a}^{t-1} - B_{n+t-1}(a)),  t = 2, 3, ...
// together with rigorous magnitude bounds used to truncate the (divergent)
// asymptotic series at its smallest term.
// ---------------------------------------------------------------------------
constexpr unsigned kTailTerms = 48;

struct DKernelData {
  std::vector<double> bvals;
  std::vector<double> asym;
  std::vector<double> asym_bound;
  double b_n = 0.0;  // B_n(alpha)
  double frac_alpha = 0.0;
};

std::shared_ptr<const DKernelData> dkernel_data(unsigned n, double alpha) {
  static std::map<std::pair<unsigned, double>, std::shared_ptr<const DKernelData>> cache;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({n, alpha});
    if (it != cache.end()) return it->second;
  }
  auto data = std::make_shared<DKernelData>();
  unsigned top = n + kTailTerms;
  data->bvals.resize(top + 1);
  for (unsigned m = 0; m <= top; ++m) data->bvals[m] = detail::bernoulli_value(m, alpha);
  data->b_n = data->bvals[n];
  data->frac_alpha = alpha - std::floor(alpha);
  double fpow = 1.0;  // {a}^{t-1}
  for (unsigned t = 2; t <= kTailTerms; ++t) {
    fpow *= data->frac_alpha;
    data->asym.push_back(2.0 * (data->b_n * fpow - data->bvals[n + t - 1]));
    data->asym_bound.push_back(
        2.0 * (std::abs(data->b_n) * fpow + 4.0 / detail::two_pi_pow_over_factorial(n + t - 1)));
  }
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(std::make_pair(n, alpha), std::move(data));
  return it->second;
}

// Tail series acc = sum_t c_t z^{-t}, truncated at the smallest bound term.
double asym_tail(const std::vector<double>& coef, const std::vector<double>& bound, double z) {
  double u = 1.0 / z;
  double up = u * u;
  double acc = 0.0;
  double prev = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < coef.size(); ++i) {
    double b = bound[i] * std::abs(up);
    if (b > prev) break;  // past the optimal truncation point
    acc += coef[i] * up;
    if (b < 1e-18 * std::abs(acc)) break;
    prev = b;
    up *= u;
  }
  return acc;
}

// D_n(z; a) = H_n(z; a) - sgn(z) z^n for |z| >= asym radius.
double d_tail(unsigned n, double z, double alpha, const DKernelData& d) {
  double s = std::sin(kPi * (z - alpha));
  return (s * s / (kPi * kPi)) * asym_tail(d.asym, d.asym_bound, z);
}

// Exact midrange evaluation of H_n(z; a).  The sgn_+ lattice sum equals
// trigamma(a - z) - trigamma(1 + z - a); its double pole at the nearest
// lattice point a + m is pulled out and folded into sinc^2, leaving the
// regular remainder R evaluable at positive trigamma arguments.
double h_mid(unsigned n, double z, double alpha, const DKernelData& d) {
  double u = z - alpha;
  double m = std::nearbyint(u);
  long mi = static_cast<long>(m);
  double w = u - m;
  double sinw = std::sin(kPi * w);
  double snc = sinc_pi(w);
  double sin2 = sinw * sinw / (kPi * kPi);

  double R;
  if (mi >= 0) {
    R = trigamma(1.0 - w) - trigamma(1.0 + m + w);
    for (long i = 1; i <= mi; ++i) R += 1.0 / ((i + w) * (i + w));
  } else {
    R = trigamma(-m - w) - trigamma(1.0 + w);
    for (long p = 1; p <= -mi - 1; ++p) R -= 1.0 / ((w - p) * (w - p));
  }

  double q = 0.0;  // 2 sum_{k=1..n} B_{k-1}(a) z^{n-k}
  for (unsigned k = 1; k <= n; ++k) q = q * z + 2.0 * d.bvals[k - 1];

  double zn = std::pow(z, static_cast<double>(n));
  double sgnp = mi >= 0 ? 1.0 : -1.0;
  double h = sgnp * zn * snc * snc + sin2 * (zn * R + q);

  // simple-pole term 2 B_n(a)/(z - {a}); near z = {a} it degenerates to a
  // stable w * sinc^2 form
  double v = z - d.frac_alpha;
  double mv = std::nearbyint(v);
  double wv = v - mv;
  if (mv == 0.0)
    h += wv == 0.0 ? 0.0 : 2.0 * d.b_n * (sinw / kPi) * (sinw / kPi) / wv;
  else
    h += sin2 * 2.0 * d.b_n / v;
  return h;
}

// ---------------------------------------------------------------------------
// dhat: the transform of d_n for |t| < delta.  Two exact representations of
// the same function:
//  * the Bernoulli series in z = -2 pi i s around s = 0 (fast for s <= 3/4),
//  * a recentering at the boundary point z0 = -2 pi i, where the pole parts
//    of the generating functions cancel in closed form (fast for s > 3/4).
// Both work with the scale-free values b_m = B_m(a)(2 pi)^m/m!.
// ---------------------------------------------------------------------------

// sigma_nn(r, phase, a) = sum_j b_{j+nn+1}(a) K_j phase^j with
// K_j = (j+nn)!/(j! (2 pi)^{nn+1}) r^j; this is
// sum_j B_{j+nn+1}(a) zeta^j / ((j+nn+1) j!) for zeta = 2 pi r * phase.
Complex sigma_series(unsigned nn, double r, Complex phase, double alpha) {
  double K = 1.0 / ((nn + 1) * detail::two_pi_pow_over_factorial(nn + 1));  // nn!/(2pi)^{nn+1}
  Complex ph{1.0, 0.0};
  Complex acc{0.0, 0.0};
  for (unsigned j = 0;; ++j) {
    double b = detail::normalized_bernoulli(j + nn + 1, alpha);
    acc += b * K * ph;
    double Knext = K * r * (j + nn + 1) / (j + 1.0);
    double ratio = r * (j + nn + 2) / (j + 2.0);
    if (ratio < 1.0) {
      double tail = 4.0 * Knext / (1.0 - ratio);
      if (tail < 1e-17 * std::abs(acc) + 1e-300) break;
    }
    if (j > 200000) throw std::runtime_error("sigma_series: no convergence");
    K = Knext;
    ph *= phase;
  }
  return acc;
}

// Direct series branch of the delta-normalized transform, s = t/delta in
// [0, 3/4].
Complex dhat_series(unsigned n, double s, double alpha, const DKernelData& d) {
  double G = 1.0 / detail::two_pi_pow_over_factorial(n + 1);  // (n+1)!/(2pi)^{n+1}
  Complex ph{1.0, 0.0};                                       // (-i)^k
  Complex acc{0.0, 0.0};
  for (unsigned k = 0;; ++k) {
    double b = detail::normalized_bernoulli(k + n + 1, alpha);
    double bracket = (k + 1.0) / (k + n + 1.0) - s;
    acc += b * G * bracket * ph;
    double Gnext = G * s * (k + n + 2) / (k + 2.0);
    double ratio = s * (k + n + 3) / (k + 3.0);
    if (ratio < 1.0) {
      double tail = 4.0 * Gnext / (1.0 - ratio);
      if (tail < 1e-17 * std::abs(acc) + 1e-300) break;
    }
    if (k > 200000) throw std::runtime_error("dhat_series: no convergence");
    G = Gnext;
    ph *= Complex{0.0, -1.0};
  }
  Complex val = -2.0 * acc;
  if (s > 0.0 && d.frac_alpha != 0.0) {
    // + B_n(a)/(pi i) (e(-{a} s) - 1) for t > 0
    Complex e = unit_exp(-d.frac_alpha * s) - Complex{1.0, 0.0};
    val += d.b_n * Complex{0.0, -1.0 / kPi} * e;
  }
  return val;
}

// Boundary-recentered branch, s in (3/4, 1).  With zeta = 2 pi i (1 - s):
//   dhat(s;1,a) = (i/pi) e(-a) (zeta sigma_n + n sigma_{n-1})   [n >= 1]
//                 (i/pi) e(-a) (1 + zeta sigma_0) - 1           [n = 0]
//               - 2 n!/(2 pi i s)^{n+1} + [n=0]
//               - (i/pi) B_n(a) + B_n(a)/(pi i) (e(-{a} s) - 1)
// The generating-function poles at the recentering point cancel exactly,
// which is what keeps this branch finite (and the transform continuous)
// as s -> 1.
Complex dhat_boundary(unsigned n, double s, double alpha, const DKernelData& d) {
  double r = 1.0 - s;
  Complex zeta{0.0, kTwoPi * r};
  Complex e_ma = unit_exp(-alpha);
  Complex i_over_pi{0.0, 1.0 / kPi};

  Complex bracket;
  if (n == 0) {
    bracket = i_over_pi * e_ma * (1.0 + zeta * sigma_series(0, r, {0.0, 1.0}, alpha)) - 1.0;
  } else {
    Complex sn = sigma_series(n, r, {0.0, 1.0}, alpha);
    Complex snm1 = sigma_series(n - 1, r, {0.0, 1.0}, alpha);
    bracket = i_over_pi * e_ma * (zeta * sn + static_cast<double>(n) * snm1);
  }

  Complex val = bracket;
  val += -2.0 * detail::factorial(n) * ineg_pow(n + 1) / std::pow(kTwoPi * s, n + 1.0);
  if (n == 0) val += 1.0;
  val -= i_over_pi * d.b_n;
  Complex e = unit_exp(-d.frac_alpha * s) - Complex{1.0, 0.0};
  val += d.b_n * Complex{0.0, -1.0 / kPi} * e;
  return val;
}

// ---------------------------------------------------------------------------
// G / phi family (shift fixed to theta_n).
// ---------------------------------------------------------------------------
struct GKernelData {
  double theta = 0.0;
  std::vector<double> evals;  // E_0..E_{n-1}(theta): the power-sum coefficients
  std::vector<double> tail;   // E_{n+1+j}(theta)
  std::vector<double> tail_bound;
};

std::shared_ptr<const GKernelData> gkernel_data(unsigned n) {
  static std::map<unsigned, std::shared_ptr<const GKernelData>> cache;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  auto data = std::make_shared<GKernelData>();
  data->theta = (n % 2 == 0) ? 0.0 : 0.5;
  data->evals.resize(n);
  for (unsigned k = 0; k < n; ++k) data->evals[k] = detail::euler_value(k, data->theta);
  double fac_over_pipow = detail::factorial(n + 1) / std::pow(kPi, n + 2.0);
  for (unsigned j = 0; j < kTailTerms; ++j) {
    unsigned m = n + 1 + j;
    data->tail.push_back(detail::euler_value(m, data->theta));
    data->tail_bound.push_back(5.0 * fac_over_pipow);
    fac_over_pipow *= (m + 1.0) / kPi;
  }
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(n, std::move(data));
  return it->second;
}

// G_n(z) - [z > 0] z^n for |z| >= asym radius:
//   (sin pi(z - theta)/pi) (1/2) sum_j E_{n+1+j}(theta) z^{-2-j}
double g_tail(unsigned n, double z, const GKernelData& g) {
  double sf = std::sin(kPi * (z - g.theta)) / kPi;
  return sf * 0.5 * asym_tail(g.tail, g.tail_bound, z);
}

// Exact midrange G_n(z; theta).  Uses the duplication-reduced bracket
//   (1/2)[psi((a-z)/2) - psi((a-z+1)/2)]
// whose pole at the nearest lattice point a + m (m >= 0) is (-1)^m / w;
// folding it against sin pi(z-a) gives a clean z^n sinc(w) term.
double g_mid(unsigned n, double z, const GKernelData& g) {
  double a = g.theta;
  double u = z - a;
  double m = std::nearbyint(u);
  long mi = static_cast<long>(m);
  double w = u - m;
  double parity = (mi % 2 != 0) ? -1.0 : 1.0;
  double sf = parity * std::sin(kPi * w) / kPi;  // sin(pi(z-a))/pi
  double zn = std::pow(z, static_cast<double>(n));

  double S = 0.0;  // -(1/2) sum_{k=0}^{n-1} E_k(a) z^{n-k-1}
  for (unsigned k = 0; k < n; ++k) S = S * z + g.evals[k];
  S *= -0.5;

  double val;
  if (mi >= 0) {
    double V = 0.5 * (digamma(1.0 - 0.5 * w) - digamma(0.5 * (1.0 - w)));
    for (long q = 1; q <= mi; ++q) V += ((q & 1) ? -1.0 : 1.0) / (q + w);
    val = zn * sinc_pi(w) + sf * (parity * zn * V + S);
  } else {
    double A = 0.5 * (digamma(0.5 * (a - z)) - digamma(0.5 * (a - z + 1.0)));
    val = sf * (zn * A + S);
  }
  if (n == 0) {
    // the k = n power-sum term -(1/2) E_0/z; E_n(theta_n) vanishes exactly
    // for every n >= 1, so only n = 0 carries it
    val += (mi == 0) ? -0.5 * sinc_pi(w) : -0.5 * sf / z;
  }
  return val;
}

}  // namespace

void KernelParams::validate() const {
  check_kernel_index(n, "KernelParams");
  check_shift(alpha, "KernelParams");
  if (!(delta > 0.0)) throw std::domain_error("KernelParams: delta must be positive");
}

namespace detail {

double factorial(unsigned n) {
  static std::vector<double> table{1.0};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  if (n > 170) throw std::domain_error("factorial: overflow beyond 170!");
  while (table.size() <= n) table.push_back(table.back() * table.size());
  return table[n];
}

double kernel_asym_radius(unsigned n) { return std::max(16.0, 2.2 * (n + 2.0)); }
double kernel_asym_radius_l1(unsigned n) { return std::max(16.0, 4.5 * (n + 2.0)); }

}  // namespace detail

double digamma(double x) {
  if (!std::isfinite(x)) throw std::domain_error("digamma: non-finite argument");
  if (x <= 0.0 && x == std::floor(x)) throw std::domain_error("digamma: pole at nonpositive integer");
  double acc = 0.0;
  while (x < 14.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  double x2 = 1.0 / (x * x);
  // ln x - 1/2x - sum B_{2j}/(2j x^{2j})
  double series = x2 * (1.0 / 12 + x2 * (-1.0 / 120 + x2 * (1.0 / 252 + x2 * (-1.0 / 240 +
                  x2 * (1.0 / 132 + x2 * (-691.0 / 32760 + x2 * (1.0 / 12)))))));
  return acc + std::log(x) - 0.5 / x - series;
}

double trigamma(double x) {
  if (!std::isfinite(x)) throw std::domain_error("trigamma: non-finite argument");
  if (x <= 0.0 && x == std::floor(x)) throw std::domain_error("trigamma: pole at nonpositive integer");
  double acc = 0.0;
  while (x < 14.0) {
    acc += 1.0 / (x * x);
    x += 1.0;
  }
  double x2 = 1.0 / (x * x);
  double series = 1.0 + x2 * (1.0 / 6 + x2 * (-1.0 / 30 + x2 * (1.0 / 42 + x2 * (-1.0 / 30 +
                  x2 * (5.0 / 66 + x2 * (-691.0 / 2730 + x2 * (7.0 / 6)))))));
  return acc + 0.5 * x2 + series / x;
}

double polygamma(int k, double x) {
  if (k == 0) return digamma(x);
  if (k == 1) return trigamma(x);
  throw std::domain_error("polygamma: only orders 0 and 1 are provided");
}

double eval_H(unsigned n, double x, double alpha) {
  check_kernel_index(n, "eval_H");
  check_shift(alpha, "eval_H");
  if (!std::isfinite(x)) throw std::domain_error("eval_H: non-finite x");
  auto d = dkernel_data(n, alpha);
  if (std::abs(x) >= detail::kernel_asym_radius(n))
    return sgn(x) * std::pow(x, static_cast<double>(n)) + d_tail(n, x, alpha, *d);
  return h_mid(n, x, alpha, *d);
}

double eval_d(unsigned n, double x, double delta, double alpha) {
  KernelParams{n, delta, alpha}.validate();
  if (!std::isfinite(x)) throw std::domain_error("eval_d: non-finite x");
  double z = delta * x;
  double scale = std::pow(delta, -static_cast<double>(n));
  auto d = dkernel_data(n, alpha);
  if (std::abs(z) >= detail::kernel_asym_radius(n)) return scale * d_tail(n, z, alpha, *d);
  return scale * (h_mid(n, z, alpha, *d) - sgn(z) * std::pow(z, static_cast<double>(n)));
}

Complex dhat(unsigned n, double t, double delta, double alpha) {
  KernelParams{n, delta, alpha}.validate();
  if (!std::isfinite(t)) throw std::domain_error("dhat: non-finite t");
  if (t < 0.0) return std::conj(dhat(n, -t, delta, alpha));
  double s = t / delta;
  if (s >= 1.0)
    return -2.0 * detail::factorial(n) * ineg_pow(n + 1) / std::pow(kTwoPi * t, n + 1.0);
  auto d = dkernel_data(n, alpha);
  Complex val = (s <= 0.75) ? dhat_series(n, s, alpha, *d) : dhat_boundary(n, s, alpha, *d);
  return std::pow(delta, -(n + 1.0)) * val;
}

double eval_G(unsigned n, double x) {
  check_kernel_index(n, "eval_G");
  if (!std::isfinite(x)) throw std::domain_error("eval_G: non-finite x");
  auto g = gkernel_data(n);
  if (std::abs(x) >= detail::kernel_asym_radius_l1(n)) {
    double lead = x > 0.0 ? std::pow(x, static_cast<double>(n)) : 0.0;
    return lead + g_tail(n, x, *g);
  }
  return g_mid(n, x, *g);
}

double eval_phi(unsigned n, double x, double delta) {
  check_kernel_index(n, "eval_phi");
  if (!(delta > 0.0)) throw std::domain_error("eval_phi: delta must be positive");
  if (!std::isfinite(x)) throw std::domain_error("eval_phi: non-finite x");
  double z = delta * x;
  double scale = std::pow(delta, -static_cast<double>(n));
  auto g = gkernel_data(n);
  if (std::abs(z) >= detail::kernel_asym_radius_l1(n)) return scale * g_tail(n, z, *g);
  double xplus;
  if (x > 0.0)
    xplus = std::pow(x, static_cast<double>(n));
  else if (x == 0.0)
    xplus = (n == 0) ? 1.0 : 0.0;  // sgn_+ convention at the jump
  else
    xplus = 0.0;
  return scale * g_mid(n, z, *g) - xplus;
}

Complex phihat(unsigned n, double t, double delta) {
  check_kernel_index(n, "phihat");
  if (!(delta > 0.0)) throw std::domain_error("phihat: delta must be positive");
  if (!std::isfinite(t)) throw std::domain_error("phihat: non-finite t");
  if (t < 0.0) return std::conj(phihat(n, -t, delta));
  double s = t / delta;
  if (s >= 0.5)
    return -detail::factorial(n) * ineg_pow(n + 1) / std::pow(kTwoPi * t, n + 1.0);
  double theta = (n % 2 == 0) ? 0.0 : 0.5;
  Complex val = -sigma_series(n, s, {0.0, -1.0}, theta);
  if (n == 0) val -= 0.5;
  return std::pow(delta, -(n + 1.0)) * val;
}

}  // namespace bpapprox
