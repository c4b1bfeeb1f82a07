#include "bpapprox/trig_poly.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bpapprox/critical_points.hpp"
#include "bpapprox/kernels.hpp"
#include "bpapprox/quadrature.hpp"

namespace bpapprox {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// 1/(2 pi i k)^{n+1} as a complex number, k > 0.
Complex inv_2piik_pow(unsigned n, unsigned k) {
  Complex ineg;  // i^{-(n+1)} = (-i)^{n+1}
  switch ((n + 1) & 3u) {
    case 0: ineg = {1.0, 0.0}; break;
    case 1: ineg = {0.0, -1.0}; break;
    case 2: ineg = {-1.0, 0.0}; break;
    default: ineg = {0.0, 1.0}; break;
  }
  return ineg / std::pow(kTwoPi * k, n + 1.0);
}
}  // namespace

TrigPoly::TrigPoly(std::vector<std::complex<double>> coeffs_0_to_N)
    : coeffs_(std::move(coeffs_0_to_N)) {
  if (coeffs_.empty()) coeffs_.push_back({0.0, 0.0});
  coeffs_[0].imag(0.0);  // c_0 of a real polynomial
}

std::complex<double> TrigPoly::coeff(int k) const {
  unsigned a = static_cast<unsigned>(k < 0 ? -k : k);
  if (a >= coeffs_.size()) return {0.0, 0.0};
  return k < 0 ? std::conj(coeffs_[a]) : coeffs_[a];
}

double TrigPoly::eval(double x) const {
  double acc = coeffs_[0].real();
  for (unsigned k = 1; k < coeffs_.size(); ++k) {
    double c = std::cos(kTwoPi * k * x), s = std::sin(kTwoPi * k * x);
    acc += 2.0 * (coeffs_[k].real() * c - coeffs_[k].imag() * s);
  }
  return acc;
}

double TrigPoly::coeff_mass() const {
  double m = std::abs(coeffs_[0]);
  for (unsigned k = 1; k < coeffs_.size(); ++k) m += 2.0 * std::abs(coeffs_[k]);
  return m;
}

TrigPolyRecord to_record(const TrigPoly& t) {
  TrigPolyRecord r;
  r.degree = t.degree();
  for (unsigned k = 0; k <= t.degree(); ++k)
    r.coeffs.push_back({k, t.coeffs()[k].real(), t.coeffs()[k].imag()});
  return r;
}

TrigPoly from_record(const TrigPolyRecord& r) {
  std::vector<std::complex<double>> cs(r.degree + 1, {0.0, 0.0});
  for (const auto& e : r.coeffs) {
    if (e.k > r.degree) throw std::invalid_argument("TrigPolyRecord: index beyond degree");
    cs[e.k] = {e.re, e.im};
  }
  return TrigPoly(std::move(cs));
}

TrigPoly build_extremal(unsigned n, unsigned N, ApproxKind side) {
  if (side == ApproxKind::kBestL1)
    throw std::invalid_argument("build_extremal: side must be minorant or majorant");
  ShiftTable sh = shifts(n);
  double a = (side == ApproxKind::kMinorant) ? sh.beta : sh.alpha;
  double delta = N + 1.0;
  std::vector<std::complex<double>> cs(N + 1);
  cs[0] = detail::bernoulli_value(n + 1, a) / std::pow(delta, n + 1.0);
  for (unsigned k = 1; k <= N; ++k)
    cs[k] = -0.5 * (n + 1.0) *
            (dhat(n, static_cast<double>(k), delta, a) +
             2.0 * detail::factorial(n) * inv_2piik_pow(n, k));
  return TrigPoly(std::move(cs));
}

TrigPoly build_best_l1(unsigned n, unsigned N) {
  double delta = 2.0 * N + 2.0;
  std::vector<std::complex<double>> cs(N + 1);
  cs[0] = -(n + 1.0) * phihat(n, 0.0, delta);
  for (unsigned k = 1; k <= N; ++k)
    cs[k] = -(n + 1.0) * (phihat(n, static_cast<double>(k), delta) +
                          detail::factorial(n) * inv_2piik_pow(n, k));
  return TrigPoly(std::move(cs));
}

TrigPoly build_approx(const ApproxSpec& spec) {
  if (spec.kind == ApproxKind::kBestL1) return build_best_l1(spec.n, spec.N);
  return build_extremal(spec.n, spec.N, spec.kind);
}

double mean_error(const TrigPoly& t, unsigned n) {
  (void)n;  // the periodic function has mean zero for every n >= 0
  return -t.coeffs()[0].real();
}

double l1_error(const TrigPoly& t, unsigned n, double tol) {
  if (!(tol >= 1e-10)) throw std::invalid_argument("l1_error: tol must be >= 1e-10");
  unsigned N = t.degree();
  unsigned panels = 4 * N + 4;
  // on [0,1] the polynomial itself equals the periodic function a.e. and is
  // smooth at the endpoints where the periodic function jumps
  auto f = [&](double x) { return std::abs(t.eval(x) - detail::bernoulli_value(n + 1, x)); };
  double total = 0.0;
  // the sharp error changes sign at k/(2N+2) (even n) or at the midpoints
  // (2j+1)/(4N+4) (odd n); splitting at j/(4N+4) covers both, so every
  // panel of the optimal error is smooth
  for (unsigned k = 0; k < panels; ++k) {
    double a = static_cast<double>(k) / panels;
    double b = static_cast<double>(k + 1) / panels;
    total += adaptive_integrate(f, a, b, tol / (2.0 * panels));
  }
  return total;
}

double sup_violation(const TrigPoly& t, unsigned n, ApproxKind side, unsigned gridsize) {
  if (side == ApproxKind::kBestL1)
    throw std::invalid_argument("sup_violation: side must be minorant or majorant");
  if (gridsize < 2 * t.degree() + 2) gridsize = 2 * t.degree() + 2;
  ShiftTable sh = shifts(n);
  double delta = t.degree() + 1.0;
  double sign = (side == ApproxKind::kMinorant) ? 1.0 : -1.0;
  // wrong-side deviation: minorant must satisfy T <= B, majorant B <= T
  auto dev = [&](double x) {
    double b = bernoulli_periodic(n + 1, x);
    return sign * (t.eval(x) - b);
  };
  double worst = -std::numeric_limits<double>::infinity();
  for (unsigned i = 0; i < gridsize; ++i)
    worst = std::max(worst, dev(static_cast<double>(i) / gridsize));
  double shift = (side == ApproxKind::kMinorant) ? sh.beta : sh.alpha;
  for (unsigned m = 0; m <= t.degree(); ++m) {
    double node = (shift + m) / delta;
    worst = std::max(worst, dev(node));
    for (int j = 1; j <= 8; ++j) {
      double h = j * 3e-5 / delta;
      worst = std::max(worst, dev(node + h));
      worst = std::max(worst, dev(node - h));
    }
  }
  return worst;
}

TrigPoly monomial_approx(unsigned n, unsigned N, ApproxKind kind) {
  std::vector<std::complex<double>> cs(N + 1, {0.0, 0.0});
  // (1/(n+1)) sum_{k=0}^{n} C(n+1,k) T_k, T_0 = 1
  mpz_class bincoef;
  for (unsigned k = 0; k <= n; ++k) {
    mpz_bin_uiui(bincoef.get_mpz_t(), n + 1, k);
    double wgt = bincoef.get_d() / (n + 1.0);
    if (k == 0) {
      cs[0] += wgt;
      continue;
    }
    TrigPoly tk = (kind == ApproxKind::kBestL1) ? build_best_l1(k - 1, N)
                                                : build_extremal(k - 1, N, kind);
    for (unsigned j = 0; j <= N; ++j) cs[j] += wgt * tk.coeffs()[j];
  }
  return TrigPoly(std::move(cs));
}

double sharp_l1_constant(unsigned n, unsigned N) {
  double theta = (n % 2 == 0) ? 0.0 : 0.5;
  return std::abs(detail::euler_value(n + 1, theta)) / std::pow(2.0 * N + 2.0, n + 1.0);
}

}  // namespace bpapprox
