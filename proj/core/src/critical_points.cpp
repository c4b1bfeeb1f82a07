#include "bpapprox/critical_points.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace bpapprox {

Bracket lehmer_bracket(unsigned n) {
  double lo = 0.25 - std::pow(2.0, -2.0 * n - 1.0) / std::numbers::pi;
  return {lo, 0.25};
}

namespace {

double compute_even_zero(unsigned n) {
  const RationalPoly& b = bernoulli_polynomial(2 * n, detail::kInternalDegreeCap);
  const RationalPoly db = b.derivative();

  auto residual = [&](double x) { return b.eval(rational_from_double(x)).get_d(); };

  Bracket br = lehmer_bracket(n);
  double lo = br.lo, hi = br.hi;
  double flo = residual(lo), fhi = residual(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (flo * fhi > 0.0)
    throw std::logic_error("bernoulli_even_zero: root not bracketed (polynomial bug)");

  // Bisection down to width 1e-3, then Newton with exact residuals.
  while (hi - lo > 1e-3) {
    double mid = 0.5 * (lo + hi);
    double fm = residual(mid);
    if (fm == 0.0) return mid;
    if (flo * fm < 0.0) {
      hi = mid;
      fhi = fm;
    } else {
      lo = mid;
      flo = fm;
    }
  }

  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 64; ++it) {
    double f = residual(x);
    double d = eval_poly(db, x);
    double step = f / d;
    double next = x - step;
    if (!(next > br.lo - 1e-2 && next < br.hi + 1e-2)) next = 0.5 * (lo + hi);
    if (std::abs(next - x) < 1e-16) {
      x = next;
      break;
    }
    x = next;
  }
  return x;
}

}  // namespace

double bernoulli_even_zero(unsigned n, unsigned cap) {
  if (n < 1 || 2 * n > cap)
    throw std::domain_error("bernoulli_even_zero: need 1 <= n and 2n <= cap, got n=" +
                            std::to_string(n));
  static std::vector<double> memo;
  static std::mutex m;
  std::lock_guard<std::mutex> lock(m);
  if (memo.size() <= n) memo.resize(n + 1, -1.0);
  if (memo[n] < 0.0) memo[n] = compute_even_zero(n);
  return memo[n];
}

ShiftTable shifts(unsigned n, unsigned cap) {
  if (n + 1 > cap)
    throw std::domain_error("shifts: degree cap exceeded, n=" + std::to_string(n));
  ShiftTable t;
  t.n = n;
  t.theta = (n % 2 == 0) ? 0.0 : 0.5;
  switch (n % 4) {
    case 0:
      if (n == 0) {
        t.alpha = 1.0;  // z_0 = 0
        t.beta = 0.0;
      } else {
        t.z = bernoulli_even_zero(n / 2, cap);
        t.alpha = 1.0 - t.z;
        t.beta = t.z;
      }
      break;
    case 1:
      t.alpha = 0.0;
      t.beta = 0.5;
      break;
    case 2:
      t.z = bernoulli_even_zero(n / 2, cap);
      t.alpha = t.z;
      t.beta = 1.0 - t.z;
      break;
    default:  // 3
      t.alpha = 0.5;
      t.beta = 0.0;
      break;
  }
  return t;
}

}  // namespace bpapprox
