#include "bpapprox/bernoulli.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace bpapprox {

namespace {

void check_cap(unsigned n, unsigned cap, const char* what) {
  if (cap > detail::kInternalDegreeCap) cap = detail::kInternalDegreeCap;
  if (n > cap)
    throw std::domain_error(std::string("degree cap exceeded in ") + what + ": n=" +
                            std::to_string(n) + " > cap=" + std::to_string(cap));
}

Rational binom(unsigned long n, unsigned long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

std::mutex table_mutex;

// Bernoulli numbers B_0..B_m via  B_m = -1/(m+1) * sum_{k<m} C(m+1,k) B_k.
const std::vector<Rational>& bernoulli_number_table(unsigned upto) {
  static std::vector<Rational> table{Rational(1)};
  std::lock_guard<std::mutex> lock(table_mutex);
  while (table.size() <= upto) {
    unsigned m = static_cast<unsigned>(table.size());
    Rational acc(0);
    for (unsigned k = 0; k < m; ++k) acc += binom(m + 1, k) * table[k];
    acc /= Rational(static_cast<unsigned long>(m) + 1);
    table.push_back(-acc);
  }
  return table;
}

// B_n(x) = sum_k C(n,k) B_k x^{n-k}
const std::vector<RationalPoly>& bernoulli_poly_table(unsigned upto) {
  static std::vector<RationalPoly> table;
  const auto& numbers = bernoulli_number_table(upto);
  std::lock_guard<std::mutex> lock(table_mutex);
  while (table.size() <= upto) {
    unsigned n = static_cast<unsigned>(table.size());
    std::vector<Rational> cs(n + 1, Rational(0));
    for (unsigned k = 0; k <= n; ++k) cs[n - k] = binom(n, k) * numbers[k];
    table.emplace_back(std::move(cs));
  }
  return table;
}

// E_n(x) = x^n - 1/2 sum_{k<n} C(n,k) E_k(x)
const std::vector<RationalPoly>& euler_poly_table(unsigned upto) {
  static std::vector<RationalPoly> table;
  std::lock_guard<std::mutex> lock(table_mutex);
  while (table.size() <= upto) {
    unsigned n = static_cast<unsigned>(table.size());
    RationalPoly p = RationalPoly::monomial(n);
    for (unsigned k = 0; k < n; ++k)
      p = p - table[k].scaled(binom(n, k) / Rational(2));
    table.push_back(std::move(p));
  }
  return table;
}

}  // namespace

const RationalPoly& bernoulli_polynomial(unsigned n, unsigned cap) {
  check_cap(n, cap, "bernoulli_polynomial");
  return bernoulli_poly_table(n)[n];
}

const RationalPoly& euler_polynomial(unsigned n, unsigned cap) {
  check_cap(n, cap, "euler_polynomial");
  return euler_poly_table(n)[n];
}

const Rational& bernoulli_number(unsigned n, unsigned cap) {
  check_cap(n, cap, "bernoulli_number");
  return bernoulli_number_table(n)[n];
}

double bernoulli_periodic(unsigned n, double x) {
  if (n < 1) throw std::domain_error("bernoulli_periodic: n must be >= 1");
  if (!std::isfinite(x)) throw std::domain_error("bernoulli_periodic: non-finite x");
  double frac = x - std::floor(x);
  if (frac >= 1.0) frac = 0.0;  // can happen for tiny negative x by rounding
  return detail::bernoulli_value(n, frac);
}

namespace detail {

double bernoulli_value(unsigned m, double x) {
  check_cap(m, kInternalDegreeCap, "bernoulli_value");
  static std::vector<std::vector<double>> cache;
  {
    std::lock_guard<std::mutex> lock(table_mutex);
    if (m < cache.size() && !cache[m].empty()) return eval_poly(cache[m], x);
  }
  std::vector<double> cs = bernoulli_poly_table(m)[m].coeffs_double();
  double v = eval_poly(cs, x);
  std::lock_guard<std::mutex> lock(table_mutex);
  if (cache.size() <= m) cache.resize(m + 1);
  cache[m] = std::move(cs);
  return v;
}

double euler_value(unsigned m, double x) {
  check_cap(m, kInternalDegreeCap, "euler_value");
  static std::vector<std::vector<double>> cache;
  {
    std::lock_guard<std::mutex> lock(table_mutex);
    if (m < cache.size() && !cache[m].empty()) return eval_poly(cache[m], x);
  }
  std::vector<double> cs = euler_poly_table(m)[m].coeffs_double();
  double v = eval_poly(cs, x);
  std::lock_guard<std::mutex> lock(table_mutex);
  if (cache.size() <= m) cache.resize(m + 1);
  cache[m] = std::move(cs);
  return v;
}

Rational euler_value_exact(unsigned m, const Rational& x) {
  check_cap(m, kInternalDegreeCap, "euler_value_exact");
  return euler_poly_table(m)[m].eval(x);
}

double two_pi_pow_over_factorial(unsigned m) {
  static std::vector<double> cache{1.0};
  std::lock_guard<std::mutex> lock(table_mutex);
  constexpr double two_pi = 2.0 * std::numbers::pi;
  while (cache.size() <= m)
    cache.push_back(cache.back() * two_pi / static_cast<double>(cache.size()));
  return cache[m];
}

double normalized_bernoulli(unsigned m, double a) {
  if (m <= 80) return bernoulli_value(m, a) * two_pi_pow_over_factorial(m);
  // Fourier route: b_m(a) = -i^{-m} sum_{j != 0} e(ja)/j^m.  For m > 80 two
  // or three terms already reach full double precision.
  double re = 0.0;
  constexpr double two_pi = 2.0 * std::numbers::pi;
  for (unsigned j = 1;; ++j) {
    double jm = std::pow(static_cast<double>(j), -static_cast<double>(m));
    double term;
    switch (m & 3u) {
      // -i^{-m} * (e(ja) + (-1)^m e(-ja)) collapses to a real cosine/sine
      case 0: term = -2.0 * std::cos(two_pi * j * a) * jm; break;   // i^{-m} = 1
      case 2: term = 2.0 * std::cos(two_pi * j * a) * jm; break;    // i^{-m} = -1
      case 1: term = -2.0 * std::sin(two_pi * j * a) * jm; break;   // m odd, i^{-m} = -i
      default: term = 2.0 * std::sin(two_pi * j * a) * jm; break;   // m = 3 mod 4
    }
    re += term;
    if (jm * 2.0 < 1e-18 || j >= 40) break;
  }
  return re;
}

}  // namespace detail

}  // namespace bpapprox
