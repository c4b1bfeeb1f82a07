#include "bpapprox/hermitian.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "bpapprox/bernoulli.hpp"
#include "bpapprox/critical_points.hpp"
#include "bpapprox/kernels.hpp"

namespace bpapprox {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double reduce_mod1(double x) {
  double f = x - std::floor(x);
  return f >= 1.0 ? 0.0 : f;
}

double circ_dist(double a, double b) {
  double d = std::abs(a - b);
  d -= std::floor(d);
  return std::min(d, 1.0 - d);
}

// i^{-m}: real for even m; for odd m the forms are assembled so the result
// stays Hermitian.
std::complex<double> i_neg_pow(unsigned m) {
  switch (m & 3u) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, -1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, 1.0};
  }
}
}  // namespace

FormInput::FormInput(std::vector<double> nodes, std::vector<std::complex<double>> w,
                     unsigned order, PeriodicKernel k)
    : lambdas(std::move(nodes)), weights(std::move(w)), m(order), kernel(k) {
  if (lambdas.empty()) throw std::invalid_argument("FormInput: empty node set");
  if (lambdas.size() != weights.size())
    throw std::invalid_argument("FormInput: nodes/weights length mismatch");
  if (m < 1) throw std::invalid_argument("FormInput: kernel order must be >= 1");
  for (double& l : lambdas) l = reduce_mod1(l);
}

double FormInput::min_gap() const {
  if (lambdas.size() == 1) return 0.5;  // single node: any delta <= 1/2 works
  double g = 1.0;
  for (size_t r = 0; r < lambdas.size(); ++r)
    for (size_t s = r + 1; s < lambdas.size(); ++s) {
      double d = circ_dist(lambdas[r], lambdas[s]);
      if (d == 0.0)
        throw std::invalid_argument("FormInput: coincident nodes (zero circular gap)");
      g = std::min(g, d);
    }
  return g;
}

FormInput FormInput::from_stream(std::istream& in, unsigned m, PeriodicKernel k) {
  std::vector<double> nodes;
  std::vector<std::complex<double>> ws;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    double l, re, im;
    if (!(ls >> l >> re >> im))
      throw std::runtime_error("FormInput: expected 'lambda re im', got '" + line + "'");
    nodes.push_back(l);
    ws.push_back({re, im});
  }
  return FormInput(std::move(nodes), std::move(ws), m, k);
}

FormInput FormInput::from_file(const std::string& path, unsigned m, PeriodicKernel k) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("FormInput: cannot open " + path);
  return from_stream(in, m, k);
}

double hurwitz_zeta(unsigned m, double a) {
  if (m < 2) throw std::domain_error("hurwitz_zeta: order must be >= 2");
  if (!(a > 0.0)) throw std::domain_error("hurwitz_zeta: a must be positive");
  constexpr int kDirect = 50;
  double s = 0.0;
  for (int k = kDirect - 1; k >= 0; --k) s += std::pow(a + k, -static_cast<double>(m));
  // Euler-Maclaurin tail from K = kDirect:
  //   integral + f(K)/2 - f'(K)/12 + f'''(K)/720 - f^(5)(K)/30240
  double y = a + kDirect;
  double f = std::pow(y, -static_cast<double>(m));
  double dm = m;
  s += f * y / (dm - 1.0);  // integral_K^inf
  s += 0.5 * f;
  double f1 = dm * f / y;  // -f'
  s += f1 / 12.0;
  double f3 = dm * (dm + 1.0) * (dm + 2.0) * f / (y * y * y);  // -f'''
  s -= f3 / 720.0;
  double f5 = dm * (dm + 1.0) * (dm + 2.0) * (dm + 3.0) * (dm + 4.0) * f / (y * y * y * y * y);
  s += f5 / 30240.0;
  return s;
}

double zeta_int(unsigned m) { return hurwitz_zeta(m, 1.0); }

double kernel_p(unsigned m, double x) {
  double f = x - std::floor(x);
  if (f == 0.0) throw std::domain_error("kernel_p: pole at integer x");
  if (m == 1) return kPi / std::tan(kPi * f);
  double v = hurwitz_zeta(m, f);
  double w = hurwitz_zeta(m, 1.0 - f);
  return (m % 2 == 0) ? v + w : v - w;
}

double kernel_q(unsigned m, double x) {
  double f = x - std::floor(x);
  if (f == 0.0) throw std::domain_error("kernel_q: pole at integer x");
  if (m == 1) return kPi / std::sin(kPi * f);
  double scale = std::pow(2.0, -static_cast<double>(m));
  double v = hurwitz_zeta(m, 0.5 * f) - hurwitz_zeta(m, 0.5 * (f + 1.0));
  double w = hurwitz_zeta(m, 1.0 - 0.5 * f) - hurwitz_zeta(m, 0.5 * (1.0 - f));
  return scale * ((m % 2 == 0) ? v + w : v - w);
}

OptimalConstants optimal_constants(unsigned m, double delta) {
  if (m < 1 || m > kDegreeCap)
    throw std::domain_error("optimal_constants: order out of range");
  if (!(delta > 0.0)) throw std::domain_error("optimal_constants: delta must be positive");
  ShiftTable sh = shifts(m - 1);
  double scale = std::pow(kTwoPi, static_cast<double>(m)) /
                 (detail::factorial(m) * std::pow(delta, static_cast<double>(m)));
  return {scale * detail::bernoulli_value(m, sh.alpha),
          -scale * detail::bernoulli_value(m, sh.beta)};
}

std::complex<double> form_value(const FormInput& fi) {
  fi.min_gap();  // validates node separation
  auto K = (fi.kernel == PeriodicKernel::kP) ? kernel_p : kernel_q;
  std::complex<double> acc{0.0, 0.0};
  const size_t R = fi.lambdas.size();
  for (size_t r = 0; r < R; ++r)
    for (size_t s = 0; s < R; ++s) {
      if (r == s) continue;
      acc += fi.weights[r] * std::conj(fi.weights[s]) * K(fi.m, fi.lambdas[r] - fi.lambdas[s]);
    }
  return i_neg_pow(fi.m) * acc;
}

BoundsReport verify_bounds(const FormInput& fi) {
  BoundsReport rep;
  rep.delta = fi.min_gap();
  for (const auto& a : fi.weights) rep.weight_mass += std::norm(a);
  std::complex<double> v = form_value(fi);
  rep.form = v.real();
  rep.form_imag = v.imag();

  auto [L, U] = optimal_constants(fi.m, rep.delta);
  if (fi.m % 2 == 1) {
    rep.lower = -L;
    rep.upper = U;
  } else {
    // even m: the doubling argument shifts the constants by the diagonal
    // lattice contribution
    double ipm = (fi.m % 4 == 0) ? 1.0 : -1.0;  // i^{-m}
    double z = zeta_int(fi.m);
    if (fi.kernel == PeriodicKernel::kP) {
      rep.lower = -(2.0 * ipm * z + L);
      rep.upper = -2.0 * ipm * z + U;
    } else {
      double c = (2.0 - std::pow(2.0, 2.0 - static_cast<double>(fi.m))) * ipm * z;
      rep.lower = c - L;
      rep.upper = c + U;
    }
  }
  rep.lower *= rep.weight_mass;
  rep.upper *= rep.weight_mass;
  rep.slack = std::min(rep.form - rep.lower, rep.upper - rep.form);
  rep.pass = rep.slack >= -1e-9 * rep.weight_mass;
  return rep;
}

}  // namespace bpapprox
