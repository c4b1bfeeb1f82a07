#include "bpapprox/discrepancy.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "bpapprox/bernoulli.hpp"
#include "bpapprox/trig_poly.hpp"

namespace bpapprox {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double reduce_mod1(double x) {
  double f = x - std::floor(x);
  return f >= 1.0 ? 0.0 : f;
}

// |P^(k)| tables per (n, N, side), built once.
const std::vector<double>& coeff_magnitudes(unsigned n, unsigned N, ApproxKind side) {
  static std::map<std::tuple<unsigned, unsigned, ApproxKind>, std::vector<double>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(n, N, side);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  TrigPoly t = build_extremal(n, N, side);
  std::vector<double> mag(N + 1);
  for (unsigned k = 0; k <= N; ++k) mag[k] = std::abs(t.coeffs()[k]);
  return cache.emplace(key, std::move(mag)).first->second;
}
}  // namespace

PointSet::PointSet(const std::vector<double>& points) {
  if (points.empty()) throw std::invalid_argument("PointSet: needs at least one point");
  points_.reserve(points.size());
  for (double x : points) {
    if (!std::isfinite(x)) throw std::invalid_argument("PointSet: non-finite point");
    points_.push_back(reduce_mod1(x));
  }
}

PointSet PointSet::from_stream(std::istream& in) {
  std::vector<double> pts;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    double v;
    if (ls >> v) pts.push_back(v);
    else if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos)
      throw std::runtime_error("PointSet: unparsable line '" + line + "'");
  }
  return PointSet(pts);
}

PointSet PointSet::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("PointSet: cannot open " + path);
  return from_stream(in);
}

std::vector<std::complex<double>> weyl_sums(const PointSet& ps, unsigned N) {
  if (N < 1) throw std::invalid_argument("weyl_sums: N must be >= 1");
  std::vector<std::complex<double>> out(N, {0.0, 0.0});
  for (double x : ps.points()) {
    for (unsigned k = 1; k <= N; ++k) {
      double a = kTwoPi * k * x;
      out[k - 1] += std::complex<double>{std::cos(a), std::sin(a)};
    }
  }
  return out;
}

double et_bound(const PointSet& ps, unsigned n, unsigned N) {
  auto w = weyl_sums(ps, std::max(1u, N));
  double M = static_cast<double>(ps.size());
  double best = 0.0;
  for (ApproxKind side : {ApproxKind::kMinorant, ApproxKind::kMajorant}) {
    const auto& mag = coeff_magnitudes(n, N, side);
    double b = M * mag[0];
    for (unsigned k = 1; k <= N; ++k) b += 2.0 * mag[k] * std::abs(w[k - 1]);
    best = std::max(best, b);
  }
  return best;
}

double brute_discrepancy(const PointSet& ps, unsigned n, unsigned grid) {
  if (grid < 10) throw std::invalid_argument("brute_discrepancy: grid must be >= 10");
  const auto& xs = ps.points();
  auto sum_at = [&](double y) {
    double s = 0.0;
    for (double x : xs) s += bernoulli_periodic(n + 1, x - y);
    return std::abs(s);
  };
  double worst = 0.0;
  for (unsigned i = 0; i < grid; ++i)
    worst = std::max(worst, sum_at(static_cast<double>(i) / grid));
  if (n == 0) {
    // sample the one-sided limits at every jump y = x_m: the sawtooth term
    // for x_j - y integer contributes -1/2 from one side and +1/2 from the
    // other while the rest is continuous
    for (double y : xs) {
      double cont = 0.0;
      int jumps = 0;
      for (double x : xs) {
        double diff = x - y;
        if (diff == std::floor(diff)) ++jumps;
        else cont += bernoulli_periodic(1, diff);
      }
      worst = std::max(worst, std::abs(cont - 0.5 * jumps));
      worst = std::max(worst, std::abs(cont + 0.5 * jumps));
    }
  }
  return worst;
}

}  // namespace bpapprox
