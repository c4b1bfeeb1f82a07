#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

namespace bpapprox {

/// A finite point multiset on the circle, every value reduced to [0,1).
class PointSet {
 public:
  explicit PointSet(const std::vector<double>& points);

  const std::vector<double>& points() const { return points_; }
  size_t size() const { return points_.size(); }

  /// Reads one decimal value per line; blank lines are skipped.
  static PointSet from_stream(std::istream& in);
  static PointSet from_file(const std::string& path);

 private:
  std::vector<double> points_;
};

/// Weyl sums W_k = sum_m e(k x_m) for k = 1..N.
std::vector<std::complex<double>> weyl_sums(const PointSet& ps, unsigned N);

/// Upper bound for the generalized discrepancy sup_y |sum_m B_{n+1}(x_m-y)|
/// assembled from the one-sided approximant coefficients and |W_k|:
///   max over side of  M |c_0| + 2 sum_{k=1..N} |c_k| |W_k|.
double et_bound(const PointSet& ps, unsigned n, unsigned N);

/// Grid lower bound for the same sup: max over a uniform y-grid of
/// |sum_m B_{n+1}(x_m - y)|, with one-sided limits sampled at every y = x_m
/// when n = 0 (the sawtooth jumps there).
double brute_discrepancy(const PointSet& ps, unsigned n, unsigned grid);

}  // namespace bpapprox
