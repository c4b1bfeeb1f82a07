#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <fstream>
#include <sstream>

#include "bpapprox/critical_points.hpp"
#include "bpapprox/discrepancy.hpp"
#include "bpapprox/rng.hpp"
#include "bpapprox/trig_poly.hpp"

using namespace bpapprox;

TEST_CASE("point set ingestion reduces mod 1") {
  PointSet ps(std::vector<double>{1.25, -0.3, 0.0, 2.0});
  CHECK(ps.points()[0] == doctest::Approx(0.25));
  CHECK(ps.points()[1] == doctest::Approx(0.7));
  CHECK(ps.points()[2] == 0.0);
  CHECK(ps.points()[3] == 0.0);
  CHECK_THROWS_AS(PointSet(std::vector<double>{}), std::invalid_argument);

  std::istringstream in("0.5\n\n+1.75\n-0.25\n");
  PointSet fromtext = PointSet::from_stream(in);
  CHECK(fromtext.size() == 3);
  CHECK(fromtext.points()[1] == doctest::Approx(0.75));
  std::istringstream bad("0.5\nnot-a-number\n");
  CHECK_THROWS_AS(PointSet::from_stream(bad), std::runtime_error);
}

TEST_CASE("weyl sums: basic identities") {
  // all points at 0: every sum equals M
  PointSet zeros(std::vector<double>(7, 0.0));
  auto w = weyl_sums(zeros, 5);
  for (auto& v : w) CHECK(std::abs(v - std::complex<double>{7.0, 0.0}) < 1e-12);

  // equally spaced points cancel below the first resonance
  std::vector<double> eq;
  for (int m = 0; m < 12; ++m) eq.push_back(m / 12.0);
  auto we = weyl_sums(PointSet(eq), 11);
  for (auto& v : we) CHECK(std::abs(v) < 1e-11);

  // single point at 1/4, k = 1 -> e(1/4) = i
  auto wi = weyl_sums(PointSet(std::vector<double>{0.25}), 1);
  CHECK(std::abs(wi[0] - std::complex<double>{0.0, 1.0}) < 1e-15);

  CHECK_THROWS_AS(weyl_sums(zeros, 0), std::invalid_argument);
}

TEST_CASE("et_bound: zero-frequency closed form for equally spaced sets") {
  std::vector<double> eq;
  const int M = 24;
  for (int m = 0; m < M; ++m) eq.push_back(m / double(M));
  PointSet ps(eq);
  for (unsigned n : {0u, 1u, 2u, 3u}) {
    for (unsigned N : {4u, 8u}) {
      ShiftTable sh = shifts(n);
      double expect = M *
                      std::max(-detail::bernoulli_value(n + 1, sh.beta),
                               detail::bernoulli_value(n + 1, sh.alpha)) /
                      std::pow(N + 1.0, n + 1.0);
      CHECK(et_bound(ps, n, N) == doctest::Approx(expect).epsilon(1e-12));
    }
  }
}

TEST_CASE("et_bound: frozen regression value for M=1, n=0, N=1") {
  PointSet ps(std::vector<double>{0.0});
  CHECK(et_bound(ps, 0, 1) == doctest::Approx(0.5463617652643209).epsilon(1e-12));
}

TEST_CASE("et_bound: classical shape for n = 0") {
  // M/(2(N+1)) leading term plus positively weighted Weyl magnitudes
  SplitMix64 rng(99);
  std::vector<double> pts;
  for (int i = 0; i < 10; ++i) pts.push_back(rng.next_double());
  PointSet ps(pts);
  unsigned N = 6;
  auto w = weyl_sums(ps, N);
  double reassembled_lo = 10.0 / (2.0 * (N + 1));
  double reassembled_hi = reassembled_lo;
  TrigPoly lo = build_extremal(0, N, ApproxKind::kMinorant);
  TrigPoly hi = build_extremal(0, N, ApproxKind::kMajorant);
  for (unsigned k = 1; k <= N; ++k) {
    CHECK(std::abs(lo.coeffs()[k]) > 0.0);
    reassembled_lo += 2.0 * std::abs(lo.coeffs()[k]) * std::abs(w[k - 1]);
    reassembled_hi += 2.0 * std::abs(hi.coeffs()[k]) * std::abs(w[k - 1]);
  }
  CHECK(et_bound(ps, 0, N) ==
        doctest::Approx(std::max(reassembled_lo, reassembled_hi)).epsilon(1e-13));
}

TEST_CASE("brute_discrepancy: known small cases") {
  PointSet one(std::vector<double>{0.0});
  // sup |Psi| = 1/2, attained as a one-sided limit at the jump
  CHECK(brute_discrepancy(one, 0, 20000) == doctest::Approx(0.5).epsilon(1e-12));
  // n = 1: max |B_2| on [0,1] = B_2(0) = 1/6
  CHECK(brute_discrepancy(one, 1, 20000) == doctest::Approx(1.0 / 6).epsilon(1e-6));
  CHECK_THROWS_AS(brute_discrepancy(one, 0, 9), std::invalid_argument);
}

TEST_CASE("brute_discrepancy: rotation invariance on an aligned grid") {
  SplitMix64 rng(4242);
  std::vector<double> pts;
  for (int i = 0; i < 9; ++i) pts.push_back(rng.next_double());
  const unsigned G = 20000;
  double shift = 977.0 / G;  // grid-aligned rotation
  std::vector<double> shifted;
  for (double x : pts) shifted.push_back(x + shift);
  for (unsigned n : {0u, 1u, 2u}) {
    double a = brute_discrepancy(PointSet(pts), n, G);
    double b = brute_discrepancy(PointSet(shifted), n, G);
    CHECK(a == doctest::Approx(b).epsilon(1e-10));
  }
}

TEST_CASE("scaling in M: duplicating points doubles both quantities") {
  SplitMix64 rng(31);
  std::vector<double> pts;
  for (int i = 0; i < 8; ++i) pts.push_back(rng.next_double());
  std::vector<double> doubled = pts;
  doubled.insert(doubled.end(), pts.begin(), pts.end());
  for (unsigned n : {0u, 2u}) {
    CHECK(et_bound(PointSet(doubled), n, 5) ==
          doctest::Approx(2.0 * et_bound(PointSet(pts), n, 5)).epsilon(1e-13));
    CHECK(brute_discrepancy(PointSet(doubled), n, 4000) ==
          doctest::Approx(2.0 * brute_discrepancy(PointSet(pts), n, 4000)).epsilon(1e-12));
  }
}

TEST_CASE("dominance: bound >= brute on random sets") {
  SplitMix64 rng(2024);
  for (int inst = 0; inst < 10; ++inst) {
    std::vector<double> pts;
    for (int i = 0; i < 20; ++i) pts.push_back(rng.next_double());
    PointSet ps(pts);
    for (unsigned n : {0u, 1u, 2u}) {
      for (unsigned N : {4u, 16u}) {
        CHECK(et_bound(ps, n, N) >= brute_discrepancy(ps, n, 20000) - 1e-9);
      }
    }
  }
}
