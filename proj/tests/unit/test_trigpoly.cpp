#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bpapprox/critical_points.hpp"
#include "bpapprox/kernels.hpp"
#include "bpapprox/quadrature.hpp"
#include "bpapprox/rng.hpp"
#include "bpapprox/trig_poly.hpp"
#include "common/oracles.hpp"

using namespace bpapprox;

TEST_CASE("TrigPoly evaluation basics") {
  TrigPoly c3(std::vector<std::complex<double>>{{3.0, 0.0}});
  CHECK(c3.eval(0.123) == 3.0);
  CHECK(c3.eval(-7.5) == 3.0);

  TrigPoly cosx(std::vector<std::complex<double>>{{0.0, 0.0}, {0.5, 0.0}});  // cos(2 pi x)
  CHECK(cosx.eval(0.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(cosx.eval(0.5) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(cosx.coeff(-1) == std::conj(cosx.coeff(1)));

  TrigPoly t = build_extremal(3, 5, ApproxKind::kMajorant);
  for (double x : {0.21, 0.78}) {
    CHECK(t.eval(x + 1.0) == doctest::Approx(t.eval(x)).epsilon(1e-14));
  }
}

TEST_CASE("build_extremal: degenerate degree and sharp mean gaps") {
  // N = 0: the constants are the min/max of B_{n+1}
  for (unsigned n = 0; n <= 6; ++n) {
    ShiftTable sh = shifts(n);
    TrigPoly lo = build_extremal(n, 0, ApproxKind::kMinorant);
    TrigPoly hi = build_extremal(n, 0, ApproxKind::kMajorant);
    CHECK(lo.degree() == 0);
    CHECK(lo.eval(0.3) == doctest::Approx(detail::bernoulli_value(n + 1, sh.beta)).epsilon(1e-14));
    CHECK(hi.eval(0.9) == doctest::Approx(detail::bernoulli_value(n + 1, sh.alpha)).epsilon(1e-14));
  }
  TrigPoly v = build_extremal(0, 0, ApproxKind::kMinorant);
  CHECK(v.coeffs()[0].real() == -0.5);

  // mean_error = -c_0 identity and the closed-form gaps
  for (unsigned n = 0; n <= 4; ++n) {
    ShiftTable sh = shifts(n);
    for (unsigned N : {0u, 1u, 3u}) {
      double scale = std::pow(N + 1.0, n + 1.0);
      TrigPoly lo = build_extremal(n, N, ApproxKind::kMinorant);
      TrigPoly hi = build_extremal(n, N, ApproxKind::kMajorant);
      double glo = -detail::bernoulli_value(n + 1, sh.beta) / scale;
      double ghi = -detail::bernoulli_value(n + 1, sh.alpha) / scale;
      CHECK(mean_error(lo, n) == doctest::Approx(glo).epsilon(1e-12));
      CHECK(mean_error(hi, n) == doctest::Approx(ghi).epsilon(1e-12));
      CHECK(mean_error(lo, n) > 0.0);
      CHECK(mean_error(hi, n) < 0.0);
    }
  }

  // Vaaler case n = 0: gaps +-1/(2(N+1))
  for (unsigned N : {0u, 2u, 9u}) {
    TrigPoly lo = build_extremal(0, N, ApproxKind::kMinorant);
    TrigPoly hi = build_extremal(0, N, ApproxKind::kMajorant);
    CHECK(mean_error(lo, 0) == doctest::Approx(0.5 / (N + 1)).epsilon(1e-13));
    CHECK(mean_error(hi, 0) == doctest::Approx(-0.5 / (N + 1)).epsilon(1e-13));
  }
}

TEST_CASE("one-sidedness with node touching") {
  for (unsigned n = 0; n <= 8; ++n) {
    for (unsigned N : {0u, 2u, 7u}) {
      TrigPoly lo = build_extremal(n, N, ApproxKind::kMinorant);
      TrigPoly hi = build_extremal(n, N, ApproxKind::kMajorant);
      CHECK(sup_violation(lo, n, ApproxKind::kMinorant, 4096) <= 1e-9);
      CHECK(sup_violation(hi, n, ApproxKind::kMajorant, 4096) <= 1e-9);
      ShiftTable sh = shifts(n);
      for (unsigned m = 0; m <= N; ++m) {
        double x = (sh.beta + m) / (N + 1.0);
        CHECK(std::abs(lo.eval(x) - bernoulli_periodic(n + 1, x)) <= 1e-9);
      }
    }
  }
  // a deliberately flipped side reports a strictly positive violation
  TrigPoly lo = build_extremal(2, 3, ApproxKind::kMinorant);
  CHECK(sup_violation(lo, 2, ApproxKind::kMajorant, 4096) > 1e-3);
}

TEST_CASE("best-L1: interpolation at the parity-correct nodes") {
  for (unsigned n = 0; n <= 4; ++n) {
    for (unsigned N : {0u, 1u, 3u}) {
      TrigPoly r = build_best_l1(n, N);
      double worst = 0.0;
      if (n % 2 == 0) {
        for (unsigned k = 1; k <= 2 * N + 1; ++k) {
          double x = k / (2.0 * N + 2.0);
          worst = std::max(worst, std::abs(bernoulli_periodic(n + 1, x) - r.eval(x)));
        }
      } else {
        for (unsigned j = 0; j <= 2 * N + 1; ++j) {
          double x = (2.0 * j + 1.0) / (4.0 * N + 4.0);
          worst = std::max(worst, std::abs(bernoulli_periodic(n + 1, x) - r.eval(x)));
        }
      }
      CHECK(worst <= 1e-9);
    }
  }
}

TEST_CASE("best-L1: sharp distance and mean") {
  CHECK(build_best_l1(0, 5).coeffs()[0] == std::complex<double>{0.0, 0.0});
  CHECK(l1_error(build_best_l1(0, 0), 0, 1e-10) == doctest::Approx(0.25).epsilon(1e-10));
  // R_2 with N = 0: |E_2(1/2)|/4 = 1/16
  CHECK(l1_error(build_best_l1(1, 0), 1, 1e-10) == doctest::Approx(1.0 / 16).epsilon(1e-9));
  for (unsigned n = 0; n <= 4; ++n) {
    for (unsigned N : {0u, 1u, 3u}) {
      TrigPoly r = build_best_l1(n, N);
      CHECK(l1_error(r, n, 1e-10) ==
            doctest::Approx(sharp_l1_constant(n, N)).epsilon(1e-6));
    }
  }
  CHECK_THROWS_AS(l1_error(build_best_l1(0, 0), 0, 1e-11), std::invalid_argument);
}

TEST_CASE("best-L1: single-coefficient perturbations increase the distance") {
  SplitMix64 rng(123);
  for (unsigned n : {0u, 1u, 3u}) {
    unsigned N = 2;
    TrigPoly r = build_best_l1(n, N);
    double base = l1_error(r, n, 1e-10);
    double maxc = 0.0;
    for (auto& c : r.coeffs()) maxc = std::max(maxc, std::abs(c));
    double eps = 1e-3 * (maxc > 0 ? maxc : sharp_l1_constant(n, N));
    for (int probe = 0; probe < 8; ++probe) {
      TrigPoly p = r;
      unsigned k = (unsigned)(rng.next_u64() % (N + 1));
      double ang = 2 * oracles::kPi * rng.next_double();
      p.coeff_ref(k) += (k == 0)
                            ? std::complex<double>{eps, 0.0}
                            : eps * std::complex<double>{std::cos(ang), std::sin(ang)};
      CHECK(l1_error(p, n, 1e-10) > base);
    }
  }
}

TEST_CASE("Poisson summation consistency") {
  SplitMix64 rng(777);
  for (unsigned n = 0; n <= 4; ++n) {
    ShiftTable sh = shifts(n);
    for (unsigned N : {1u, 3u}) {
      TrigPoly lo = build_extremal(n, N, ApproxKind::kMinorant);
      for (int rep = 0; rep < 4; ++rep) {
        double x = rng.next_double();
        double lattice = 0.0;
        for (long l = -10000; l <= 10000; ++l)
          lattice += eval_d(n, x + l, N + 1.0, sh.beta);
        double rhs = 2.0 / (n + 1.0) * (bernoulli_periodic(n + 1, x) - lo.eval(x));
        CHECK(std::abs(lattice - rhs) <= 1e-5);
      }
    }
  }
}

TEST_CASE("monomial approximations by Bernoulli inversion") {
  // with exact inputs the inversion is an identity; with approximants the
  // positive weights preserve sidedness
  TrigPoly lo = monomial_approx(2, 8, ApproxKind::kMinorant);
  TrigPoly hi = monomial_approx(2, 8, ApproxKind::kMajorant);
  double worst_lo = -1e300, worst_hi = -1e300;
  for (int i = 0; i < 20000; ++i) {
    double x = i / 20000.0;
    worst_lo = std::max(worst_lo, lo.eval(x) - x * x);
    worst_hi = std::max(worst_hi, x * x - hi.eval(x));
  }
  CHECK(worst_lo <= 1e-9);
  CHECK(worst_hi <= 1e-9);

  // n = 1 identity with exact B-inputs: (1/2)(B_0 + 2 B_1(x)) = x
  {
    RationalPoly combo = bernoulli_polynomial(0).scaled(Rational(1, 2)) +
                         bernoulli_polynomial(1);
    CHECK(combo == RationalPoly::monomial(1));
  }

  // L1 error of the best-L1 combination obeys the triangle-inequality budget
  {
    unsigned n = 2, N = 4;
    TrigPoly t = monomial_approx(n, N, ApproxKind::kBestL1);
    auto f = [&](double x) { return std::abs(t.eval(x) - x * x); };
    double err = adaptive_integrate(f, 0.0, 1.0, 1e-9);
    double budget = 0.0;
    for (unsigned k = 1; k <= n; ++k) {
      mpz_class b;
      mpz_bin_uiui(b.get_mpz_t(), n + 1, k);
      budget += b.get_d() / (n + 1.0) * sharp_l1_constant(k - 1, N);
    }
    CHECK(err <= budget + 1e-9);
  }
}

TEST_CASE("serialization record round-trip") {
  TrigPoly t = build_extremal(2, 5, ApproxKind::kMajorant);
  TrigPolyRecord rec = to_record(t);
  CHECK(rec.degree == 5);
  CHECK(rec.coeffs.size() == 6);  // k = 0..N only, negative side implied
  TrigPoly back = from_record(rec);
  for (unsigned k = 0; k <= 5; ++k) CHECK(back.coeffs()[k] == t.coeffs()[k]);
}

TEST_CASE("coefficient Hermitian-structure invariant") {
  // random evaluation stays real to within the coefficient mass scale
  TrigPoly t = build_best_l1(3, 6);
  double mass = t.coeff_mass();
  SplitMix64 rng(5);
  for (int i = 0; i < 50; ++i) {
    double x = rng.next_double() * 3.0 - 1.5;
    // eval is structurally real; check it reproduces the two-sided sum
    std::complex<double> full{0.0, 0.0};
    for (int k = -(int)t.degree(); k <= (int)t.degree(); ++k) {
      double ph = 2.0 * oracles::kPi * k * x;
      full += t.coeff(k) * std::complex<double>{std::cos(ph), std::sin(ph)};
    }
    CHECK(std::abs(full.imag()) <= 1e-12 * mass);
    CHECK(std::abs(full.real() - t.eval(x)) <= 1e-12 * (1.0 + mass));
  }
}
