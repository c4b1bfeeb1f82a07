#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>

#include "bpapprox/critical_points.hpp"

using namespace bpapprox;

TEST_CASE("z_2 closed form") {
  double expected = (3.0 - std::sqrt(3.0)) / 6.0;
  CHECK(std::abs(bernoulli_even_zero(1) - expected) < 2e-16);
}

TEST_CASE("Lehmer bracket holds for n = 1..10") {
  for (unsigned n = 1; n <= 10; ++n) {
    double z = bernoulli_even_zero(n);
    Bracket br = lehmer_bracket(n);
    CHECK(z > br.lo);
    CHECK(z < br.hi);
  }
}

TEST_CASE("exact residual at the rounded root") {
  for (unsigned n = 1; n <= 16; ++n) {
    double z = bernoulli_even_zero(n);
    const RationalPoly& b = bernoulli_polynomial(2 * n);
    double resid = std::abs(b.eval(rational_from_double(z)).get_d());
    Bracket br = lehmer_bracket(n);
    double scale = std::max(std::abs(eval_poly_exact(b, br.lo)),
                            std::abs(eval_poly_exact(b, br.hi)));
    CHECK(resid <= 1e-15 * scale);
  }
}

TEST_CASE("determinism: repeated calls bit-identical") {
  for (unsigned n : {1u, 5u, 12u}) {
    double a = bernoulli_even_zero(n);
    double b = bernoulli_even_zero(n);
    CHECK(std::memcmp(&a, &b, sizeof a) == 0);
  }
}

TEST_CASE("shift table base cases") {
  ShiftTable t0 = shifts(0);
  CHECK(t0.alpha == 1.0);
  CHECK(t0.beta == 0.0);
  CHECK(t0.theta == 0.0);

  ShiftTable t1 = shifts(1);
  CHECK(t1.alpha == 0.0);
  CHECK(t1.beta == 0.5);
  CHECK(t1.theta == 0.5);

  ShiftTable t2 = shifts(2);
  CHECK(t2.alpha == doctest::Approx(0.2113248654).epsilon(1e-9));
  CHECK(t2.beta == doctest::Approx(0.7886751346).epsilon(1e-9));
  CHECK(t2.alpha == bernoulli_even_zero(1));
}

TEST_CASE("shift table structure") {
  for (unsigned n = 0; n <= 24; ++n) {
    ShiftTable t = shifts(n);
    CHECK(t.theta == ((n % 2) ? 0.5 : 0.0));
    if (n % 2 == 1) {
      bool zero_half = (t.alpha == 0.0 && t.beta == 0.5) || (t.alpha == 0.5 && t.beta == 0.0);
      CHECK(zero_half);
    } else if (n > 0) {
      CHECK(t.alpha + t.beta == doctest::Approx(1.0).epsilon(1e-15));
      CHECK(t.z > 0.0);
      CHECK(t.z < 0.25);
    }
  }
}

TEST_CASE("grid attainment of the extremizers of B_{n+1}") {
  // locate the argmax/argmin on a 1e5 grid, then refine by golden section;
  // the refined point must agree with the shift table to 1e-6
  auto refine = [](auto&& f, double a, double b) {
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    for (int it = 0; it < 60; ++it) {
      if (f(c) > f(d)) {
        b = d;
      } else {
        a = c;
      }
      c = b - gr * (b - a);
      d = a + gr * (b - a);
    }
    return 0.5 * (a + b);
  };
  const int G = 100000;
  for (unsigned n = 0; n <= 16; ++n) {
    ShiftTable t = shifts(n);
    auto f = [&](double x) { return detail::bernoulli_value(n + 1, x); };
    int imax = 0, imin = 0;
    double vmax = -1e300, vmin = 1e300;
    for (int i = 0; i <= G; ++i) {
      double v = f(i / double(G));
      if (v > vmax) {
        vmax = v;
        imax = i;
      }
      if (v < vmin) {
        vmin = v;
        imin = i;
      }
    }
    double h = 2.0 / G;
    double amax = refine(f, std::max(0.0, imax / double(G) - h),
                         std::min(1.0, imax / double(G) + h));
    double amin = refine([&](double x) { return -f(x); },
                         std::max(0.0, imin / double(G) - h),
                         std::min(1.0, imin / double(G) + h));
    CHECK(std::abs(amax - t.alpha) <= 1e-6);
    CHECK(std::abs(amin - t.beta) <= 1e-6);
  }
}

TEST_CASE("cap errors") {
  CHECK_THROWS_AS(bernoulli_even_zero(0), std::domain_error);
  CHECK_THROWS_AS(bernoulli_even_zero(33), std::domain_error);
  CHECK_THROWS_AS(shifts(kDegreeCap), std::domain_error);
}
