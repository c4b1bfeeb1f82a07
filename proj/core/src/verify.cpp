#include "bpapprox/verify.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "bpapprox/critical_points.hpp"
#include "bpapprox/hermitian.hpp"
#include "bpapprox/kernels.hpp"
#include "bpapprox/quadrature.hpp"
#include "bpapprox/rng.hpp"
#include "bpapprox/trig_poly.hpp"

namespace bpapprox {

namespace {

std::string fmt(const char* pattern, auto... args) {
  char buf[160];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

void check_abs(SuiteReport& rep, std::string name, double value, double expected, double tol) {
  bool ok = std::isfinite(value) && std::abs(value - expected) <= tol;
  rep.checks.push_back({std::move(name), ok, value, expected, tol});
}

void check_rel(SuiteReport& rep, std::string name, double value, double expected, double rtol) {
  double tol = rtol * std::abs(expected);
  bool ok = std::isfinite(value) && std::abs(value - expected) <= tol;
  rep.checks.push_back({std::move(name), ok, value, expected, tol});
}

void check_le(SuiteReport& rep, std::string name, double value, double bound) {
  bool ok = std::isfinite(value) && value <= bound;
  rep.checks.push_back({std::move(name), ok, value, bound, 0.0});
}

void check_true(SuiteReport& rep, std::string name, bool ok) {
  rep.checks.push_back({std::move(name), ok, ok ? 1.0 : 0.0, 1.0, 0.0});
}

// ---- lehmer: even-Bernoulli zeros inside their brackets ------------------
SuiteReport suite_lehmer(const VerifyParams&) {
  SuiteReport rep{"lehmer", {}};
  for (unsigned n = 1; n <= 20; ++n) {
    double z = bernoulli_even_zero(n);
    Bracket br = lehmer_bracket(n);
    check_true(rep, fmt("z_%u in bracket", 2 * n), z > br.lo && z < 0.25);
    const RationalPoly& b = bernoulli_polynomial(2 * n);
    double resid = std::abs(b.eval(rational_from_double(z)).get_d());
    double scale = std::max(std::abs(b.eval(rational_from_double(br.lo)).get_d()),
                            std::abs(b.eval(rational_from_double(br.hi)).get_d()));
    check_le(rep, fmt("residual B_%u(z)", 2 * n), resid, 1e-15 * scale);
  }
  return rep;
}

// ---- zeta: the even-Bernoulli / zeta identities ---------------------------
SuiteReport suite_zeta(const VerifyParams&) {
  SuiteReport rep{"zeta", {}};
  for (unsigned k = 1; k <= 8; ++k) {
    double b2k0 = detail::bernoulli_value(2 * k, 0.0);
    double sign = (k % 2 == 1) ? 1.0 : -1.0;
    double expected = sign * detail::factorial(2 * k) * zeta_int(2 * k) /
                      (std::pow(2.0, 2.0 * k - 1.0) * std::pow(std::numbers::pi, 2.0 * k));
    check_rel(rep, fmt("B_%u(0) vs zeta(%u)", 2 * k, 2 * k), b2k0, expected, 1e-12);

    const RationalPoly& b = bernoulli_polynomial(2 * k);
    Rational lhs = b.eval(Rational(1, 2));
    Rational factor = Rational(1) - Rational(1) / Rational(mpz_class(1) << (2 * k - 1));
    Rational rhs = -factor * b.eval(Rational(0));
    check_true(rep, fmt("B_%u(1/2) half-identity exact", 2 * k), lhs == rhs);
  }
  return rep;
}

// ---- extremal: one-sidedness and sharp mean gaps --------------------------
SuiteReport suite_extremal(const VerifyParams& p) {
  SuiteReport rep{"extremal", {}};
  for (unsigned n = 0; n <= 8; ++n) {
    for (unsigned N : {0u, 1u, 2u, 3u, 7u, 15u}) {
      TrigPoly lo = build_extremal(n, N, ApproxKind::kMinorant);
      TrigPoly hi = build_extremal(n, N, ApproxKind::kMajorant);
      check_le(rep, fmt("sidedness min n=%u N=%u", n, N),
               sup_violation(lo, n, ApproxKind::kMinorant, p.grid), p.tolerance);
      check_le(rep, fmt("sidedness maj n=%u N=%u", n, N),
               sup_violation(hi, n, ApproxKind::kMajorant, p.grid), p.tolerance);
    }
  }
  for (unsigned n = 0; n <= 4; ++n) {
    ShiftTable sh = shifts(n);
    for (unsigned N : {0u, 1u, 3u}) {
      double scale = std::pow(N + 1.0, n + 1.0);
      TrigPoly lo = build_extremal(n, N, ApproxKind::kMinorant);
      TrigPoly hi = build_extremal(n, N, ApproxKind::kMajorant);
      double gap_lo = -detail::bernoulli_value(n + 1, sh.beta) / scale;
      double gap_hi = -detail::bernoulli_value(n + 1, sh.alpha) / scale;
      check_rel(rep, fmt("mean gap min n=%u N=%u", n, N), mean_error(lo, n), gap_lo, 1e-12);
      check_rel(rep, fmt("mean gap maj n=%u N=%u", n, N), mean_error(hi, n), gap_hi, 1e-12);
      // independent route: quadrature of the gap itself
      auto gap_quad = [&](const TrigPoly& t) {
        return adaptive_integrate(
            [&](double x) { return detail::bernoulli_value(n + 1, x) - t.eval(x); }, 0.0, 1.0,
            1e-10);
      };
      check_abs(rep, fmt("mean gap quad min n=%u N=%u", n, N), gap_quad(lo), gap_lo, 1e-8);
      check_abs(rep, fmt("mean gap quad maj n=%u N=%u", n, N), gap_quad(hi), gap_hi, 1e-8);
    }
  }
  return rep;
}

// ---- interp: touching at the interpolation nodes --------------------------
SuiteReport suite_interp(const VerifyParams&) {
  SuiteReport rep{"interp", {}};
  for (unsigned n = 0; n <= 4; ++n) {
    ShiftTable sh = shifts(n);
    for (unsigned N : {0u, 1u, 3u}) {
      TrigPoly lo = build_extremal(n, N, ApproxKind::kMinorant);
      double worst = 0.0;
      for (unsigned m = 0; m <= N; ++m) {
        double x = (sh.beta + m) / (N + 1.0);
        worst = std::max(worst, std::abs(bernoulli_periodic(n + 1, x) - lo.eval(x)));
      }
      check_le(rep, fmt("P nodes n=%u N=%u", n, N), worst, 1e-9);

      TrigPoly r = build_best_l1(n, N);
      worst = 0.0;
      for (unsigned k = 1; k <= 2 * N + 1; ++k) {
        double x = k / (2.0 * N + 2.0);
        worst = std::max(worst, std::abs(bernoulli_periodic(n + 1, x) - r.eval(x)));
      }
      check_le(rep, fmt("R nodes n=%u N=%u", n, N), worst, 1e-9);
    }
  }
  return rep;
}

// ---- l1: sharp best-L1 distance and local optimality ----------------------
SuiteReport suite_l1(const VerifyParams& p) {
  SuiteReport rep{"l1", {}};
  SplitMix64 rng(p.seed ^ 0x11u);
  for (unsigned n = 0; n <= 4; ++n) {
    for (unsigned N : {0u, 1u, 3u}) {
      TrigPoly r = build_best_l1(n, N);
      double sharp = sharp_l1_constant(n, N);
      double got = l1_error(r, n, 1e-10);
      check_rel(rep, fmt("L1 sharp n=%u N=%u", n, N), got, sharp, 1e-6);
      if (n == 0)
        check_rel(rep, fmt("L1 vaaler N=%u", N), sharp, 1.0 / (4.0 * N + 4.0), 1e-12);

      double maxc = 0.0;
      for (unsigned k = 0; k <= N; ++k) maxc = std::max(maxc, std::abs(r.coeffs()[k]));
      double eps = 1e-3 * (maxc > 0.0 ? maxc : sharp);
      bool all_increase = true;
      for (int probe = 0; probe < 20; ++probe) {
        TrigPoly perturbed = r;
        unsigned k = static_cast<unsigned>(rng.next_u64() % (N + 1));
        double angle = 2.0 * std::numbers::pi * rng.next_double();
        std::complex<double> dc =
            (k == 0) ? std::complex<double>{(rng.next_double() < 0.5 ? -eps : eps), 0.0}
                     : eps * std::complex<double>{std::cos(angle), std::sin(angle)};
        perturbed.coeff_ref(k) += dc;
        double l1p = l1_error(perturbed, n, 1e-10);
        if (!(l1p > got)) all_increase = false;
      }
      check_true(rep, fmt("L1 optimality probe n=%u N=%u", n, N), all_increase);
    }
  }
  return rep;
}

// ---- poisson: time-domain lattice sum against the coefficient domain ------
SuiteReport suite_poisson(const VerifyParams& p) {
  SuiteReport rep{"poisson", {}};
  SplitMix64 rng(p.seed ^ 0x22u);
  constexpr long kRange = 10000;
  for (unsigned n = 0; n <= 4; ++n) {
    ShiftTable sh = shifts(n);
    for (unsigned N : {1u, 3u}) {
      double delta = N + 1.0;
      TrigPoly lo = build_extremal(n, N, ApproxKind::kMinorant);
      double worst = 0.0;
      for (int i = 0; i < 100; ++i) {
        double x = rng.next_double();
        double lattice = 0.0;
        for (long l = -kRange; l <= kRange; ++l)
          lattice += eval_d(n, x + l, delta, sh.beta);
        double coeff_side =
            2.0 / (n + 1.0) * (bernoulli_periodic(n + 1, x) - lo.eval(x));
        worst = std::max(worst, std::abs(lattice - coeff_side));
      }
      check_le(rep, fmt("poisson n=%u N=%u", n, N), worst, 1e-5);
    }
  }
  return rep;
}

}  // namespace

bool SuiteReport::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names{"extremal", "interp", "l1",
                                              "poisson",  "lehmer", "zeta"};
  return names;
}

std::vector<SuiteReport> run_verify(const std::string& suite, const VerifyParams& params) {
  auto dispatch = [&](const std::string& s) -> SuiteReport {
    if (s == "extremal") return suite_extremal(params);
    if (s == "interp") return suite_interp(params);
    if (s == "l1") return suite_l1(params);
    if (s == "poisson") return suite_poisson(params);
    if (s == "lehmer") return suite_lehmer(params);
    if (s == "zeta") return suite_zeta(params);
    throw std::invalid_argument("unknown verify suite: " + s);
  };
  std::vector<SuiteReport> out;
  if (suite == "all") {
    for (const auto& s : verify_suite_names()) out.push_back(dispatch(s));
  } else {
    out.push_back(dispatch(suite));
  }
  return out;
}

}  // namespace bpapprox
