#include "bpapprox/quadrature.hpp"

#include <cmath>

namespace bpapprox {

namespace {

struct SimpsonState {
  const std::function<double(double)>& f;
  int max_depth;
  double worst = 0.0;  // largest unsatisfied panel error seen
};

// One level of adaptive Simpson with Richardson correction.
double simpson_rec(SimpsonState& st, double a, double b, double fa, double fm, double fb,
                   double whole, double tol, int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = st.f(lm), frm = st.f(rm);
  double h = b - a;
  double left = (h / 12.0) * (fa + 4.0 * flm + fm);
  double right = (h / 12.0) * (fm + 4.0 * frm + fb);
  double err = (left + right - whole) / 15.0;
  if (depth >= st.max_depth) {
    st.worst = std::max(st.worst, std::abs(err));
    return left + right + err;
  }
  if (std::abs(err) <= tol) return left + right + err;
  return simpson_rec(st, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
         simpson_rec(st, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

}  // namespace

double adaptive_integrate(const std::function<double(double)>& f, double a, double b,
                          double tol, int max_depth) {
  if (a == b) return 0.0;
  SimpsonState st{f, max_depth};
  double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  double whole = ((b - a) / 6.0) * (fa + 4.0 * fm + fb);
  double v = simpson_rec(st, a, b, fa, fm, fb, whole, tol, 0);
  if (st.worst > tol)
    throw QuadratureError("adaptive_integrate: tolerance not reached", st.worst, v);
  return v;
}

}  // namespace bpapprox
