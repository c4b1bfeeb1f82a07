#include "bpapprox/rational_poly.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace bpapprox {

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw std::domain_error("rational_from_double: non-finite input");
  Rational r(x);  // exact: doubles are dyadic rationals
  r.canonicalize();
  return r;
}

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_ = {Rational(0)};
  normalize();
}

RationalPoly RationalPoly::constant(const Rational& c) { return RationalPoly({c}); }

RationalPoly RationalPoly::monomial(unsigned n, const Rational& c) {
  std::vector<Rational> cs(n + 1, Rational(0));
  cs[n] = c;
  return RationalPoly(std::move(cs));
}

const Rational& RationalPoly::coeff(unsigned k) const {
  static const Rational zero(0);
  return k < coeffs_.size() ? coeffs_[k] : zero;
}

void RationalPoly::normalize() {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
}

RationalPoly RationalPoly::operator+(const RationalPoly& rhs) const {
  std::vector<Rational> out(std::max(coeffs_.size(), rhs.coeffs_.size()), Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += rhs.coeffs_[i];
  return RationalPoly(std::move(out));
}

RationalPoly RationalPoly::operator-(const RationalPoly& rhs) const {
  return *this + rhs.scaled(Rational(-1));
}

RationalPoly RationalPoly::scaled(const Rational& c) const {
  std::vector<Rational> out(coeffs_);
  for (auto& a : out) a *= c;
  return RationalPoly(std::move(out));
}

RationalPoly RationalPoly::derivative() const {
  if (coeffs_.size() == 1) return RationalPoly();
  std::vector<Rational> out(coeffs_.size() - 1);
  for (size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k] * Rational(static_cast<unsigned long>(k));
  return RationalPoly(std::move(out));
}

RationalPoly RationalPoly::translated(const Rational& h) const {
  // Horner in the shifted variable: p(x+h) built coefficient by coefficient.
  std::vector<Rational> out{Rational(0)};
  for (size_t i = coeffs_.size(); i-- > 0;) {
    // out := out * (x + h) + c_i
    std::vector<Rational> next(out.size() + 1, Rational(0));
    for (size_t k = 0; k < out.size(); ++k) {
      next[k + 1] += out[k];
      next[k] += out[k] * h;
    }
    next[0] += coeffs_[i];
    out = std::move(next);
  }
  return RationalPoly(std::move(out));
}

Rational RationalPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

std::vector<double> RationalPoly::coeffs_double() const {
  std::vector<double> out(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i].get_d();
  return out;
}

std::string RationalPoly::str() const {
  std::ostringstream os;
  for (size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] == 0 && coeffs_.size() > 1) continue;
    os << (i + 1 < coeffs_.size() ? " + " : "") << coeffs_[i].get_str();
    if (i > 0) os << "*x^" << i;
  }
  return os.str();
}

namespace {
// Error-free transformations; FMA gives the exact product remainder.
inline void two_sum(double a, double b, double& s, double& e) {
  s = a + b;
  double t = s - a;
  e = (a - (s - t)) + (b - t);
}
inline void two_prod(double a, double b, double& p, double& e) {
  p = a * b;
  e = std::fma(a, b, -p);
}

double horner_compensated(const double* c, size_t n, double x) {
  // Compensated Horner: track the rounding residue of every step and fold
  // it back at the end (roughly doubles the working precision).
  double s = c[n - 1];
  double comp = 0.0;
  for (size_t i = n - 1; i-- > 0;) {
    double p, pe, t, te;
    two_prod(s, x, p, pe);
    two_sum(p, c[i], t, te);
    s = t;
    comp = comp * x + (pe + te);
  }
  return s + comp;
}
}  // namespace

double eval_poly(const std::vector<double>& coeffs, double x) {
  if (coeffs.empty()) return 0.0;
  return horner_compensated(coeffs.data(), coeffs.size(), x);
}

double eval_poly(const RationalPoly& p, double x) {
  return eval_poly(p.coeffs_double(), x);
}

double eval_poly_exact(const RationalPoly& p, double x) {
  return p.eval(rational_from_double(x)).get_d();
}

}  // namespace bpapprox
