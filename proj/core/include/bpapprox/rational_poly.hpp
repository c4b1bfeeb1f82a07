#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace bpapprox {

/// Exact rational scalar.  GMP keeps every coefficient operation exact;
/// nothing in this type ever rounds.
using Rational = mpq_class;

/// Converts a finite double to the exact rational it represents.
Rational rational_from_double(double x);

/// Univariate polynomial with exact rational coefficients, constant term
/// first.  The zero polynomial is stored as the single coefficient 0; for
/// every other polynomial the leading coefficient is nonzero.
class RationalPoly {
 public:
  RationalPoly() : coeffs_{Rational(0)} {}
  explicit RationalPoly(std::vector<Rational> coeffs);

  static RationalPoly constant(const Rational& c);
  /// The monomial x^n.
  static RationalPoly monomial(unsigned n, const Rational& c = Rational(1));

  unsigned degree() const { return static_cast<unsigned>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& coeff(unsigned k) const;

  RationalPoly operator+(const RationalPoly& rhs) const;
  RationalPoly operator-(const RationalPoly& rhs) const;
  RationalPoly scaled(const Rational& c) const;
  RationalPoly derivative() const;
  /// p(x + h), expanded exactly.
  RationalPoly translated(const Rational& h) const;

  bool operator==(const RationalPoly& rhs) const { return coeffs_ == rhs.coeffs_; }

  /// Exact Horner evaluation at a rational point.
  Rational eval(const Rational& x) const;

  /// Coefficients rounded once to double, in the same order.
  std::vector<double> coeffs_double() const;

  std::string str() const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

/// Floating-point Horner evaluation with compensated summation.  The
/// compensation keeps grid scans deterministic and near correctly rounded
/// even for high-degree polynomials with large alternating coefficients.
double eval_poly(const RationalPoly& p, double x);

/// Compensated Horner on a plain double coefficient array (constant first).
double eval_poly(const std::vector<double>& coeffs, double x);

/// Exact evaluation reference: p(x) with x taken as the exact rational the
/// double represents, rounded to double only at the end.
double eval_poly_exact(const RationalPoly& p, double x);

}  // namespace bpapprox
