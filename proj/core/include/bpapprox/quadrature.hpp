#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace bpapprox {

/// Raised when adaptive refinement hits its depth limit before reaching the
/// requested tolerance; carries the best estimate reached.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& msg, double achieved, double value)
      : std::runtime_error(msg), achieved_(achieved), value_(value) {}
  double achieved() const { return achieved_; }
  double value() const { return value_; }

 private:
  double achieved_;
  double value_;
};

/// Adaptive Simpson integration of f over [a, b] to absolute tolerance tol.
/// Handles integrands with isolated kinks (absolute values of smooth
/// functions) by plain bisection refinement.
double adaptive_integrate(const std::function<double(double)>& f, double a, double b,
                          double tol, int max_depth = 48);

}  // namespace bpapprox
