#pragma once

#include "bpapprox/bernoulli.hpp"

namespace bpapprox {

/// Shift parameters driving every extremal construction: B_{n+1} attains its
/// maximum on [0,1] at alpha and its minimum at beta; theta selects the
/// best-L1 interpolation offset.
struct ShiftTable {
  unsigned n = 0;
  double alpha = 0.0;  ///< argmax of B_{n+1} on [0,1]
  double beta = 0.0;   ///< argmin of B_{n+1} on [0,1]
  double theta = 0.0;  ///< 0 for even n, 1/2 for odd n
  double z = 0.0;      ///< the even-Bernoulli zero used, 0 when unused
};

/// z_{2n}: the unique zero of B_{2n} in (0, 1/2).  Lehmer's bracket
/// (1/4 - 2^{-2n-1}/pi, 1/4) localizes it; bisection plus Newton with
/// exact-rational residuals polishes to full double precision.  Results are
/// memoized and bit-identical across calls.
double bernoulli_even_zero(unsigned n, unsigned cap = kDegreeCap);

/// Lehmer bracket endpoints for z_{2n}.
struct Bracket {
  double lo;
  double hi;
};
Bracket lehmer_bracket(unsigned n);

/// The shift table (alpha_n, beta_n, theta_n):
///   n = 0:            (1, 0)
///   n = 4k   (k>0):   (1 - z_{4k},   z_{4k})
///   n = 4k+1:         (0,            1/2)
///   n = 4k+2:         (z_{4k+2},     1 - z_{4k+2})
///   n = 4k+3:         (1/2,          0)
ShiftTable shifts(unsigned n, unsigned cap = kDegreeCap);

}  // namespace bpapprox
