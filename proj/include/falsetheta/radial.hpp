#pragma once

// High-precision evaluation of the character series along the radial path
// q = zeta_N^M e^{-t}, and Richardson-style extrapolation of t -> 0 against
// the exact limits.  The asymptotic tail is controlled with exact L-values:
// after subtracting the t and t^2 terms the remainder is c0 + O(t^3), which a
// two-parameter {1, t^3} least-squares fit recovers far below the tolerance.

#include <complex>
#include <vector>

#include "falsetheta/bigfloat.hpp"
#include "falsetheta/nested_sums.hpp"

namespace falsetheta {

struct RadialPath {
  long N = 1;
  long M = 1;
  std::vector<long> t_exponents;  // sample points t = 2^{-e}
  long precision = 160;           // mpfr bits; at least 106
};

RadialPath default_radial_path(long N, long M);

// multiplier * sum_{n >= 1} chi(n) e^{2 pi i M n^2 / (D N)} e^{-t n^2 / D},
// summed until the remaining tail is below the working precision.
BigComplex radial_series_value(Family fam, long m, long a, long N, long M,
                               const BigFloat& t);

struct RadialExtrapolation {
  BigComplex value;                  // extrapolated t -> 0 constant term
  std::complex<double> limit;        // double view of `value`
  double fit_residual = 0;           // max |sample - fit| over the path
  bool well_conditioned = false;
};

RadialExtrapolation extrapolate_limit(Family fam, long m, long a, const RadialPath& path);

// |extrapolated - exact radial limit|, as a double.
double radial_limit_abs_error(Family fam, long m, long a, const RadialPath& path);

}  // namespace falsetheta
