#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>

#include "doctest.h"
#include "falsetheta/radial.hpp"

using namespace falsetheta;

namespace {

std::complex<double> double_series(Family fam, long m, long a, long N, long M, double t) {
  const FamilyInfo info = family_info(fam, m, a);
  std::complex<double> acc{0.0, 0.0};
  const std::complex<double> log_w{-t / info.D, 2.0 * M_PI * M / (info.D * N)};
  for (long n = 1; n <= 2000; ++n) {
    const int sign = info.chi(n);
    if (sign == 0) continue;
    acc += double(sign) * std::exp(log_w * double(n * n));
  }
  return info.multiplier.get_d() * acc;
}

}  // namespace

TEST_CASE("path validation") {
  RadialPath p = default_radial_path(3, 1);
  CHECK(p.t_exponents.size() == 7);
  p.precision = 100;
  CHECK_THROWS_AS((void)extrapolate_limit(Family::hikami, 2, 0, p), std::invalid_argument);
  p = default_radial_path(4, 2);
  CHECK_THROWS_AS((void)extrapolate_limit(Family::hikami, 2, 0, p), std::invalid_argument);
  p = default_radial_path(3, 1);
  p.t_exponents = {14, 15};
  CHECK_THROWS_AS((void)extrapolate_limit(Family::hikami, 2, 0, p), std::invalid_argument);
  CHECK_THROWS_AS(
      (void)radial_series_value(Family::hikami, 2, 0, 3, 1, BigFloat::from_long(0, 160)),
      std::invalid_argument);
}

TEST_CASE("series values match a direct double-precision sum") {
  const double t = 1.0 / 64.0;
  for (auto [fam, m, a, N, M] :
       {std::tuple<Family, long, long, long, long>{Family::hikami, 2, 0, 1, 1},
        {Family::hikami, 3, 1, 2, 1},
        {Family::example1, 2, 0, 3, 2},
        {Family::example2, 3, 0, 3, 1},
        {Family::example3, 2, 0, 5, 3}}) {
    const BigComplex big =
        radial_series_value(fam, m, a, N, M, BigFloat::from_double(t, 160));
    const std::complex<double> ref = double_series(fam, m, a, N, M, t);
    CAPTURE(family_name(fam));
    CAPTURE(m);
    CHECK(std::abs(big.to_complex_double() - ref) < 1e-9);
  }
}

TEST_CASE("extrapolation reaches the exact limits") {
  struct Point {
    Family fam;
    long m, a, N, M;
  };
  const Point points[] = {
      {Family::hikami, 2, 0, 1, 1},  {Family::hikami, 3, 1, 1, 1},
      {Family::hikami, 4, 2, 3, 2},  {Family::example1, 2, 0, 3, 1},
      {Family::example2, 3, 0, 1, 1}, {Family::example3, 3, 1, 5, 2},
  };
  for (const Point& p : points) {
    const RadialPath path = default_radial_path(p.N, p.M);
    const RadialExtrapolation fit = extrapolate_limit(p.fam, p.m, p.a, path);
    CAPTURE(family_name(p.fam));
    CAPTURE(p.m);
    CAPTURE(p.N);
    CHECK(fit.well_conditioned);
    // The {1, s^3} fit leaves only the s^3 model error, far below the
    // acceptance tolerance of 1e-6.
    CHECK(fit.fit_residual < 1e-9);
    CHECK(radial_limit_abs_error(p.fam, p.m, p.a, path) < 1e-8);
  }
}
