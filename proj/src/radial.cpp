#include "falsetheta/radial.hpp"

#include <numeric>
#include <stdexcept>

#include "falsetheta/characters.hpp"

namespace falsetheta {

namespace {

void validate_path(const RadialPath& path) {
  if (path.N < 1 || path.M < 1 || path.M > path.N || std::gcd(path.M, path.N) != 1)
    throw std::invalid_argument("radial path needs 1 <= M <= N with gcd(M, N) = 1");
  if (path.precision < 106)
    throw std::invalid_argument("radial extrapolation needs at least 106 bits");
  if (path.t_exponents.size() < 3)
    throw std::invalid_argument("radial path needs at least three sample points");
  for (long e : path.t_exponents)
    if (e < 1 || e > 60) throw std::invalid_argument("radial t exponents must lie in [1, 60]");
}

BigComplex scaled(const BigComplex& z, const BigFloat& s) {
  return BigComplex(z.re * s, z.im * s);
}

}  // namespace

RadialPath default_radial_path(long N, long M) {
  RadialPath path;
  path.N = N;
  path.M = M;
  path.t_exponents = {14, 15, 16, 17, 18, 19, 20};
  path.precision = 160;
  return path;
}

BigComplex radial_series_value(Family fam, long m, long a, long N, long M,
                               const BigFloat& t) {
  if (N < 1 || M < 1 || M > N || std::gcd(M, N) != 1)
    throw std::invalid_argument("radial point needs 1 <= M <= N with gcd(M, N) = 1");
  if (!(BigFloat::from_long(0, t.precision()) < t))
    throw std::invalid_argument("radial offset t must be positive");
  const FamilyInfo info = family_info(fam, m, a);
  const long D = info.D;
  const mpfr_prec_t prec = t.precision();

  // w = e^{2 pi i M / (D N) - t / D}; the summand for index n is w^{n^2},
  // kept incrementally: v_{n+1} = v_n * step_n, step_{n+1} = step_n * w^2.
  const BigFloat two_pi = BigFloat::from_long(2, prec) * BigFloat::pi(prec);
  const BigFloat angle = two_pi * BigFloat::from_rational(make_rational(M, D * N), prec);
  auto [cs, sn] = sin_cos(angle);
  const BigFloat radius = exp(-(t / BigFloat::from_long(D, prec)));
  const BigComplex w(radius * cs, radius * sn);
  const BigComplex w2 = w * w;

  const BigFloat cutoff = BigFloat::from_rational(
      Rational(Integer(1), Integer(1) << static_cast<unsigned long>(prec + 16)), prec);
  BigComplex value(prec);
  BigComplex v(BigFloat::from_long(1, prec), BigFloat::from_long(0, prec));
  BigComplex step = w;
  BigFloat v_mag = BigFloat::from_long(1, prec);
  const BigFloat radius2 = radius * radius;
  BigFloat step_mag = radius;
  for (long n = 1;; ++n) {
    v = v * step;
    v_mag = v_mag * step_mag;
    step = step * w2;
    step_mag = step_mag * radius2;
    const int sign = info.chi(n);
    if (sign > 0) value += v;
    if (sign < 0) value -= v;
    // Later terms only shrink, so the tail is below v_mag times a modest
    // geometric factor once v_mag clears the (guarded) cutoff.
    if (v_mag < cutoff) break;
  }
  const BigFloat mult = BigFloat::from_rational(info.multiplier, prec);
  return scaled(value, mult);
}

RadialExtrapolation extrapolate_limit(Family fam, long m, long a, const RadialPath& path) {
  validate_path(path);
  const FamilyInfo info = family_info(fam, m, a);
  const mpfr_prec_t prec = path.precision;
  const long D = info.D;

  const TwistedPeriodicFunction twisted(info.chi, D, path.N, path.M);
  const BigComplex l2 = complex_approximation(L_value(twisted, 2), prec);
  const BigComplex l4 = complex_approximation(L_value(twisted, 4), prec);
  const BigFloat mult = BigFloat::from_rational(info.multiplier, prec);
  const BigFloat half = BigFloat::from_rational(Rational(1, 2), prec);

  std::vector<BigFloat> s3;
  std::vector<BigComplex> g;
  for (long e : path.t_exponents) {
    const BigFloat t = BigFloat::from_rational(
        Rational(Integer(1), Integer(1) << static_cast<unsigned long>(e)), prec);
    const BigComplex f = radial_series_value(fam, m, a, path.N, path.M, t);
    const BigFloat s = t / BigFloat::from_long(D, prec);
    // F(t) = c0 - mult L(-2) s + mult L(-4) s^2/2 + O(s^3)
    BigComplex adjusted = f + scaled(l2, mult * s) - scaled(l4, mult * half * s * s);
    s3.push_back(s * s * s);
    g.push_back(adjusted);
  }

  const size_t n = s3.size();
  BigFloat sum_s(prec), sum_ss(prec);
  BigComplex sum_g(prec), sum_sg(prec);
  for (size_t i = 0; i < n; ++i) {
    sum_s += s3[i];
    sum_ss += s3[i] * s3[i];
    sum_g += g[i];
    sum_sg += scaled(g[i], s3[i]);
  }
  const BigFloat count = BigFloat::from_long(static_cast<long>(n), prec);
  const BigFloat den = count * sum_ss - sum_s * sum_s;

  RadialExtrapolation out;
  out.well_conditioned = !den.is_zero();
  if (!out.well_conditioned) return out;
  const BigFloat inv_den = BigFloat::from_long(1, prec) / den;
  const BigComplex c0 = scaled(scaled(sum_g, sum_ss) - scaled(sum_sg, sum_s), inv_den);
  const BigComplex c1 = scaled(scaled(sum_sg, count) - scaled(sum_g, sum_s), inv_den);

  BigFloat worst(prec);
  for (size_t i = 0; i < n; ++i) {
    const BigComplex residual = g[i] - c0 - scaled(c1, s3[i]);
    const BigFloat r = residual.abs();
    if (worst < r) worst = r;
  }
  out.value = c0;
  out.limit = c0.to_complex_double();
  out.fit_residual = worst.to_double();
  return out;
}

double radial_limit_abs_error(Family fam, long m, long a, const RadialPath& path) {
  const RadialExtrapolation fit = extrapolate_limit(fam, m, a, path);
  if (!fit.well_conditioned) return 1.0;
  const CyclotomicNumber exact = radial_limit_exact(fam, m, a, path.N, path.M);
  const BigComplex target = complex_approximation(exact, path.precision);
  return (fit.value - target).abs().to_double();
}

}  // namespace falsetheta
