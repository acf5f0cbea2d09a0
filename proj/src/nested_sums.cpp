#include "falsetheta/nested_sums.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>

namespace falsetheta {

namespace {

long triangular(long v) { return v * (v + 1) / 2; }

// Largest v >= 0 with base * v (v + 1) / 2 <= K, and with base * v^2 <= K.
long outer_index_bound(long base, long K) {
  long v = 0;
  while (base * triangular(v + 1) <= K) ++v;
  return v;
}

TruncatedQSeries n1_factor_series(const ChainShape& shape, long u, long K) {
  TruncatedQSeries value = TruncatedQSeries::one(K);
  switch (shape.numerator) {
    case NumeratorKind::none:
      break;
    case NumeratorKind::q_q2:
      value = mul(value, to_series(pochhammer(Sign::plus, 1, 2, u), K));
      break;
  }
  switch (shape.denominator) {
    case DenominatorKind::none:
      break;
    case DenominatorKind::neg_q:
      value = mul(value, invert_unit(to_series(pochhammer(Sign::minus, 1, 1, u), K)));
      break;
    case DenominatorKind::neg_q_2n1p1:
      value = mul(value, invert_unit(to_series(pochhammer(Sign::minus, 1, 1, 2 * u + 1), K)));
      break;
    case DenominatorKind::neg_q_q2_delta:
      value = mul(value, invert_unit(to_series(
                             pochhammer(Sign::minus, 1, 2, u + (shape.delta_position == 0 ? 1 : 0)), K)));
      break;
  }
  return value;
}

CyclotomicNumber n1_factor_at(const ChainShape& shape, long u, const CyclotomicNumber& q) {
  CyclotomicNumber value = CyclotomicNumber::one(q.order());
  switch (shape.numerator) {
    case NumeratorKind::none:
      break;
    case NumeratorKind::q_q2:
      value *= pochhammer_at(Sign::plus, 1, 2, u, q);
      break;
  }
  switch (shape.denominator) {
    case DenominatorKind::none:
      break;
    case DenominatorKind::neg_q:
      value *= invert(pochhammer_at(Sign::minus, 1, 1, u, q));
      break;
    case DenominatorKind::neg_q_2n1p1:
      value *= invert(pochhammer_at(Sign::minus, 1, 1, 2 * u + 1, q));
      break;
    case DenominatorKind::neg_q_q2_delta:
      value *= invert(pochhammer_at(Sign::minus, 1, 2, u + (shape.delta_position == 0 ? 1 : 0), q));
      break;
  }
  return value;
}

// Tables X_i(v) = sum over n_1 <= ... <= n_i of all chain factors given
// n_{i+1} = v, for i = 1..length.  Returns X_length over v in [0, vtop].
// Each level's extent is derived from the one above: the delta marker fires
// at most once, so the extent grows by at most one along the whole chain.
std::vector<TruncatedQSeries> chain_series_table(const ChainShape& shape, long length,
                                                 long vtop, long K) {
  assert(length >= 1);
  const long b = shape.base;
  std::vector<long> need(length + 1);
  need[length] = vtop;
  for (long i = length; i >= 1; --i)
    need[i - 1] = need[i] + ((i == shape.delta_position) ? 1 : 0);

  std::vector<TruncatedQSeries> prev;
  for (long i = 1; i <= length; ++i) {
    const long delta = (i == shape.delta_position) ? 1 : 0;
    const bool windowed = i >= shape.window_start;
    std::vector<TruncatedQSeries> cur(need[i] + 1, TruncatedQSeries::zero(K));
    for (long v = 0; v <= need[i]; ++v) {
      TruncatedQSeries acc = TruncatedQSeries::zero(K);
      const long top = v + delta;  // <= need[i-1], so prev[u] is in range
      for (long u = 0; u <= top; ++u) {
        const long e = b * u * u + (windowed ? b * u : 0);
        if (e > K) break;
        TruncatedQSeries term = to_series(gaussian_binomial(top, u, b), K);
        term = mul(term, i == 1 ? n1_factor_series(shape, u, K) : prev[u]);
        acc = add(acc, mul_monomial(term, e));
      }
      cur[v] = acc;
    }
    prev = std::move(cur);
  }
  return prev;
}

std::vector<CyclotomicNumber> powers_of(const CyclotomicNumber& q, long max_exp) {
  std::vector<CyclotomicNumber> pw(max_exp + 1, CyclotomicNumber::one(q.order()));
  for (long j = 1; j <= max_exp; ++j) pw[j] = pw[j - 1] * q;
  return pw;
}

}  // namespace

const char* family_name(Family fam) {
  switch (fam) {
    case Family::hikami: return "hikami";
    case Family::example1: return "example1";
    case Family::example2: return "example2";
    case Family::example3: return "example3";
  }
  return "unknown";
}

ChainShape chain_shape(Family fam, long a) {
  switch (fam) {
    case Family::hikami:
      return ChainShape{1, a, a + 1, NumeratorKind::none, DenominatorKind::none};
    case Family::example1:
      return ChainShape{1, -1, 1, NumeratorKind::none, DenominatorKind::neg_q};
    case Family::example2:
      return ChainShape{2, -1, 1, NumeratorKind::q_q2, DenominatorKind::neg_q_2n1p1};
    case Family::example3:
      return ChainShape{2, a, a + 1, NumeratorKind::none, DenominatorKind::neg_q_q2_delta};
  }
  throw std::logic_error("unreachable family");
}

void validate_family_parameters(Family fam, long m, long a) {
  if (m < 2) throw std::invalid_argument("family parameter m must be at least 2");
  const bool has_a = fam == Family::hikami || fam == Family::example3;
  if (has_a) {
    if (a < 0 || a > m - 2)
      throw std::invalid_argument("family parameter a must lie in [0, m-2]");
  } else if (a != 0) {
    throw std::invalid_argument(std::string(family_name(fam)) + " takes no parameter a");
  }
}

FamilyInfo family_info(Family fam, long m, long a) {
  validate_family_parameters(fam, m, a);
  FamilyInfo info{};
  switch (fam) {
    case Family::hikami:
      info.base = 1;
      info.f = 2 * m;
      info.D = 4 * m;
      info.prefactor_num = (m - a - 1) * (m - a - 1);
      info.multiplier = Rational(m);
      info.scale_over_N2 = Rational(-1, info.D);
      info.chi = chi_hikami(m, a);
      info.requires_odd_point_order = false;
      break;
    case Family::example1:
      info.base = 1;
      info.f = 4 * m - 2;
      info.D = 8 * (2 * m - 1);
      info.prefactor_num = (2 * m - 3) * (2 * m - 3);
      info.multiplier = Rational(2 * m - 1, 2);
      info.scale_over_N2 = Rational(-1, info.D);
      info.chi = chi_example1(m);
      info.requires_odd_point_order = true;
      break;
    case Family::example2:
      info.base = 2;
      info.f = 4 * (m - 1);
      info.D = 8 * (m - 1);
      info.prefactor_num = (2 * m - 3) * (2 * m - 3);
      info.multiplier = Rational(m - 1);
      info.scale_over_N2 = Rational(-1, 2 * info.D);
      info.chi = chi_example2(m);
      info.requires_odd_point_order = true;
      break;
    case Family::example3:
      info.base = 2;
      info.f = 2 * (2 * m - 1);
      info.D = 4 * (2 * m - 1);
      info.prefactor_num = 4 * (m - a - 1) * (m - a - 1);
      info.multiplier = Rational(2 * m - 1, 2);
      info.scale_over_N2 = Rational(-1, 2 * info.D);
      info.chi = chi_example3(m, a);
      info.requires_odd_point_order = true;
      break;
  }
  return info;
}

CyclotomicNumber evaluate_truncated(Family fam, long m, long a, long N,
                                    const CyclotomicNumber& point, SupportMode mode) {
  validate_family_parameters(fam, m, a);
  if (N < 1) throw std::invalid_argument("truncation order N must be at least 1");
  const FamilyInfo info = family_info(fam, m, a);
  if (info.requires_odd_point_order && point.order() % 2 == 0)
    throw std::domain_error(std::string(family_name(fam)) +
                            " has a Pochhammer pole at even-order roots of unity");
  const ChainShape shape = chain_shape(fam, a);
  const long b = shape.base;
  const long r = m - 1;  // number of summation indices

  // Index values stay in [0, N]; only an index at or below the delta
  // position can reach N, and only in natural-support mode.
  const long max_exp = b * (N * N + N) + b * triangular(N);
  const std::vector<CyclotomicNumber> pw = powers_of(point, max_exp);

  // Coupling binomial values [t u]_{q^b} at the point, t <= N.
  std::vector<std::vector<CyclotomicNumber>> binom(N + 1);
  for (long t = 0; t <= N; ++t) {
    binom[t].assign(t + 1, CyclotomicNumber::one(point.order()));
    for (long u = 1; u < t; ++u)
      binom[t][u] = binom[t - 1][u] + pw[b * (t - u)] * binom[t - 1][u - 1];
  }

  // Support cap: natural support lets an index below the delta marker reach
  // N via its binomial top; uniform capping clamps every index to N-1.
  const long cap = (mode == SupportMode::uniform_cap) ? N - 1 : N;
  std::vector<CyclotomicNumber> cur;
  if (r >= 2) {
    std::vector<long> need(r);  // largest v queried at each chain level
    need[r - 1] = N - 1;
    for (long i = r - 1; i >= 1; --i)
      need[i - 1] = std::min(need[i] + ((i == shape.delta_position) ? 1 : 0), cap);
    std::vector<CyclotomicNumber> prev;
    for (long i = 1; i <= r - 1; ++i) {
      const long delta = (i == shape.delta_position) ? 1 : 0;
      const bool windowed = i >= shape.window_start;
      cur.assign(need[i] + 1, CyclotomicNumber::zero(point.order()));
      for (long v = 0; v <= need[i]; ++v) {
        CyclotomicNumber acc = CyclotomicNumber::zero(point.order());
        const long top = std::min(v + delta, cap);
        for (long u = 0; u <= top; ++u) {
          CyclotomicNumber term = binom[v + delta][u] * pw[b * u * u + (windowed ? b * u : 0)];
          term *= (i == 1) ? n1_factor_at(shape, u, point) : prev[u];
          acc += term;
        }
        cur[v] = acc;
      }
      if (i < r - 1) prev = std::move(cur);
    }
  }

  CyclotomicNumber result = CyclotomicNumber::zero(point.order());
  for (long v = 0; v < N; ++v) {
    CyclotomicNumber term = pw[b * triangular(v)] *
                            (r == 1 ? n1_factor_at(shape, v, point) : cur[v]);
    if (v % 2 == 1) term *= Rational(-1);
    result += term;
  }
  return result;
}

TruncatedQSeries chain_sum_series(const ChainShape& shape, long length, long top, long K) {
  if (length < 0 || top < 0 || K < 0) throw std::invalid_argument("chain_sum_series: bad arguments");
  if (length == 0) return n1_factor_series(shape, top, K);
  return chain_series_table(shape, length, top, K)[top];
}

SeriesExpansion expand_series(Family fam, long m, long a, long q_order) {
  validate_family_parameters(fam, m, a);
  if (q_order < 0) throw std::invalid_argument("series order must be nonnegative");
  const FamilyInfo info = family_info(fam, m, a);
  const ChainShape shape = chain_shape(fam, a);
  const long b = shape.base;
  const long K = q_order;
  const long r = m - 1;

  const long vmax = outer_index_bound(b, K);
  std::vector<TruncatedQSeries> tail;
  if (r >= 2) tail = chain_series_table(shape, r - 1, vmax, K);

  TruncatedQSeries series = TruncatedQSeries::zero(K);
  for (long v = 0; v <= vmax; ++v) {
    TruncatedQSeries term = (r == 1) ? n1_factor_series(shape, v, K) : tail[v];
    term = mul_monomial(term, b * triangular(v));
    if (v % 2 == 1) term = scale(Rational(-1), term);
    series = add(series, term);
  }
  return SeriesExpansion{make_rational(info.prefactor_num, info.D), series};
}

SeriesIdentityReport series_identity_check(Family fam, long m, long a, long x_order) {
  validate_family_parameters(fam, m, a);
  if (x_order < 0) throw std::invalid_argument("series order must be nonnegative");
  const FamilyInfo info = family_info(fam, m, a);
  const long D = info.D;

  SeriesIdentityReport report;
  report.lhs.denominator = D;
  report.lhs.body = TruncatedQSeries::zero(x_order);
  if (info.prefactor_num <= x_order) {
    const SeriesExpansion exp = expand_series(fam, m, a, (x_order - info.prefactor_num) / D);
    for (long j = 0; j <= exp.series.order; ++j) {
      const long e = info.prefactor_num + D * j;
      if (e <= x_order) report.lhs.body.coeffs[e] = exp.series.coeffs[j];
    }
  }

  report.rhs.denominator = D;
  report.rhs.body = TruncatedQSeries::zero(x_order);
  const FractionalQSeries chi_side = character_qseries(info.chi, D, (x_order + D - 1) / D);
  for (long e = 0; e <= x_order; ++e) report.rhs.body.coeffs[e] = chi_side.body.coeff(e);

  const long diff = first_difference(report.lhs.body, report.rhs.body);
  report.has_discrepancy = diff >= 0;
  if (report.has_discrepancy) report.first_discrepancy = make_rational(diff, D);
  report.ok = !report.has_discrepancy;
  return report;
}

CyclotomicNumber truncated_closed_form(Family fam, long m, long a, long N, long M) {
  const FamilyInfo info = family_info(fam, m, a);
  const Rational scale = info.scale_over_N2 / Rational(N * N);
  const CyclotomicNumber quad = limit_value_quadratic_form(info.chi, info.D, scale, N, M);
  const RootOfUnityExponent pref = prefactor_exponent(fam, m, a, N, M);
  return to_cyclotomic(inverse(pref), info.D * N) * quad;
}

CyclotomicNumber radial_limit_exact(Family fam, long m, long a, long N, long M) {
  const FamilyInfo info = family_info(fam, m, a);
  const Rational scale = info.scale_over_N2 / Rational(N * N);
  return limit_value_quadratic_form(info.chi, info.D, scale, N, M);
}

RootOfUnityExponent prefactor_exponent(Family fam, long m, long a, long N, long M) {
  const FamilyInfo info = family_info(fam, m, a);
  if (N < 1 || M < 1) throw std::invalid_argument("root parameters must be positive");
  return root_exponent(Rational(M * info.prefactor_num, info.D * N));
}

}  // namespace falsetheta
