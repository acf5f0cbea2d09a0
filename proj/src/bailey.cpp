#include "falsetheta/bailey.hpp"

#include <stdexcept>
#include <string>

namespace falsetheta {

namespace {

long triangular(long n) { return n * (n + 1) / 2; }

TruncatedQSeries poch_series(Sign sign, long shift, long step, long n, long K) {
  return to_series(pochhammer(sign, shift, step, n), K);
}

TruncatedQSeries inv_poch_series(Sign sign, long shift, long step, long n, long K) {
  return invert_unit(poch_series(sign, shift, step, n, K));
}

PairCheckReport compare_sides(PairCheckReport report, long n, const TruncatedQSeries& lhs,
                              const TruncatedQSeries& rhs) {
  const long diff = first_difference(lhs, rhs);
  if (diff >= 0 && report.ok) {
    report.ok = false;
    report.first_failure_n = n;
    report.first_discrepancy_exponent = diff;
  }
  return report;
}

}  // namespace

void validate_pair_parameters(Family fam, long m, long a) {
  if (m < 1) throw std::invalid_argument("pair parameter m must be at least 1");
  const bool has_a = fam == Family::hikami || fam == Family::example3;
  if (has_a) {
    if (a < 0 || a > m - 1)
      throw std::invalid_argument("pair parameter a must lie in [0, m-1]");
  } else if (a != 0) {
    throw std::invalid_argument(std::string(family_name(fam)) + " pairs take no parameter a");
  }
}

BaileyPair bailey_pair(Family fam, long m, long a, bool corrected_sign) {
  validate_pair_parameters(fam, m, a);
  BaileyPair pair;
  pair.family = fam;
  pair.base = (fam == Family::example2 || fam == Family::example3) ? 2 : 1;
  pair.m = m;
  pair.a = a;
  pair.corrected_sign = corrected_sign;
  return pair;
}

TruncatedQSeries BaileyPair::alpha(long n, long K) const {
  if (n < 0 || K < 0) throw std::invalid_argument("alpha: bad arguments");
  long lead = 0;   // exponent of the leading monomial
  long gap = 0;    // second monomial sits at lead + gap
  Rational second(-1);
  switch (family) {
    case Family::hikami:
      lead = triangular(n) + (a + 1) * n * n + (m - a - 1) * (n * n + n);
      gap = (a + 1) * (2 * n + 1);
      break;
    case Family::example1:
      lead = m * n * n + (m - 1) * n;
      gap = 2 * n + 1;
      break;
    case Family::example2:
      lead = (2 * m - 1) * n * n + (2 * m - 2) * n;
      gap = 2 * n + 1;
      break;
    case Family::example3:
      lead = 2 * (m - a - 1) * (n * n + n) + 2 * (a + 1) * n * n + n;
      gap = (2 * a + 1) * (2 * n + 1);
      if (!corrected_sign) second = Rational(1);
      break;
  }
  QPolynomial numer = QPolynomial::monomial(lead);
  numer += QPolynomial::monomial(lead + gap, second);
  TruncatedQSeries value = mul(to_series(numer, K), inv_poch_series(Sign::plus, base, base, 1, K));
  if (n % 2 == 1) value = scale(Rational(-1), value);
  return value;
}

TruncatedQSeries BaileyPair::beta(long n, long K) const {
  if (n < 0 || K < 0) throw std::invalid_argument("beta: bad arguments");
  const TruncatedQSeries chain = chain_sum_series(chain_shape(family, a), m - 1, n, K);
  return mul(chain, inv_poch_series(Sign::plus, base, base, n, K));
}

PairCheckReport verify_pair_definition(const BaileyPair& pair, long n_max, long K) {
  PairCheckReport report;
  report.n_max = n_max;
  report.order = K;
  const long b = pair.base;
  for (long n = 0; n <= n_max; ++n) {
    TruncatedQSeries rhs = TruncatedQSeries::zero(K);
    for (long k = 0; k <= n; ++k) {
      TruncatedQSeries term = pair.alpha(k, K);
      term = mul(term, inv_poch_series(Sign::plus, b, b, n - k, K));
      term = mul(term, inv_poch_series(Sign::plus, 2 * b, b, n + k, K));
      rhs = add(rhs, term);
    }
    report = compare_sides(report, n, pair.beta(n, K), rhs);
  }
  return report;
}

PairCheckReport finite_transform_identity(const BaileyPair& pair, long n_max, long K) {
  PairCheckReport report;
  report.n_max = n_max;
  report.order = K;
  const long b = pair.base;
  for (long n = 0; n <= n_max; ++n) {
    TruncatedQSeries lhs = TruncatedQSeries::zero(K);
    TruncatedQSeries rhs = TruncatedQSeries::zero(K);
    for (long k = 0; k <= n; ++k) {
      TruncatedQSeries weight = poch_series(Sign::plus, b * (n - k + 1), b, k, K);
      weight = mul_monomial(weight, b * (k * k + k));
      lhs = add(lhs, mul(weight, pair.beta(k, K)));
      TruncatedQSeries term = mul(weight, pair.alpha(k, K));
      term = mul(term, inv_poch_series(Sign::plus, b * (n + 2), b, k, K));
      rhs = add(rhs, term);
    }
    lhs = mul(lhs, poch_series(Sign::plus, 2 * b, b, n, K));
    report = compare_sides(report, n, lhs, rhs);
  }
  return report;
}

namespace {

// sum_n (q^b; q^b)_n (-1)^n q^{b T(n)} beta_n through q^K; terms vanish once
// b T(n) exceeds K because beta_n has nonnegative valuation.
TruncatedQSeries limiting_beta_side(const BaileyPair& pair, long K) {
  const long b = pair.base;
  TruncatedQSeries acc = TruncatedQSeries::zero(K);
  for (long n = 0; b * triangular(n) <= K; ++n) {
    TruncatedQSeries term = mul(poch_series(Sign::plus, b, b, n, K), pair.beta(n, K));
    term = mul_monomial(term, b * triangular(n));
    if (n % 2 == 1) term = scale(Rational(-1), term);
    acc = add(acc, term);
  }
  return acc;
}

}  // namespace

PairCheckReport infinite_transform_identity(const BaileyPair& pair, long K) {
  PairCheckReport report;
  report.order = K;
  const long b = pair.base;
  TruncatedQSeries rhs = TruncatedQSeries::zero(K);
  for (long n = 0; b * triangular(n) <= K; ++n) {
    TruncatedQSeries term = mul_monomial(pair.alpha(n, K), b * triangular(n));
    if (n % 2 == 1) term = scale(Rational(-1), term);
    rhs = add(rhs, term);
  }
  rhs = mul(rhs, to_series(pochhammer(Sign::plus, b, b, 1), K));
  return compare_sides(report, 0, limiting_beta_side(pair, K), rhs);
}

PairCheckReport pair_family_series_match(const BaileyPair& pair, long K) {
  PairCheckReport report;
  report.order = K;
  const SeriesExpansion expansion = expand_series(pair.family, pair.m + 1, pair.a, K);
  return compare_sides(report, 0, limiting_beta_side(pair, K), expansion.series);
}

}  // namespace falsetheta
