#pragma once

// Exact polynomials and truncated power series in q with rational
// coefficients: the q-Pochhammer symbols, Gaussian binomials and series
// arithmetic everything downstream is assembled from.

#include <vector>

#include "falsetheta/cyclotomic.hpp"
#include "falsetheta/rational.hpp"

namespace falsetheta {

class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  static QPolynomial constant(const Rational& v);
  static QPolynomial monomial(long exponent, const Rational& coeff = Rational(1));

  long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
  Rational coeff(long exponent) const;
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }

  QPolynomial& operator+=(const QPolynomial& rhs);
  QPolynomial& operator-=(const QPolynomial& rhs);
  QPolynomial& operator*=(const QPolynomial& rhs);
  QPolynomial& operator*=(const Rational& s);
  // multiply by q^e, e >= 0
  QPolynomial shifted(long e) const;
  // substitute q -> q^k, k >= 1
  QPolynomial inflated(long k) const;

  CyclotomicNumber eval_at(const CyclotomicNumber& point) const;

 private:
  void trim();
  std::vector<Rational> c_;  // c_[e] multiplies q^e
};

QPolynomial operator+(QPolynomial a, const QPolynomial& b);
QPolynomial operator-(QPolynomial a, const QPolynomial& b);
QPolynomial operator*(QPolynomial a, const QPolynomial& b);
bool operator==(const QPolynomial& a, const QPolynomial& b);

enum class Sign { plus, minus };

// (sign * q^shift ; q^step)_n = prod_{j=0}^{n-1} (1 -+ q^{shift + j*step}).
// Requires shift >= 0, step >= 1, n >= 0.
QPolynomial pochhammer(Sign sign, long shift, long step, long n);

// Same product evaluated directly in a cyclotomic field.
CyclotomicNumber pochhammer_at(Sign sign, long shift, long step, long n,
                               const CyclotomicNumber& q);

// Gaussian binomial [n choose k] in base q^base; the zero polynomial outside
// 0 <= k <= n.  Base-1 rows are memoized via the q-Pascal recurrence.
QPolynomial gaussian_binomial(long n, long k, long base = 1);

// Power series in q truncated at q^order (inclusive).  Two series compare
// equal only at the same claimed order; checking at mismatched orders is a
// logic error, not a value question.
struct TruncatedQSeries {
  long order = 0;
  std::vector<Rational> coeffs;  // size order + 1

  static TruncatedQSeries zero(long order);
  static TruncatedQSeries one(long order);
  Rational coeff(long e) const { return e <= order ? coeffs[e] : Rational(0); }
};

TruncatedQSeries to_series(const QPolynomial& p, long order);
TruncatedQSeries add(const TruncatedQSeries& a, const TruncatedQSeries& b);
TruncatedQSeries sub(const TruncatedQSeries& a, const TruncatedQSeries& b);
TruncatedQSeries mul(const TruncatedQSeries& a, const TruncatedQSeries& b);
TruncatedQSeries scale(const Rational& s, TruncatedQSeries a);
// multiply by q^e (e >= 0), dropping overflowed terms
TruncatedQSeries mul_monomial(TruncatedQSeries a, long e);
// Reciprocal; throws std::domain_error when the constant term vanishes.
TruncatedQSeries invert_unit(const TruncatedQSeries& a);
bool operator==(const TruncatedQSeries& a, const TruncatedQSeries& b);
// Smallest exponent where the two differ, or -1 when equal to the common order.
long first_difference(const TruncatedQSeries& a, const TruncatedQSeries& b);

// Series in x = q^{1/denominator}, truncated at x^{body.order}.
struct FractionalQSeries {
  long denominator = 1;
  TruncatedQSeries body;
};

}  // namespace falsetheta
