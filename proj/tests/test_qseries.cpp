#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <vector>

#include "doctest.h"
#include "falsetheta/qseries.hpp"

using namespace falsetheta;

namespace {

QPolynomial from_longs(std::initializer_list<long> cs) {
  std::vector<Rational> v;
  for (long c : cs) v.emplace_back(c);
  return QPolynomial(std::move(v));
}

// Schoolbook convolution, independent of the library's series product.
TruncatedQSeries naive_mul(const TruncatedQSeries& a, const TruncatedQSeries& b) {
  TruncatedQSeries out = TruncatedQSeries::zero(a.order);
  for (long i = 0; i <= a.order; ++i)
    for (long j = 0; i + j <= a.order; ++j) out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  return out;
}

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
  const QPolynomial one_plus_q = from_longs({1, 1});
  const QPolynomial cube = one_plus_q * one_plus_q * one_plus_q;
  CHECK(cube == from_longs({1, 3, 3, 1}));
  CHECK(cube.degree() == 3);
  CHECK(cube.coeff(2) == Rational(3));
  CHECK(cube.coeff(9) == Rational(0));
  CHECK(one_plus_q.inflated(2) == from_longs({1, 0, 1}));
  CHECK(one_plus_q.shifted(2) == from_longs({0, 0, 1, 1}));
  CHECK((cube - cube).is_zero());
  CHECK(QPolynomial::monomial(3, Rational(-2)) == from_longs({0, 0, 0, -2}));
}

TEST_CASE("pochhammer products expand correctly") {
  CHECK(pochhammer(Sign::plus, 1, 1, 0) == QPolynomial::constant(Rational(1)));
  // (q; q)_3 = 1 - q - q^2 + q^4 + q^5 - q^6
  CHECK(pochhammer(Sign::plus, 1, 1, 3) == from_longs({1, -1, -1, 0, 1, 1, -1}));
  // (-q; q)_2 = (1 + q)(1 + q^2)
  CHECK(pochhammer(Sign::minus, 1, 1, 2) == from_longs({1, 1, 1, 1}));
  // (q; q^2)_2 = (1 - q)(1 - q^3)
  CHECK(pochhammer(Sign::plus, 1, 2, 2) == from_longs({1, -1, 0, -1, 1}));
}

TEST_CASE("gaussian binomials") {
  CHECK(gaussian_binomial(4, 2) == from_longs({1, 1, 2, 1, 1}));
  CHECK(gaussian_binomial(3, 5).is_zero());
  CHECK(gaussian_binomial(3, -1).is_zero());
  CHECK(gaussian_binomial(3, 1, 2) == from_longs({1, 0, 1, 0, 1}));
  for (long n = 0; n <= 6; ++n)
    for (long k = 0; k <= n; ++k) CHECK(gaussian_binomial(n, k) == gaussian_binomial(n, n - k));
  // q-Pascal: [5 2] = [4 2] + q^3 [4 1]
  CHECK(gaussian_binomial(5, 2) ==
        gaussian_binomial(4, 2) + gaussian_binomial(4, 1).shifted(3));
}

TEST_CASE("gaussian binomial equals the pochhammer quotient") {
  const long K = 30;
  for (long n = 0; n <= 6; ++n) {
    for (long k = 0; k <= n; ++k) {
      const TruncatedQSeries lhs = to_series(gaussian_binomial(n, k), K);
      TruncatedQSeries rhs = to_series(pochhammer(Sign::plus, 1, 1, n), K);
      rhs = mul(rhs, invert_unit(to_series(pochhammer(Sign::plus, 1, 1, k), K)));
      rhs = mul(rhs, invert_unit(to_series(pochhammer(Sign::plus, 1, 1, n - k), K)));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("series arithmetic against naive references") {
  const TruncatedQSeries a = to_series(from_longs({1, -2, 0, 5}), 12);
  const TruncatedQSeries b = to_series(pochhammer(Sign::minus, 1, 1, 4), 12);
  CHECK(mul(a, b) == naive_mul(a, b));
  CHECK(mul(b, a) == naive_mul(a, b));

  // 1/(1 - q) = 1 + q + q^2 + ...
  const TruncatedQSeries geom = invert_unit(to_series(from_longs({1, -1}), 10));
  for (long e = 0; e <= 10; ++e) CHECK(geom.coeff(e) == Rational(1));
  CHECK(mul(geom, to_series(from_longs({1, -1}), 10)) == TruncatedQSeries::one(10));
  CHECK(mul(b, invert_unit(b)) == TruncatedQSeries::one(12));

  CHECK(mul_monomial(TruncatedQSeries::one(4), 2).coeff(2) == Rational(1));
  CHECK(mul_monomial(TruncatedQSeries::one(4), 2).coeff(0) == Rational(0));
  CHECK(sub(add(a, b), b) == a);
  CHECK(scale(Rational(-3), a).coeff(3) == Rational(-15));
}

TEST_CASE("series comparison rules") {
  const TruncatedQSeries a = to_series(from_longs({1, 2}), 6);
  TruncatedQSeries b = a;
  CHECK(first_difference(a, b) == -1);
  b.coeffs[4] = Rational(7);
  CHECK(first_difference(a, b) == 4);
  CHECK_FALSE(a == b);
  CHECK_THROWS_AS((void)mul(a, TruncatedQSeries::one(5)), std::logic_error);
  CHECK_THROWS_AS((void)invert_unit(TruncatedQSeries::zero(5)), std::domain_error);
}

TEST_CASE("evaluation at roots of unity") {
  // (q; q)_{N-1} at a primitive N-th root equals N.
  for (long N : {3, 5, 8}) {
    const CyclotomicNumber z = root_power(N, 1);
    CHECK(pochhammer_at(Sign::plus, 1, 1, N - 1, z) ==
          CyclotomicNumber::constant(N, Rational(N)));
    CHECK(pochhammer(Sign::plus, 1, 1, N - 1).eval_at(z) ==
          CyclotomicNumber::constant(N, Rational(N)));
  }
  // pochhammer_at matches polynomial evaluation for a mixed pattern.
  const CyclotomicNumber z = root_power(7, 2);
  CHECK(pochhammer_at(Sign::minus, 1, 2, 3, z) ==
        pochhammer(Sign::minus, 1, 2, 3).eval_at(z));
}
