#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "falsetheta/bailey.hpp"

using namespace falsetheta;

namespace {

const Family kFamilies[] = {Family::hikami, Family::example1, Family::example2,
                            Family::example3};

std::vector<long> pair_a_range(Family fam, long m) {
  if (fam != Family::hikami && fam != Family::example3) return {0};
  std::vector<long> out;
  for (long a = 0; a <= m - 1; ++a) out.push_back(a);
  return out;
}

}  // namespace

TEST_CASE("pair parameter validation") {
  CHECK_THROWS_AS((void)bailey_pair(Family::hikami, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS((void)bailey_pair(Family::hikami, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS((void)bailey_pair(Family::example3, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS((void)bailey_pair(Family::example1, 2, 1), std::invalid_argument);
  CHECK(bailey_pair(Family::example2, 3, 0).base == 2);
  CHECK(bailey_pair(Family::example1, 3, 0).base == 1);
}

TEST_CASE("the m = 1 first-family pair is the classical unit pair") {
  const BaileyPair unit = bailey_pair(Family::hikami, 1, 0);
  const long K = 20;
  for (long n = 0; n <= 5; ++n) {
    CHECK(unit.beta(n, K) ==
          invert_unit(to_series(pochhammer(Sign::plus, 1, 1, n), K)));
  }
  // alpha_2 = q^7 (1 - q^5) / (1 - q) = q^7 + q^8 + q^9 + q^10 + q^11.
  const TruncatedQSeries a2 = unit.alpha(2, K);
  for (long e = 0; e <= K; ++e) {
    CHECK(a2.coeff(e) == Rational(e >= 7 && e <= 11 ? 1 : 0));
  }
  // alpha_1 carries the (-1)^n sign.
  CHECK(unit.alpha(1, K).coeff(2) == Rational(-1));
}

TEST_CASE("pair definitions hold") {
  for (Family fam : kFamilies) {
    for (long m = 1; m <= 3; ++m) {
      for (long a : pair_a_range(fam, m)) {
        const PairCheckReport r = verify_pair_definition(bailey_pair(fam, m, a), 5, 25);
        CAPTURE(family_name(fam));
        CAPTURE(m);
        CAPTURE(a);
        CHECK(r.ok);
        CHECK(r.first_failure_n == -1);
      }
    }
  }
}

TEST_CASE("the sign-flipped third-example variant fails the definition") {
  for (long m = 1; m <= 2; ++m) {
    for (long a : pair_a_range(Family::example3, m)) {
      const PairCheckReport r =
          verify_pair_definition(bailey_pair(Family::example3, m, a, false), 5, 25);
      CHECK_FALSE(r.ok);
      CHECK(r.first_failure_n >= 0);
      CHECK(r.first_discrepancy_exponent >= 0);
    }
  }
}

TEST_CASE("finite transform identities hold") {
  for (Family fam : kFamilies) {
    for (long m = 1; m <= 2; ++m) {
      for (long a : pair_a_range(fam, m)) {
        const PairCheckReport r = finite_transform_identity(bailey_pair(fam, m, a), 4, 25);
        CAPTURE(family_name(fam));
        CAPTURE(m);
        CAPTURE(a);
        CHECK(r.ok);
      }
    }
  }
}

TEST_CASE("limiting transform identities hold") {
  for (Family fam : kFamilies) {
    for (long m = 1; m <= 3; ++m) {
      for (long a : pair_a_range(fam, m)) {
        CHECK(infinite_transform_identity(bailey_pair(fam, m, a), 25).ok);
      }
    }
  }
}

TEST_CASE("the limiting beta side reproduces the nested-sum series") {
  for (Family fam : kFamilies) {
    for (long m = 1; m <= 3; ++m) {
      for (long a : pair_a_range(fam, m)) {
        const PairCheckReport r = pair_family_series_match(bailey_pair(fam, m, a), 25);
        CAPTURE(family_name(fam));
        CAPTURE(m);
        CAPTURE(a);
        CHECK(r.ok);
      }
    }
  }
}
