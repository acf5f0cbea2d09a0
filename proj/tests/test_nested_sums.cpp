#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "falsetheta/nested_sums.hpp"
#include "oracle_helpers.hpp"

using namespace falsetheta;

namespace {

const Family kFamilies[] = {Family::hikami, Family::example1, Family::example2,
                            Family::example3};

bool has_a(Family fam) { return fam == Family::hikami || fam == Family::example3; }

std::vector<long> a_range(Family fam, long m) {
  if (!has_a(fam)) return {0};
  std::vector<long> out;
  for (long a = 0; a <= m - 2; ++a) out.push_back(a);
  return out;
}

std::vector<long> n_range(Family fam, long up_to) {
  std::vector<long> out;
  for (long N = 1; N <= up_to; ++N)
    if (fam == Family::hikami || N % 2 == 1) out.push_back(N);
  return out;
}

}  // namespace

TEST_CASE("family traits are frozen") {
  const FamilyInfo h = family_info(Family::hikami, 3, 1);
  CHECK(h.base == 1);
  CHECK(h.f == 6);
  CHECK(h.D == 12);
  CHECK(h.prefactor_num == 1);
  CHECK(h.multiplier == Rational(3));
  CHECK(h.scale_over_N2 == Rational(-1, 12));
  CHECK_FALSE(h.requires_odd_point_order);

  const FamilyInfo e1 = family_info(Family::example1, 2, 0);
  CHECK(e1.base == 1);
  CHECK(e1.f == 6);
  CHECK(e1.D == 24);
  CHECK(e1.prefactor_num == 1);
  CHECK(e1.multiplier == Rational(3, 2));
  CHECK(e1.scale_over_N2 == Rational(-1, 24));
  CHECK(e1.requires_odd_point_order);

  const FamilyInfo e2 = family_info(Family::example2, 3, 0);
  CHECK(e2.base == 2);
  CHECK(e2.f == 8);
  CHECK(e2.D == 16);
  CHECK(e2.prefactor_num == 9);
  CHECK(e2.multiplier == Rational(2));
  CHECK(e2.scale_over_N2 == Rational(-1, 32));

  const FamilyInfo e3 = family_info(Family::example3, 2, 0);
  CHECK(e3.base == 2);
  CHECK(e3.f == 6);
  CHECK(e3.D == 12);
  CHECK(e3.prefactor_num == 4);
  CHECK(e3.multiplier == Rational(3, 2));
  CHECK(e3.scale_over_N2 == Rational(-1, 24));
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS((void)family_info(Family::hikami, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS((void)family_info(Family::hikami, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS((void)family_info(Family::example1, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS((void)evaluate_truncated(Family::hikami, 2, 0, 0, root_power(1, 0)),
                  std::invalid_argument);
}

TEST_CASE("known point values") {
  CHECK(evaluate_truncated(Family::hikami, 2, 0, 1, root_power(1, 1)) ==
        CyclotomicNumber::one(1));
  // The delta marker pushes an inner index to N in natural support; the two
  // readings genuinely differ here.
  CHECK(evaluate_truncated(Family::hikami, 3, 1, 1, root_power(1, 1)) ==
        CyclotomicNumber::constant(1, Rational(2)));
  CHECK(evaluate_truncated(Family::hikami, 3, 1, 1, root_power(1, 1),
                           SupportMode::uniform_cap) == CyclotomicNumber::one(1));
  CHECK(evaluate_truncated(Family::example2, 2, 0, 1, root_power(1, 1)) ==
        CyclotomicNumber::constant(1, Rational(1, 2)));
  CHECK(evaluate_truncated(Family::example3, 2, 0, 1, root_power(1, 1)) ==
        CyclotomicNumber::constant(1, Rational(1, 2)));
}

TEST_CASE("pochhammer poles at even-order roots are rejected") {
  CHECK_THROWS_AS(
      (void)evaluate_truncated(Family::example1, 2, 0, 2, root_power(2, 1)),
      std::domain_error);
  CHECK_THROWS_AS(
      (void)evaluate_truncated(Family::example3, 3, 1, 4, root_power(4, 1)),
      std::domain_error);
  // hikami has no Pochhammer factors and stays finite at even orders.
  CHECK(evaluate_truncated(Family::hikami, 2, 0, 2, root_power(2, 1)) ==
        CyclotomicNumber::constant(2, Rational(2)));
}

TEST_CASE("chain dp equals direct tuple enumeration at roots of unity") {
  for (Family fam : kFamilies) {
    for (long m = 2; m <= 4; ++m) {
      for (long a : a_range(fam, m)) {
        for (long N : n_range(fam, 4)) {
          for (long M : oracle::coprime_residues(N)) {
            const CyclotomicNumber q = root_power(N, M);
            for (SupportMode mode :
                 {SupportMode::natural_support, SupportMode::uniform_cap}) {
              const CyclotomicNumber dp = evaluate_truncated(fam, m, a, N, q, mode);
              const CyclotomicNumber ref = oracle::enumerate_truncated(fam, m, a, N, q, mode);
              CHECK(dp == ref);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("series dp equals direct tuple enumeration") {
  const long K = 14;
  for (Family fam : kFamilies) {
    for (long m = 2; m <= 4; ++m) {
      for (long a : a_range(fam, m)) {
        const SeriesExpansion got = expand_series(fam, m, a, K);
        CHECK(got.series == oracle::enumerate_series(fam, m, a, K));
      }
    }
  }
}

TEST_CASE("frozen series expansions") {
  // First family, m = 2: sum (-1)^v q^{T(v)} = 1 - q + q^3 - q^6 + q^10 - ...
  const TruncatedQSeries h = expand_series(Family::hikami, 2, 0, 12).series;
  CHECK(h.coeff(0) == Rational(1));
  CHECK(h.coeff(1) == Rational(-1));
  CHECK(h.coeff(2) == Rational(0));
  CHECK(h.coeff(3) == Rational(1));
  CHECK(h.coeff(6) == Rational(-1));
  CHECK(h.coeff(10) == Rational(1));

  // Second family, m = 2: sum (-1)^v q^{T(v)} / (-q; q)_v.  The q^3
  // coefficient vanishes: the v = 2 and v = 3 contributions cancel there.
  const TruncatedQSeries e1 = expand_series(Family::example1, 2, 0, 15).series;
  CHECK(e1.coeff(0) == Rational(1));
  CHECK(e1.coeff(1) == Rational(-1));
  CHECK(e1.coeff(2) == Rational(1));
  CHECK(e1.coeff(3) == Rational(0));
  CHECK(e1.coeff(4) == Rational(0));
  CHECK(e1.coeff(5) == Rational(-1));
  CHECK(e1.coeff(7) == Rational(1));
  CHECK(e1.coeff(12) == Rational(-1));
  CHECK(e1.coeff(15) == Rational(1));

  CHECK(expand_series(Family::hikami, 3, 0, 6).exponent_offset == Rational(1, 3));
  CHECK(expand_series(Family::example3, 2, 0, 6).exponent_offset == Rational(1, 3));
}

TEST_CASE("series identities against the character expansion") {
  for (Family fam : kFamilies) {
    for (long m = 2; m <= 3; ++m) {
      for (long a : a_range(fam, m)) {
        const long D = family_info(fam, m, a).D;
        const SeriesIdentityReport deep = series_identity_check(fam, m, a, 12 * D);
        CHECK(deep.ok);
        CHECK_FALSE(deep.has_discrepancy);
        const SeriesIdentityReport spec_order = series_identity_check(fam, m, a, 60);
        CHECK(spec_order.ok);
      }
    }
  }
}

TEST_CASE("closed forms at pinned points") {
  CHECK(truncated_closed_form(Family::hikami, 3, 1, 1, 1) ==
        CyclotomicNumber::constant(1, Rational(2)));
  CHECK(radial_limit_exact(Family::hikami, 3, 1, 1, 1) == Rational(2) * root_power(12, 1));
  CHECK(radial_limit_exact(Family::hikami, 2, 0, 1, 1) == root_power(8, 1));
  CHECK(truncated_closed_form(Family::example1, 2, 0, 1, 1) == CyclotomicNumber::one(1));
  CHECK(radial_limit_exact(Family::example1, 2, 0, 1, 1) == root_power(24, 1));
  CHECK(truncated_closed_form(Family::example2, 2, 0, 1, 1) ==
        CyclotomicNumber::constant(1, Rational(1, 2)));
  CHECK(radial_limit_exact(Family::example2, 2, 0, 1, 1) ==
        Rational(1, 2) * root_power(8, 1));
  CHECK(truncated_closed_form(Family::example3, 2, 0, 1, 1) ==
        CyclotomicNumber::constant(1, Rational(1, 2)));
  CHECK(radial_limit_exact(Family::example3, 2, 0, 1, 1) ==
        Rational(1, 2) * root_power(3, 1));
}

TEST_CASE("truncated sums match the closed forms on a small grid") {
  for (Family fam : kFamilies) {
    for (long m = 2; m <= 4; ++m) {
      for (long a : a_range(fam, m)) {
        for (long N : n_range(fam, 3)) {
          for (long M : oracle::coprime_residues(N)) {
            const FamilyInfo info = family_info(fam, m, a);
            const CyclotomicNumber value =
                evaluate_truncated(fam, m, a, N, root_power(N, M));
            const CyclotomicNumber pref =
                to_cyclotomic(prefactor_exponent(fam, m, a, N, M),
                              static_cast<unsigned long>(info.D * N));
            CHECK(value == truncated_closed_form(fam, m, a, N, M));
            CHECK(pref * value == radial_limit_exact(fam, m, a, N, M));
          }
        }
      }
    }
  }
}

TEST_CASE("prefactor exponents reduce to lowest terms") {
  const RootOfUnityExponent e = prefactor_exponent(Family::hikami, 3, 1, 1, 1);
  CHECK(e.p == 1);
  CHECK(e.L == 12);
  const RootOfUnityExponent f = prefactor_exponent(Family::hikami, 3, 0, 1, 1);
  CHECK(f.p == 1);
  CHECK(f.L == 3);
  const RootOfUnityExponent g = prefactor_exponent(Family::hikami, 2, 0, 3, 2);
  CHECK(g.p == 1);  // 2 * 1 / 24 = 1/12
  CHECK(g.L == 12);
}

TEST_CASE("support modes agree when no delta marker is present") {
  for (long N : {1L, 3L}) {
    const CyclotomicNumber q = root_power(N, 1);
    CHECK(evaluate_truncated(Family::hikami, 4, 0, N, q) ==
          evaluate_truncated(Family::hikami, 4, 0, N, q, SupportMode::uniform_cap));
    CHECK(evaluate_truncated(Family::example1, 3, 0, N, q) ==
          evaluate_truncated(Family::example1, 3, 0, N, q, SupportMode::uniform_cap));
  }
}

TEST_CASE("chain sums with frozen top invert their pochhammer factor") {
  const ChainShape shape = chain_shape(Family::example1, 0);
  for (long top : {0L, 1L, 3L}) {
    const TruncatedQSeries s = chain_sum_series(shape, 0, top, 10);
    CHECK(mul(s, to_series(pochhammer(Sign::minus, 1, 1, top), 10)) ==
          TruncatedQSeries::one(10));
  }
}
