#pragma once

// The four families of nested q-hypergeometric sums: their truncated
// evaluations at roots of unity (dynamic programming over the index chain,
// never tuple enumeration), their full series expansions, and the exact
// closed forms / radial limits they are checked against.

#include <vector>

#include "falsetheta/characters.hpp"
#include "falsetheta/cyclotomic.hpp"
#include "falsetheta/qseries.hpp"
#include "falsetheta/rational.hpp"

namespace falsetheta {

enum class Family { hikami, example1, example2, example3 };

const char* family_name(Family fam);

// natural_support: every inner index runs over the full support of its
// coupling binomial (an index below the delta position may reach N).
// uniform_cap: every index is clamped to [0, N-1].  The two differ exactly
// when the delta marker is present with a >= 1; natural support is the
// reading under which the limit identities hold, so it is the default.
enum class SupportMode { natural_support, uniform_cap };

enum class NumeratorKind { none, q_q2 };  // (q; q^2)_{n_1}
enum class DenominatorKind {
  none,
  neg_q,          // (-q; q)_{n_1}
  neg_q_2n1p1,    // (-q; q)_{2 n_1 + 1}
  neg_q_q2_delta  // (-q; q^2)_{n_1 + [a == 0]}
};

// Shared shape of the index chains: summand factors attached to the chain
// indices n_1 <= ... (coupling binomials in base q^base, squares on every
// chain index, linear terms from window_start up, extra factors on n_1).
struct ChainShape {
  long base = 1;
  long delta_position = -1;  // binomial top n_{i+1}+1 at i == delta_position
  long window_start = 1;
  NumeratorKind numerator = NumeratorKind::none;
  DenominatorKind denominator = DenominatorKind::none;
};

ChainShape chain_shape(Family fam, long a);

struct FamilyInfo {
  long base;                // q-power base (1 or 2)
  long f;                   // character modulus
  long D;                   // exponent denominator of the theta-type series
  long prefactor_num;       // definition prefactor = q^{prefactor_num / D}
  Rational multiplier;      // constant in front of the character series
  Rational scale_over_N2;   // closed-form scale = scale_over_N2 / N^2
  PeriodicSignCharacter chi;
  bool requires_odd_point_order;
};

void validate_family_parameters(Family fam, long m, long a);
FamilyInfo family_info(Family fam, long m, long a);

// The m-1 fold truncated sum with all indices below N (natural support may
// push inner indices to N), evaluated exactly at `point`.  Families with a
// Pochhammer denominator need an odd-order point; even orders hit a pole and
// raise std::domain_error.
CyclotomicNumber evaluate_truncated(Family fam, long m, long a, long N,
                                    const CyclotomicNumber& point,
                                    SupportMode mode = SupportMode::natural_support);

// Unbounded expansion of the same sum: the definition equals
// multiplier * q^{exponent_offset} * series with exponent_offset =
// prefactor_num / D.  `q_order` bounds the integer-exponent series part.
struct SeriesExpansion {
  Rational exponent_offset;
  TruncatedQSeries series;
};
SeriesExpansion expand_series(Family fam, long m, long a, long q_order);

// Compares q^{offset} * series against the character q-series through
// x^{x_order}, x = q^{1/D}.  (The constant multiplier cancels.)
struct SeriesIdentityReport {
  bool ok = false;
  bool has_discrepancy = false;
  Rational first_discrepancy;  // exponent, in units of q
  FractionalQSeries lhs, rhs;
};
SeriesIdentityReport series_identity_check(Family fam, long m, long a, long x_order);

// Exact value the truncated sum must take at zeta_N^M:
// zeta^{-prefactor} * scale * sum_{k=0}^{fN} k^2 chi(k) zeta_{DN}^{M k^2}.
CyclotomicNumber truncated_closed_form(Family fam, long m, long a, long N, long M);

// Exact radial limit of the full series at zeta_N^M (multiplier included).
CyclotomicNumber radial_limit_exact(Family fam, long m, long a, long N, long M);

// e^{2 pi i * M * prefactor_num / (D N)}.
RootOfUnityExponent prefactor_exponent(Family fam, long m, long a, long N, long M);

// Chain sum with n_{length+1} frozen at `top`, as a truncated series; the
// beta halves of the Bailey pairs are built from this with an extra
// 1/(q^base; q^base)_top.  length == 0 applies the n_1 factors to `top`.
TruncatedQSeries chain_sum_series(const ChainShape& shape, long length, long top, long K);

}  // namespace falsetheta
