#pragma once

// Bailey pairs underlying the nested-sum families, with exact truncated-series
// verification of the pair definition and of the finite and limiting forms of
// the Bailey transform.  A pair with chain parameter m feeds the nested-sum
// family with parameter m + 1: the transform adds the outer index.

#include <functional>

#include "falsetheta/nested_sums.hpp"
#include "falsetheta/qseries.hpp"

namespace falsetheta {

struct BaileyPair {
  Family family = Family::hikami;
  long base = 1;  // the pair is relative to (q^base, q^base)
  long m = 1;
  long a = 0;
  bool corrected_sign = true;  // example3 alpha carries a published sign slip

  TruncatedQSeries alpha(long n, long K) const;
  TruncatedQSeries beta(long n, long K) const;
};

// Pairs take m >= 1; families carrying `a` take a in [0, m-1].
void validate_pair_parameters(Family fam, long m, long a);
BaileyPair bailey_pair(Family fam, long m, long a, bool corrected_sign = true);

struct PairCheckReport {
  bool ok = true;
  long first_failure_n = -1;           // index n at which the check failed
  long first_discrepancy_exponent = -1;
  long n_max = 0;
  long order = 0;
};

// beta_n == sum_k alpha_k / ((q^b; q^b)_{n-k} (q^{2b}; q^b)_{n+k}) through q^K.
PairCheckReport verify_pair_definition(const BaileyPair& pair, long n_max, long K);

// Cleared polynomial form of the finite transform, one identity per n:
//   (q^{2b}; q^b)_n sum_k w_k(n) beta_k == sum_k w_k(n) alpha_k / (q^{b(n+2)}; q^b)_k
// with weight w_k(n) = q^{b(k^2+k)} (q^{b(n-k+1)}; q^b)_k.
PairCheckReport finite_transform_identity(const BaileyPair& pair, long n_max, long K);

// Limiting transform through q^K:
//   sum_n (q^b; q^b)_n (-1)^n q^{b n(n+1)/2} beta_n
//     == (1 - q^b) sum_n (-1)^n q^{b n(n+1)/2} alpha_n.
PairCheckReport infinite_transform_identity(const BaileyPair& pair, long K);

// The beta side of the limiting transform equals the series expansion of the
// nested-sum family with parameter m + 1.
PairCheckReport pair_family_series_match(const BaileyPair& pair, long K);

}  // namespace falsetheta
