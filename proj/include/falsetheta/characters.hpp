#pragma once

// Odd periodic sign characters, their root-of-unity twists, Bernoulli
// polynomials and the L-values L(-k, C) that control the asymptotics of the
// false theta series near roots of unity.  Also the two exact limit-value
// shapes (linear-weight and quadratic-weight character sums) that the
// verification suites compare against.

#include <vector>

#include "falsetheta/cyclotomic.hpp"
#include "falsetheta/qseries.hpp"
#include "falsetheta/rational.hpp"

namespace falsetheta {

// chi(n) = +1 for n = plus_residue (mod modulus), -1 for n = minus_residue,
// 0 otherwise.  plus_residue + minus_residue = 0 (mod modulus) makes chi odd.
struct PeriodicSignCharacter {
  long modulus = 1;
  long plus_residue = 0;
  long minus_residue = 0;

  int operator()(long n) const;
};

PeriodicSignCharacter chi_hikami(long m, long a);    // mod 2m: +1 at m-a-1, -1 at m+a+1
PeriodicSignCharacter chi_example1(long m);          // mod 4m-2: +1 at 2m-3, -1 at 2m+1
PeriodicSignCharacter chi_example2(long m);          // mod 4m-4: +1 at 2m-3, -1 at 2m-1
PeriodicSignCharacter chi_example3(long m, long a);  // mod 4m-2: +1 at 2(m-a-1), -1 at 2(m+a)

// m * sum_{n=0}^{mN} chi_hikami(n) (1 - n/(mN)) zeta_{4mN}^{M n^2},
// the exact tangential limit of the first family at zeta_N^M.
CyclotomicNumber limit_value_hikami(long m, long a, long N, long M);

// scale * sum_{k=0}^{modulus*N} k^2 chi(k) zeta_{DN}^{M k^2} in Q(zeta_{DN});
// D is the exponent denominator of the family's theta-type series.
CyclotomicNumber limit_value_quadratic_form(const PeriodicSignCharacter& chi, long D,
                                            const Rational& scale, long N, long M);

// Coefficients of B_k(x), constant term first.
std::vector<Rational> bernoulli_polynomial(long k);
Rational bernoulli_value(long k, const Rational& x);

// C(n) = chi(n) * e^{2 pi i M n^2 / (D N)}: the coefficient function of the
// series along the radial path.  The constructor verifies the claimed period
// modulus*N by direct comparison and doubles it when the check fails (that
// happens for the base-q^2-free family with D = 4*modulus at even N); the
// verified period is what L_value integrates over.
class TwistedPeriodicFunction {
 public:
  TwistedPeriodicFunction(PeriodicSignCharacter chi, long D, long N, long M);

  long period() const { return period_; }
  unsigned long field_order() const { return field_order_; }
  const PeriodicSignCharacter& character() const { return chi_; }
  long twist_denominator() const { return D_; }

  CyclotomicNumber value(long n) const;
  bool has_zero_mean() const;

 private:
  PeriodicSignCharacter chi_;
  long D_, N_, M_;
  unsigned long field_order_;
  long period_;
};

// L(-k, C) = -(F^k / (k+1)) sum_{n=1}^{F} C(n) B_{k+1}(n/F) over the verified
// period F.  Requires the mean of C over the period to vanish.
CyclotomicNumber L_value(const TwistedPeriodicFunction& C, long k);

// sum_{n >= 0} chi(n) q^{n^2 / D} as a series in x = q^{1/D}, keeping every
// term with n^2/D <= max_q_order.
FractionalQSeries character_qseries(const PeriodicSignCharacter& chi, long D,
                                    long max_q_order);

}  // namespace falsetheta
