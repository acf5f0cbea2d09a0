#pragma once

// Exact arithmetic in the cyclotomic fields Q(zeta_L).  An element is a
// rational coefficient vector of length phi(L), the residue of a polynomial
// in zeta_L modulo the L-th cyclotomic polynomial.  Within one field,
// equality is coefficient equality; values from different fields are
// compared after embedding both into Q(zeta_lcm).

#include <complex>
#include <string>
#include <vector>

#include "falsetheta/bigfloat.hpp"
#include "falsetheta/rational.hpp"

namespace falsetheta {

unsigned long euler_phi(unsigned long n);

// Coefficients of Phi_L, constant term first; monic of degree phi(L).
// Cached and safe for concurrent use.
const std::vector<Integer>& cyclotomic_polynomial(unsigned long order);

class CyclotomicNumber {
 public:
  CyclotomicNumber() : order_(1), coeffs_(1, Rational(0)) {}

  static CyclotomicNumber zero(unsigned long order);
  static CyclotomicNumber one(unsigned long order);
  static CyclotomicNumber constant(unsigned long order, const Rational& value);
  // Coefficients of 1, zeta, ..., zeta^{phi(order)-1}; size must be phi(order).
  static CyclotomicNumber from_coeffs(unsigned long order, std::vector<Rational> coeffs);

  unsigned long order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const;
  // True when the value lies in Q (all basis coefficients above 1 vanish).
  bool is_rational() const;
  Rational rational_part() const { return coeffs_[0]; }

  CyclotomicNumber& operator+=(const CyclotomicNumber& rhs);
  CyclotomicNumber& operator-=(const CyclotomicNumber& rhs);
  CyclotomicNumber& operator*=(const CyclotomicNumber& rhs);
  CyclotomicNumber& operator*=(const Rational& scalar);

 private:
  unsigned long order_;
  std::vector<Rational> coeffs_;
};

// zeta_order^power as a canonical field element (power taken mod order).
CyclotomicNumber root_power(unsigned long order, long power);

// Image of z under zeta_order -> zeta_target^{target/order}; requires
// order | target.
CyclotomicNumber embed(const CyclotomicNumber& z, unsigned long target_order);

// Multiplicative inverse; throws std::domain_error on zero.
CyclotomicNumber invert(const CyclotomicNumber& z);

// zeta_{order(z)}^power * z without forming a dense product.
CyclotomicNumber mul_root_power(const CyclotomicNumber& z, long power);

CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b);
CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b);
CyclotomicNumber operator-(const CyclotomicNumber& a);
CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b);
CyclotomicNumber operator*(const Rational& s, CyclotomicNumber a);
bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);
inline bool operator!=(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  return !(a == b);
}

// e^{2 pi i p / L} tracked as an exact fraction of a turn, kept in lowest
// terms with 0 <= p < L.  Used for the fractional prefactor powers that the
// truncated sums are multiplied by at evaluation points.
struct RootOfUnityExponent {
  long p = 0;
  unsigned long L = 1;
};

RootOfUnityExponent root_exponent(const Rational& turns);
RootOfUnityExponent operator*(const RootOfUnityExponent& a, const RootOfUnityExponent& b);
RootOfUnityExponent inverse(const RootOfUnityExponent& a);
// Field element; requires L | order.
CyclotomicNumber to_cyclotomic(const RootOfUnityExponent& e, unsigned long order);

// Numeric image of z under zeta_L -> e^{2 pi i / L}.  The result carries
// `precision` bits; the internal evaluation uses extra guard bits so the
// error stays below 2^{-precision+4} * (1 + sum |coeff|).
BigComplex complex_approximation(const CyclotomicNumber& z, mpfr_prec_t precision);
std::complex<double> to_complex_double(const CyclotomicNumber& z);

// Readable rendering as a polynomial in z = zeta_order, e.g.
// "zeta[12]: 1 - 2/3 z^5".  Plain rationals render without the field tag.
std::string to_string(const CyclotomicNumber& z);

}  // namespace falsetheta
