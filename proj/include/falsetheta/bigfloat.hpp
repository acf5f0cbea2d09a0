#pragma once

// Thin RAII layer over MPFR reals, plus the small complex type the radial
// evaluation and the cyclotomic complex embedding share.  Only the handful of
// operations the project needs are wrapped.

#include <mpfr.h>

#include <complex>
#include <utility>

#include "falsetheta/rational.hpp"

namespace falsetheta {

class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 128) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  static BigFloat from_double(double x, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_d(r.v_, x, MPFR_RNDN);
    return r;
  }
  static BigFloat from_long(long x, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_si(r.v_, x, MPFR_RNDN);
    return r;
  }
  static BigFloat from_rational(const Rational& x, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_q(r.v_, x.get_mpq_t(), MPFR_RNDN);
    return r;
  }
  static BigFloat pi(mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  BigFloat& operator+=(const BigFloat& o) {
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  BigFloat& operator-=(const BigFloat& o) {
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  BigFloat& operator*=(const BigFloat& o) {
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  BigFloat& operator/=(const BigFloat& o) {
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }

  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
  friend BigFloat operator-(BigFloat a) {
    mpfr_neg(a.v_, a.v_, MPFR_RNDN);
    return a;
  }
  friend bool operator<(const BigFloat& a, const BigFloat& b) {
    return mpfr_cmp(a.v_, b.v_) < 0;
  }
  friend bool operator>(const BigFloat& a, const BigFloat& b) {
    return mpfr_cmp(a.v_, b.v_) > 0;
  }

  friend BigFloat abs(BigFloat a) {
    mpfr_abs(a.v_, a.v_, MPFR_RNDN);
    return a;
  }
  friend BigFloat exp(BigFloat a) {
    mpfr_exp(a.v_, a.v_, MPFR_RNDN);
    return a;
  }
  friend BigFloat sqrt(BigFloat a) {
    mpfr_sqrt(a.v_, a.v_, MPFR_RNDN);
    return a;
  }
  // (cos a, sin a)
  friend std::pair<BigFloat, BigFloat> sin_cos(const BigFloat& a) {
    BigFloat s(a.precision()), c(a.precision());
    mpfr_sin_cos(s.v_, c.v_, a.v_, MPFR_RNDN);
    return {std::move(c), std::move(s)};
  }
  BigFloat rounded_to(mpfr_prec_t prec) const {
    BigFloat r(prec);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }

 private:
  mpfr_t v_;
};

struct BigComplex {
  BigFloat re, im;

  explicit BigComplex(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
  BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

  BigComplex& operator+=(const BigComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  BigComplex& operator-=(const BigComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    BigComplex r(a.re.precision());
    r.re = a.re * b.re - a.im * b.im;
    r.im = a.re * b.im + a.im * b.re;
    return r;
  }
  friend BigComplex operator*(const BigFloat& s, BigComplex a) {
    a.re *= s;
    a.im *= s;
    return a;
  }

  BigFloat abs() const { return sqrt(re * re + im * im); }
  std::complex<double> to_complex_double() const {
    return {re.to_double(), im.to_double()};
  }
};

}  // namespace falsetheta
