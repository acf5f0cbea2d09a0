#include "falsetheta/characters.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace falsetheta {

namespace {

long mod_floor(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

void check_character(const PeriodicSignCharacter& chi) {
  if (chi.modulus < 2) throw std::invalid_argument("character modulus must be >= 2");
  if (mod_floor(chi.plus_residue + chi.minus_residue, chi.modulus) != 0) {
    throw std::invalid_argument("sign character residues must sum to 0 mod the modulus");
  }
  if (mod_floor(chi.plus_residue, chi.modulus) == mod_floor(chi.minus_residue, chi.modulus)) {
    throw std::invalid_argument("sign character residues coincide");
  }
}

void check_root_parameters(long N, long M) {
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  if (M < 1 || std::gcd(M, N) != 1) {
    throw std::invalid_argument("M must be in [1, N] and coprime to N");
  }
}

}  // namespace

int PeriodicSignCharacter::operator()(long n) const {
  long r = mod_floor(n, modulus);
  if (r == mod_floor(plus_residue, modulus)) return 1;
  if (r == mod_floor(minus_residue, modulus)) return -1;
  return 0;
}

PeriodicSignCharacter chi_hikami(long m, long a) {
  if (m < 2 || a < 0 || a > m - 2) {
    throw std::invalid_argument("chi_hikami: need m >= 2 and 0 <= a <= m-2");
  }
  PeriodicSignCharacter chi{2 * m, m - a - 1, m + a + 1};
  check_character(chi);
  return chi;
}

PeriodicSignCharacter chi_example1(long m) {
  if (m < 2) throw std::invalid_argument("chi_example1: need m >= 2");
  PeriodicSignCharacter chi{4 * m - 2, 2 * m - 3, 2 * m + 1};
  check_character(chi);
  return chi;
}

PeriodicSignCharacter chi_example2(long m) {
  if (m < 2) throw std::invalid_argument("chi_example2: need m >= 2");
  PeriodicSignCharacter chi{4 * (m - 1), 2 * m - 3, 2 * m - 1};
  check_character(chi);
  return chi;
}

PeriodicSignCharacter chi_example3(long m, long a) {
  if (m < 2 || a < 0 || a > m - 2) {
    throw std::invalid_argument("chi_example3: need m >= 2 and 0 <= a <= m-2");
  }
  PeriodicSignCharacter chi{2 * (2 * m - 1), 2 * (m - a - 1), 2 * (m + a)};
  check_character(chi);
  return chi;
}

CyclotomicNumber limit_value_hikami(long m, long a, long N, long M) {
  PeriodicSignCharacter chi = chi_hikami(m, a);
  check_root_parameters(N, M);
  const unsigned long L = static_cast<unsigned long>(4 * m * N);
  CyclotomicNumber acc = CyclotomicNumber::zero(L);
  for (long n = 0; n <= m * N; ++n) {
    int s = chi(n);
    if (s == 0) continue;
    Rational w = Rational(s) * (Rational(1) - make_rational(n, m * N));
    if (w == 0) continue;
    acc += w * root_power(L, M * n * n);
  }
  acc *= Rational(m);
  return acc;
}

CyclotomicNumber limit_value_quadratic_form(const PeriodicSignCharacter& chi, long D,
                                            const Rational& scale, long N, long M) {
  check_character(chi);
  check_root_parameters(N, M);
  if (D < 1) throw std::invalid_argument("twist denominator must be >= 1");
  const unsigned long L = static_cast<unsigned long>(D * N);
  CyclotomicNumber acc = CyclotomicNumber::zero(L);
  for (long k = 0; k <= chi.modulus * N; ++k) {
    int s = chi(k);
    if (s == 0) continue;
    acc += Rational(s * k * k) * root_power(L, M * k * k);
  }
  acc *= scale;
  return acc;
}

std::vector<Rational> bernoulli_polynomial(long k) {
  if (k < 0) throw std::invalid_argument("bernoulli_polynomial: k >= 0 required");
  static std::mutex mtx;
  static std::vector<std::vector<Rational>> rows = {{Rational(1)}};
  std::lock_guard<std::mutex> lock(mtx);
  // sum_{j=0}^{k} C(k+1, j) B_j(x) = (k+1) x^k resolves B_k given B_0..B_{k-1}
  while (static_cast<long>(rows.size()) <= k) {
    const long n = static_cast<long>(rows.size());
    std::vector<Rational> b(n + 1, Rational(0));
    b[n] = 1;  // x^n term after dividing by (n+1) below cancels: build (n+1)x^n first
    for (Rational& c : b) c *= Rational(n + 1);
    Integer binom = 1;  // C(n+1, j)
    for (long j = 0; j < n; ++j) {
      // binom currently C(n+1, j)
      for (size_t e = 0; e < rows[j].size(); ++e) {
        b[e] -= Rational(binom) * rows[j][e];
      }
      binom = binom * (n + 1 - j) / (j + 1);
    }
    for (Rational& c : b) c /= Rational(n + 1);
    rows.push_back(std::move(b));
  }
  return rows[k];
}

Rational bernoulli_value(long k, const Rational& x) {
  std::vector<Rational> b = bernoulli_polynomial(k);
  Rational acc(0);
  for (long e = static_cast<long>(b.size()) - 1; e >= 0; --e) {
    acc = acc * x + b[e];
  }
  return acc;
}

TwistedPeriodicFunction::TwistedPeriodicFunction(PeriodicSignCharacter chi, long D, long N,
                                                 long M)
    : chi_(chi), D_(D), N_(N), M_(M) {
  check_character(chi_);
  check_root_parameters(N, M);
  if (D < 1) throw std::invalid_argument("twist denominator must be >= 1");
  // Values always fit in Q(zeta_{DN}); carry the doubled order at even N so
  // period handling never depends on parity tricks.
  field_order_ = static_cast<unsigned long>(N % 2 == 1 ? D * N : 2 * D * N);

  period_ = chi_.modulus * N_;
  auto is_period = [&](long P) {
    for (long n = 0; n < P; ++n) {
      if (chi_(n) == 0 && chi_(n + P) == 0) continue;
      if (!(value(n + P) == value(n))) return false;
    }
    return true;
  };
  if (!is_period(period_)) {
    period_ *= 2;
    if (!is_period(period_)) {
      throw std::logic_error("twisted character has no period at 2*modulus*N");
    }
  }
}

CyclotomicNumber TwistedPeriodicFunction::value(long n) const {
  int s = chi_(n);
  if (s == 0) return CyclotomicNumber::zero(field_order_);
  const long mult = static_cast<long>(field_order_) / (D_ * N_);
  CyclotomicNumber z = root_power(field_order_, mult * M_ * n * n);
  if (s < 0) z *= Rational(-1);
  return z;
}

bool TwistedPeriodicFunction::has_zero_mean() const {
  CyclotomicNumber acc = CyclotomicNumber::zero(field_order_);
  for (long n = 0; n < period_; ++n) {
    if (chi_(n) != 0) acc += value(n);
  }
  return acc.is_zero();
}

CyclotomicNumber L_value(const TwistedPeriodicFunction& C, long k) {
  if (k < 0) throw std::invalid_argument("L_value: k >= 0 required");
  if (!C.has_zero_mean()) {
    throw std::domain_error("L_value requires zero mean over the verified period");
  }
  const long F = C.period();
  CyclotomicNumber acc = CyclotomicNumber::zero(C.field_order());
  for (long n = 1; n <= F; ++n) {
    if (C.character()(n) == 0) continue;
    Rational w = bernoulli_value(k + 1, make_rational(n, F));
    if (w == 0) continue;
    acc += w * C.value(n);
  }
  Integer fk;
  mpz_ui_pow_ui(fk.get_mpz_t(), static_cast<unsigned long>(F), static_cast<unsigned long>(k));
  Rational factor = Rational(fk) / Rational(k + 1);
  acc *= -factor;
  return acc;
}

FractionalQSeries character_qseries(const PeriodicSignCharacter& chi, long D,
                                    long max_q_order) {
  check_character(chi);
  if (D < 1 || max_q_order < 0) {
    throw std::invalid_argument("character_qseries: D >= 1, max_q_order >= 0 required");
  }
  FractionalQSeries out;
  out.denominator = D;
  out.body = TruncatedQSeries::zero(max_q_order * D);
  for (long n = 0; n * n <= max_q_order * D; ++n) {
    int s = chi(n);
    if (s != 0) out.body.coeffs[n * n] += Rational(s);
  }
  return out;
}

}  // namespace falsetheta
