#include "falsetheta/qseries.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace falsetheta {

QPolynomial QPolynomial::constant(const Rational& v) {
  return QPolynomial(std::vector<Rational>{v});
}

QPolynomial QPolynomial::monomial(long exponent, const Rational& coeff) {
  if (exponent < 0) throw std::invalid_argument("negative exponent in QPolynomial");
  std::vector<Rational> c(exponent + 1, Rational(0));
  c[exponent] = coeff;
  return QPolynomial(std::move(c));
}

Rational QPolynomial::coeff(long exponent) const {
  if (exponent < 0 || exponent >= static_cast<long>(c_.size())) return Rational(0);
  return c_[exponent];
}

void QPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& rhs) {
  if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), Rational(0));
  for (size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& rhs) {
  if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), Rational(0));
  for (size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& rhs) {
  if (c_.empty() || rhs.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> prod(c_.size() + rhs.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < rhs.c_.size(); ++j) {
      if (rhs.c_[j] != 0) prod[i + j] += c_[i] * rhs.c_[j];
    }
  }
  c_ = std::move(prod);
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator*=(const Rational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (Rational& x : c_) x *= s;
  return *this;
}

QPolynomial QPolynomial::shifted(long e) const {
  if (e < 0) throw std::invalid_argument("negative shift");
  if (c_.empty()) return {};
  std::vector<Rational> out(c_.size() + e, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) out[i + e] = c_[i];
  return QPolynomial(std::move(out));
}

QPolynomial QPolynomial::inflated(long k) const {
  if (k < 1) throw std::invalid_argument("inflation factor must be >= 1");
  if (k == 1 || c_.empty()) return *this;
  std::vector<Rational> out((c_.size() - 1) * k + 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) out[i * k] = c_[i];
  return QPolynomial(std::move(out));
}

CyclotomicNumber QPolynomial::eval_at(const CyclotomicNumber& point) const {
  CyclotomicNumber acc = CyclotomicNumber::zero(point.order());
  for (long e = degree(); e >= 0; --e) {
    acc *= point;
    if (c_[e] != 0) acc += CyclotomicNumber::constant(point.order(), c_[e]);
  }
  return acc;
}

QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
QPolynomial operator*(QPolynomial a, const QPolynomial& b) { return a *= b; }
bool operator==(const QPolynomial& a, const QPolynomial& b) {
  return a.coeffs() == b.coeffs();
}

QPolynomial pochhammer(Sign sign, long shift, long step, long n) {
  if (shift < 0 || step < 1 || n < 0) {
    throw std::invalid_argument("pochhammer: shift >= 0, step >= 1, n >= 0 required");
  }
  QPolynomial acc = QPolynomial::constant(Rational(1));
  const Rational factor = sign == Sign::plus ? Rational(-1) : Rational(1);
  for (long j = 0; j < n; ++j) {
    QPolynomial term = QPolynomial::constant(Rational(1));
    term += QPolynomial::monomial(shift + j * step, factor);
    acc *= term;
  }
  return acc;
}

CyclotomicNumber pochhammer_at(Sign sign, long shift, long step, long n,
                               const CyclotomicNumber& q) {
  const Rational factor = sign == Sign::plus ? Rational(-1) : Rational(1);
  CyclotomicNumber acc = CyclotomicNumber::one(q.order());
  CyclotomicNumber p = CyclotomicNumber::one(q.order());
  // running power q^{shift + j*step}
  for (long i = 0; i < shift; ++i) p *= q;
  CyclotomicNumber stepPow = CyclotomicNumber::one(q.order());
  for (long i = 0; i < step; ++i) stepPow *= q;
  for (long j = 0; j < n; ++j) {
    if (j > 0) p *= stepPow;
    acc *= (CyclotomicNumber::one(q.order()) + factor * p);
  }
  return acc;
}

namespace {

// base-1 Gaussian binomials, row-memoized; [n k] = [n-1 k] + q^{n-k} [n-1 k-1]
const QPolynomial& gaussian_base1(long n, long k) {
  static std::mutex mtx;
  static std::map<std::pair<long, long>, QPolynomial> cache;
  const auto key = std::make_pair(n, k);
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  // Recurse with the lock released; map nodes are stable so returned
  // references survive later insertions.
  QPolynomial value;
  if (k == 0 || k == n) {
    value = QPolynomial::constant(Rational(1));
  } else {
    QPolynomial left = gaussian_base1(n - 1, k);
    QPolynomial right = gaussian_base1(n - 1, k - 1).shifted(n - k);
    value = left + right;
  }
  std::lock_guard<std::mutex> lock(mtx);
  return cache.emplace(key, std::move(value)).first->second;
}

}  // namespace

QPolynomial gaussian_binomial(long n, long k, long base) {
  if (base < 1) throw std::invalid_argument("gaussian_binomial: base must be >= 1");
  if (k < 0 || n < 0 || k > n) return {};
  QPolynomial p = gaussian_base1(n, k);
  return base == 1 ? p : p.inflated(base);
}

TruncatedQSeries TruncatedQSeries::zero(long order) {
  if (order < 0) throw std::invalid_argument("series order must be >= 0");
  TruncatedQSeries s;
  s.order = order;
  s.coeffs.assign(order + 1, Rational(0));
  return s;
}

TruncatedQSeries TruncatedQSeries::one(long order) {
  TruncatedQSeries s = zero(order);
  s.coeffs[0] = 1;
  return s;
}

TruncatedQSeries to_series(const QPolynomial& p, long order) {
  TruncatedQSeries s = TruncatedQSeries::zero(order);
  const long top = std::min(order, p.degree());
  for (long e = 0; e <= top; ++e) s.coeffs[e] = p.coeff(e);
  return s;
}

namespace {

void require_same_order(const TruncatedQSeries& a, const TruncatedQSeries& b) {
  if (a.order != b.order) {
    throw std::logic_error("truncated series combined at different claimed orders");
  }
}

}  // namespace

TruncatedQSeries add(const TruncatedQSeries& a, const TruncatedQSeries& b) {
  require_same_order(a, b);
  TruncatedQSeries r = a;
  for (long e = 0; e <= r.order; ++e) r.coeffs[e] += b.coeffs[e];
  return r;
}

TruncatedQSeries sub(const TruncatedQSeries& a, const TruncatedQSeries& b) {
  require_same_order(a, b);
  TruncatedQSeries r = a;
  for (long e = 0; e <= r.order; ++e) r.coeffs[e] -= b.coeffs[e];
  return r;
}

TruncatedQSeries mul(const TruncatedQSeries& a, const TruncatedQSeries& b) {
  require_same_order(a, b);
  TruncatedQSeries r = TruncatedQSeries::zero(a.order);
  for (long i = 0; i <= a.order; ++i) {
    if (a.coeffs[i] == 0) continue;
    const long jmax = a.order - i;
    for (long j = 0; j <= jmax; ++j) {
      if (b.coeffs[j] != 0) r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
  }
  return r;
}

TruncatedQSeries scale(const Rational& s, TruncatedQSeries a) {
  for (Rational& c : a.coeffs) c *= s;
  return a;
}

TruncatedQSeries mul_monomial(TruncatedQSeries a, long e) {
  if (e < 0) throw std::invalid_argument("mul_monomial: exponent must be >= 0");
  if (e == 0) return a;
  TruncatedQSeries r = TruncatedQSeries::zero(a.order);
  for (long i = 0; i + e <= a.order; ++i) r.coeffs[i + e] = a.coeffs[i];
  return r;
}

TruncatedQSeries invert_unit(const TruncatedQSeries& a) {
  if (a.coeffs[0] == 0) {
    throw std::domain_error("series reciprocal requires a nonzero constant term");
  }
  TruncatedQSeries r = TruncatedQSeries::zero(a.order);
  const Rational inv0 = Rational(1) / a.coeffs[0];
  r.coeffs[0] = inv0;
  for (long e = 1; e <= a.order; ++e) {
    Rational acc(0);
    for (long j = 1; j <= e; ++j) {
      if (a.coeffs[j] != 0) acc += a.coeffs[j] * r.coeffs[e - j];
    }
    r.coeffs[e] = -acc * inv0;
  }
  return r;
}

bool operator==(const TruncatedQSeries& a, const TruncatedQSeries& b) {
  require_same_order(a, b);
  return a.coeffs == b.coeffs;
}

long first_difference(const TruncatedQSeries& a, const TruncatedQSeries& b) {
  require_same_order(a, b);
  for (long e = 0; e <= a.order; ++e) {
    if (a.coeffs[e] != b.coeffs[e]) return e;
  }
  return -1;
}

}  // namespace falsetheta
