#include "falsetheta/cyclotomic.hpp"

#include <cassert>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace falsetheta {

namespace {

long mod_floor(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

// ---- integer polynomial helpers (constant term first) ----

using ZVec = std::vector<Integer>;
using QVec = std::vector<Rational>;

// Exact division of integer polynomials; the divisor must be monic and the
// remainder must vanish.
ZVec exact_divide(ZVec num, const ZVec& den) {
  const long dn = static_cast<long>(num.size()) - 1;
  const long dd = static_cast<long>(den.size()) - 1;
  assert(dd >= 0 && den[dd] == 1);
  assert(dn >= dd);
  ZVec quot(dn - dd + 1);
  for (long e = dn; e >= dd; --e) {
    Integer c = num[e];
    quot[e - dd] = c;
    if (c != 0) {
      for (long i = 0; i <= dd; ++i) num[e - dd + i] -= c * den[i];
    }
  }
  for (const Integer& c : num) assert(c == 0);
  return quot;
}

std::vector<unsigned long> divisors_of(unsigned long n) {
  std::vector<unsigned long> ds;
  for (unsigned long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      ds.push_back(d);
      if (d != n / d) ds.push_back(n / d);
    }
  }
  return ds;
}

// ---- per-order field data ----

struct Field {
  unsigned long order = 1;
  unsigned long degree = 1;
  ZVec modulus;                 // Phi_order
  std::vector<QVec> powers;     // zeta^j reduced, j in [0, order)
};

std::mutex g_field_mutex;
std::map<unsigned long, std::shared_ptr<const Field>>& field_cache() {
  static std::map<unsigned long, std::shared_ptr<const Field>> cache;
  return cache;
}

ZVec compute_cyclotomic(unsigned long order);

const ZVec& cyclotomic_coeffs(unsigned long order) {
  static std::mutex mtx;
  static std::map<unsigned long, std::unique_ptr<ZVec>> cache;
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(order);
    if (it != cache.end()) return *it->second;
  }
  // Compute without the lock held: the divisor recursion re-enters this
  // function.  Entries are never erased, so returned references stay valid.
  ZVec computed = compute_cyclotomic(order);
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(order);
  if (it == cache.end())
    it = cache.emplace(order, std::make_unique<ZVec>(std::move(computed))).first;
  return *it->second;
}

ZVec compute_cyclotomic(unsigned long order) {
  if (order == 0) throw std::invalid_argument("cyclotomic order must be positive");
  if (order == 1) return {Integer(-1), Integer(1)};  // x - 1
  ZVec poly(order + 1);
  poly[0] = -1;
  poly[order] = 1;  // x^order - 1
  for (unsigned long d : divisors_of(order)) {
    if (d == order) continue;
    poly = exact_divide(std::move(poly), cyclotomic_coeffs(d));
  }
  return poly;
}

// Reduce a rational polynomial in place modulo the (monic, integer) field
// modulus, then resize to the field degree.
void reduce(QVec& t, const Field& f) {
  const long deg = static_cast<long>(f.degree);
  for (long e = static_cast<long>(t.size()) - 1; e >= deg; --e) {
    if (t[e] != 0) {
      Rational c = t[e];
      for (long i = 0; i < deg; ++i) {
        if (f.modulus[i] != 0) t[e - deg + i] -= c * Rational(f.modulus[i]);
      }
    }
    t[e] = 0;
  }
  t.resize(f.degree);
}

std::shared_ptr<const Field> build_field(unsigned long order) {
  auto f = std::make_shared<Field>();
  f->order = order;
  f->degree = euler_phi(order);
  f->modulus = cyclotomic_coeffs(order);
  f->powers.resize(order);
  QVec cur(f->degree, Rational(0));
  cur[0] = 1;
  for (unsigned long j = 0; j < order; ++j) {
    f->powers[j] = cur;
    // multiply by zeta: shift up one degree and reduce
    QVec next(f->degree + 1, Rational(0));
    for (unsigned long i = 0; i < f->degree; ++i) next[i + 1] = cur[i];
    reduce(next, *f);
    cur = std::move(next);
  }
  return f;
}

const Field& field(unsigned long order) {
  std::lock_guard<std::mutex> lock(g_field_mutex);
  auto& cache = field_cache();
  auto it = cache.find(order);
  if (it == cache.end()) {
    auto built = build_field(order);
    it = cache.emplace(order, std::move(built)).first;
  }
  return *it->second;
}

// ---- rational polynomial helpers for the inverse ----

long poly_degree(const QVec& p) {
  for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i) {
    if (p[i] != 0) return i;
  }
  return -1;
}

// (quotient, remainder) of a by b over Q, b nonzero.
std::pair<QVec, QVec> poly_divmod(QVec a, const QVec& b) {
  long db = poly_degree(b);
  assert(db >= 0);
  long da = poly_degree(a);
  if (da < db) return {QVec{}, std::move(a)};
  QVec quot(da - db + 1, Rational(0));
  const Rational lead = b[db];
  for (long e = da; e >= db; --e) {
    if (a[e] == 0) continue;
    Rational c = a[e] / lead;
    quot[e - db] = c;
    for (long i = 0; i <= db; ++i) a[e - db + i] -= c * b[i];
  }
  return {std::move(quot), std::move(a)};
}

QVec poly_mul(const QVec& a, const QVec& b) {
  long da = poly_degree(a), db = poly_degree(b);
  if (da < 0 || db < 0) return QVec{};
  QVec r(da + db + 1, Rational(0));
  for (long i = 0; i <= da; ++i) {
    if (a[i] == 0) continue;
    for (long j = 0; j <= db; ++j) {
      if (b[j] != 0) r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

QVec poly_sub(QVec a, const QVec& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return a;
}

}  // namespace

unsigned long euler_phi(unsigned long n) {
  if (n == 0) throw std::invalid_argument("euler_phi(0)");
  unsigned long result = n;
  unsigned long m = n;
  for (unsigned long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

const std::vector<Integer>& cyclotomic_polynomial(unsigned long order) {
  return cyclotomic_coeffs(order);
}

CyclotomicNumber CyclotomicNumber::zero(unsigned long order) {
  CyclotomicNumber z;
  z.order_ = order;
  z.coeffs_.assign(field(order).degree, Rational(0));
  return z;
}

CyclotomicNumber CyclotomicNumber::one(unsigned long order) {
  return constant(order, Rational(1));
}

CyclotomicNumber CyclotomicNumber::constant(unsigned long order, const Rational& value) {
  CyclotomicNumber z = zero(order);
  z.coeffs_[0] = value;
  return z;
}

CyclotomicNumber CyclotomicNumber::from_coeffs(unsigned long order,
                                               std::vector<Rational> coeffs) {
  if (coeffs.size() != field(order).degree) {
    throw std::invalid_argument("coefficient vector has wrong length for Q(zeta_L)");
  }
  CyclotomicNumber z;
  z.order_ = order;
  z.coeffs_ = std::move(coeffs);
  return z;
}

bool CyclotomicNumber::is_zero() const {
  for (const Rational& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool CyclotomicNumber::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

namespace {

// Promote both operands into Q(zeta_lcm) when the orders differ.
void align(CyclotomicNumber& a, CyclotomicNumber& b) {
  if (a.order() == b.order()) return;
  unsigned long target = std::lcm(a.order(), b.order());
  a = embed(a, target);
  b = embed(b, target);
}

}  // namespace

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& rhs) {
  if (order_ != rhs.order()) {
    CyclotomicNumber b = rhs;
    align(*this, b);
    return *this += b;
  }
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& rhs) {
  if (order_ != rhs.order()) {
    CyclotomicNumber b = rhs;
    align(*this, b);
    return *this -= b;
  }
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& rhs) {
  if (order_ != rhs.order()) {
    CyclotomicNumber b = rhs;
    align(*this, b);
    return *this *= b;
  }
  const Field& f = field(order_);
  const size_t d = f.degree;
  QVec prod(2 * d - 1, Rational(0));
  for (size_t i = 0; i < d; ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < d; ++j) {
      if (rhs.coeffs_[j] != 0) prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  reduce(prod, f);
  coeffs_ = std::move(prod);
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const Rational& scalar) {
  for (Rational& c : coeffs_) c *= scalar;
  return *this;
}

CyclotomicNumber root_power(unsigned long order, long power) {
  const Field& f = field(order);
  long p = mod_floor(power, static_cast<long>(order));
  return CyclotomicNumber::from_coeffs(order, f.powers[p]);
}

CyclotomicNumber embed(const CyclotomicNumber& z, unsigned long target_order) {
  if (target_order % z.order() != 0) {
    throw std::invalid_argument("embed: source order does not divide target order");
  }
  if (target_order == z.order()) return z;
  const Field& f = field(target_order);
  const unsigned long stride = target_order / z.order();
  QVec acc(f.degree, Rational(0));
  for (size_t k = 0; k < z.coeffs().size(); ++k) {
    const Rational& c = z.coeffs()[k];
    if (c == 0) continue;
    const QVec& row = f.powers[(k * stride) % target_order];
    for (size_t i = 0; i < f.degree; ++i) {
      if (row[i] != 0) acc[i] += c * row[i];
    }
  }
  return CyclotomicNumber::from_coeffs(target_order, std::move(acc));
}

CyclotomicNumber invert(const CyclotomicNumber& z) {
  if (z.is_zero()) throw std::domain_error("division by zero in Q(zeta_L)");
  const Field& f = field(z.order());
  // Extended Euclid against the field modulus: u*z + v*Phi = gcd = const.
  QVec r0(f.modulus.size());
  for (size_t i = 0; i < f.modulus.size(); ++i) r0[i] = Rational(f.modulus[i]);
  QVec r1 = z.coeffs();
  QVec s0{}, s1{Rational(1)};
  while (poly_degree(r1) >= 0) {
    auto [q, rem] = poly_divmod(std::move(r0), r1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    QVec s2 = poly_sub(std::move(s0), poly_mul(q, s1));
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  long d = poly_degree(r0);
  assert(d == 0);  // Phi_L is irreducible over Q
  const Rational g = r0[0];
  s0.resize(f.degree, Rational(0));
  for (Rational& c : s0) c /= g;
  return CyclotomicNumber::from_coeffs(z.order(), std::move(s0));
}

CyclotomicNumber mul_root_power(const CyclotomicNumber& z, long power) {
  const Field& f = field(z.order());
  long p = mod_floor(power, static_cast<long>(z.order()));
  QVec acc(f.degree, Rational(0));
  for (size_t k = 0; k < z.coeffs().size(); ++k) {
    const Rational& c = z.coeffs()[k];
    if (c == 0) continue;
    const QVec& row = f.powers[(k + p) % z.order()];
    for (size_t i = 0; i < f.degree; ++i) {
      if (row[i] != 0) acc[i] += c * row[i];
    }
  }
  return CyclotomicNumber::from_coeffs(z.order(), std::move(acc));
}

CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
CyclotomicNumber operator-(const CyclotomicNumber& a) {
  CyclotomicNumber r = a;
  r *= Rational(-1);
  return r;
}
CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
CyclotomicNumber operator*(const Rational& s, CyclotomicNumber a) {
  a *= s;
  return a;
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.order() == b.order()) return a.coeffs() == b.coeffs();
  unsigned long target = std::lcm(a.order(), b.order());
  return embed(a, target).coeffs() == embed(b, target).coeffs();
}

RootOfUnityExponent root_exponent(const Rational& turns) {
  Rational t = turns;
  // reduce mod 1 into [0, 1)
  Integer num = t.get_num(), den = t.get_den();
  Integer q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  Rational frac(r, den);
  frac.canonicalize();
  RootOfUnityExponent e;
  e.p = frac.get_num().get_si();
  e.L = frac.get_den().get_ui();
  return e;
}

RootOfUnityExponent operator*(const RootOfUnityExponent& a, const RootOfUnityExponent& b) {
  Rational sum = Rational(a.p, static_cast<long>(a.L)) + Rational(b.p, static_cast<long>(b.L));
  sum.canonicalize();
  return root_exponent(sum);
}

RootOfUnityExponent inverse(const RootOfUnityExponent& a) {
  return root_exponent(Rational(-a.p, static_cast<long>(a.L)));
}

CyclotomicNumber to_cyclotomic(const RootOfUnityExponent& e, unsigned long order) {
  if (order % e.L != 0) {
    throw std::invalid_argument("root exponent does not live in the requested field");
  }
  return root_power(order, e.p * static_cast<long>(order / e.L));
}

BigComplex complex_approximation(const CyclotomicNumber& z, mpfr_prec_t precision) {
  if (precision < 53) throw std::invalid_argument("precision below 53 bits");
  const mpfr_prec_t work = precision + 16;
  const unsigned long L = z.order();
  BigFloat two_pi = BigFloat::from_long(2, work) * BigFloat::pi(work);
  BigComplex acc(work);
  for (size_t k = 0; k < z.coeffs().size(); ++k) {
    const Rational& c = z.coeffs()[k];
    if (c == 0) continue;
    BigFloat angle = two_pi * BigFloat::from_long(static_cast<long>(k), work) /
                     BigFloat::from_long(static_cast<long>(L), work);
    auto [cs, sn] = sin_cos(angle);
    BigFloat w = BigFloat::from_rational(c, work);
    acc.re += w * cs;
    acc.im += w * sn;
  }
  return {acc.re.rounded_to(precision), acc.im.rounded_to(precision)};
}

std::complex<double> to_complex_double(const CyclotomicNumber& z) {
  return complex_approximation(z, 64).to_complex_double();
}

std::string to_string(const CyclotomicNumber& z) {
  if (z.is_zero()) return "0";
  const auto pretty = [](const Rational& r) {
    std::string s = r.get_num().get_str();
    if (r.get_den() != 1) s += "/" + r.get_den().get_str();
    return s;
  };
  std::string out;
  if (!z.is_rational()) out = "zeta[" + std::to_string(z.order()) + "]: ";
  bool first = true;
  for (size_t k = 0; k < z.coeffs().size(); ++k) {
    Rational c = z.coeffs()[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = c == 1;
    if (!unit || k == 0) out += pretty(c);
    if (k > 0) {
      if (!unit) out += " ";
      out += "z";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace falsetheta
