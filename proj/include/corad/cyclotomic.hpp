#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N).  Elements are residues of
// Q[X] modulo the N-th cyclotomic polynomial Phi_N, held as coefficient
// vectors of length phi(N) over arbitrary-precision rationals.  Conductor 1
// is the rationals (Phi_1 = X - 1, degree-0 residues).

#include <gmpxx.h>

#include <boost/container/small_vector.hpp>

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "corad/errors.hpp"

namespace corad {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline long to_long(const Int& v) {
  ensure(v.fits_slong_p(), "integer out of long range");
  return v.get_si();
}

// Residue coefficients; inline storage covers every field of degree <= 4
// (conductors 1..6, 8, 12), which is where the dense linear algebra lives.
using CoeffVec = boost::container::small_vector<Rat, 4>;

namespace detail {

// Dense univariate polynomials over Z, coefficients ascending, no trailing zeros.
inline void poly_trim(std::vector<Int>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Int> r(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// Exact division by a monic divisor.
inline std::vector<Int> poly_divexact_monic(std::vector<Int> num, const std::vector<Int>& den) {
  ensure(!den.empty() && den.back() == 1, "poly_divexact_monic: divisor not monic");
  poly_trim(num);
  if (num.empty()) return {};
  ensure(num.size() >= den.size(), "poly_divexact_monic: degree underflow");
  std::vector<Int> q(num.size() - den.size() + 1, Int(0));
  for (std::size_t k = q.size(); k-- > 0;) {
    Int c = num[k + den.size() - 1];
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= c * den[j];
  }
  poly_trim(num);
  ensure(num.empty(), "poly_divexact_monic: nonzero remainder");
  return q;
}

inline long euler_phi(long n) {
  long result = n, m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

inline std::vector<long> divisors_of(long n) {
  std::vector<long> d;
  for (long i = 1; i * i <= n; ++i) {
    if (n % i == 0) {
      d.push_back(i);
      if (i != n / i) d.push_back(n / i);
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace detail

class CycloField {
 public:
  long conductor() const { return conductor_; }
  long degree() const { return degree_; }  // = phi(conductor)
  const std::vector<Rat>& modulus() const { return modulus_; }

  /// Interned field instance for conductor n >= 1; references stay valid for
  /// the lifetime of the process.
  static const CycloField& get(long n) {
    ensure(n >= 1, "CycloField conductor must be positive");
    static std::mutex mu;
    static std::map<long, std::unique_ptr<CycloField>>* registry =
        new std::map<long, std::unique_ptr<CycloField>>();
    std::lock_guard<std::mutex> lock(mu);
    auto it = registry->find(n);
    if (it != registry->end()) return *it->second;
    auto f = std::unique_ptr<CycloField>(new CycloField(n));
    const CycloField& ref = *f;
    registry->emplace(n, std::move(f));
    return ref;
  }

  // Reduce a coefficient sequence of arbitrary length modulo Phi_N.
  CoeffVec reduce(const Rat* poly, std::size_t n) const {
    CoeffVec r;
    r.resize(degree_, Rat(0));
    for (std::size_t i = 0; i < std::min<std::size_t>(n, degree_); ++i) r[i] = poly[i];
    for (std::size_t t = degree_; t < n; ++t) {
      if (poly[t] == 0) continue;
      // X^t = X^{degree + (t - degree)}; fold via precomputed table, extending
      // the table on demand for high-degree inputs (promote can feed these).
      const std::vector<Rat>& row = xpow_row(static_cast<long>(t) - degree_);
      for (long j = 0; j < degree_; ++j) r[j] += poly[t] * row[j];
    }
    return r;
  }
  CoeffVec reduce(const std::vector<Rat>& poly) const { return reduce(poly.data(), poly.size()); }

  /// Fold the tail of a raw product (length 2*degree - 1) into its head, in
  /// place; used by the fused multiply-accumulate paths.
  void fold_tail(Rat* poly) const {
    for (long t = 2 * degree_ - 2; t >= degree_; --t) {
      if (poly[t] == 0) continue;
      const std::vector<Rat>& row = xpow_row(t - degree_);
      for (long j = 0; j < degree_; ++j) poly[j] += poly[t] * row[j];
      poly[t] = 0;
    }
  }

 private:
  explicit CycloField(long n) : conductor_(n) {
    // Phi_N by exact division: Phi_N = (X^N - 1) / prod_{d | N, d < N} Phi_d.
    std::map<long, std::vector<Int>> phi_cache;
    for (long d : detail::divisors_of(n)) {
      std::vector<Int> num(d + 1, Int(0));
      num[0] = -1;
      num[d] = 1;
      for (long e : detail::divisors_of(d)) {
        if (e == d) continue;
        num = detail::poly_divexact_monic(std::move(num), phi_cache.at(e));
      }
      phi_cache[d] = std::move(num);
    }
    const std::vector<Int>& phi = phi_cache.at(n);
    degree_ = static_cast<long>(phi.size()) - 1;
    ensure(degree_ == detail::euler_phi(n), "cyclotomic degree mismatch");
    modulus_.reserve(phi.size());
    for (const Int& c : phi) modulus_.push_back(Rat(c));
    // X^{degree + t} mod Phi for t = 0 .. degree - 2 covers products of reduced
    // residues; rows built incrementally.
    xpow_.reserve(std::max<long>(degree_ - 1, 0));
    for (long t = 0; t + 2 <= degree_; ++t) xpow_row(t);
  }

  const std::vector<Rat>& xpow_row(long t) const {
    while (static_cast<long>(xpow_.size()) <= t) {
      std::vector<Rat> row(degree_, Rat(0));
      if (xpow_.empty()) {
        // X^degree = -(Phi - X^degree)
        for (long j = 0; j < degree_; ++j) row[j] = -modulus_[j];
      } else {
        const std::vector<Rat>& prev = xpow_.back();
        // multiply by X, then fold the overflow term through row 0
        Rat top = prev[degree_ - 1];
        for (long j = degree_ - 1; j >= 1; --j) row[j] = prev[j - 1];
        row[0] = Rat(0);
        if (top != 0) {
          const std::vector<Rat>& r0 = xpow_.front();
          for (long j = 0; j < degree_; ++j) row[j] += top * r0[j];
        }
      }
      xpow_.push_back(std::move(row));
    }
    return xpow_[t];
  }

  long conductor_;
  long degree_;
  std::vector<Rat> modulus_;
  mutable std::vector<std::vector<Rat>> xpow_;
};

/// One element of Q(zeta_N): the residue of a polynomial mod Phi_N, in
/// canonical (fully reduced) form.  Equality is coefficientwise.
class Scalar {
 public:
  Scalar() : fld_(&CycloField::get(1)) { c_.resize(1, Rat(0)); }
  Scalar(const CycloField& f, CoeffVec coeffs) : fld_(&f), c_(std::move(coeffs)) {
    ensure(static_cast<long>(c_.size()) == f.degree(), "Scalar coefficient length mismatch");
  }

  static Scalar zero(const CycloField& f) {
    Scalar s;
    s.fld_ = &f;
    s.c_.assign(f.degree(), Rat(0));
    return s;
  }
  static Scalar one(const CycloField& f) { return from_rational(f, Rat(1)); }
  static Scalar from_rational(const CycloField& f, const Rat& r) {
    Scalar s = zero(f);
    s.c_[0] = r;
    return s;
  }
  static Scalar from_int(const CycloField& f, long v) { return from_rational(f, Rat(v)); }

  const CycloField& field() const { return *fld_; }
  const CoeffVec& coeffs() const { return c_; }

  bool is_zero() const {
    for (const Rat& x : c_)
      if (x != 0) return false;
    return true;
  }
  bool is_one() const {
    if (c_[0] != 1) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }
  bool is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.fld_ == b.fld_ && a.c_ == b.c_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar& operator+=(const Scalar& b) {
    check_same(b);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
    return *this;
  }
  Scalar& operator-=(const Scalar& b) {
    check_same(b);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= b.c_[i];
    return *this;
  }
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  Scalar operator-() const {
    Scalar r = *this;
    for (Rat& x : r.c_) x = -x;
    return r;
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar r = zero(*a.fld_);
    r.add_mul(a, b);
    return r;
  }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  /// *this += a * b, fused (single reduction, no intermediate Scalar).
  void add_mul(const Scalar& a, const Scalar& b) {
    a.check_same(b);
    check_same(a);
    const long d = fld_->degree();
    if (d == 1) {
      c_[0] += a.c_[0] * b.c_[0];
      return;
    }
    Rat buf_small[8];
    std::vector<Rat> buf_big;
    Rat* prod = nullptr;
    const long plen = 2 * d - 1;
    if (plen <= 8) {
      prod = buf_small;
    } else {
      buf_big.assign(plen, Rat(0));
      prod = buf_big.data();
    }
    for (long i = 0; i < d; ++i) {
      if (a.c_[i] == 0) continue;
      for (long j = 0; j < d; ++j) {
        if (b.c_[j] == 0) continue;
        prod[i + j] += a.c_[i] * b.c_[j];
      }
    }
    fld_->fold_tail(prod);
    for (long j = 0; j < d; ++j) c_[j] += prod[j];
  }
  /// *this -= a * b, fused.
  void sub_mul(const Scalar& a, const Scalar& b) {
    a.check_same(b);
    check_same(a);
    const long d = fld_->degree();
    if (d == 1) {
      c_[0] -= a.c_[0] * b.c_[0];
      return;
    }
    Rat buf_small[8];
    std::vector<Rat> buf_big;
    Rat* prod = nullptr;
    const long plen = 2 * d - 1;
    if (plen <= 8) {
      prod = buf_small;
    } else {
      buf_big.assign(plen, Rat(0));
      prod = buf_big.data();
    }
    for (long i = 0; i < d; ++i) {
      if (a.c_[i] == 0) continue;
      for (long j = 0; j < d; ++j) {
        if (b.c_[j] == 0) continue;
        prod[i + j] += a.c_[i] * b.c_[j];
      }
    }
    fld_->fold_tail(prod);
    for (long j = 0; j < d; ++j) c_[j] -= prod[j];
  }

  /// Multiplicative inverse via extended gcd with Phi_N.
  Scalar inverse() const {
    if (is_zero()) fail(errc::division_by_zero, "inverse of zero scalar");
    long d = fld_->degree();
    if (d == 1) {
      CoeffVec c;
      c.push_back(Rat(1) / c_[0]);
      return Scalar(*fld_, std::move(c));
    }
    // extended Euclid over Q[X]: r0 = Phi, r1 = this; track s in this-coefficient
    std::vector<Rat> r0 = fld_->modulus();
    std::vector<Rat> r1(c_.begin(), c_.end());
    trim(r1);
    std::vector<Rat> t0{}, t1{Rat(1)};
    while (true) {
      ensure(!r1.empty(), "cyclotomic modulus not coprime to nonzero residue");
      if (r1.size() == 1) break;  // nonzero constant gcd
      // divide r0 by r1
      std::vector<Rat> q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, Rat(0));
      std::vector<Rat> rem = r0;
      Rat lead = r1.back();
      for (std::size_t k = q.size(); k-- > 0;) {
        if (rem.size() < r1.size() + k) continue;
        Rat c = rem[k + r1.size() - 1] / lead;
        q[k] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < r1.size(); ++j) rem[k + j] -= c * r1[j];
      }
      trim(rem);
      // t2 = t0 - q * t1
      std::vector<Rat> t2 = t0;
      if (!q.empty() && !t1.empty()) {
        std::vector<Rat> qt(q.size() + t1.size() - 1, Rat(0));
        for (std::size_t i = 0; i < q.size(); ++i) {
          if (q[i] == 0) continue;
          for (std::size_t j = 0; j < t1.size(); ++j) qt[i + j] += q[i] * t1[j];
        }
        if (t2.size() < qt.size()) t2.resize(qt.size(), Rat(0));
        for (std::size_t i = 0; i < qt.size(); ++i) t2[i] -= qt[i];
        trim(t2);
      }
      r0 = std::move(r1);
      r1 = std::move(rem);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    Rat g = r1[0];
    std::vector<Rat> res(t1);
    for (Rat& x : res) x /= g;
    return Scalar(*fld_, fld_->reduce(res));
  }

  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

  Scalar pow(long e) const {
    ensure(e >= 0 || !is_zero(), "0^negative");
    if (e < 0) return inverse().pow(-e);
    Scalar acc = Scalar::one(*fld_);
    Scalar base = *this;
    unsigned long n = static_cast<unsigned long>(e);
    while (n) {
      if (n & 1UL) acc *= base;
      base *= base;
      n >>= 1UL;
    }
    return acc;
  }

  /// "a0 + a1*z + a2*z^2", z = zeta_N; exact rationals as p/q.
  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      Rat v = c_[i];
      if (first) {
        if (v < 0) {
          os << "-";
          v = -v;
        }
        first = false;
      } else {
        os << (v < 0 ? " - " : " + ");
        if (v < 0) v = -v;
      }
      bool unit_coeff = (v == 1) && i > 0;
      if (!unit_coeff) os << v;
      if (i > 0) {
        if (!unit_coeff) os << "*";
        os << "z";
        if (i > 1) os << "^" << i;
      }
    }
    if (first) os << "0";
    return os.str();
  }

 private:
  static void trim(std::vector<Rat>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  }
  void check_same(const Scalar& b) const {
    ensure(fld_ == b.fld_, "scalar field mismatch; promote explicitly");
  }

  const CycloField* fld_;
  CoeffVec c_;
};

/// zeta_N^k as a residue (k taken mod N).
inline Scalar root_of_unity(const CycloField& f, long k) {
  long n = f.conductor();
  long e = ((k % n) + n) % n;
  std::vector<Rat> poly(e + 1, Rat(0));
  poly[e] = 1;
  return Scalar(f, f.reduce(poly));
}

/// Least n >= 1 with s^n = 1, or nullopt when s is not a root of unity.
/// Any root of unity in Q(zeta_N) has order dividing lcm(2, N).
inline std::optional<long> order_of_unity(const Scalar& s) {
  if (s.is_zero()) return std::nullopt;
  long n = s.field().conductor();
  long bound = std::lcm<long>(2, n);
  if (!s.pow(bound).is_one()) return std::nullopt;
  for (long d : detail::divisors_of(bound)) {
    if (s.pow(d).is_one()) return d;
  }
  return std::nullopt;  // unreachable
}

/// Canonical embedding Q(zeta_N) -> Q(zeta_M) for N | M, zeta_N -> zeta_M^{M/N}.
inline Scalar promote(const Scalar& s, const CycloField& target) {
  long n = s.field().conductor();
  long m = target.conductor();
  if (&s.field() == &target) return s;
  if (m % n != 0)
    fail(errc::incompatible_conductor,
         "cannot embed conductor " + std::to_string(n) + " into " + std::to_string(m));
  long step = m / n;
  std::vector<Rat> poly(static_cast<std::size_t>(s.field().degree() - 1) * step + 1, Rat(0));
  for (long i = 0; i < s.field().degree(); ++i) poly[i * step] = s.coeffs()[i];
  return Scalar(target, target.reduce(poly));
}

// --- scalar string parsing ---------------------------------------------------

namespace detail {

// Grammar: term (('+'|'-') term)*, term = rational ['*' zpow] | ['-'] zpow,
// zpow = 'z' ['^' int], rational = int ['/' int].
class ScalarParser {
 public:
  ScalarParser(const std::string& text, const CycloField& f) : s_(text), f_(f) {}

  Scalar parse() {
    Scalar acc = Scalar::zero(f_);
    skip_ws();
    bool neg = eat_sign();
    acc += term(neg);
    while (true) {
      skip_ws();
      if (pos_ >= s_.size()) break;
      char c = s_[pos_];
      if (c != '+' && c != '-') fail(errc::bad_params, "scalar parse error at '" + s_.substr(pos_) + "'");
      ++pos_;
      acc += term(c == '-');
    }
    return acc;
  }

 private:
  Scalar term(bool neg) {
    skip_ws();
    Rat coeff(1);
    bool saw_number = false;
    if (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])))) {
      coeff = rational();
      saw_number = true;
    }
    long zexp = 0;
    skip_ws();
    if (pos_ < s_.size() && (s_[pos_] == '*' || s_[pos_] == 'z')) {
      if (s_[pos_] == '*') {
        ++pos_;
        skip_ws();
      }
      if (pos_ >= s_.size() || s_[pos_] != 'z') fail(errc::bad_params, "expected z in scalar");
      ++pos_;
      zexp = 1;
      if (pos_ < s_.size() && s_[pos_] == '^') {
        ++pos_;
        zexp = integer();
      }
    } else if (!saw_number) {
      fail(errc::bad_params, "empty scalar term");
    }
    Scalar t = root_of_unity(f_, zexp) * Scalar::from_rational(f_, coeff);
    return neg ? -t : t;
  }

  Rat rational() {
    Int num = unsigned_int();
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      skip_ws();
      Int den = unsigned_int();
      if (den == 0) fail(errc::bad_params, "zero denominator");
      return make_rat(num, den);
    }
    return Rat(num);
  }

  long integer() {
    skip_ws();
    bool neg = eat_sign();
    Int v = unsigned_int();
    long r = to_long(v);
    return neg ? -r : r;
  }

  Int unsigned_int() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) fail(errc::bad_params, "expected integer in scalar at '" + s_.substr(start) + "'");
    return Int(s_.substr(start, pos_ - start));
  }

  bool eat_sign() {
    skip_ws();
    if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
      bool neg = s_[pos_] == '-';
      ++pos_;
      return neg;
    }
    return false;
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  const std::string& s_;
  const CycloField& f_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Scalar parse_scalar(const std::string& text, const CycloField& f) {
  return detail::ScalarParser(text, f).parse();
}

}  // namespace corad
