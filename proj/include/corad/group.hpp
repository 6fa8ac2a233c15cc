#pragma once

// Finite abelian groups in invariant-factor form d_1 | d_2 | ... | d_s.
// Elements are exponent vectors mod the factors; characters are exponent
// vectors evaluated through roots of unity of the group exponent.

#include <numeric>
#include <vector>

#include "corad/cyclotomic.hpp"
#include "corad/errors.hpp"

namespace corad {

class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;

  /// Normalizes an arbitrary list of cyclic factors to invariant-factor form.
  static FiniteAbelianGroup from_factors(std::vector<long> factors) {
    for (long d : factors)
      if (d < 1) fail(errc::bad_params, "cyclic factor must be >= 1");
    // collect prime powers, then rebuild the divisibility chain greedily
    std::vector<std::vector<long>> by_prime;  // per prime: sorted prime powers
    std::vector<long> primes;
    for (long d : factors) {
      long m = d;
      for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
          long q = 1;
          while (m % p == 0) {
            m /= p;
            q *= p;
          }
          add_prime_power(primes, by_prime, p, q);
        }
      }
      if (m > 1) add_prime_power(primes, by_prime, m, m);
    }
    std::size_t levels = 0;
    for (auto& v : by_prime) {
      std::sort(v.begin(), v.end());
      levels = std::max(levels, v.size());
    }
    std::vector<long> inv(levels, 1);
    for (auto& v : by_prime) {
      // largest prime power goes to the largest invariant factor
      for (std::size_t i = 0; i < v.size(); ++i) inv[levels - v.size() + i] *= v[i];
    }
    FiniteAbelianGroup g;
    g.factors_ = std::move(inv);
    return g;
  }

  const std::vector<long>& factors() const { return factors_; }
  int num_factors() const { return static_cast<int>(factors_.size()); }

  long long order() const {
    long long o = 1;
    for (long d : factors_) o *= d;
    return o;
  }
  long exponent() const { return factors_.empty() ? 1 : factors_.back(); }

  std::vector<long> identity() const { return std::vector<long>(factors_.size(), 0); }
  std::vector<long> add(const std::vector<long>& a, const std::vector<long>& b) const {
    std::vector<long> r(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) r[i] = (a[i] + b[i]) % factors_[i];
    return r;
  }
  std::vector<long> negate(const std::vector<long>& a) const {
    std::vector<long> r(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) r[i] = (factors_[i] - a[i] % factors_[i]) % factors_[i];
    return r;
  }
  std::vector<long> scale(long k, const std::vector<long>& a) const {
    std::vector<long> r(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      long m = factors_[i];
      r[i] = ((a[i] % m) * (k % m) % m + m) % m;
    }
    return r;
  }

  /// Lexicographic element index (first factor most significant).
  long long index_of(const std::vector<long>& a) const {
    long long idx = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) idx = idx * factors_[i] + (a[i] % factors_[i]);
    return idx;
  }
  std::vector<long> element(long long idx) const {
    std::vector<long> a(factors_.size(), 0);
    for (std::size_t i = factors_.size(); i-- > 0;) {
      a[i] = static_cast<long>(idx % factors_[i]);
      idx /= factors_[i];
    }
    return a;
  }

  std::vector<long> normalize(std::vector<long> a) const {
    ensure(a.size() == factors_.size(), "group element arity mismatch");
    for (std::size_t i = 0; i < factors_.size(); ++i) a[i] = ((a[i] % factors_[i]) + factors_[i]) % factors_[i];
    return a;
  }

  /// Character with exponent vector t evaluated at element c, as an element of
  /// Q(zeta_E), E the group exponent: prod_l zeta_{d_l}^{t_l c_l}.
  Scalar character_value(const std::vector<long>& t, const std::vector<long>& c,
                         const CycloField& f) const {
    long e = exponent();
    ensure(f.conductor() % e == 0, "field conductor does not contain group exponent");
    long long total = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      long d = factors_[i];
      // zeta_d = zeta_E^{E/d}
      total += static_cast<long long>((t[i] % d) * (c[i] % d) % d) * (e / d);
      total %= e;
    }
    return root_of_unity(f, static_cast<long>(((total % e) + e) % e) * (f.conductor() / e));
  }

  friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    return a.factors_ == b.factors_;
  }

 private:
  static void add_prime_power(std::vector<long>& primes, std::vector<std::vector<long>>& by_prime,
                              long p, long q) {
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if (primes[i] == p) {
        by_prime[i].push_back(q);
        return;
      }
    }
    primes.push_back(p);
    by_prime.push_back({q});
  }

  std::vector<long> factors_;
};

}  // namespace corad
