#include "seqforge/arith.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace seqforge::arith {

namespace {

constexpr std::uint32_t kTrialBound = 1'000'000;
constexpr std::uint32_t kEarlyPrimalityBound = 1'000;
// Values at least this large go through the memo cache.
constexpr std::uint64_t kCacheFloor = std::uint64_t{1} << 40;
constexpr std::size_t kCacheCapacity = 1 << 14;

using u64 = std::uint64_t;
using u128 = unsigned __int128;

const std::vector<std::uint32_t>& trial_primes() {
  static const std::vector<std::uint32_t> primes = primes_below(kTrialBound);
  return primes;
}

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128{a} * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool miller_rabin_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for all n < 2^64.
  for (u64 a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Brent's variant of Pollard rho. n must be odd and composite.
u64 rho_u64(u64 n) {
  for (u64 c = 1;; ++c) {
    u64 y = 2, x = 2, q = 1, g = 1, ys = 2;
    const u64 m = 128;
    u64 r = 1;
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_u64(u64 n, std::vector<u64>& primes) {
  if (n == 1) return;
  if (miller_rabin_u64(n)) {
    primes.push_back(n);
    return;
  }
  u64 d = rho_u64(n);
  split_u64(d, primes);
  split_u64(n / d, primes);
}

BigInt rho_big(const BigInt& n) {
  for (unsigned long c = 1;; ++c) {
    BigInt x = 2, y = 2, ys = 2, q = 1, g = 1, diff;
    const unsigned long m = 128;
    unsigned long r = 1;
    auto f = [&](BigInt& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          f(y);
          diff = abs(x - y);
          q *= diff;
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        g = arith::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        f(ys);
        g = arith::gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_big(const BigInt& n, std::vector<BigInt>& primes) {
  if (n == 1) return;
  if (auto small = to_u64(n)) {
    std::vector<u64> ps;
    split_u64(*small, ps);
    for (u64 p : ps) primes.push_back(from_u64(p));
    return;
  }
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  BigInt d = rho_big(n);
  split_big(d, primes);
  split_big(n / d, primes);
}

class FactorCache {
 public:
  bool find(const BigInt& n, std::vector<PrimePower>& out) {
    std::lock_guard lock(mutex_);
    auto it = entries_.find(n);
    if (it == entries_.end()) return false;
    out = it->second;
    return true;
  }

  void store(const BigInt& n, const std::vector<PrimePower>& factors) {
    std::lock_guard lock(mutex_);
    if (entries_.size() >= kCacheCapacity) entries_.clear();
    entries_.emplace(n, factors);
  }

 private:
  std::mutex mutex_;
  std::map<BigInt, std::vector<PrimePower>> entries_;
};

FactorCache& cache() {
  static FactorCache instance;
  return instance;
}

template <typename T>
std::vector<std::pair<T, unsigned>> collate(std::vector<T> primes) {
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<T, unsigned>> out;
  for (auto& p : primes) {
    if (!out.empty() && out.back().first == p) {
      ++out.back().second;
    } else {
      out.emplace_back(std::move(p), 1);
    }
  }
  return out;
}

}  // namespace

std::vector<std::uint32_t> primes_below(std::uint32_t limit) {
  std::vector<std::uint32_t> primes;
  if (limit < 3) return primes;
  std::vector<bool> composite(limit, false);
  for (std::uint64_t i = 2; i < limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j < limit; j += i) composite[j] = true;
  }
  return primes;
}

std::vector<std::uint32_t> smallest_prime_factors(std::uint32_t limit) {
  std::vector<std::uint32_t> spf(std::size_t{limit} + 1, 0);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf[i] != 0) continue;
    for (std::uint64_t j = i; j <= limit; j += i) {
      if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
    }
  }
  return spf;
}

bool is_prime(std::uint64_t n) { return miller_rabin_u64(n); }

bool is_prime(const BigInt& n) {
  if (sgn(n) <= 0) return false;
  if (auto small = to_u64(n)) return miller_rabin_u64(*small);
  return mpz_probab_prime_p(n.get_mpz_t(), 25) != 0;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  if (n == 0) throw std::domain_error("factorize: n must be positive");
  std::vector<u64> primes;
  bool certified = false;
  for (std::uint32_t p : trial_primes()) {
    if (u64{p} * p > n) break;
    if (p > kEarlyPrimalityBound && !certified) {
      if (miller_rabin_u64(n)) break;
      certified = true;
    }
    if (n % p != 0) continue;
    do {
      primes.push_back(p);
      n /= p;
    } while (n % p == 0);
    certified = false;
  }
  split_u64(n, primes);
  return collate(std::move(primes));
}

Factorization factorize(const BigInt& n) {
  if (sgn(n) <= 0) throw std::domain_error("factorize: n must be positive");
  Factorization out{n, {}};
  if (auto small = to_u64(n); small && *small < kCacheFloor) {
    for (auto& [p, e] : factorize(*small)) out.factors.push_back({from_u64(p), e});
    return out;
  }
  if (cache().find(n, out.factors)) return out;

  BigInt rest = n;
  std::vector<BigInt> primes;
  bool certified = false;
  for (std::uint32_t p : trial_primes()) {
    if (auto small = to_u64(rest)) {
      for (auto& [q, e] : factorize(*small)) {
        for (unsigned i = 0; i < e; ++i) primes.push_back(from_u64(q));
      }
      rest = 1;
      break;
    }
    if (p > kEarlyPrimalityBound && !certified) {
      if (is_prime(rest)) break;
      certified = true;
    }
    if (!mpz_divisible_ui_p(rest.get_mpz_t(), p)) continue;
    do {
      primes.emplace_back(p);
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
    } while (mpz_divisible_ui_p(rest.get_mpz_t(), p));
    certified = false;
  }
  split_big(rest, primes);
  for (auto& [p, e] : collate(std::move(primes))) out.factors.push_back({p, e});
  cache().store(n, out.factors);
  return out;
}

BigInt Factorization::recompose() const {
  BigInt v = 1;
  for (const auto& [p, e] : factors) {
    BigInt pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    v *= pe;
  }
  return v;
}

BigInt sigma(const Factorization& f) {
  BigInt total = 1;
  for (const auto& [p, e] : f.factors) {
    BigInt pe1;
    mpz_pow_ui(pe1.get_mpz_t(), p.get_mpz_t(), e + 1);
    total *= (pe1 - 1) / (p - 1);
  }
  return total;
}

BigInt phi(const Factorization& f) {
  BigInt total = 1;
  for (const auto& [p, e] : f.factors) {
    BigInt pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e - 1);
    total *= pe * (p - 1);
  }
  return total;
}

BigInt sigma(const BigInt& n) { return sigma(factorize(n)); }

BigInt phi(const BigInt& n) { return phi(factorize(n)); }

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

BigInt isqrt(const BigInt& n) {
  if (sgn(n) < 0) throw std::domain_error("isqrt of negative value");
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

}  // namespace seqforge::arith
