#pragma once

#include <cstdint>
#include <vector>

#include "seqforge/bigint.hpp"

namespace seqforge::arith {

struct PrimePower {
  BigInt prime;
  unsigned exponent = 0;

  bool operator==(const PrimePower&) const = default;
};

/// Prime factorization of a positive integer, primes strictly increasing.
struct Factorization {
  BigInt value;
  std::vector<PrimePower> factors;

  BigInt recompose() const;
};

/// Factors n >= 1. Trial division by primes below 10^6, then Brent's rho with
/// fixed seeds; every reported prime passes is_prime. Throws
/// std::domain_error for n < 1.
Factorization factorize(const BigInt& n);

/// Small-value fast path; same contract as the BigInt overload.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

/// Deterministic for n < 2^64; BPSW-strength above.
bool is_prime(const BigInt& n);
bool is_prime(std::uint64_t n);

/// Sum of divisors. Throws std::domain_error for n < 1.
BigInt sigma(const BigInt& n);
BigInt sigma(const Factorization& f);

/// Euler totient. Throws std::domain_error for n < 1.
BigInt phi(const BigInt& n);
BigInt phi(const Factorization& f);

/// gcd(0, 0) = 0; result is nonnegative.
BigInt gcd(const BigInt& a, const BigInt& b);

/// floor(sqrt(n)) for n >= 0.
BigInt isqrt(const BigInt& n);

/// Ascending primes strictly below `limit`.
std::vector<std::uint32_t> primes_below(std::uint32_t limit);

/// Smallest-prime-factor table over [0, limit]; spf[0] = spf[1] = 0.
std::vector<std::uint32_t> smallest_prime_factors(std::uint32_t limit);

}  // namespace seqforge::arith
