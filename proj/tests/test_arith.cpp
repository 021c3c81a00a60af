#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "seqforge/arith.hpp"

using namespace seqforge;
using namespace seqforge::arith;

namespace {

BigInt big(const char* s) { return BigInt(s); }

}  // namespace

TEST_CASE("sigma, phi and gcd on small values") {
  CHECK(sigma(BigInt(276)) == 672);
  CHECK(phi(BigInt(270)) == 72);
  CHECK(gcd(BigInt(4938), BigInt(5526)) == 6);
  CHECK(sigma(BigInt(1)) == 1);
  CHECK(phi(BigInt(1)) == 1);
  CHECK(gcd(BigInt(0), BigInt(0)) == 0);
  CHECK(gcd(BigInt(-12), BigInt(18)) == 6);
}

TEST_CASE("sigma and phi agree with brute force up to 2e4") {
  const auto phi_ref = oracle::phi_table(20000);
  for (std::uint64_t n = 1; n <= 20000; ++n) {
    REQUIRE(sigma(from_u64(n)) == from_u64(oracle::sigma(n)));
    REQUIRE(phi(from_u64(n)) == from_u64(phi_ref[n]));
  }
}

TEST_CASE("sigma and phi are multiplicative on coprime pairs") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t a = rng() % 100000 + 1, b = rng() % 100000 + 1;
    if (std::gcd(a, b) != 1) continue;
    const BigInt ab = from_u64(a) * from_u64(b);
    CHECK(sigma(ab) == sigma(from_u64(a)) * sigma(from_u64(b)));
    CHECK(phi(ab) == phi(from_u64(a)) * phi(from_u64(b)));
  }
}

TEST_CASE("factorization recomposes and has prime factors in order") {
  for (std::uint64_t n = 1; n <= 200000; ++n) {
    const auto f = factorize(from_u64(n));
    REQUIRE(f.recompose() == from_u64(n));
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
      REQUIRE(is_prime(f.factors[i].prime));
      if (i) REQUIRE(f.factors[i - 1].prime < f.factors[i].prime);
    }
  }
}

TEST_CASE("factorization of large composites") {
  // 2^64 + 1 = 274177 * 67280421310721
  const auto f = factorize(big("18446744073709551617"));
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].prime == 274177);
  CHECK(f.factors[1].prime == big("67280421310721"));

  // Two 11-digit primes, one squared, pushes the product past 2^64.
  const BigInt p = big("10000000019"), q = big("30000000001");
  REQUIRE(is_prime(p));
  REQUIRE(is_prime(q));
  const auto g = factorize(p * q * q * 12);
  CHECK(g.recompose() == p * q * q * 12);
  REQUIRE(g.factors.size() == 4);
  CHECK(g.factors[0] == PrimePower{2, 2});
  CHECK(g.factors[1] == PrimePower{3, 1});
  CHECK(g.factors[2] == PrimePower{p, 1});
  CHECK(g.factors[3] == PrimePower{q, 2});

  const auto h = factorize(std::uint64_t{18446744073709551557ULL});  // largest 64-bit prime
  REQUIRE(h.size() == 1);
  CHECK(h[0].second == 1);
}

TEST_CASE("factorize rejects values below 1") {
  CHECK_THROWS_AS(factorize(BigInt(0)), std::domain_error);
  CHECK_THROWS_AS(factorize(BigInt(-5)), std::domain_error);
}

TEST_CASE("primality agrees with the sieve") {
  const auto primes = primes_below(100000);
  std::vector<bool> is(100000, false);
  for (auto p : primes) is[p] = true;
  for (std::uint64_t n = 0; n < 100000; ++n) REQUIRE(is_prime(n) == is[n]);
  CHECK(primes.size() == 9592);
  CHECK_FALSE(is_prime(std::uint64_t{3215031751}));  // strong pseudoprime to bases 2, 3, 5, 7
  CHECK(is_prime(big("170141183460469231731687303715884105727")));  // 2^127 - 1
  CHECK_FALSE(is_prime(big("340282366920938463463374607431768211457")));  // 2^128 + 1
}

TEST_CASE("smallest prime factor table") {
  const auto spf = smallest_prime_factors(100);
  CHECK(spf[0] == 0);
  CHECK(spf[1] == 0);
  CHECK(spf[2] == 2);
  CHECK(spf[91] == 7);
  CHECK(spf[97] == 97);
}

TEST_CASE("isqrt") {
  CHECK(isqrt(BigInt(0)) == 0);
  CHECK(isqrt(BigInt(15)) == 3);
  CHECK(isqrt(BigInt(16)) == 4);
  CHECK(isqrt(big("100000000000000000000000000000000000000")) == big("10000000000000000000"));
}

TEST_CASE("results do not depend on the memo cache") {
  const BigInt n = big("1234567890123456789012");
  const auto first = factorize(n);
  for (std::uint64_t i = 0; i < 20000; ++i) factorize(n + from_u64(i) * 1000003);
  CHECK(factorize(n).factors == first.factors);
}
