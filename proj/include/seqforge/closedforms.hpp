#pragma once

#include <cstdint>

#include "seqforge/bigint.hpp"

namespace seqforge::closedforms {

/// Maximum pieces from n straight cuts of a pancake: n(n+1)/2 + 1.
BigInt pancake(std::uint64_t n);

/// Maximum pieces from n cuts of a bagel, n(n^2+3n+8)/6. Throws for n = 0.
BigInt bagel(std::uint64_t n);

/// binomial(2n, n) / (n + 1).
BigInt catalan(std::uint64_t n);

/// First `count` Catalan numbers via a(n) = 2(2n-1) a(n-1) / (n+1).
/// Throws std::logic_error if a division is ever inexact.
Terms catalan_by_recurrence(std::uint64_t count);

struct IdentityReport {
  std::uint64_t n = 0;
  BigInt lhs;
  BigInt rhs;
  bool holds = false;
};

/// Sum_{k=0}^{n-1} C(2n,k)^2 against C(4n,2n)/2 - C(2n,n)^2/2.
IdentityReport binomial_identity(std::uint64_t n);

/// floor(n sqrt n) - sigma(n), with the floor taken as isqrt(n^3).
/// Throws std::domain_error for n < 3.
BigInt sigma_gap(std::uint64_t n);

BigInt binomial(std::uint64_t n, std::uint64_t k);

}  // namespace seqforge::closedforms
