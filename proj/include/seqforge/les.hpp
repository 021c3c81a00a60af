#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "seqforge/seqmodel.hpp"

namespace seqforge::les {

/// Lexicographically earliest sequences of distinct positive integers.
///   EKG          gcd(c, a(n-1)) > 1
///   Yellowstone  gcd(c, a(n-2)) > 1 and gcd(c, a(n-1)) = 1
///   EnotsWolley  gcd(c, a(n-1)) > 1, gcd(c, a(n-2)) = 1, and c has a prime
///                factor not dividing a(n-1)
enum class Family { EKG, Yellowstone, EnotsWolley };

std::string_view to_string(Family family);

std::vector<std::uint64_t> seed(Family family);

/// Whether `candidate` may follow `prefix` (ignores distinctness). Only
/// meaningful once the prefix is at least as long as the seed.
bool admissible(Family family, std::span<const std::uint64_t> prefix, std::uint64_t candidate);

class SearchExhausted : public std::runtime_error {
 public:
  SearchExhausted(std::size_t index, std::uint64_t ceiling);

  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

/// Incremental greedy generator. Candidates for each term are drawn from the
/// smallest unused multiple of each prime dividing the anchor term, so no
/// step rescans from 1.
class Generator : public TermStream {
 public:
  /// `ceiling` bounds every candidate; 0 selects 50 * expected_count.
  Generator(Family family, std::size_t expected_count, std::uint64_t ceiling = 0);

  /// Next term; throws SearchExhausted when no candidate fits below the
  /// ceiling.
  std::uint64_t advance();

  std::span<const std::uint64_t> terms() const { return terms_; }

  std::int64_t offset() const override { return 1; }
  IndexedTerm next() override;

 private:
  std::uint64_t best_multiple(std::uint32_t p, std::uint64_t limit);
  void factor_into(std::uint64_t v, std::vector<std::uint32_t>& primes) const;

  Family family_;
  std::uint64_t ceiling_;
  std::vector<std::uint32_t> spf_;
  std::vector<bool> used_;
  std::vector<std::uint64_t> next_multiple_;
  std::vector<std::uint64_t> terms_;
  std::size_t emitted_ = 0;
};

/// First `count` terms (count must be at least the seed length).
std::vector<std::uint64_t> les_generate(Family family, std::size_t count, std::uint64_t ceiling = 0);

/// Terms other than 1 and 2 with fewer than two distinct prime factors
/// among the first `count` Enots Wolley terms.
std::vector<std::uint64_t> enots_wolley_membership_scan(std::size_t count);

}  // namespace seqforge::les
