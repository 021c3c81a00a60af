#include "seqforge/les.hpp"

#include <numeric>

#include "seqforge/arith.hpp"

namespace seqforge::les {

namespace {

// True when some prime factor of c does not divide d.
bool has_foreign_prime(std::uint64_t c, std::uint64_t d) {
  for (std::uint64_t g = std::gcd(c, d); g > 1; g = std::gcd(c, g)) c /= g;
  return c > 1;
}

}  // namespace

std::string_view to_string(Family family) {
  switch (family) {
    case Family::EKG: return "ekg";
    case Family::Yellowstone: return "yellowstone";
    case Family::EnotsWolley: return "enotswolley";
  }
  return "?";
}

std::vector<std::uint64_t> seed(Family family) {
  if (family == Family::Yellowstone) return {1, 2, 3};
  return {1, 2};
}

bool admissible(Family family, std::span<const std::uint64_t> prefix, std::uint64_t candidate) {
  if (prefix.size() < 2) return false;
  const std::uint64_t prev = prefix[prefix.size() - 1];
  const std::uint64_t prev2 = prefix[prefix.size() - 2];
  switch (family) {
    case Family::EKG:
      return std::gcd(candidate, prev) > 1;
    case Family::Yellowstone:
      return std::gcd(candidate, prev2) > 1 && std::gcd(candidate, prev) == 1;
    case Family::EnotsWolley:
      return std::gcd(candidate, prev) > 1 && std::gcd(candidate, prev2) == 1 &&
             has_foreign_prime(candidate, prev);
  }
  return false;
}

SearchExhausted::SearchExhausted(std::size_t index, std::uint64_t ceiling)
    : std::runtime_error("no admissible candidate for a(" + std::to_string(index) + ") at or below " +
                         std::to_string(ceiling)),
      index_(index) {}

Generator::Generator(Family family, std::size_t expected_count, std::uint64_t ceiling)
    : family_(family),
      ceiling_(ceiling ? ceiling : 50 * std::max<std::uint64_t>(expected_count, 4)) {
  if (ceiling_ > 0xFFFF'FFF0ULL) throw std::invalid_argument("les: ceiling too large");
  spf_ = arith::smallest_prime_factors(static_cast<std::uint32_t>(ceiling_));
  used_.assign(ceiling_ + 1, false);
  next_multiple_.assign(ceiling_ + 1, 0);
  terms_.reserve(expected_count);
}

void Generator::factor_into(std::uint64_t v, std::vector<std::uint32_t>& primes) const {
  primes.clear();
  while (v > 1) {
    const std::uint32_t p = spf_[v];
    primes.push_back(p);
    while (v % p == 0) v /= p;
  }
}

std::uint64_t Generator::best_multiple(std::uint32_t p, std::uint64_t limit) {
  std::uint64_t& head = next_multiple_[p];
  if (head == 0) head = p;
  while (head <= ceiling_ && used_[head]) head += p;
  for (std::uint64_t c = head; c < limit && c <= ceiling_; c += p) {
    if (!used_[c] && admissible(family_, terms_, c)) return c;
  }
  return 0;
}

std::uint64_t Generator::advance() {
  const auto seeds = seed(family_);
  std::uint64_t value = 0;
  if (terms_.size() < seeds.size()) {
    value = seeds[terms_.size()];
  } else {
    const std::uint64_t anchor =
        family_ == Family::Yellowstone ? terms_[terms_.size() - 2] : terms_.back();
    std::vector<std::uint32_t> primes;
    factor_into(anchor, primes);
    // Multiples of a prime dividing the term they must be coprime to can
    // never qualify.
    const std::uint64_t coprime_to =
        family_ == Family::EKG           ? 1
        : family_ == Family::Yellowstone ? terms_.back()
                                         : terms_[terms_.size() - 2];
    std::uint64_t best = ceiling_ + 1;
    for (std::uint32_t p : primes) {
      if (coprime_to % p == 0) continue;
      if (std::uint64_t c = best_multiple(p, best)) best = c;
    }
    if (best > ceiling_) throw SearchExhausted(terms_.size() + 1, ceiling_);
    value = best;
  }
  if (value <= ceiling_) used_[value] = true;
  terms_.push_back(value);
  return value;
}

IndexedTerm Generator::next() {
  const auto index = static_cast<std::int64_t>(terms_.size()) + 1;
  return {index, from_u64(advance())};
}

std::vector<std::uint64_t> les_generate(Family family, std::size_t count, std::uint64_t ceiling) {
  if (count < seed(family).size()) {
    throw std::invalid_argument("les_generate: count below seed length");
  }
  Generator gen(family, count, ceiling);
  for (std::size_t i = 0; i < count; ++i) gen.advance();
  auto span = gen.terms();
  return {span.begin(), span.end()};
}

std::vector<std::uint64_t> enots_wolley_membership_scan(std::size_t count) {
  std::vector<std::uint64_t> violations;
  for (std::uint64_t t : les_generate(Family::EnotsWolley, count)) {
    if (t == 1 || t == 2) continue;
    if (arith::factorize(t).size() < 2) violations.push_back(t);
  }
  return violations;
}

}  // namespace seqforge::les
