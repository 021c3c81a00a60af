#include "seqforge/trajectories.hpp"

#include <atomic>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <vector>

#include "seqforge/arith.hpp"

namespace seqforge::trajectories {

std::string_view to_string(MapKind kind) {
  return kind == MapKind::Aliquot ? "aliquot" : "sigmaphi";
}

std::string to_string(const Outcome& outcome) {
  switch (outcome.kind) {
    case OutcomeKind::ReachedZero: return "ReachedZero";
    case OutcomeKind::EnteredCycle: return "EnteredCycle(" + std::to_string(outcome.cycle_length) + ")";
    case OutcomeKind::HitFraction: return "HitFraction";
    case OutcomeKind::CapReached: return "CapReached";
  }
  return "?";
}

std::optional<BigInt> step(MapKind kind, const BigInt& t) {
  if (sgn(t) <= 0) throw std::domain_error("trajectory step: t must be positive");
  const arith::Factorization f = arith::factorize(t);
  if (kind == MapKind::Aliquot) return arith::sigma(f) - t;
  BigInt total = arith::sigma(f) + arith::phi(f);
  if (mpz_odd_p(total.get_mpz_t())) return std::nullopt;
  return total / 2;
}

TrajectoryReport trajectory(MapKind kind, const BigInt& start, std::size_t max_steps) {
  if (sgn(start) <= 0) throw std::domain_error("trajectory: start must be positive");
  if (max_steps == 0) throw std::invalid_argument("trajectory: max_steps must be positive");
  TrajectoryReport rep;
  rep.start = start;
  rep.terms.push_back(start);
  // Term text -> index of its first occurrence.
  std::unordered_map<std::string, std::size_t> position{{seqforge::to_string(start), 0}};

  while (true) {
    const BigInt& t = rep.terms.back();
    if (sgn(t) == 0) {
      rep.outcome = {OutcomeKind::ReachedZero, 0};
      break;
    }
    if (rep.terms.size() >= max_steps) {
      rep.outcome = {OutcomeKind::CapReached, 0};
      break;
    }
    auto next = step(kind, t);
    if (!next) {
      rep.outcome = {OutcomeKind::HitFraction, 0};
      break;
    }
    auto [it, fresh] = position.try_emplace(seqforge::to_string(*next), rep.terms.size());
    rep.terms.push_back(std::move(*next));
    if (!fresh) {
      rep.outcome = {OutcomeKind::EnteredCycle, rep.terms.size() - 1 - it->second};
      break;
    }
  }
  rep.distinct_count = position.size();
  return rep;
}

std::map<std::uint64_t, Outcome> classify_range(MapKind kind, std::uint64_t bound,
                                                std::size_t max_steps, unsigned workers) {
  if (bound < 2) throw std::invalid_argument("classify_range: bound must be at least 2");
  std::vector<Outcome> outcomes(bound);
  std::atomic<std::uint64_t> cursor{2};
  auto work = [&] {
    for (std::uint64_t n = cursor++; n < bound; n = cursor++) {
      outcomes[n] = trajectory(kind, from_u64(n), max_steps).outcome;
    }
  };
  workers = std::max(1u, workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
  }
  std::map<std::uint64_t, Outcome> result;
  for (std::uint64_t n = 2; n < bound; ++n) result.emplace(n, outcomes[n]);
  return result;
}

}  // namespace seqforge::trajectories
