#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "seqforge/bigint.hpp"

namespace seqforge::trajectories {

enum class MapKind {
  Aliquot,       // t -> sigma(t) - t
  SigmaPhiMean,  // t -> (sigma(t) + phi(t)) / 2
};

std::string_view to_string(MapKind kind);

enum class OutcomeKind { ReachedZero, EnteredCycle, HitFraction, CapReached };

struct Outcome {
  OutcomeKind kind = OutcomeKind::CapReached;
  std::size_t cycle_length = 0;  // EnteredCycle only

  bool terminal() const { return kind != OutcomeKind::CapReached; }
  bool operator==(const Outcome&) const = default;
};

std::string to_string(const Outcome& outcome);

struct TrajectoryReport {
  BigInt start;
  Terms terms;
  Outcome outcome;
  std::size_t distinct_count = 0;
};

/// One application of the map; nullopt signals an odd sigma + phi under
/// SigmaPhiMean. Throws std::domain_error for t < 1.
std::optional<BigInt> step(MapKind kind, const BigInt& t);

/// Iterates from `start` until 0, a repeated term, a fraction, or until
/// `max_steps` terms (including the start) have been produced.
TrajectoryReport trajectory(MapKind kind, const BigInt& start, std::size_t max_steps);

/// Outcome for every 1 < n < bound, merged by start value. Work is spread
/// over `workers` threads; the result does not depend on the count.
std::map<std::uint64_t, Outcome> classify_range(MapKind kind, std::uint64_t bound,
                                                std::size_t max_steps, unsigned workers = 1);

}  // namespace seqforge::trajectories
