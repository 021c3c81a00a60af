#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "seqforge/seqmodel.hpp"

namespace seqforge::recaman {

/// Membership set over nonnegative integers: a dense bitmap for [0, capacity)
/// that doubles on demand, plus a sparse set for far outliers.
class SeenSet {
 public:
  explicit SeenSet(std::uint64_t capacity_hint = 1 << 16);

  bool contains(std::uint64_t v) const;
  void insert(std::uint64_t v);

  std::uint64_t capacity() const { return words_.size() * 64; }
  std::size_t sparse_size() const { return sparse_.size(); }

 private:
  void grow_to(std::uint64_t v);

  std::vector<std::uint64_t> words_;
  std::unordered_set<std::uint64_t> sparse_;
};

/// Streaming generator for a(0) = 0; a(n) = a(n-1) - n when that is
/// nonnegative and unseen, otherwise a(n-1) + n.
class Generator : public TermStream {
 public:
  /// `expected_steps` sizes the dense bitmap (about 4 bits per step).
  explicit Generator(std::uint64_t expected_steps = 1 << 14);

  /// Index of the next term to be produced.
  std::uint64_t step() const { return step_; }
  std::uint64_t current() const { return current_; }
  bool seen(std::uint64_t v) const { return seen_.contains(v); }

  /// Produces a(step) and advances. The first call yields a(0) = 0.
  /// Throws std::overflow_error if a term would exceed 64 bits.
  std::uint64_t advance();

  /// Records the first index at which `value` appears. Values already seen
  /// keep whatever was recorded before (nothing, if watched late).
  void watch(std::uint64_t value);
  std::optional<std::uint64_t> first_seen(std::uint64_t value) const;

  /// Values below `bound` absent from every term produced so far.
  std::vector<std::uint64_t> missing_below(std::uint64_t bound) const;

  std::int64_t offset() const override { return 0; }
  IndexedTerm next() override;

 private:
  std::uint64_t step_ = 0;
  std::uint64_t current_ = 0;
  SeenSet seen_;
  std::unordered_map<std::uint64_t, std::optional<std::uint64_t>> watch_;
};

/// First `count` terms a(0..count-1).
std::vector<std::uint64_t> terms(std::uint64_t count);

/// Smallest i <= max_steps with a(i) = target.
std::optional<std::uint64_t> first_occurrence(std::uint64_t target, std::uint64_t max_steps);

enum class Side { Below, Above };

struct SpiralArc {
  std::int64_t from = 0;
  std::int64_t to = 0;
  std::uint64_t diameter = 0;
  Side side = Side::Below;
};

/// One semicircle per step, alternating below/above starting below.
/// Throws std::invalid_argument if consecutive terms do not differ by the
/// step number (not a prefix starting at a(0)).
std::vector<SpiralArc> spiral(std::span<const std::uint64_t> prefix);

/// Arcs as SVG semicircle paths on the number line, viewport sized to the
/// largest term and diameter.
std::string spiral_svg(std::span<const SpiralArc> arcs);

}  // namespace seqforge::recaman
