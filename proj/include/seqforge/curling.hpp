#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "seqforge/seqmodel.hpp"

namespace seqforge::curling {

/// A sequence written as X Y^k with k maximal.
struct CurlingDecomposition {
  std::size_t y_len = 1;
  std::uint64_t k = 1;
  std::size_t x_len = 0;

  bool operator==(const CurlingDecomposition&) const = default;
};

/// Maximal-k decomposition; among maximal ones the shortest Y is reported.
/// Throws std::invalid_argument on empty input.
CurlingDecomposition curling_number(std::span<const std::uint64_t> seq);

/// Appends terms one at a time and reports the curling number of the whole
/// sequence after each push in O(length) vectorizable work.
///
/// For each earlier position j it keeps run[j], the length of the longest
/// common suffix of seq[0..j] and the full sequence. Appending c turns
/// run[j] into run[j-1] + 1 when seq[j] == c and into 0 otherwise. A block
/// of length m = L - 1 - j then repeats 1 + run[j] / m times at the end.
class Tracker {
 public:
  Tracker() = default;

  /// Returns the curling decomposition of the sequence including `value`.
  CurlingDecomposition push(std::uint64_t value);

  std::size_t size() const { return seq_.size(); }
  std::span<const std::uint64_t> sequence() const { return seq_; }

 private:
  std::vector<std::uint64_t> seq_;
  // Dense relabeling of values so the inner loop compares 32-bit words.
  std::unordered_map<std::uint64_t, std::uint32_t> codes_;
  std::vector<std::uint32_t> coded_;
  std::vector<std::uint32_t> run_;
  std::vector<std::uint32_t> scratch_;
};

/// Gijswijt's sequence: a(1) = 1, each next term is the curling number of
/// everything so far.
std::vector<std::uint64_t> gijswijt(std::size_t count);

class GijswijtStream : public TermStream {
 public:
  std::int64_t offset() const override { return 1; }
  IndexedTerm next() override;

 private:
  Tracker tracker_;
  std::uint64_t pending_ = 1;
};

struct ExtendResult {
  std::size_t tail_length = 0;
  bool reached_one = false;
};

/// Appends curling numbers until a 1 is appended or `cap` terms were added.
ExtendResult curling_extend(std::span<const std::uint64_t> start, std::size_t cap);

}  // namespace seqforge::curling
