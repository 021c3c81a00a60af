#include "seqforge/curling.hpp"

#include <algorithm>
#include <stdexcept>

namespace seqforge::curling {

CurlingDecomposition curling_number(std::span<const std::uint64_t> seq) {
  if (seq.empty()) throw std::invalid_argument("curling_number: empty sequence");
  const std::size_t len = seq.size();
  CurlingDecomposition best{len, 1, 0};
  // k = 1 is always available with Y = the whole sequence; report the
  // shortest Y, which for k = 1 is a single term.
  best.y_len = 1;
  best.x_len = len - 1;
  for (std::size_t m = 1; m * 2 <= len; ++m) {
    // Only block lengths that can beat the current best are worth checking.
    if (m * (best.k + 1) > len) break;
    std::uint64_t k = 1;
    const std::size_t tail = len - m;
    while ((k + 1) * m <= len) {
      const std::size_t start = len - (k + 1) * m;
      bool same = true;
      for (std::size_t i = 0; i < m; ++i) {
        if (seq[start + i] != seq[tail + i]) {
          same = false;
          break;
        }
      }
      if (!same) break;
      ++k;
    }
    if (k > best.k) best = {m, k, len - m * k};
  }
  return best;
}

CurlingDecomposition Tracker::push(std::uint64_t value) {
  const std::size_t pos = seq_.size();
  seq_.push_back(value);
  const std::uint32_t code =
      codes_.try_emplace(value, static_cast<std::uint32_t>(codes_.size())).first->second;
  if (pos == 0) {
    coded_.push_back(code);
    return {1, 1, 0};
  }

  run_.resize(pos);
  scratch_.resize(pos);

  const auto target = static_cast<std::uint32_t>(pos);
  std::uint32_t* out = scratch_.data();
  const std::uint32_t* in = run_.data();
  const std::uint32_t* vals = coded_.data();

  CurlingDecomposition best{1, 1, pos};
  out[0] = vals[0] == code ? 1 : 0;
  if (out[0] >= pos) best = {pos, 1 + out[0] / pos, 0};

  constexpr std::size_t kChunk = 1024;
  for (std::size_t start = 1; start < pos; start += kChunk) {
    const std::size_t stop = std::min(pos, start + kChunk);
    std::uint32_t reach = 0;
    for (std::size_t j = start; j < stop; ++j) {
      std::uint32_t r = vals[j] == code ? in[j - 1] + 1 : 0;
      out[j] = r;
      reach = std::max(reach, r + static_cast<std::uint32_t>(j));
    }
    // run[j] >= pos - j is required for the block to occur twice.
    if (reach < target) continue;
    for (std::size_t j = start; j < stop; ++j) {
      const std::size_t m = pos - j;
      if (out[j] < m) continue;
      const std::uint64_t k = 1 + out[j] / m;
      // Larger j means shorter Y; prefer it on ties.
      if (k >= best.k) best = {m, k, pos + 1 - m * k};
    }
  }
  std::swap(run_, scratch_);
  coded_.push_back(code);
  return best;
}

std::vector<std::uint64_t> gijswijt(std::size_t count) {
  std::vector<std::uint64_t> out;
  out.reserve(count);
  Tracker tracker;
  std::uint64_t next = 1;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(next);
    next = tracker.push(next).k;
  }
  return out;
}

IndexedTerm GijswijtStream::next() {
  const auto index = static_cast<std::int64_t>(tracker_.size()) + 1;
  const std::uint64_t value = pending_;
  pending_ = tracker_.push(value).k;
  return {index, from_u64(value)};
}

ExtendResult curling_extend(std::span<const std::uint64_t> start, std::size_t cap) {
  if (start.empty()) throw std::invalid_argument("curling_extend: empty start");
  Tracker tracker;
  std::uint64_t k = 1;
  for (std::uint64_t v : start) k = tracker.push(v).k;
  ExtendResult result;
  while (result.tail_length < cap) {
    ++result.tail_length;
    if (k == 1) {
      result.reached_one = true;
      break;
    }
    k = tracker.push(k).k;
  }
  return result;
}

}  // namespace seqforge::curling
