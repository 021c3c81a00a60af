#include "seqforge/recaman.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace seqforge::recaman {

namespace {

// Values past this multiple of the dense capacity go to the sparse set
// instead of forcing a huge bitmap.
constexpr std::uint64_t kDenseReach = 4;

}  // namespace

SeenSet::SeenSet(std::uint64_t capacity_hint)
    : words_(std::max<std::uint64_t>(capacity_hint, 64) / 64 + 1, 0) {}

bool SeenSet::contains(std::uint64_t v) const {
  if (v < capacity()) return (words_[v >> 6] >> (v & 63)) & 1;
  return sparse_.count(v) > 0;
}

void SeenSet::grow_to(std::uint64_t v) {
  std::uint64_t words = words_.size();
  while (words * 64 <= v) words *= 2;
  words_.resize(words, 0);
  for (auto it = sparse_.begin(); it != sparse_.end();) {
    if (*it < capacity()) {
      words_[*it >> 6] |= std::uint64_t{1} << (*it & 63);
      it = sparse_.erase(it);
    } else {
      ++it;
    }
  }
}

void SeenSet::insert(std::uint64_t v) {
  if (v >= capacity()) {
    if (v / kDenseReach >= capacity()) {
      sparse_.insert(v);
      return;
    }
    grow_to(v);
  }
  words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

Generator::Generator(std::uint64_t expected_steps) : seen_(expected_steps * 4) {}

std::uint64_t Generator::advance() {
  std::uint64_t value;
  if (step_ == 0) {
    value = 0;
  } else if (current_ >= step_ && !seen_.contains(current_ - step_)) {
    value = current_ - step_;
  } else {
    if (current_ > std::numeric_limits<std::uint64_t>::max() - step_) {
      throw std::overflow_error("recaman: term exceeds 64 bits at step " + std::to_string(step_));
    }
    value = current_ + step_;
  }
  if (!watch_.empty()) {
    if (auto it = watch_.find(value); it != watch_.end() && !it->second) it->second = step_;
  }
  seen_.insert(value);
  current_ = value;
  ++step_;
  return value;
}

void Generator::watch(std::uint64_t value) { watch_.try_emplace(value); }

std::optional<std::uint64_t> Generator::first_seen(std::uint64_t value) const {
  auto it = watch_.find(value);
  if (it == watch_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::uint64_t> Generator::missing_below(std::uint64_t bound) const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t v = 0; v < bound; ++v) {
    if (!seen_.contains(v)) out.push_back(v);
  }
  return out;
}

IndexedTerm Generator::next() {
  auto index = static_cast<std::int64_t>(step_);
  return {index, from_u64(advance())};
}

std::vector<std::uint64_t> terms(std::uint64_t count) {
  Generator gen(count);
  std::vector<std::uint64_t> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(gen.advance());
  return out;
}

std::optional<std::uint64_t> first_occurrence(std::uint64_t target, std::uint64_t max_steps) {
  Generator gen(max_steps);
  for (std::uint64_t i = 0; i <= max_steps; ++i) {
    if (gen.advance() == target) return i;
  }
  return std::nullopt;
}

std::vector<SpiralArc> spiral(std::span<const std::uint64_t> prefix) {
  std::vector<SpiralArc> arcs;
  if (prefix.empty()) return arcs;
  if (prefix[0] != 0) throw std::invalid_argument("spiral: prefix must start at a(0) = 0");
  arcs.reserve(prefix.size() - 1);
  for (std::size_t i = 0; i + 1 < prefix.size(); ++i) {
    auto from = static_cast<std::int64_t>(prefix[i]);
    auto to = static_cast<std::int64_t>(prefix[i + 1]);
    const auto step = static_cast<std::int64_t>(i + 1);
    if (to - from != step && from - to != step) {
      throw std::invalid_argument("spiral: |a(" + std::to_string(i + 1) + ") - a(" + std::to_string(i) +
                                  ")| != " + std::to_string(step));
    }
    arcs.push_back({from, to, static_cast<std::uint64_t>(step), i % 2 == 0 ? Side::Below : Side::Above});
  }
  return arcs;
}

std::string spiral_svg(std::span<const SpiralArc> arcs) {
  std::int64_t right = 1;
  std::uint64_t widest = 1;
  for (const auto& a : arcs) {
    right = std::max({right, a.from, a.to});
    widest = std::max(widest, a.diameter);
  }
  const std::int64_t half = static_cast<std::int64_t>(widest / 2) + 1;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1 " << -half << ' ' << right + 2 << ' '
      << 2 * half << "\">\n";
  out << "<line x1=\"0\" y1=\"0\" x2=\"" << right << "\" y2=\"0\" stroke=\"#ccc\" stroke-width=\"0.1\"/>\n";
  out << "<g fill=\"none\" stroke=\"black\" stroke-width=\"0.2\">\n";
  for (const auto& a : arcs) {
    // Screen y grows downward, so a clockwise sweep from left to right bulges up.
    const int sweep = (a.to > a.from) == (a.side == Side::Above) ? 1 : 0;
    const std::string r = std::to_string(a.diameter / 2) + (a.diameter % 2 ? ".5" : "");
    out << "<path d=\"M " << a.from << " 0 A " << r << ' ' << r << " 0 0 " << sweep << ' ' << a.to
        << " 0\"/>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace seqforge::recaman
