#include <algorithm>
#include <atomic>
#include <climits>
#include <stdexcept>
#include <thread>
#include <memory>
#include <unordered_set>

#include "seqforge/stones.hpp"

namespace seqforge::stones {

namespace {

constexpr int kDirs[8][2] = {{-1, -1}, {-1, 0}, {-1, 1}, {0, -1}, {0, 1}, {1, -1}, {1, 0}, {1, 1}};

// Room for white growth on each side of the brown-stone box.
constexpr int kMargin = 160;
// Sums at or above this are never candidates.
constexpr int kMaxSum = 4096;

// Square grid with per-cell neighbour sums. Empty cells with a nonzero sum
// live in a bucket indexed by that sum, so the squares that accept label k
// are read off directly.
class Field {
 public:
  explicit Field(int radius)
      : half_(radius + kMargin), side_(2 * half_ + 1),
        value_(static_cast<std::size_t>(side_) * side_, 0),
        sum_(value_.size(), 0),
        slot_(value_.size(), -1),
        buckets_(kMaxSum) {
    for (int d = 0; d < 8; ++d) offsets_[d] = kDirs[d][0] * side_ + kDirs[d][1];
  }

  int cell(Square s) const { return (s.row + half_) * side_ + (s.col + half_); }
  Square square(int c) const { return {c / side_ - half_, c % side_ - half_}; }
  bool interior(int c) const {
    const int r = c / side_, col = c % side_;
    return r > 0 && col > 0 && r < side_ - 1 && col < side_ - 1;
  }

  int value(int c) const { return value_[c]; }
  int sum(int c) const { return sum_[c]; }
  const std::vector<int>& with_sum(int s) const {
    static const std::vector<int> none;
    return s > 0 && s < kMaxSum ? buckets_[s] : none;
  }
  std::vector<int> sorted_with_sum(int s) const {
    std::vector<int> out = with_sum(s);
    std::sort(out.begin(), out.end());
    return out;
  }
  const int* offsets() const { return offsets_; }

  void put(int c, int v) {
    unlink(c);
    value_[c] = v;
    for (int off : offsets_) {
      const int nb = c + off;
      if (value_[nb] == 0) {
        unlink(nb);
        sum_[nb] += v;
        link(nb);
      } else {
        sum_[nb] += v;
      }
    }
  }

  void take(int c) {
    const int v = value_[c];
    value_[c] = 0;
    for (int off : offsets_) {
      const int nb = c + off;
      if (value_[nb] == 0) {
        unlink(nb);
        sum_[nb] -= v;
        link(nb);
      } else {
        sum_[nb] -= v;
      }
    }
    link(c);
  }

  bool touches_white(int c) const {
    for (int off : offsets_) {
      if (value_[c + off] >= 2) return true;
    }
    return false;
  }

 private:
  void link(int c) {
    const int s = sum_[c];
    if (s <= 0 || s >= kMaxSum) return;
    slot_[c] = static_cast<int>(buckets_[s].size());
    buckets_[s].push_back(c);
  }
  void unlink(int c) {
    const int at = slot_[c];
    if (at < 0) return;
    auto& b = buckets_[sum_[c]];
    const int last = b.back();
    b[at] = last;
    slot_[last] = at;
    b.pop_back();
    slot_[c] = -1;
  }

  int half_;
  int side_;
  std::vector<int> value_;
  std::vector<int> sum_;
  std::vector<int> slot_;
  std::vector<std::vector<int>> buckets_;
  int offsets_[8];
};

using Placement = std::pair<int, int>;  // cell, value

Board board_from(const Field& field, const std::vector<Placement>& moves) {
  Board b;
  for (const auto& [c, v] : moves) {
    if (v == 1) {
      b.ones.insert(field.square(c));
    } else {
      b.whites.emplace(field.square(c), v);
    }
  }
  return b;
}

struct Candidate {
  int best = 0;
  Board board;
  std::string doc;
  bool set = false;

  void offer(int value, const Board& b) {
    if (set && value < best) return;
    std::string d = to_document(normalized(b));
    if (!set || value > best || d < doc) {
      best = value;
      board = b;
      doc = std::move(d);
      set = true;
    }
  }
  void merge(const Candidate& other) {
    if (!other.set) return;
    if (!set || other.best > best || (other.best == best && other.doc < doc)) *this = other;
  }
};

// Depth-first search over white placements for one brown configuration.
class Dfs {
 public:
  Dfs(Field& field, std::uint64_t node_limit) : field_(field), limit_(node_limit) {}

  void run(const std::vector<Square>& ones) {
    moves_.clear();
    for (Square s : ones) {
      const int c = field_.cell(s);
      field_.put(c, 1);
      moves_.push_back({c, 1});
    }
    descend(2);
    for (auto it = ones.rbegin(); it != ones.rend(); ++it) field_.take(field_.cell(*it));
  }

  Candidate result;
  std::uint64_t nodes = 0;
  bool aborted = false;

 private:
  void descend(int k) {
    ++nodes;
    std::vector<int> cands = field_.sorted_with_sum(k);
    bool any = false;
    for (int c : cands) {
      if (aborted) return;
      if (!field_.interior(c)) {
        aborted = true;
        return;
      }
      if (nodes >= limit_) {
        aborted = true;
        return;
      }
      any = true;
      field_.put(c, k);
      moves_.push_back({c, k});
      descend(k + 1);
      moves_.pop_back();
      field_.take(c);
    }
    if (!any && (!result.set || k - 1 >= result.best)) {
      result.offer(k - 1, board_from(field_, moves_));
    }
  }

  Field& field_;
  std::uint64_t limit_;
  std::vector<Placement> moves_;
};

template <typename Fn>
void parallel_for(std::size_t count, unsigned workers, Fn fn) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  std::atomic<std::size_t> cursor{0};
  auto work = [&](unsigned id) {
    for (std::size_t i = cursor++; i < count; i = cursor++) fn(id, i);
  };
  if (workers == 1) {
    work(0);
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
}

// Beam search state: placements in order, browns still in hand, next label.
struct State {
  std::vector<Placement> moves;
  int remaining = 0;
  int next = 2;
  long score = 0;
  std::string key;
};

std::string encode(std::vector<Placement> moves) {
  std::sort(moves.begin(), moves.end());
  std::string key;
  key.reserve(moves.size() * 8);
  for (const auto& [c, v] : moves) {
    key.append(reinterpret_cast<const char*>(&c), sizeof c);
    key.append(reinterpret_cast<const char*>(&v), sizeof v);
  }
  return key;
}

// Furthest label reachable from here by whites alone, within a node budget.
int free_run(Field& field, int k, int& budget) {
  int best = k;
  if (--budget < 0) return best;
  for (int c : field.sorted_with_sum(k + 1)) {
    if (!field.interior(c)) continue;
    field.put(c, k + 1);
    best = std::max(best, free_run(field, k + 1, budget));
    field.take(c);
    if (budget < 0) break;
  }
  return best;
}

// Rollout depth plus a fixed worth per brown stone still in hand.
long evaluate(Field& field, int k, int remaining) {
  int budget = 48;
  const long reach = free_run(field, k, budget) - k;
  const long direct = static_cast<long>(field.with_sum(k + 1).size());
  return 64 * (reach + 8 * remaining) + std::min(direct, 8L);
}

// Leftover browns are parked in a row well clear of every other stone.
Board park_leftovers(Board board, int leftover) {
  int max_col = 0, min_row = 0;
  for (Square s : board.ones) max_col = std::max(max_col, s.col), min_row = std::min(min_row, s.row);
  for (const auto& [s, l] : board.whites) max_col = std::max(max_col, s.col), min_row = std::min(min_row, s.row);
  for (int i = 0; i < leftover; ++i) board.add_one({min_row, max_col + 3 + 3 * i});
  return board;
}

class Beam {
 public:
  Beam(int n, const SearchConfig& config, unsigned width)
      : n_(n), radius_(config.radius), width_(std::max(1u, width)), workers_(std::max(1u, config.workers)) {
    for (unsigned w = 0; w < workers_; ++w) fields_.push_back(std::make_unique<Field>(radius_));
  }

  Candidate run(std::size_t& roots, std::uint64_t& nodes) {
    Candidate best;
    const Field& f0 = *fields_[0];
    std::vector<State> layer;
    const Square offsets[] = {{0, 1}, {1, 1}, {0, 2}, {1, 2}, {2, 2}};
    for (Square o : offsets) {
      if (o.row > radius_ || o.col > radius_) continue;
      State s;
      s.moves = {{f0.cell({0, 0}), 1}, {f0.cell(o), 1}};
      s.remaining = n_ - 2;
      s.key = encode(s.moves);
      layer.push_back(std::move(s));
    }
    roots = layer.size();
    {
      Board b;
      b.add_one({0, 0});
      best.offer(1, park_leftovers(b, n_ - 1));
    }

    while (!layer.empty()) {
      std::vector<std::vector<State>> children(layer.size());
      std::vector<Candidate> dead(layer.size());
      parallel_for(layer.size(), workers_, [&](unsigned id, std::size_t i) {
        children[i] = expand(*fields_[id], layer[i], dead[i]);
      });
      nodes += layer.size();
      for (const auto& d : dead) best.merge(d);

      std::vector<State> next;
      std::unordered_set<std::string> seen;
      for (auto& group : children) {
        for (auto& s : group) {
          if (seen.insert(s.key).second) next.push_back(std::move(s));
        }
      }
      std::sort(next.begin(), next.end(), [](const State& a, const State& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.key < b.key;
      });
      if (next.size() > width_) next.resize(width_);
      layer = std::move(next);
    }
    return best;
  }

 private:
  bool in_box(Square s) const { return std::abs(s.row) <= radius_ && std::abs(s.col) <= radius_; }

  std::vector<State> expand(Field& field, const State& state, Candidate& dead) {
    for (const auto& [c, v] : state.moves) field.put(c, v);
    const int k = state.next;
    std::vector<State> out;

    auto emit = [&](std::vector<Placement> extra, int used) {
      for (const auto& [c, v] : extra) field.put(c, v);
      State child;
      child.moves = state.moves;
      child.moves.insert(child.moves.end(), extra.begin(), extra.end());
      child.remaining = state.remaining - used;
      child.next = k + 1;
      child.score = evaluate(field, k, child.remaining);
      child.key = encode(child.moves);
      for (auto it = extra.rbegin(); it != extra.rend(); ++it) field.take(it->first);
      out.push_back(std::move(child));
    };

    for (int c : field.sorted_with_sum(k)) {
      if (field.interior(c)) emit({{c, k}}, 0);
    }
    for (int j = 1; j <= std::min(3, state.remaining); ++j) {
      for (int t : field.sorted_with_sum(k - j)) {
        if (!field.interior(t)) continue;
        std::vector<int> spots;
        const Square ts = field.square(t);
        for (const auto& d : kDirs) {
          const Square s{ts.row + d[0], ts.col + d[1]};
          if (!in_box(s)) continue;
          const int c = field.cell(s);
          if (field.value(c) != 0 || field.touches_white(c)) continue;
          spots.push_back(c);
        }
        std::sort(spots.begin(), spots.end());
        // Every j-subset of the free spots, in index order.
        std::vector<int> pick;
        auto choose = [&](auto&& self, std::size_t from) -> void {
          if (static_cast<int>(pick.size()) == j) {
            std::vector<Placement> extra;
            for (int a : pick) extra.push_back({a, 1});
            extra.push_back({t, k});
            emit(std::move(extra), j);
            return;
          }
          for (std::size_t x = from; x < spots.size(); ++x) {
            pick.push_back(spots[x]);
            self(self, x + 1);
            pick.pop_back();
          }
        };
        choose(choose, 0);
      }
    }

    if (out.empty()) {
      dead.offer(k - 1, park_leftovers(board_from(field, state.moves), state.remaining));
    }
    for (auto it = state.moves.rbegin(); it != state.moves.rend(); ++it) field.take(it->first);
    return out;
  }

  int n_;
  int radius_;
  unsigned width_;
  unsigned workers_;
  std::vector<std::unique_ptr<Field>> fields_;
};

}  // namespace

std::vector<Square> canonical_shape(std::vector<Square> shape) {
  std::vector<Square> best;
  for (int t = 0; t < 8; ++t) {
    std::vector<Square> img;
    img.reserve(shape.size());
    for (Square s : shape) {
      int r = s.row, c = s.col;
      if (t & 4) std::swap(r, c);
      if (t & 2) r = -r;
      if (t & 1) c = -c;
      img.push_back({r, c});
    }
    int min_r = INT_MAX, min_c = INT_MAX;
    for (Square s : img) min_r = std::min(min_r, s.row), min_c = std::min(min_c, s.col);
    for (Square& s : img) s.row -= min_r, s.col -= min_c;
    std::sort(img.begin(), img.end());
    if (best.empty() || img < best) best = std::move(img);
  }
  return best;
}

std::optional<std::vector<std::vector<Square>>> starting_configurations(int n, int radius, std::size_t cap) {
  if (n < 1 || radius < 1) throw std::invalid_argument("starting_configurations: n and radius must be positive");
  const int side = 2 * radius + 1;
  const int cells = side * side;
  if (n == 1) return std::vector<std::vector<Square>>{{{0, 0}}};

  // The first stone in row-major order sits on row 0 after translation.
  double raw = side;
  for (int i = 1; i < n; ++i) raw = raw * (cells - i) / i;
  if (raw > 5e7) return std::nullopt;

  std::set<std::vector<Square>> shapes;
  std::vector<int> pick(n);
  bool overflow = false;
  auto close_pair = [](const std::vector<Square>& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        if (std::abs(s[i].row - s[j].row) <= 2 && std::abs(s[i].col - s[j].col) <= 2) return true;
      }
    }
    return false;
  };
  auto rec = [&](auto&& self, int depth, int from) -> void {
    if (overflow) return;
    if (depth == n) {
      std::vector<Square> shape;
      int min_c = INT_MAX;
      for (int idx : pick) {
        shape.push_back({idx / side, idx % side});
        min_c = std::min(min_c, idx % side);
      }
      if (min_c != 0 || !close_pair(shape)) return;
      shapes.insert(canonical_shape(std::move(shape)));
      if (shapes.size() > cap) overflow = true;
      return;
    }
    const int limit = depth == 0 ? side : cells;
    for (int i = from; i < limit; ++i) {
      pick[depth] = i;
      self(self, depth + 1, i + 1);
    }
  };
  rec(rec, 0, 0);
  if (overflow) return std::nullopt;
  return std::vector<std::vector<Square>>(shapes.begin(), shapes.end());
}

SolveResult solve(int n, const SearchConfig& config) {
  if (n < 1) throw std::invalid_argument("solve: n must be positive");
  if (config.radius < 1) throw std::invalid_argument("solve: radius must be positive");

  Candidate best;
  if (config.warm_start) {
    const Board& w = *config.warm_start;
    if (verify(w) || static_cast<int>(w.ones.size()) != n) {
      throw std::invalid_argument("solve: warm start must be a valid board with n brown stones");
    }
    best.offer(w.max_label(), w);
  }

  SolveResult result;
  result.n = n;
  bool complete = false;

  std::optional<std::vector<std::vector<Square>>> configs;
  if (config.beam == 0) configs = starting_configurations(n, config.radius, config.max_configurations);

  if (configs) {
    const unsigned workers = std::max(1u, config.workers);
    std::vector<std::unique_ptr<Field>> fields;
    for (unsigned w = 0; w < workers; ++w) fields.push_back(std::make_unique<Field>(config.radius + 2));
    std::vector<Candidate> found(configs->size());
    std::vector<std::uint64_t> nodes(configs->size());
    std::vector<char> aborted(configs->size());
    parallel_for(configs->size(), workers, [&](unsigned id, std::size_t i) {
      Dfs dfs(*fields[id], config.node_limit);
      dfs.run((*configs)[i]);
      found[i] = std::move(dfs.result);
      nodes[i] = dfs.nodes;
      aborted[i] = dfs.aborted;
    });
    complete = true;
    for (std::size_t i = 0; i < found.size(); ++i) {
      best.merge(found[i]);
      result.nodes += nodes[i];
      if (aborted[i]) complete = false;
    }
    result.configurations = configs->size();
  } else {
    const unsigned width = config.beam ? config.beam : config.fallback_beam;
    Beam beam(n, config, width);
    best.merge(beam.run(result.configurations, result.nodes));
  }

  result.best = best.best;
  result.board = best.board;
  // Only n <= 2 has a completeness argument: a 2 needs two browns in one
  // 8-neighbourhood, so every useful pair fits in a 3x3 window.
  result.exhaustive = complete && n <= 2;
  return result;
}

}  // namespace seqforge::stones
