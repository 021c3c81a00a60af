#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace seqforge::stones {

/// Lattice square; rows grow downward, columns to the right.
struct Square {
  int row = 0;
  int col = 0;

  auto operator<=>(const Square&) const = default;
};

/// Brown stones (value 1) and labelled white stones (2, 3, ...).
struct Board {
  std::set<Square> ones;
  std::map<Square, int> whites;

  /// Throws std::invalid_argument if the square is taken.
  void add_one(Square s);
  void add_white(Square s, int label);

  bool occupied(Square s) const { return ones.count(s) || whites.count(s); }

  /// Highest label placed; 1 when there are brown stones but no whites,
  /// 0 for an empty board.
  int max_label() const;

  /// Square holding `label`, if any.
  std::optional<Square> find_label(int label) const;

  bool operator==(const Board&) const = default;
};

struct Violation {
  int label = 0;
  Square square;
  int observed = 0;
  std::string reason;
};

/// Replays whites in increasing label order. A white labelled k must see a
/// neighbour sum of exactly k over the brown stones and the whites placed
/// before it. Labels must run 2, 3, ... without gaps and squares may not be
/// shared. Returns the first violation, or nullopt when the board is valid.
std::optional<Violation> verify(const Board& board);

/// Two-stone solution reaching 16.
Board two_stone_solution();

/// A line of brown stones three apart with a white path folding back under
/// it; max label 6(n-1). Throws std::invalid_argument for n < 3.
Board linear_construction(int n);

/// The two-stone solution plus a vertical chimney of n-2 brown stones;
/// max label 6n+3. Throws std::invalid_argument for n < 3.
Board chimney_construction(int n);

// ---------------------------------------------------------------------------
// Text forms.

/// {"ones":[[r,c],...],"whites":[[r,c,k],...]}, ones sorted by square and
/// whites by label, one line with a trailing newline.
std::string to_document(const Board& board);

/// Inverse of to_document; accepts any element order. Throws ParseError on
/// malformed JSON, overlapping squares, labels below 2, duplicate labels or
/// gaps in the label range.
Board from_document(std::string_view text);

/// Grid over the bounding box; brown stones render as "(1)", empty squares
/// as ".".
std::string render_ascii(const Board& board);

std::string render_svg(const Board& board, int cell_px = 32);

/// Translated so the smallest row and column are 0.
Board normalized(const Board& board);

// ---------------------------------------------------------------------------
// Search.

struct SearchConfig {
  /// Brown stones stay within |row|, |col| <= radius of the origin.
  int radius = 6;
  /// 0 selects exhaustive depth-first search over starting configurations;
  /// a positive width selects beam search.
  unsigned beam = 0;
  unsigned workers = 1;
  /// Per-configuration node budget for the depth-first search.
  std::uint64_t node_limit = 20'000'000;
  /// Above this many canonical configurations the depth-first mode falls
  /// back to beam search.
  std::size_t max_configurations = 200'000;
  /// Beam width used by that fallback.
  unsigned fallback_beam = 256;
  /// Verified board used as the initial best.
  std::optional<Board> warm_start;
};

struct SolveResult {
  int n = 0;
  int best = 0;
  Board board;
  /// True only when the search provably covered every placement.
  bool exhaustive = false;
  std::uint64_t nodes = 0;
  std::size_t configurations = 0;
};

/// Throws std::invalid_argument for n < 1, radius < 1 or an invalid warm
/// start.
SolveResult solve(int n, const SearchConfig& config = {});

/// Canonical form of a set of brown stones under translation and the eight
/// lattice symmetries.
std::vector<Square> canonical_shape(std::vector<Square> shape);

/// Canonical brown-stone configurations of size n inside the box that
/// contain at least one pair close enough to seat a 2, sorted. nullopt when
/// there are more than `cap` of them.
std::optional<std::vector<std::vector<Square>>> starting_configurations(int n, int radius,
                                                                        std::size_t cap);

}  // namespace seqforge::stones
