#include <algorithm>
#include <climits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "seqforge/seqmodel.hpp"
#include "seqforge/stones.hpp"

namespace seqforge::stones {

namespace {

constexpr int kNeighbors[8][2] = {{-1, -1}, {-1, 0}, {-1, 1}, {0, -1},
                                  {0, 1},   {1, -1}, {1, 0},  {1, 1}};

std::string square_str(Square s) {
  return "(" + std::to_string(s.row) + "," + std::to_string(s.col) + ")";
}

}  // namespace

void Board::add_one(Square s) {
  if (occupied(s)) throw std::invalid_argument("square " + square_str(s) + " already holds a stone");
  ones.insert(s);
}

void Board::add_white(Square s, int label) {
  if (occupied(s)) throw std::invalid_argument("square " + square_str(s) + " already holds a stone");
  if (label < 2) throw std::invalid_argument("white labels start at 2");
  whites.emplace(s, label);
}

int Board::max_label() const {
  int best = ones.empty() ? 0 : 1;
  for (const auto& [sq, label] : whites) best = std::max(best, label);
  return best;
}

std::optional<Square> Board::find_label(int label) const {
  for (const auto& [sq, l] : whites) {
    if (l == label) return sq;
  }
  return std::nullopt;
}

std::optional<Violation> verify(const Board& board) {
  std::map<Square, int> placed;
  for (Square s : board.ones) placed.emplace(s, 1);

  std::vector<std::pair<int, Square>> order;
  order.reserve(board.whites.size());
  for (const auto& [sq, label] : board.whites) order.emplace_back(label, sq);
  std::sort(order.begin(), order.end());

  int expected = 2;
  for (const auto& [label, sq] : order) {
    if (placed.count(sq)) return Violation{label, sq, 0, "square already occupied"};
    int sum = 0;
    for (const auto& d : kNeighbors) {
      auto it = placed.find({sq.row + d[0], sq.col + d[1]});
      if (it != placed.end()) sum += it->second;
    }
    if (sum != label) {
      return Violation{label, sq, sum,
                       "neighbour sum " + std::to_string(sum) + " != " + std::to_string(label)};
    }
    if (label != expected) {
      return Violation{label, sq, sum,
                       label < expected ? "duplicate label" : "label " + std::to_string(expected) + " missing"};
    }
    placed.emplace(sq, label);
    ++expected;
  }
  return std::nullopt;
}

Board two_stone_solution() {
  Board b;
  b.add_one({2, 3});
  b.add_one({4, 5});
  const std::pair<Square, int> whites[] = {
      {{3, 4}, 2},  {{3, 3}, 3},  {{2, 2}, 4},  {{1, 2}, 5},  {{4, 4}, 6},
      {{5, 4}, 7},  {{3, 2}, 8},  {{1, 1}, 9},  {{1, 3}, 10}, {{1, 4}, 11},
      {{3, 1}, 12}, {{5, 3}, 13}, {{5, 5}, 14}, {{4, 6}, 15}, {{3, 6}, 16}};
  for (const auto& [sq, label] : whites) b.add_white(sq, label);
  return b;
}

Board linear_construction(int n) {
  if (n < 3) throw std::invalid_argument("linear_construction needs n >= 3");
  Board b;
  const int end = 3 * (n - 1);
  b.add_one({1, 1});
  for (int i = 1; i < n; ++i) b.add_one({3, 3 * i});
  // Top row runs left to right, labels equal to columns.
  for (int c = 2; c <= end; ++c) b.add_white({2, c}, c);
  int label = end + 1;
  b.add_white({3, end + 1}, label++);
  // Bottom row runs back right to left.
  for (int c = end; c >= 2; --c) b.add_white({4, c}, label++);
  return b;
}

Board chimney_construction(int n) {
  if (n < 3) throw std::invalid_argument("chimney_construction needs n >= 3");
  Board b = two_stone_solution();
  // Shift the two-stone core down so the chimney can grow upward.
  Board core;
  for (Square s : b.ones) core.add_one({s.row + 7, s.col});
  for (const auto& [s, label] : b.whites) core.add_white({s.row + 7, s.col}, label);

  const int extra = n - 3;
  const int top = 8 - 3 * extra;
  for (int j = 0; j <= extra; ++j) core.add_one({8 - 3 * j, 8});
  int label = 17;
  for (int r = 9; r >= top; --r) core.add_white({r, 7}, label++);
  core.add_white({top - 1, 8}, label++);
  for (int r = top; r <= 9; ++r) core.add_white({r, 9}, label++);
  return core;
}

Board normalized(const Board& board) {
  int min_row = INT_MAX, min_col = INT_MAX;
  auto see = [&](Square s) {
    min_row = std::min(min_row, s.row);
    min_col = std::min(min_col, s.col);
  };
  for (Square s : board.ones) see(s);
  for (const auto& [s, label] : board.whites) see(s);
  if (min_row == INT_MAX) return board;
  Board out;
  for (Square s : board.ones) out.ones.insert({s.row - min_row, s.col - min_col});
  for (const auto& [s, label] : board.whites) out.whites.emplace(Square{s.row - min_row, s.col - min_col}, label);
  return out;
}

std::string to_document(const Board& board) {
  nlohmann::json ones = nlohmann::json::array();
  for (Square s : board.ones) ones.push_back({s.row, s.col});
  std::vector<std::pair<int, Square>> order;
  for (const auto& [sq, label] : board.whites) order.emplace_back(label, sq);
  std::sort(order.begin(), order.end());
  nlohmann::json whites = nlohmann::json::array();
  for (const auto& [label, sq] : order) whites.push_back({sq.row, sq.col, label});
  nlohmann::json doc;
  doc["ones"] = std::move(ones);
  doc["whites"] = std::move(whites);
  return doc.dump() + "\n";
}

Board from_document(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("board document: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("ones") || !doc.contains("whites") || !doc["ones"].is_array() ||
      !doc["whites"].is_array()) {
    throw ParseError(0, "board document needs 'ones' and 'whites' arrays");
  }
  auto coord = [](const nlohmann::json& v) {
    if (!v.is_number_integer()) throw ParseError(0, "board coordinates must be integers");
    return v.get<int>();
  };
  Board b;
  for (const auto& item : doc["ones"]) {
    if (!item.is_array() || item.size() != 2) throw ParseError(0, "each one must be [row, col]");
    Square s{coord(item[0]), coord(item[1])};
    if (b.occupied(s)) throw ParseError(0, "two stones on square " + square_str(s));
    b.ones.insert(s);
  }
  std::set<int> labels;
  for (const auto& item : doc["whites"]) {
    if (!item.is_array() || item.size() != 3) throw ParseError(0, "each white must be [row, col, label]");
    Square s{coord(item[0]), coord(item[1])};
    int label = coord(item[2]);
    if (label < 2) throw ParseError(0, "white label " + std::to_string(label) + " below 2");
    if (b.occupied(s)) throw ParseError(0, "two stones on square " + square_str(s));
    if (!labels.insert(label).second) throw ParseError(0, "duplicate label " + std::to_string(label));
    b.whites.emplace(s, label);
  }
  if (!labels.empty() && *labels.rbegin() != static_cast<int>(labels.size()) + 1) {
    throw ParseError(0, "white labels must run 2.." + std::to_string(labels.size() + 1) + " without gaps");
  }
  return b;
}

std::string render_ascii(const Board& board) {
  Board nb = normalized(board);
  int rows = 0, cols = 0;
  std::map<Square, std::string> cells;
  for (Square s : nb.ones) cells[s] = "(1)";
  for (const auto& [s, label] : nb.whites) cells[s] = std::to_string(label);
  std::size_t width = 1;
  for (const auto& [s, text] : cells) {
    rows = std::max(rows, s.row + 1);
    cols = std::max(cols, s.col + 1);
    width = std::max(width, text.size());
  }
  std::ostringstream out;
  for (int r = 0; r < rows; ++r) {
    std::string line;
    for (int c = 0; c < cols; ++c) {
      auto it = cells.find({r, c});
      std::string text = it == cells.end() ? "." : it->second;
      if (c) line += ' ';
      line += std::string(width - text.size(), ' ') + text;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  return out.str();
}

std::string render_svg(const Board& board, int cell_px) {
  Board nb = normalized(board);
  int rows = 1, cols = 1;
  for (Square s : nb.ones) rows = std::max(rows, s.row + 1), cols = std::max(cols, s.col + 1);
  for (const auto& [s, l] : nb.whites) rows = std::max(rows, s.row + 1), cols = std::max(cols, s.col + 1);
  const int w = cols * cell_px, h = rows * cell_px;
  const int top = nb.max_label();
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
      << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
  out << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";
  for (int r = 0; r <= rows; ++r) {
    out << "<line x1=\"0\" y1=\"" << r * cell_px << "\" x2=\"" << w << "\" y2=\"" << r * cell_px
        << "\" stroke=\"#bbb\"/>\n";
  }
  for (int c = 0; c <= cols; ++c) {
    out << "<line x1=\"" << c * cell_px << "\" y1=\"0\" x2=\"" << c * cell_px << "\" y2=\"" << h
        << "\" stroke=\"#bbb\"/>\n";
  }
  auto text = [&](Square s, const std::string& label, const char* fill) {
    out << "<text x=\"" << s.col * cell_px + cell_px / 2 << "\" y=\"" << s.row * cell_px + cell_px * 2 / 3
        << "\" font-family=\"monospace\" font-size=\"" << cell_px / 2 << "\" text-anchor=\"middle\" fill=\""
        << fill << "\">" << label << "</text>\n";
  };
  for (Square s : nb.ones) {
    out << "<rect x=\"" << s.col * cell_px + 1 << "\" y=\"" << s.row * cell_px + 1 << "\" width=\""
        << cell_px - 2 << "\" height=\"" << cell_px - 2 << "\" fill=\"#8b5a2b\"/>\n";
    text(s, "1", "white");
  }
  for (const auto& [s, label] : nb.whites) text(s, std::to_string(label), label == top ? "#c00" : "black");
  out << "</svg>\n";
  return out.str();
}

}  // namespace seqforge::stones
