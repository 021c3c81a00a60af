#include "seqforge/seqmodel.hpp"

#include <algorithm>
#include <cstdio>

namespace seqforge {

ANumber::ANumber(std::uint32_t value) : value_(value) {
  if (value < 1 || value > 999'999) {
    throw std::invalid_argument("A-number out of range: " + std::to_string(value));
  }
}

std::string ANumber::str() const {
  char buf[8];
  std::snprintf(buf, sizeof(buf), "A%06u", value_);
  return buf;
}

ANumber ANumber::parse(std::string_view text) {
  if (text.size() != 7 || text[0] != 'A') {
    throw ParseError(0, "malformed A-number '" + std::string(text) + "'");
  }
  std::uint32_t v = 0;
  for (char c : text.substr(1)) {
    if (c < '0' || c > '9') throw ParseError(0, "malformed A-number '" + std::string(text) + "'");
    v = v * 10 + static_cast<std::uint32_t>(c - '0');
  }
  if (v == 0) throw ParseError(0, "A000000 is not a valid A-number");
  return ANumber(v);
}

std::string_view to_string(Ordering o) {
  switch (o) {
    case Ordering::Before: return "Before";
    case Ordering::Equal: return "Equal";
    case Ordering::After: return "After";
  }
  return "?";
}

OrderingKey ordering_key(std::span<const BigInt> terms) {
  if (terms.empty()) throw std::invalid_argument("ordering_key: empty term list");
  Terms magnitudes;
  magnitudes.reserve(terms.size());
  for (const auto& t : terms) magnitudes.push_back(abs(t));

  auto first_big = std::find_if(magnitudes.begin(), magnitudes.end(),
                                [](const BigInt& t) { return t > 1; });
  if (first_big == magnitudes.end()) return {KeyClass::SmallTerms, std::move(magnitudes)};
  return {KeyClass::Normal, Terms(std::make_move_iterator(first_big),
                                  std::make_move_iterator(magnitudes.end()))};
}

Ordering compare(const OrderingKey& a, const OrderingKey& b) {
  if (a.klass != b.klass) return a.klass == KeyClass::SmallTerms ? Ordering::Before : Ordering::After;
  const std::size_t n = std::min(a.key.size(), b.key.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = cmp(a.key[i], b.key[i]);
    if (c != 0) return c < 0 ? Ordering::Before : Ordering::After;
  }
  if (a.key.size() == b.key.size()) return Ordering::Equal;
  return a.key.size() < b.key.size() ? Ordering::Before : Ordering::After;
}

Ordering compare(std::span<const BigInt> a, std::span<const BigInt> b) {
  return compare(ordering_key(a), ordering_key(b));
}

void sort_records(std::vector<SequenceRecord>& records) {
  std::vector<std::pair<OrderingKey, std::size_t>> keyed;
  keyed.reserve(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    keyed.emplace_back(ordering_key(records[i].terms), i);
  }
  std::sort(keyed.begin(), keyed.end(), [&](const auto& x, const auto& y) {
    Ordering o = compare(x.first, y.first);
    if (o != Ordering::Equal) return o == Ordering::Before;
    return records[x.second].anum < records[y.second].anum;
  });
  std::vector<SequenceRecord> sorted;
  sorted.reserve(records.size());
  for (auto& [key, i] : keyed) sorted.push_back(std::move(records[i]));
  records = std::move(sorted);
}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

std::optional<std::int64_t> parse_index(std::string_view s) {
  auto v = parse_bigint(s);
  if (!v || !v->fits_slong_p()) return std::nullopt;
  return v->get_si();
}

}  // namespace

BFileRows parse_bfile(std::string_view text) {
  BFileRows rows;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++line_no;

    auto fields = split_fields(line);
    if (fields.empty() || fields[0].front() == '#') continue;
    if (fields.size() != 2) throw ParseError(line_no, "expected 'index value'");
    auto index = parse_index(fields[0]);
    auto value = parse_bigint(fields[1]);
    if (!index) throw ParseError(line_no, "bad index '" + std::string(fields[0]) + "'");
    if (!value) throw ParseError(line_no, "bad value '" + std::string(fields[1]) + "'");
    if (!rows.empty() && *index != rows.back().index + 1) {
      throw GapError(line_no, "index " + std::to_string(*index) + " does not follow " +
                                  std::to_string(rows.back().index));
    }
    rows.push_back({*index, std::move(*value)});
  }
  return rows;
}

std::string write_bfile(const BFileRows& rows) {
  std::string out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i && rows[i].index != rows[i - 1].index + 1) {
      throw GapError(0, "row " + std::to_string(i) + " breaks index contiguity");
    }
    out += std::to_string(rows[i].index);
    out += ' ';
    out += to_string(rows[i].value);
    out += '\n';
  }
  return out;
}

BFileRows rows_from_terms(const Terms& terms, std::int64_t offset) {
  BFileRows rows;
  rows.reserve(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    rows.push_back({offset + static_cast<std::int64_t>(i), terms[i]});
  }
  return rows;
}

SequenceRecord parse_stripped_line(std::string_view line, std::size_t line_no) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  if (line.size() < 10 || line[7] != ' ' || line[8] != ',' || line.back() != ',') {
    throw ParseError(line_no, "expected 'Annnnnn ,t1,t2,...,'");
  }
  SequenceRecord rec;
  try {
    rec.anum = ANumber::parse(line.substr(0, 7));
  } catch (const ParseError& e) {
    throw ParseError(line_no, e.what());
  }
  std::string_view body = line.substr(9, line.size() - 10);
  std::size_t start = 0;
  while (true) {
    std::size_t comma = body.find(',', start);
    std::string_view field = body.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    auto v = parse_bigint(field);
    if (!v) throw ParseError(line_no, "bad term '" + std::string(field) + "'");
    rec.terms.push_back(std::move(*v));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return rec;
}

std::string format_stripped_line(const SequenceRecord& record) {
  if (record.terms.empty()) throw std::invalid_argument("stripped line needs at least one term");
  std::string out = record.anum.str() + " ,";
  for (const auto& t : record.terms) {
    out += to_string(t);
    out += ',';
  }
  return out;
}

BFileRows take(TermStream& stream, std::size_t count) {
  BFileRows rows;
  rows.reserve(count);
  for (std::size_t i = 0; i < count; ++i) rows.push_back(stream.next());
  return rows;
}

}  // namespace seqforge
