#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "seqforge/bigint.hpp"

namespace seqforge {

/// Thrown by every text-format parser. `line()` is 1-based, 0 when the
/// failure is not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Raised when b-file indices skip a value.
class GapError : public ParseError {
 public:
  using ParseError::ParseError;
};

/// A-number, 1..999999, rendered as "A" plus six digits.
class ANumber {
 public:
  ANumber() = default;
  explicit ANumber(std::uint32_t value);

  std::uint32_t value() const { return value_; }
  std::string str() const;

  /// Accepts exactly "A" followed by six digits.
  static ANumber parse(std::string_view text);

  auto operator<=>(const ANumber&) const = default;

 private:
  std::uint32_t value_ = 0;
};

struct SequenceRecord {
  ANumber anum;
  std::string name;
  std::int64_t offset = 0;
  Terms terms;
  std::set<std::string> keywords;

  bool has_keyword(std::string_view kw) const { return keywords.count(std::string(kw)) > 0; }
};

// ---------------------------------------------------------------------------
// Lexicographic placement. Signs are dropped, then everything before the
// first term exceeding 1 is discarded; sequences with no such term form a
// separate class that sorts ahead of all others.

enum class KeyClass { SmallTerms, Normal };

struct OrderingKey {
  KeyClass klass = KeyClass::SmallTerms;
  Terms key;
};

enum class Ordering { Before, Equal, After };

std::string_view to_string(Ordering o);

/// Throws std::invalid_argument on empty input.
OrderingKey ordering_key(std::span<const BigInt> terms);

/// Total preorder: SmallTerms before Normal, then term by term with an
/// exhausted list ("blank") ahead of any number.
Ordering compare(std::span<const BigInt> a, std::span<const BigInt> b);
Ordering compare(const OrderingKey& a, const OrderingKey& b);

/// Sorts into placement order; equal keys fall back to ascending A-number.
void sort_records(std::vector<SequenceRecord>& records);

// ---------------------------------------------------------------------------
// b-files: "index value" per line, '#' comments and blank lines skipped,
// indices strictly contiguous.

struct IndexedTerm {
  std::int64_t index = 0;
  BigInt value;

  bool operator==(const IndexedTerm&) const = default;
};

using BFileRows = std::vector<IndexedTerm>;

BFileRows parse_bfile(std::string_view text);

/// Throws GapError when indices are not contiguous.
std::string write_bfile(const BFileRows& rows);

BFileRows rows_from_terms(const Terms& terms, std::int64_t offset);

// ---------------------------------------------------------------------------
// Stripped corpus lines: "A000108 ,1,1,2,5,14,"

SequenceRecord parse_stripped_line(std::string_view line, std::size_t line_no = 0);

std::string format_stripped_line(const SequenceRecord& record);

// ---------------------------------------------------------------------------

/// Pull-style term source. Indices start at offset() and advance by one.
class TermStream {
 public:
  virtual ~TermStream() = default;

  virtual std::int64_t offset() const = 0;
  virtual IndexedTerm next() = 0;
};

BFileRows take(TermStream& stream, std::size_t count);

}  // namespace seqforge
