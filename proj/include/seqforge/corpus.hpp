#pragma once

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "seqforge/seqmodel.hpp"

namespace seqforge::corpus {

struct Posting {
  ANumber anum;
  std::size_t position = 0;

  bool operator==(const Posting&) const = default;
};

/// Immutable once built; concurrent lookups are safe.
class CorpusIndex {
 public:
  const std::map<ANumber, SequenceRecord>& records() const { return records_; }
  const SequenceRecord* find(ANumber anum) const;

  /// Postings of every contiguous triple, keyed by the joined terms.
  const std::map<std::string, std::vector<Posting>>& trigrams() const { return trigrams_; }
  /// Records shorter than three terms, keyed by their full joined list.
  const std::map<std::string, std::vector<ANumber>>& short_records() const { return short_; }

  std::size_t size() const { return records_.size(); }

 private:
  friend CorpusIndex build_index(std::vector<SequenceRecord> records);

  std::map<ANumber, SequenceRecord> records_;
  std::map<std::string, std::vector<Posting>> trigrams_;
  std::map<std::string, std::vector<ANumber>> short_;
};

/// Throws std::invalid_argument on a duplicate A-number or an empty record.
CorpusIndex build_index(std::vector<SequenceRecord> records);

struct LookupResult {
  ANumber anum;
  std::size_t match_position = 0;
  std::size_t match_length = 0;
  std::size_t rank = 0;

  bool operator==(const LookupResult&) const = default;
};

/// Records containing `query` contiguously (signs exact), one result per
/// record at its earliest match. Ranked by match position, then records
/// tagged "core", then A-number. Throws std::invalid_argument on an empty
/// query.
std::vector<LookupResult> lookup(const CorpusIndex& index, std::span<const BigInt> query);

/// Small built-in corpus of well-known entries.
std::vector<SequenceRecord> seed_corpus();

/// Stripped-format text, one record per line; '#' lines and blank lines
/// are skipped.
std::vector<SequenceRecord> parse_stripped(std::string_view text);

/// A stripped file, or a directory of bNNNNNN.txt files (other names are
/// ignored). Throws ParseError on malformed content and
/// std::runtime_error when the path cannot be read.
std::vector<SequenceRecord> load(const std::filesystem::path& path);

}  // namespace seqforge::corpus
