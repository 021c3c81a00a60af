#include "seqforge/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "seqforge/closedforms.hpp"

namespace seqforge::corpus {

namespace {

std::string join_window(std::span<const BigInt> terms) {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += ',';
    out += to_string(terms[i]);
  }
  return out;
}

bool matches_at(const Terms& terms, std::size_t pos, std::span<const BigInt> query) {
  if (pos + query.size() > terms.size()) return false;
  return std::equal(query.begin(), query.end(), terms.begin() + static_cast<std::ptrdiff_t>(pos));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

SequenceRecord make(std::uint32_t anum, std::string name, std::int64_t offset,
                    std::initializer_list<long> terms, std::set<std::string> keywords = {}) {
  SequenceRecord r;
  r.anum = ANumber(anum);
  r.name = std::move(name);
  r.offset = offset;
  for (long t : terms) r.terms.emplace_back(t);
  r.keywords = std::move(keywords);
  return r;
}

}  // namespace

const SequenceRecord* CorpusIndex::find(ANumber anum) const {
  auto it = records_.find(anum);
  return it == records_.end() ? nullptr : &it->second;
}

CorpusIndex build_index(std::vector<SequenceRecord> records) {
  CorpusIndex index;
  for (auto& r : records) {
    if (r.terms.empty()) throw std::invalid_argument("corpus: " + r.anum.str() + " has no terms");
    const ANumber anum = r.anum;
    if (!index.records_.emplace(anum, std::move(r)).second) {
      throw std::invalid_argument("corpus: duplicate " + anum.str());
    }
  }
  // Map order keeps every posting list sorted by (anum, position).
  for (const auto& [anum, r] : index.records_) {
    const std::span<const BigInt> t(r.terms);
    if (t.size() < 3) {
      index.short_[join_window(t)].push_back(anum);
      continue;
    }
    for (std::size_t i = 0; i + 3 <= t.size(); ++i) {
      index.trigrams_[join_window(t.subspan(i, 3))].push_back({anum, i});
    }
  }
  return index;
}

std::vector<LookupResult> lookup(const CorpusIndex& index, std::span<const BigInt> query) {
  if (query.empty()) throw std::invalid_argument("lookup: empty query");
  std::vector<LookupResult> hits;

  if (query.size() < 3) {
    for (const auto& [anum, r] : index.records()) {
      for (std::size_t pos = 0; pos + query.size() <= r.terms.size(); ++pos) {
        if (matches_at(r.terms, pos, query)) {
          hits.push_back({anum, pos, query.size(), 0});
          break;
        }
      }
    }
  } else {
    auto it = index.trigrams().find(join_window(query.first(3)));
    if (it != index.trigrams().end()) {
      for (const Posting& p : it->second) {
        if (!hits.empty() && hits.back().anum == p.anum) continue;
        if (matches_at(index.find(p.anum)->terms, p.position, query)) {
          hits.push_back({p.anum, p.position, query.size(), 0});
        }
      }
    }
  }

  std::sort(hits.begin(), hits.end(), [&](const LookupResult& a, const LookupResult& b) {
    if (a.match_position != b.match_position) return a.match_position < b.match_position;
    const bool ca = index.find(a.anum)->has_keyword("core");
    const bool cb = index.find(b.anum)->has_keyword("core");
    if (ca != cb) return ca;
    return a.anum < b.anum;
  });
  for (std::size_t i = 0; i < hits.size(); ++i) hits[i].rank = i + 1;
  return hits;
}

std::vector<SequenceRecord> seed_corpus() {
  std::vector<SequenceRecord> out;
  out.push_back(make(81, "Number of unlabeled rooted trees with n nodes.", 1, {1, 1, 2, 4, 9, 20, 48, 115}));
  {
    SequenceRecord r = make(124, "Central polygonal numbers: n(n+1)/2 + 1.", 0, {});
    for (std::uint64_t n = 0; n <= 5; ++n) r.terms.push_back(closedforms::pancake(n));
    out.push_back(std::move(r));
  }
  {
    SequenceRecord r = make(3600, "Maximal number of pieces from n cuts of a torus.", 0, {1});
    for (std::uint64_t n = 1; n <= 9; ++n) r.terms.push_back(closedforms::bagel(n));
    out.push_back(std::move(r));
  }
  out.push_back(make(1006, "Motzkin numbers.", 1, {1, 2, 4, 9, 21, 51, 127}));
  out.push_back(make(1011, "Number of series-parallel networks with n unlabeled edges, up to duality.", 1,
                     {1, 1, 2, 5, 14, 38, 120, 353, 1148, 3527}));
  out.push_back(make(435, "Normalized total height of rooted mappings with n nodes.", 2, {1, 8, 78, 944, 13800}));
  out.push_back(make(108, "Catalan numbers: C(n) = binomial(2n,n)/(n+1).", 0,
                     {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786},
                     {"core", "nonn", "easy", "nice"}));
  out.push_back(make(40, "The prime numbers.", 1, {2, 3, 5, 7, 11, 13}));
  out.push_back(make(1034, "Orders of noncyclic simple groups.", 1, {60, 168, 360, 504, 660, 1092}));
  out.push_back(make(1855, "Sorting numbers: comparisons for binary insertion sort.", 0, {0, 1, 3, 5, 8, 11, 14}));
  out.push_back(make(11554, "Stops on the New York City A train.", 1, {4, 14, 23, 34, 42, 50, 59}));
  out.push_back(make(64413, "EKG sequence.", 1, {1, 2, 4, 6, 3, 9, 12, 8, 10, 5, 15}));
  return out;
}

std::vector<SequenceRecord> parse_stripped(std::string_view text) {
  std::vector<SequenceRecord> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    out.push_back(parse_stripped_line(line, line_no));
  }
  return out;
}

std::vector<SequenceRecord> load(const std::filesystem::path& path) {
  if (!std::filesystem::is_directory(path)) return parse_stripped(read_file(path));

  static const std::regex name_re("b([0-9]{6})\\.txt");
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(path)) {
    if (entry.is_regular_file() && std::regex_match(entry.path().filename().string(), name_re)) {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<SequenceRecord> out;
  for (const auto& file : files) {
    const std::string stem = file.filename().string();
    BFileRows rows;
    try {
      rows = parse_bfile(read_file(file));
    } catch (const GapError& e) {
      throw GapError(0, stem + ": " + e.what());
    } catch (const ParseError& e) {
      throw ParseError(0, stem + ": " + e.what());
    }
    if (rows.empty()) throw ParseError(0, stem + ": no terms");
    SequenceRecord r;
    r.anum = ANumber::parse("A" + stem.substr(1, 6));
    r.offset = rows.front().index;
    for (auto& row : rows) r.terms.push_back(std::move(row.value));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace seqforge::corpus
