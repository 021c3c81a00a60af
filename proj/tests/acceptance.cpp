// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Usage: acceptance PATH_TO_SEQFORGE_BINARY
#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "seqforge/arith.hpp"
#include "seqforge/closedforms.hpp"
#include "seqforge/corpus.hpp"
#include "seqforge/curling.hpp"
#include "seqforge/les.hpp"
#include "seqforge/recaman.hpp"
#include "seqforge/seqmodel.hpp"
#include "seqforge/stones.hpp"
#include "seqforge/trajectories.hpp"

using namespace seqforge;

namespace {

// Wall-clock limits in seconds, one per criterion.
constexpr double kLimit1 = 1.0;
constexpr double kLimit2Generate = 30.0;
constexpr double kLimit3 = 600.0;
constexpr double kLimit4 = 300.0;
constexpr double kLimit5Ekg = 60.0;
constexpr double kLimit6Small = 60.0;
constexpr double kLimit9Gap = 120.0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Collects failed checks for one criterion.
struct Check {
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void within(double elapsed, double limit, const std::string& what) {
    std::ostringstream msg;
    msg << what << " took " << elapsed << " s (limit " << limit << " s)";
    expect(elapsed < limit, msg.str());
  }
};

int failed_criteria = 0;

void criterion(int id, const std::string& title, const std::function<void(Check&)>& body) {
  Check c;
  const auto t0 = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.failures.push_back(std::string("exception: ") + e.what());
  }
  const double elapsed = seconds_since(t0);
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(2);
  line << (c.failures.empty() ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " [" << elapsed
       << " s]";
  for (const auto& f : c.failures) line << "\n    - " << f;
  std::cout << line.str() << std::endl;
  if (!c.failures.empty()) ++failed_criteria;
}

Terms T(std::initializer_list<long> v) {
  Terms out;
  for (long x : v) out.emplace_back(x);
  return out;
}

// Runs a shell command and captures stdout plus exit status.
std::pair<std::string, int> capture(const std::string& cmd) {
  std::string out;
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!pipe) return {"", -1};
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  return {out, pclose(pipe)};
}

void recaman_exactness(Check& c) {
  const auto t0 = Clock::now();
  const std::vector<std::uint64_t> first = {0, 1, 3, 6, 2, 7, 13, 20, 12, 21, 11, 22, 10, 23, 9, 24};
  c.expect(recaman::terms(16) == first, "first 16 terms");
  c.expect(recaman::first_occurrence(4, 1'000'000) == 131, "first occurrence of 4 is 131");
  c.expect(recaman::first_occurrence(19, 1'000'000) == 99734, "first occurrence of 19 is 99734");
  const auto t = recaman::terms(25);
  c.expect(t[24] == 42, "a(24) = 42");
  c.expect(std::find(t.begin(), t.begin() + 24, 42) != t.begin() + 24, "42 appears before a(24)");
  c.within(seconds_since(t0), kLimit1, "criterion 1");
}

void recaman_scale(Check& c) {
  constexpr std::uint64_t kSteps = 10'000'000;
  const auto t0 = Clock::now();
  recaman::Generator g(kSteps);
  g.watch(852655);
  for (std::uint64_t i = 0; i < kSteps; ++i) g.advance();
  c.within(seconds_since(t0), kLimit2Generate, "1e7 terms");
  c.expect(g.step() == kSteps, "generated 1e7 terms");
  c.expect(!g.first_seen(852655), "852655 absent from the first 1e7 terms");
  c.expect(!g.seen(852655), "852655 not in the seen set");
  c.expect(recaman::terms(100'000) == oracle::recaman(100'000), "naive reference on 1e5 terms");
}

void gijswijt(Check& c) {
  const auto t0 = Clock::now();
  const auto g = curling::gijswijt(300'000);
  c.expect(std::vector<std::uint64_t>(g.begin(), g.begin() + 9) ==
               std::vector<std::uint64_t>{1, 1, 2, 1, 1, 2, 2, 2, 3},
           "first 9 terms");
  c.expect(std::find(g.begin(), g.end(), 4) - g.begin() + 1 == 220, "first 4 at term 220");
  c.expect(std::find(g.begin(), g.end(), 5) == g.end(), "no 5 in 3e5 terms");

  std::size_t words = 0;
  bool agree = true;
  for (std::size_t len = 1; len <= 12 && agree; ++len) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < len; ++i) total *= 3;
    std::vector<std::uint64_t> s(len);
    for (std::size_t code = 0; code < total && agree; ++code) {
      std::size_t x = code;
      for (auto& v : s) v = 1 + x % 3, x /= 3;
      curling::Tracker tr;
      curling::CurlingDecomposition d;
      for (auto v : s) d = tr.push(v);
      agree = d.k == oracle::curling(s) && curling::curling_number(s) == d;
      ++words;
    }
  }
  c.expect(agree, "brute-force curling agreement over {1,2,3}^<=12");
  c.expect(words == 797160, "all 797160 words checked");
  c.within(seconds_since(t0), kLimit3, "criterion 3");
}

void trajectories_check(Check& c) {
  using trajectories::MapKind;
  using trajectories::OutcomeKind;
  const auto t0 = Clock::now();
  const auto f = trajectories::classify_range(MapKind::Aliquot, 276, 10'000);
  bool f_ok = f.size() == 274;
  for (const auto& [n, o] : f) {
    f_ok = f_ok && (o.kind == OutcomeKind::ReachedZero || o.kind == OutcomeKind::EnteredCycle);
  }
  c.expect(f_ok, "aliquot: every 1 < n < 276 reaches 0 or a cycle");

  const auto g = trajectories::classify_range(MapKind::SigmaPhiMean, 270, 10'000);
  bool g_ok = g.size() == 268;
  for (const auto& [n, o] : g) g_ok = g_ok && o.terminal();
  c.expect(g_ok, "sigma-phi mean: every 1 < n < 270 terminates");

  const auto r = trajectories::trajectory(MapKind::SigmaPhiMean, BigInt(270), 51);
  c.expect(r.outcome.kind == OutcomeKind::CapReached, "270 reaches the cap");
  bool rising = r.terms.size() > 50;
  for (std::size_t i = 1; i <= 50 && rising; ++i) rising = r.terms[i] > r.terms[i - 1];
  c.expect(rising, "270 strictly increases for 50 steps");

  const auto phi = oracle::phi_table(100'000);
  bool arith_ok = true;
  for (std::uint64_t n = 1; n <= 100'000 && arith_ok; ++n) {
    const auto v = from_u64(n);
    arith_ok = arith::sigma(v) == from_u64(oracle::sigma(n)) && arith::phi(v) == from_u64(phi[n]);
  }
  c.expect(arith_ok, "sigma and phi match brute force up to 1e5");

  const auto amicable = trajectories::trajectory(MapKind::Aliquot, BigInt(220), 100);
  c.expect(amicable.outcome == trajectories::Outcome{OutcomeKind::EnteredCycle, 2}, "220/284 is a 2-cycle");
  c.within(seconds_since(t0), kLimit4, "criterion 4");
}

void les_check(Check& c) {
  using les::Family;
  c.expect(les::les_generate(Family::EKG, 11) == std::vector<std::uint64_t>{1, 2, 4, 6, 3, 9, 12, 8, 10, 5, 15},
           "EKG first 11 terms");
  const auto t0 = Clock::now();
  const auto ekg = les::les_generate(Family::EKG, 100'000);
  c.within(seconds_since(t0), kLimit5Ekg, "1e5 EKG terms");
  c.expect(ekg.size() == 100'000, "1e5 EKG terms produced");
  c.expect(les::enots_wolley_membership_scan(10'000).empty(), "Enots Wolley scan of 1e4 terms");

  for (Family fam : {Family::EKG, Family::Yellowstone, Family::EnotsWolley}) {
    const auto s = les::les_generate(fam, 200);
    const std::size_t seeds = les::seed(fam).size();
    std::set<std::uint64_t> used(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(seeds));
    bool ok = true;
    for (std::size_t i = seeds; i < s.size() && ok; ++i) {
      const std::span<const std::uint64_t> prefix(s.data(), i);
      ok = les::admissible(fam, prefix, s[i]) && !used.count(s[i]);
      for (std::uint64_t v = 1; v < s[i] && ok; ++v) ok = used.count(v) || !les::admissible(fam, prefix, v);
      used.insert(s[i]);
    }
    c.expect(ok, std::string("greedy minimality for ") + std::string(les::to_string(fam)));
  }
}

void stones_check(Check& c) {
  using namespace stones;
  c.expect(!verify(two_stone_solution()), "two-stone board verifies");

  const auto t0 = Clock::now();
  const auto one = solve(1);
  const auto two = solve(2);
  c.within(seconds_since(t0), kLimit6Small, "solve(1) and solve(2)");
  c.expect(one.best == 1 && one.exhaustive, "solve(1) = 1, exhaustive");
  c.expect(two.best == 16 && two.exhaustive, "solve(2) = 16, exhaustive");
  c.expect(!verify(one.board) && !verify(two.board), "solver witnesses verify");

  for (int n = 3; n <= 10; ++n) {
    const Board lin = linear_construction(n), chim = chimney_construction(n);
    c.expect(!verify(lin) && lin.max_label() == 6 * (n - 1), "linear construction n=" + std::to_string(n));
    c.expect(!verify(chim) && chim.max_label() == 6 * n + 3, "chimney construction n=" + std::to_string(n));
  }

  auto same_across_workers = [&](int n, SearchConfig config, const std::string& label) {
    std::vector<std::string> docs;
    for (unsigned w : {1u, 2u, 4u}) {
      config.workers = w;
      const auto r = solve(n, config);
      docs.push_back(std::to_string(r.best) + " " + to_document(r.board));
    }
    c.expect(docs[0] == docs[1] && docs[0] == docs[2], "identical results for 1/2/4 workers: " + label);
  };
  same_across_workers(2, {}, "n=2 depth-first");
  same_across_workers(3, {}, "n=3 depth-first");
  SearchConfig beam;
  beam.beam = 64;
  same_across_workers(5, beam, "n=5 beam");
}

void ordering_formats(Check& c) {
  c.expect(ordering_key(T({-1, 0, 1, 1, 2, 1, 17, 3, 2, 1})).key == T({2, 1, 17, 3, 2, 1}), "key drops signs and small prefix");
  c.expect(ordering_key(T({0, 0, 0})).klass == KeyClass::SmallTerms, "zero sequence is SmallTerms");
  c.expect(compare(T({1, 2, 4}), T({1, 2, 5})) == Ordering::Before, "1,2,4 before 1,2,5");
  c.expect(compare(T({1, 2}), T({1, 2, 4})) == Ordering::Before, "blank before numbers");
  c.expect(compare(T({1, 2, 4, 3}), T({1, 2, 4, 3})) == Ordering::Equal, "identical lists equal");

  std::mt19937_64 rng(2024);
  auto random_list = [&] {
    Terms t;
    const int len = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < len; ++i) t.emplace_back(static_cast<long>(rng() % 7) - 3);
    return t;
  };
  bool consistent = true;
  for (int i = 0; i < 10'000 && consistent; ++i) {
    const Terms a = random_list(), b = random_list(), x = random_list();
    const Ordering ab = compare(a, b), ba = compare(b, a);
    consistent = (ab == Ordering::Equal) == (ba == Ordering::Equal) &&
                 (ab == Ordering::Before) == (ba == Ordering::After);
    const Ordering bx = compare(b, x), ax = compare(a, x);
    if (ab != Ordering::After && bx != Ordering::After) consistent = consistent && ax != Ordering::After;
  }
  c.expect(consistent, "comparator antisymmetric and transitive on 1e4 random pairs");

  const std::string bfile = "1 1\n2 -2\n3 340282366920938463463374607431768211456\n";
  c.expect(write_bfile(parse_bfile(bfile)) == bfile, "b-file round trip");
  const std::string line = "A000108 ,1,1,2,5,14,42,132,429,1430,";
  c.expect(format_stripped_line(parse_stripped_line(line)) == line, "stripped round trip");
  bool gap = false;
  try {
    parse_bfile("1 1\n2 2\n4 4\n");
  } catch (const GapError&) {
    gap = true;
  }
  c.expect(gap, "b-file gap detection");
}

void corpus_check(Check& c) {
  const auto idx = corpus::build_index(corpus::seed_corpus());
  const auto catalan = corpus::lookup(idx, T({1, 2, 5, 14, 42, 132, 429}));
  c.expect(!catalan.empty() && catalan[0].anum == ANumber(108), "Catalan query ranks A000108 first");
  const auto motzkin = corpus::lookup(idx, T({1, 2, 4, 9, 21, 51, 127}));
  c.expect(!motzkin.empty() && motzkin[0].anum == ANumber(1006), "Motzkin query ranks A001006 first");

  bool complete = true;
  for (const auto& [anum, r] : idx.records()) {
    for (std::size_t len = 3; len <= 7; ++len) {
      for (std::size_t pos = 0; pos + len <= r.terms.size(); ++pos) {
        const Terms q(r.terms.begin() + static_cast<std::ptrdiff_t>(pos),
                      r.terms.begin() + static_cast<std::ptrdiff_t>(pos + len));
        bool found = false;
        for (const auto& h : corpus::lookup(idx, q)) found = found || h.anum == anum;
        complete = complete && found;
      }
    }
  }
  c.expect(complete, "self-retrieval for every window of length 3..7");
}

void closed_forms(Check& c) {
  c.expect(closedforms::pancake(4) == 11, "pancake(4) = 11");
  c.expect(closedforms::bagel(3) == 13, "bagel(3) = 13");
  const auto rec = closedforms::catalan_by_recurrence(31);
  bool same = rec.size() == 31;
  for (std::uint64_t n = 0; n <= 30 && same; ++n) {
    same = rec[n] == closedforms::binomial(2 * n, n) / from_u64(n + 1);
  }
  c.expect(same, "Catalan recurrence matches the binomial formula for n <= 30");
  bool holds = true;
  for (std::uint64_t n = 1; n <= 50; ++n) holds = holds && closedforms::binomial_identity(n).holds;
  c.expect(holds, "binomial identity for n <= 50");

  const auto t0 = Clock::now();
  bool nonneg = true;
  for (std::uint64_t n = 3; n <= 1'000'000 && nonneg; ++n) nonneg = sgn(closedforms::sigma_gap(n)) >= 0;
  c.within(seconds_since(t0), kLimit9Gap, "sigma gap scan");
  c.expect(nonneg, "sigma gap nonnegative for 3 <= n <= 1e6");
}

void determinism(Check& c, const std::string& bin) {
  const std::vector<std::string> invocations = {
      "generate recaman --count 1000",
      "generate gijswijt --count 500 --bfile -",
      "generate ekg --count 300",
      "generate yellowstone --count 300",
      "generate enotswolley --count 300",
      "generate catalan --count 40",
      "generate pancake --count 20",
      "generate bagel --count 20",
      "curling --terms 1,2,1,2,3,3,3",
      "trajectory --map aliquot --start 276 --max-steps 40",
      "trajectory --map sigmaphi --start 270 --max-steps 60",
      "classify --map aliquot --below 100 --max-steps 1000",
      "--workers 3 classify --map sigmaphi --below 100 --max-steps 1000",
      "lookup --query 1,2,5,14,42,132,429",
      "lookup --query 1,2",
      "order --a 1,2,4 --b 1,2,5",
      "stones solve -n 2",
      "stones solve -n 3 --radius 4 --format ascii",
      "--workers 4 stones solve -n 3 --radius 4 --format ascii",
      "stones solve -n 5 --beam 32 --warm chimney",
      "stones construct --kind linear -n 6 --format ascii",
      "stones construct --kind chimney -n 7 --svg -",
      "stones bounds --max-n 4 --radius 3 --beam 16",
      "spiral --count 60 --svg -",
      "identity --n 12",
      "sigmagap --n 1000",
      "sigmagap --n 2",
  };
  std::size_t mismatches = 0;
  for (const auto& args : invocations) {
    const auto first = capture(bin + " " + args);
    const auto second = capture(bin + " " + args);
    if (first != second) {
      ++mismatches;
      c.expect(false, "output differs between runs: " + args);
    }
    c.expect(!first.first.empty() || first.second != 0, "no output from: " + args);
  }
  // Worker count must not change the bytes either.
  c.expect(capture(bin + " stones solve -n 3 --radius 4 --format ascii") ==
               capture(bin + " --workers 4 stones solve -n 3 --radius 4 --format ascii"),
           "stones solve output independent of workers");
  c.expect(capture(bin + " classify --map sigmaphi --below 100 --max-steps 1000") ==
               capture(bin + " --workers 3 classify --map sigmaphi --below 100 --max-steps 1000"),
           "classify output independent of workers");
  c.expect(capture(bin + " generate recaman --count 16").first == "0,1,3,6,2,7,13,20,12,21,11,22,10,23,9,24\n",
           "CLI Recaman output");
  c.expect(capture(bin + " stones solve -n 2 --format none").first == "n=2 best=16 exhaustive=true\n",
           "CLI stones solve -n 2");
  c.expect(capture(bin + " lookup --query 1,2,5,14,42,132,429").first.rfind("1 A000108 ", 0) == 0,
           "CLI lookup ranks A000108 first");
  c.expect(mismatches == 0, std::to_string(invocations.size()) + " invocations compared");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance PATH_TO_SEQFORGE\n";
    return 1;
  }
  const std::string bin = argv[1];

  criterion(1, "Recaman exactness", recaman_exactness);
  criterion(2, "Recaman scale", recaman_scale);
  criterion(3, "Gijswijt and curling numbers", gijswijt);
  criterion(4, "Trajectories", trajectories_check);
  criterion(5, "Lexicographically earliest sequences", les_check);
  criterion(6, "Stepping stones", stones_check);
  criterion(7, "Ordering and formats", ordering_formats);
  criterion(8, "Corpus lookup", corpus_check);
  criterion(9, "Closed forms", closed_forms);
  criterion(10, "CLI determinism", [&](Check& c) { determinism(c, bin); });

  std::cout << (failed_criteria == 0 ? "ALL CRITERIA PASSED" : std::to_string(failed_criteria) + " CRITERIA FAILED")
            << std::endl;
  return failed_criteria == 0 ? 0 : 1;
}
