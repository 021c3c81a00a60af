#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "seqforge/recaman.hpp"

using namespace seqforge;
using namespace seqforge::recaman;

TEST_CASE("first terms") {
  const std::vector<std::uint64_t> expected = {0, 1, 3, 6, 2, 7, 13, 20, 12, 21, 11, 22, 10, 23, 9, 24};
  CHECK(terms(16) == expected);
  CHECK(terms(0).empty());
  const auto t = terms(25);
  CHECK(t[24] == 42);
  CHECK(std::find(t.begin(), t.begin() + 24, 42) - t.begin() == 20);
}

TEST_CASE("matches the naive definition") {
  CHECK(terms(20000) == oracle::recaman(20000));
}

TEST_CASE("first occurrences") {
  CHECK(first_occurrence(0, 10) == 0);
  CHECK(first_occurrence(4, 1000) == 131);
  CHECK(first_occurrence(4, 130) == std::nullopt);
  CHECK(first_occurrence(19, 200000) == 99734);
}

TEST_CASE("watch and missing values") {
  Generator g(1000);
  g.watch(42);
  g.watch(4);
  for (int i = 0; i < 200; ++i) g.advance();
  CHECK(g.first_seen(42) == 20);
  CHECK(g.first_seen(4) == 131);
  CHECK(g.step() == 200);
  const auto missing = g.missing_below(20);
  CHECK(std::find(missing.begin(), missing.end(), 19) != missing.end());
  CHECK(std::find(missing.begin(), missing.end(), 4) == missing.end());
}

TEST_CASE("stream indices start at zero") {
  Generator g;
  const auto rows = take(g, 5);
  CHECK(rows.front().index == 0);
  CHECK(rows.back().index == 4);
  CHECK(rows.back().value == 2);
}

TEST_CASE("seen set grows past its hint") {
  SeenSet s(64);
  s.insert(5);
  s.insert(1'000'000);
  s.insert(200);
  CHECK(s.contains(5));
  CHECK(s.contains(200));
  CHECK(s.contains(1'000'000));
  CHECK_FALSE(s.contains(6));
  CHECK_FALSE(s.contains(999'999));
}

TEST_CASE("spiral arcs") {
  const auto t = terms(6);
  const auto arcs = spiral(t);
  REQUIRE(arcs.size() == 5);
  CHECK(arcs[0].from == 0);
  CHECK(arcs[0].to == 1);
  CHECK(arcs[0].diameter == 1);
  CHECK(arcs[0].side == Side::Below);
  CHECK(arcs[1].side == Side::Above);
  CHECK(arcs[3].from == 6);
  CHECK(arcs[3].to == 2);
  CHECK(arcs[3].diameter == 4);
  const std::vector<std::uint64_t> bad = {0, 1, 4};
  CHECK_THROWS_AS(spiral(bad), std::invalid_argument);
  const std::vector<std::uint64_t> shifted = {1, 3};
  CHECK_THROWS_AS(spiral(shifted), std::invalid_argument);

  const std::string svg = spiral_svg(arcs);
  CHECK(svg.find("<path d=\"M 0 0 A 0.5 0.5 0 0 0 1 0\"/>") != std::string::npos);
  CHECK(svg.find("<path d=\"M 1 0 A 1 1 0 0 1 3 0\"/>") != std::string::npos);
  CHECK(svg.find("<path d=\"M 6 0 A 2 2 0 0 0 2 0\"/>") != std::string::npos);
  CHECK(svg == spiral_svg(spiral(terms(6))));
}
