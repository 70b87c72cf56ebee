#include <doctest.h>

#include <random>

#include "../support.hpp"
#include "crosscap/oracle.hpp"

using namespace crosscap;

namespace {

SmoothingAssignment assignment_for(const GaussCode& g, std::uint32_t mask) {
  auto m = detail::build_dart_model(g);
  return SmoothingAssignment{m.sorted_labels, mask};
}

std::vector<int> count_multiset(const GaussCode& g) {
  const int c = crossing_count(g);
  std::vector<int> counts;
  for (std::uint32_t mask = 0; mask < (1u << c); ++mask)
    counts.push_back(count_circles(g, assignment_for(g, mask)));
  std::sort(counts.begin(), counts.end());
  return counts;
}

}  // namespace

TEST_CASE("trefoil all-oriented assignment is the two-circle Seifert state") {
  auto g = parse_gauss("[[1,2,3,1,2,3]]");
  CHECK(count_circles(g, assignment_for(g, 0)) == 2);
}

TEST_CASE("single crossing: the two choices differ by exactly one circle") {
  auto g = parse_gauss("[[1,1]]");
  int a = count_circles(g, assignment_for(g, 0));
  int b = count_circles(g, assignment_for(g, 1));
  CHECK(std::abs(a - b) == 1);
  CHECK(std::min(a, b) == 1);
  CHECK(std::max(a, b) == 2);
}

TEST_CASE("brute-force maxima of the reference inputs") {
  CHECK(brute_force_max_circles(parse_gauss("[[1,2,3,1,2,3]]")).first == 3);
  CHECK(brute_force_max_circles(parse_gauss("[[1,2],[1,2]]")).first == 2);
  CHECK(brute_force_max_circles(parse_gauss("[[1,2,3,1,4,3,2,4]]")).first == 3);
}

TEST_CASE("brute_force_invariants equals compute_invariants") {
  for (const char* text :
       {"[[1,2,3,1,2,3]]", "[[1,2,3,1,4,3,2,4]]", "[[1,2,3,4,2,5],[3,5,1,4]]",
        "[[1,2],[1,2]]", "[[1,2,3,1,4,5,2,3,5,4]]",
        "[[1,2,3,4,5,6,2,7,4,8,6,1,7,3,8,5]]"}) {
    auto g = parse_gauss(text);
    auto fast = compute_invariants(g);
    auto slow = brute_force_invariants(g);
    CHECK(fast.circle_count == slow.circle_count);
    CHECK(fast.unoriented_genus == slow.unoriented_genus);
    CHECK(fast.crosscap == slow.crosscap);
  }
}

TEST_CASE("circle counts lie in [1, c+1] and flip by exactly one per bit") {
  std::mt19937 rng(7);
  for (const char* text :
       {"[[1,2,3,1,4,5,2,3,5,4]]", "[[1,2,3,4,2,5],[3,5,1,4]]",
        "[[1,2,3,4,5,6,2,7,4,8,6,1,7,3,8,5]]"}) {
    auto g = parse_gauss(text);
    const int c = crossing_count(g);
    for (int trial = 0; trial < 50; ++trial) {
      std::uint32_t mask = rng() & ((1u << c) - 1);
      int base = count_circles(g, assignment_for(g, mask));
      CHECK(base >= 1);
      CHECK(base <= c + 1);
      int bit = static_cast<int>(rng() % c);
      int flipped = count_circles(g, assignment_for(g, mask ^ (1u << bit)));
      CHECK(std::abs(base - flipped) == 1);
    }
  }
}

TEST_CASE("circle-count multiset is invariant under input symmetries") {
  std::mt19937 rng(11);
  for (const char* text :
       {"[[1,2,3,1,2,3]]", "[[1,2,3,4,2,5],[3,5,1,4]]",
        "[[1,2,3,1,4,5,2,3,5,4]]"}) {
    auto g = parse_gauss(text);
    auto reference = count_multiset(g);
    for (int trial = 0; trial < 10; ++trial)
      CHECK(count_multiset(testsupport::random_symmetry(g, rng)) == reference);
  }
}

TEST_CASE("the exhaustion bound rejects oversized inputs") {
  std::vector<Label> word;
  for (Label x = 1; x <= 17; ++x) {
    word.push_back(x);
    word.push_back(x);
  }
  CHECK_THROWS_AS(brute_force_max_circles(GaussCode{{word}}), OracleError);
  BruteForceOptions opt;
  opt.max_crossings = 4;
  CHECK_THROWS_AS(
      brute_force_max_circles(parse_gauss("[[1,2,3,1,4,5,2,3,5,4]]"), opt),
      OracleError);
}

TEST_CASE("trace_state lists each crossing twice across all circles") {
  auto g = parse_gauss("[[1,2,3,4,2,5],[3,5,1,4]]");
  for (std::uint32_t mask = 0; mask < 32; ++mask) {
    auto circles = trace_state(g, assignment_for(g, mask));
    std::map<Label, int> counts;
    for (const auto& circ : circles)
      for (Label l : circ) ++counts[l];
    for (const auto& [l, n] : counts) CHECK(n == 2);
  }
}
