#include <doctest.h>

#include "../support.hpp"
#include "crosscap/engine.hpp"
#include "crosscap/oracle.hpp"

using namespace crosscap;
using testsupport::same_state_code;

TEST_CASE("trefoil best state is the three-circle Kauffman state") {
  auto result = minimal_genus_states(parse_gauss("[[1,2,3,1,2,3]]"));
  CHECK(result.best.circles.size() == 3);
  CHECK(same_state_code(result.best, StateCode{{{1, 2}, {1, 3}, {3, 2}}}));
  REQUIRE(result.all_leaves.size() == 1);  // no triangle fork
  CHECK(check_state_conservation(result.best));
}

TEST_CASE("small codes reach the known optimal circle counts") {
  CHECK(optimal_state(parse_gauss("[[1,2,3,1,4,3,2,4]]")).circles.size() == 3);
  CHECK(optimal_state(parse_gauss("[[1,2,3,4,2,5],[3,5,1,4]]")).circles.size() == 4);
  CHECK(optimal_state(parse_gauss("[[1,2],[1,2]]")).circles.size() == 2);
}

TEST_CASE("one-crossing word yields two singleton circles") {
  auto best = optimal_state(parse_gauss("[[1,1]]"));
  REQUIRE(best.circles.size() == 2);
  CHECK(best.circles[0] == Circle{1});
  CHECK(best.circles[1] == Circle{1});
}

TEST_CASE("8_18 forks on the triangle and agrees with the exhaustive maximum") {
  auto g = parse_gauss("[[1,2,3,4,5,6,2,7,4,8,6,1,7,3,8,5]]");
  auto result = minimal_genus_states(g);
  CHECK(result.all_leaves.size() >= 2);
  auto [oracle_max, maximizers] = brute_force_max_circles(g);
  CHECK(static_cast<int>(result.best.circles.size()) == oracle_max);
  for (const auto& leaf : result.all_leaves) {
    CHECK(check_state_conservation(leaf));
    auto s = leaf.circles.size();
    CHECK(s >= 1);
    CHECK(s <= static_cast<std::size_t>(crossing_count(g)) + 1);
    CHECK(s <= result.best.circles.size());
  }
}

TEST_CASE("determinism: identical input gives byte-identical best state") {
  auto g = parse_gauss("[[1,2,3,4,5,6,2,7,4,8,6,1,7,3,8,5]]");
  auto a = minimal_genus_states(g);
  auto b = minimal_genus_states(g);
  CHECK(serialize_state_code(a.best) == serialize_state_code(b.best));
  CHECK(a.branch_count == b.branch_count);
  REQUIRE(a.all_leaves.size() == b.all_leaves.size());
  for (std::size_t i = 0; i < a.all_leaves.size(); ++i)
    CHECK(a.all_leaves[i] == b.all_leaves[i]);
}

TEST_CASE("best-only mode keeps the identical best") {
  auto g = parse_gauss("[[1,2,3,4,5,6,2,7,4,8,6,1,7,3,8,5]]");
  auto full = minimal_genus_states(g);
  EngineOptions opt;
  opt.best_only = true;
  auto lean = minimal_genus_states(g, opt);
  CHECK(serialize_state_code(lean.best) == serialize_state_code(full.best));
  CHECK(lean.all_leaves.size() == 1);
}

TEST_CASE("branch budget turns runaway inputs into errors") {
  EngineOptions opt;
  opt.branch_budget = 1;
  CHECK_THROWS_AS(
      minimal_genus_states(parse_gauss("[[1,2,3,1,2,3]]"), opt), EngineError);
}

TEST_CASE("inputs with no m-gon are rejected") {
  // Two components each holding one appearance of the only crossing: no
  // component has two unsmoothed entries, so no m-gon can ever match.
  CHECK_THROWS_AS(minimal_genus_states(parse_gauss("[[1],[1]]")), EngineError);
}

TEST_CASE("serialize_state_code renders discovery order") {
  auto best = optimal_state(parse_gauss("[[1,2,3,1,2,3]]"));
  CHECK(serialize_state_code(best) == "[(1,2),(3,2),(3,1)]");
}
