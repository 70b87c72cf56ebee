#include <doctest.h>

#include "crosscap/gauss_code.hpp"

using namespace crosscap;

TEST_CASE("parse_gauss accepts the figure-8 code") {
  auto g = parse_gauss("[[1,2,3,1,4,3,2,4]]");
  REQUIRE(g.components.size() == 1);
  CHECK(g.components[0] == std::vector<Label>{1, 2, 3, 1, 4, 3, 2, 4});
  CHECK(crossing_count(g) == 4);
}

TEST_CASE("parse_gauss accepts the two-component Whitehead code") {
  auto g = parse_gauss("[[1,2,3,4,2,5],[3,5,1,4]]");
  REQUIRE(g.components.size() == 2);
  CHECK(crossing_count(g) == 5);
}

TEST_CASE("parse_gauss tolerates whitespace") {
  auto g = parse_gauss(" [ [1 , 2,3,\t1,2 , 3] ]\n");
  CHECK(g == parse_gauss("[[1,2,3,1,2,3]]"));
}

TEST_CASE("parse_gauss rejects single-occurrence labels") {
  CHECK_THROWS_AS(parse_gauss("[[1,2,3,1,2]]"), ValidityError);
}

TEST_CASE("parse_gauss rejects malformed text") {
  CHECK_THROWS_AS(parse_gauss("[[1,2]"), ParseError);
  CHECK_THROWS_AS(parse_gauss("[[1,,2]]"), ParseError);
  CHECK_THROWS_AS(parse_gauss("[[1,2],[1,2]] trailing"), ParseError);
  CHECK_THROWS_AS(parse_gauss("[[0,0]]"), ParseError);
  CHECK_THROWS_AS(parse_gauss("[]"), ParseError);
}

TEST_CASE("serialize_gauss round-trips and is whitespace-free") {
  for (const char* text : {"[[1,2,3,1,4,3,2,4]]", "[[1,2,3,4,2,5],[3,5,1,4]]",
                           "[[1,1]]"}) {
    auto g = parse_gauss(text);
    CHECK(serialize_gauss(g) == text);
    CHECK(parse_gauss(serialize_gauss(g)) == g);
  }
}

TEST_CASE("validate rejects structural violations") {
  CHECK_THROWS_AS(validate(GaussCode{}), ValidityError);
  CHECK_THROWS_AS(validate(GaussCode{{{1, 1}, {}}}), ValidityError);
  CHECK_THROWS_AS(validate(GaussCode{{{1, 1, 1, 1}}}), ValidityError);
  CHECK_THROWS_AS(validate(GaussCode{{{-1, -1}}}), ValidityError);
  CHECK_NOTHROW(validate(parse_gauss("[[1,2],[1,2]]")));
}

TEST_CASE("canonical_relabel matches the first-appearance convention") {
  CHECK(canonical_relabel(parse_gauss("[[2,3,1,4,3,2,4,1]]")) ==
        parse_gauss("[[1,2,3,4,2,1,4,3]]"));
  CHECK(canonical_relabel(parse_gauss("[[4,2,3,4,1,3,2,1]]")) ==
        parse_gauss("[[1,2,3,1,4,3,2,4]]"));
}

TEST_CASE("canonical_relabel is idempotent and length-preserving") {
  auto g = parse_gauss("[[3,5,1,4],[1,2,3,4,2,5]]");
  auto once = canonical_relabel(g);
  CHECK(canonical_relabel(once) == once);
  REQUIRE(once.components.size() == g.components.size());
  for (std::size_t i = 0; i < g.components.size(); ++i)
    CHECK(once.components[i].size() == g.components[i].size());
}

TEST_CASE("dt_to_gauss expands the standard trefoil and figure-8 codes") {
  CHECK(dt_to_gauss(parse_dt("4 6 2")) == parse_gauss("[[1,2,3,1,2,3]]"));
  CHECK(dt_to_gauss(parse_dt("4,6,8,2")) == parse_gauss("[[1,2,3,1,4,3,2,4]]"));
}

TEST_CASE("dt_to_gauss output always validates") {
  for (const char* text : {"4 6 2", "4 6 8 2", "6 8 10 2 4", "4 8 10 2 12 6"}) {
    auto g = dt_to_gauss(parse_dt(text));
    CHECK_NOTHROW(validate(g));
    CHECK(g == canonical_relabel(g));
  }
}

TEST_CASE("dt parsing and conversion reject bad inputs") {
  CHECK_THROWS_AS(parse_dt(""), ParseError);
  CHECK_THROWS_AS(parse_dt("4 x 2"), ParseError);
  CHECK_THROWS_AS(dt_to_gauss(parse_dt("2")), ValidityError);       // degenerate
  CHECK_THROWS_AS(dt_to_gauss(parse_dt("4 4 2")), ValidityError);   // repeated
  CHECK_THROWS_AS(dt_to_gauss(parse_dt("4 6 3")), ValidityError);   // odd entry
  CHECK_THROWS_AS(dt_to_gauss(parse_dt("4 6 8")), ValidityError);   // out of range
}

TEST_CASE("crossing_count") {
  CHECK(crossing_count(parse_gauss("[[1,2,3,1,2,3]]")) == 3);
  CHECK(crossing_count(parse_gauss("[[1,2,3,4,2,5],[3,5,1,4]]")) == 5);
  CHECK(crossing_count(parse_gauss("[[1,1]]")) == 1);
}
