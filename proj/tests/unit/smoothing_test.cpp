#include <doctest.h>

#include "crosscap/smoothing.hpp"

using namespace crosscap;

namespace {

GaussStateCode state_of(const char* text) { return make_state(parse_gauss(text)); }

}  // namespace

TEST_CASE("trefoil: no 1-gon, first finding is the unoriented-knot bigon {1,2}") {
  auto s = state_of("[[1,2,3,1,2,3]]");
  auto f = detect_smallest_mgon(s);
  REQUIRE(f.has_value());
  auto* bigon = std::get_if<Bigon>(&*f);
  REQUIRE(bigon != nullptr);
  CHECK(bigon->a == 1);
  CHECK(bigon->b == 2);
  CHECK(bigon->kind == BigonCase::UnorientedKnot);
}

TEST_CASE("trefoil bigon smoothing reproduces the worked stage exactly") {
  auto s = state_of("[[1,2,3,1,2,3]]");
  auto f = detect_smallest_mgon(s);
  auto next = smooth_bigon(s, std::get<Bigon>(*f));
  CHECK(serialize_state(next) == "[[[1,3,2,3]],[(1,2)],[1,2]]");
  CHECK(check_conservation(next));
}

TEST_CASE("1-gon is found once only smoothed entries separate the appearances") {
  auto s = state_of("[[1,2,3,1,2,3]]");
  s = smooth_bigon(s, std::get<Bigon>(*detect_smallest_mgon(s)));
  // s.gauss == [[1,3,2,3]] with 1,2 smoothed: crossing 3 forms two 1-gons.
  auto f = detect_smallest_mgon(s);
  REQUIRE(f.has_value());
  auto* one = std::get_if<OneGon>(&*f);
  REQUIRE(one != nullptr);
  CHECK(one->a == 3);
  auto next = smooth_one_gon(s, *one);
  CHECK(check_conservation(next));
  // First 1-gon by scan order encloses the smoothed 2.
  CHECK(serialize_state(next) == "[[[3,1]],[(1,2),(3,2)],[1,2,3]]");
  auto done = harvest_closed_components(next);
  CHECK(done.gauss.empty());
  REQUIRE(done.circles.size() == 3);
}

TEST_CASE("single-crossing word smooths through a 1-gon") {
  auto s = state_of("[[1,1]]");
  auto f = detect_smallest_mgon(s);
  REQUIRE(f.has_value());
  auto next = smooth_one_gon(s, std::get<OneGon>(*f));
  CHECK(serialize_state(next) == "[[[1]],[(1)],[1]]");
}

TEST_CASE("5_2: several bigons, scan order reports {2,3} first") {
  auto s = state_of("[[1,2,3,1,4,5,2,3,5,4]]");
  auto f = detect_smallest_mgon(s);
  auto* bigon = std::get_if<Bigon>(&*f);
  REQUIRE(bigon != nullptr);
  CHECK(bigon->a == 2);
  CHECK(bigon->b == 3);
}

TEST_CASE("oriented-knot bigon splits one component into two") {
  // [a,s0,b,w0,b,s1,a,w1] with a=1, b=2, w0=(5), w1=(6): [[1,2,5,2,1,6]] plus
  // a second component closing 5 and 6.
  auto s = state_of("[[1,2,5,2,1,6],[5,6]]");
  auto f = detect_smallest_mgon(s);
  auto* bigon = std::get_if<Bigon>(&*f);
  REQUIRE(bigon != nullptr);
  REQUIRE(bigon->kind == BigonCase::OrientedKnot);
  auto next = smooth_bigon(s, *bigon);
  CHECK(serialize_state(next) == "[[[1,6],[2,5],[5,6]],[(1,2)],[1,2]]");
  CHECK(next.gauss.size() == s.gauss.size() + 1);
  CHECK(check_conservation(next));
}

TEST_CASE("oriented-link bigon merges two components (Whitehead)") {
  auto s = state_of("[[1,2,3,4,2,5],[3,5,1,4]]");
  auto f = detect_smallest_mgon(s);
  auto* bigon = std::get_if<Bigon>(&*f);
  REQUIRE(bigon != nullptr);
  CHECK(bigon->a == 3);
  CHECK(bigon->b == 4);
  REQUIRE(bigon->kind == BigonCase::OrientedLink);
  auto next = smooth_bigon(s, *bigon);
  REQUIRE(next.gauss.size() == 1);
  CHECK(detail::labels_of(next.gauss[0]) ==
        std::vector<Label>{3, 5, 1, 4, 2, 5, 1, 2});
  CHECK(same_circle(next.circles.back(), Circle{3, 4}));
  CHECK(check_conservation(next));
}

TEST_CASE("unoriented-link bigon merges two components (Hopf)") {
  auto s = state_of("[[1,2],[1,2]]");
  auto f = detect_smallest_mgon(s);
  auto* bigon = std::get_if<Bigon>(&*f);
  REQUIRE(bigon != nullptr);
  REQUIRE(bigon->kind == BigonCase::UnorientedLink);
  auto next = smooth_bigon(s, *bigon);
  CHECK(serialize_state(next) == "[[[1,2]],[(1,2)],[1,2]]");
  CHECK(next.gauss.size() == 1);
}

TEST_CASE("8_18: crossings {1,2,7} form the first triangle") {
  auto s = state_of("[[1,2,3,4,5,6,2,7,4,8,6,1,7,3,8,5]]");
  auto f = detect_smallest_mgon(s);
  REQUIRE(f.has_value());
  auto* tri = std::get_if<Triangle>(&*f);
  REQUIRE(tri != nullptr);
  auto labels = tri->labels;
  std::sort(labels.begin(), labels.end());
  CHECK(labels == std::array<Label, 3>{1, 2, 7});
}

TEST_CASE("8_18 triangle smoothing matches the known expansion") {
  auto s = state_of("[[1,2,3,4,5,6,2,7,4,8,6,1,7,3,8,5]]");
  auto tri = std::get<Triangle>(*detect_smallest_mgon(s));
  auto next = smooth_triangle(s, tri);
  REQUIRE(next.gauss.size() == 2);
  std::vector<Circle> got{canonical_component(next.gauss[0]),
                          canonical_component(next.gauss[1])};
  std::sort(got.begin(), got.end());
  std::vector<Circle> want{canonical_circle(Circle{1, 6, 8, 4, 7, 3, 8, 5}),
                           canonical_circle(Circle{2, 3, 4, 5, 6})};
  std::sort(want.begin(), want.end());
  CHECK(got == want);
  REQUIRE(next.circles.size() == 1);
  CHECK(same_circle(next.circles[0], Circle{1, 2, 7}));
  CHECK(next.smoothed == std::set<Label>{1, 2, 7});
  CHECK(check_conservation(next));
}

TEST_CASE("8_18 anti-triangle smoothing matches the known expansion exactly") {
  auto s = state_of("[[1,2,3,4,5,6,2,7,4,8,6,1,7,3,8,5]]");
  auto tri = std::get<Triangle>(*detect_smallest_mgon(s));
  auto next = smooth_anti_triangle(s, tri);
  CHECK(serialize_state(next) ==
        "[[[1,2,6,5,4,3,2,7,3,8,5,1,7,4,8,6]],[],[1,2,7]]");
  CHECK(next.circles.empty());
  CHECK(check_conservation(next));
}

TEST_CASE("stale findings are rejected") {
  auto trefoil = state_of("[[1,2,3,1,2,3]]");
  auto fig8 = state_of("[[1,2,3,1,4,3,2,4]]");
  auto f = *detect_smallest_mgon(trefoil);
  auto after = smooth_bigon(trefoil, std::get<Bigon>(f));
  CHECK_THROWS_AS(smooth_bigon(after, std::get<Bigon>(f)), StaleFinding);

  auto s818 = state_of("[[1,2,3,4,5,6,2,7,4,8,6,1,7,3,8,5]]");
  auto tri = std::get<Triangle>(*detect_smallest_mgon(s818));
  CHECK_THROWS_AS(smooth_triangle(fig8, tri), StaleFinding);
  CHECK_THROWS_AS(smooth_anti_triangle(fig8, tri), StaleFinding);
}

TEST_CASE("harvest moves exactly the fully-smoothed components") {
  auto s = state_of("[[1,2,3,1,2,3]]");
  CHECK(harvest_closed_components(s) == s);  // nothing smoothed: identity

  GaussStateCode mixed;
  mixed.gauss = {{Arc{1, true}, Arc{2, true}}, {Arc{3, false}, Arc{3, false}}};
  mixed.circles = {{1, 2}};
  mixed.smoothed = {1, 2};
  auto out = harvest_closed_components(mixed);
  REQUIRE(out.gauss.size() == 1);
  CHECK(out.gauss[0][0].label == 3);
  REQUIRE(out.circles.size() == 2);
  CHECK(same_circle(out.circles[1], Circle{1, 2}));
}

TEST_CASE("smoothing preserves twice-per-label conservation on every step") {
  for (const char* text :
       {"[[1,2,3,1,2,3]]", "[[1,2,3,1,4,3,2,4]]", "[[1,2,3,4,2,5],[3,5,1,4]]",
        "[[1,2,3,1,4,5,2,3,5,4]]", "[[1,2,3,4,5,6,2,7,4,8,6,1,7,3,8,5]]"}) {
    auto s = state_of(text);
    while (true) {
      s = harvest_closed_components(s);
      if (s.gauss.empty()) break;
      auto f = detect_smallest_mgon(s);
      REQUIRE(f.has_value());
      s = apply_smoothing(s, *f);
      CHECK(check_conservation(s));
    }
  }
}
