#include <cstdio>

#include "crosscap/oracle.hpp"

using namespace crosscap;

static int fails = 0;
#define CHECK(cond)                                        \
  do {                                                     \
    if (!(cond)) {                                         \
      std::printf("FAIL %s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++fails;                                             \
    }                                                      \
  } while (0)

int main() {
  // Trefoil stages.
  auto tre = parse_gauss("[[1,2,3,1,2,3]]");
  auto s0 = make_state(tre);
  auto f0 = detect_smallest_mgon(s0);
  CHECK(f0 && std::holds_alternative<Bigon>(*f0));
  auto b0 = std::get<Bigon>(*f0);
  CHECK(b0.a == 1 && b0.b == 2 && b0.kind == BigonCase::UnorientedKnot);
  auto s1 = smooth_bigon(s0, b0);
  std::printf("trefoil stage 1: %s\n", serialize_state(s1).c_str());
  CHECK(check_conservation(s1));
  auto f1 = detect_smallest_mgon(s1);
  CHECK(f1 && std::holds_alternative<OneGon>(*f1));
  auto o1 = std::get<OneGon>(*f1);
  CHECK(o1.a == 3);
  auto s2 = smooth_one_gon(s1, o1);
  std::printf("trefoil stage 2: %s\n", serialize_state(s2).c_str());
  auto s3 = harvest_closed_components(s2);
  std::printf("trefoil stage 3: %s\n", serialize_state(s3).c_str());
  CHECK(s3.gauss.empty() && s3.circles.size() == 3);

  auto res = minimal_genus_states(tre);
  std::printf("trefoil best: %s leaves=%zu\n", serialize_state_code(res.best).c_str(),
              res.all_leaves.size());
  CHECK(res.best.circles.size() == 3);

  auto rep = compute_invariants(tre);
  CHECK(rep.unoriented_genus == 1 && rep.crosscap == 1);
  CHECK(rep.simple && !rep.bipartite);

  // Figure-8.
  auto fig8 = parse_gauss("[[1,2,3,1,4,3,2,4]]");
  auto rep8 = compute_invariants(fig8);
  CHECK(rep8.unoriented_genus == 2 && rep8.crosscap == 2);

  // Hopf.
  auto hopf = parse_gauss("[[1,2],[1,2]]");
  auto reph = compute_invariants(hopf);
  CHECK(reph.unoriented_genus == 1 && reph.crosscap == 2);

  // Whitehead.
  auto wh = parse_gauss("[[1,2,3,4,2,5],[3,5,1,4]]");
  auto repw = compute_invariants(wh);
  std::printf("whitehead: c=%d s=%d G=%d g=%d\n", repw.crossing_count, repw.circle_count,
              repw.unoriented_genus, repw.crosscap);
  CHECK(repw.circle_count == 4 && repw.unoriented_genus == 2 && repw.crosscap == 2);

  // 8_18 triangle branches.
  auto e18 = parse_gauss("[[1,2,3,4,5,6,2,7,4,8,6,1,7,3,8,5]]");
  auto t0 = make_state(e18);
  auto ft = detect_smallest_mgon(t0);
  CHECK(ft && std::holds_alternative<Triangle>(*ft));
  auto tri = std::get<Triangle>(*ft);
  std::printf("8_18 triangle labels: %d %d %d\n", tri.labels[0], tri.labels[1], tri.labels[2]);
  CHECK(tri.labels[0] == 1 && tri.labels[1] == 2 && tri.labels[2] == 7);
  auto tb = smooth_triangle(t0, tri);
  std::printf("8_18 triangle branch: %s\n", serialize_state(tb).c_str());
  CHECK(check_conservation(tb));
  auto ab = smooth_anti_triangle(t0, tri);
  std::printf("8_18 anti-triangle branch: %s\n", serialize_state(ab).c_str());
  CHECK(check_conservation(ab));
  CHECK(serialize_state(ab) == "[[[1,2,6,5,4,3,2,7,3,8,5,1,7,4,8,6]],[],[1,2,7]]");

  auto rep18 = compute_invariants(e18);
  std::printf("8_18: s=%d G=%d g=%d\n", rep18.circle_count, rep18.unoriented_genus, rep18.crosscap);

  // Oracle checks.
  SmoothingAssignment all_oriented{{1, 2, 3}, 0};
  CHECK(count_circles(tre, all_oriented) == 2);
  auto [mx, maxers] = brute_force_max_circles(tre);
  CHECK(mx == 3);
  auto [mh, mhs] = brute_force_max_circles(hopf);
  CHECK(mh == 2);
  auto [m8, m8s] = brute_force_max_circles(fig8);
  CHECK(m8 == 3);
  auto bf18 = brute_force_invariants(e18);
  CHECK(bf18.unoriented_genus == rep18.unoriented_genus && bf18.crosscap == rep18.crosscap);
  CHECK(static_cast<int>(rep18.circle_count) == bf18.circle_count);
  auto bfw = brute_force_invariants(wh);
  CHECK(bfw.unoriented_genus == 2 && bfw.crosscap == 2);

  // 5_2 bigons.
  auto f52 = detect_smallest_mgon(make_state(parse_gauss("[[1,2,3,1,4,5,2,3,5,4]]")));
  CHECK(f52 && std::holds_alternative<Bigon>(*f52));
  auto b52 = std::get<Bigon>(*f52);
  std::printf("5_2 first bigon: a=%d b=%d\n", b52.a, b52.b);
  CHECK(b52.a == 2 && b52.b == 3);

  // [[1,1]] engine.
  auto one = GaussCode{{{1, 1}}};
  auto rone = minimal_genus_states(one);
  std::printf("[[1,1]] best: %s\n", serialize_state_code(rone.best).c_str());
  CHECK(rone.best.circles.size() == 2);

  std::printf(fails ? "FAILURES: %d\n" : "ALL OK\n", fails);
  return fails != 0;
}
