#pragma once

// m-gon detection and smoothing on Gauss-state codes. An m-gon (m <= 3) shows
// up as m crossings that appear effectively consecutively — only smoothed
// entries between their appearances — in the cyclic reading of the code.

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "crosscap/gauss_state.hpp"

namespace crosscap {

struct StaleFinding : std::logic_error {
  using std::logic_error::logic_error;
};

struct WalkError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One effectively-consecutive adjacency: unsmoothed entries at positions
// `i` and `j` of component `comp`, with only smoothed entries strictly
// between them (going forward from i to j, cyclically).
struct Site {
  int comp = 0;
  int i = 0;
  int j = 0;

  bool operator==(const Site&) const = default;
};

enum class BigonCase {
  OrientedKnot,    // [[a,s0,b,w0,b,s1,a,w1],...]
  UnorientedKnot,  // [[a,s0,b,w0,a,s1,b,w1],...]
  OrientedLink,    // [[a,s0,b,w0],[b,s1,a,w1],...]
  UnorientedLink,  // [[a,s0,b,w0],[a,s1,b,w1],...]
};

struct OneGon {
  Site site;  // equal labels at both ends
  Label a = 0;
};

struct Bigon {
  Site first;   // traversal order (a ... b)
  Site second;  // the other adjacency of {a, b}
  Label a = 0;
  Label b = 0;
  BigonCase kind = BigonCase::OrientedKnot;
};

struct Triangle {
  std::array<Site, 3> sites;   // in detection scan order
  std::array<Label, 3> labels; // the three crossings, in first-seen order
};

using MgonFinding = std::variant<OneGon, Bigon, Triangle>;

namespace detail {

inline Label label_at(const GaussStateCode& g, int comp, int pos) {
  return g.gauss[comp][pos].label;
}

// Entries strictly between positions a and b, walking forward cyclically.
inline std::vector<Arc> segment_between(const std::vector<Arc>& comp, int a, int b) {
  std::vector<Arc> out;
  const int n = static_cast<int>(comp.size());
  for (int p = (a + 1) % n; p != b; p = (p + 1) % n) out.push_back(comp[p]);
  return out;
}

inline std::vector<Label> labels_of(const std::vector<Arc>& arcs) {
  std::vector<Label> out;
  out.reserve(arcs.size());
  for (const Arc& a : arcs) out.push_back(a.label);
  return out;
}

inline std::vector<Arc> reversed(std::vector<Arc> arcs) {
  std::reverse(arcs.begin(), arcs.end());
  return arcs;
}

// All adjacency sites in deterministic scan order: components in order,
// then gaps between consecutive unsmoothed positions (wrap last).
inline std::vector<Site> collect_sites(const GaussStateCode& g) {
  std::vector<Site> sites;
  for (int k = 0; k < static_cast<int>(g.gauss.size()); ++k) {
    std::vector<int> unsmoothed;
    for (int p = 0; p < static_cast<int>(g.gauss[k].size()); ++p)
      if (!g.gauss[k][p].smoothed) unsmoothed.push_back(p);
    if (unsmoothed.size() < 2) continue;
    for (std::size_t t = 0; t < unsmoothed.size(); ++t) {
      int i = unsmoothed[t];
      int j = unsmoothed[(t + 1) % unsmoothed.size()];
      sites.push_back(Site{k, i, j});
    }
  }
  return sites;
}

inline bool disjoint_endpoints(const Site& s, const Site& t) {
  if (s.comp != t.comp) return true;
  return s.i != t.i && s.i != t.j && s.j != t.i && s.j != t.j;
}

inline void require(bool ok, const char* what) {
  if (!ok) throw StaleFinding(what);
}

inline void check_site(const GaussStateCode& g, const Site& s, Label first, Label second) {
  require(s.comp >= 0 && s.comp < static_cast<int>(g.gauss.size()), "bad component index");
  const auto& comp = g.gauss[s.comp];
  const int n = static_cast<int>(comp.size());
  require(s.i >= 0 && s.i < n && s.j >= 0 && s.j < n, "site out of range");
  require(comp[s.i].label == first && !comp[s.i].smoothed, "site label mismatch");
  require(comp[s.j].label == second && !comp[s.j].smoothed, "site label mismatch");
  for (int p = (s.i + 1) % n; p != s.j; p = (p + 1) % n)
    require(comp[p].smoothed, "site segment not smoothed");
}

}  // namespace detail

// Returns the first 1-gon in scan order, else the first bigon, else the
// first triangle, else nothing. Determinism: components in order, positions
// in order, cyclic wrap counts as consecutive.
inline std::optional<MgonFinding> detect_smallest_mgon(const GaussStateCode& g) {
  const auto sites = detail::collect_sites(g);
  auto lab = [&](const Site& s) {
    return std::pair{detail::label_at(g, s.comp, s.i), detail::label_at(g, s.comp, s.j)};
  };

  for (const Site& s : sites) {
    auto [x, y] = lab(s);
    if (x == y) return MgonFinding{OneGon{s, x}};
  }

  for (std::size_t p = 0; p < sites.size(); ++p) {
    auto [a, b] = lab(sites[p]);
    for (std::size_t q = p + 1; q < sites.size(); ++q) {
      auto [x, y] = lab(sites[q]);
      if (!((x == a && y == b) || (x == b && y == a))) continue;
      if (!detail::disjoint_endpoints(sites[p], sites[q])) continue;
      bool same_comp = sites[p].comp == sites[q].comp;
      bool oriented = (x == b);  // second strand runs b -> a
      BigonCase kind = same_comp
                           ? (oriented ? BigonCase::OrientedKnot : BigonCase::UnorientedKnot)
                           : (oriented ? BigonCase::OrientedLink : BigonCase::UnorientedLink);
      return MgonFinding{Bigon{sites[p], sites[q], a, b, kind}};
    }
  }

  // Triangle scan: look for a chained pair of sites (a,b),(b,c) and then a
  // closing site carrying {a,c} in either orientation. Any triangle admits a
  // chained pair, so this finds every triangle; the chain requirement pins
  // down which of the word's triangles is reported first.
  for (std::size_t p = 0; p < sites.size(); ++p) {
    auto [a, b] = lab(sites[p]);
    if (a == b) continue;
    for (std::size_t q = 0; q < sites.size(); ++q) {
      if (q == p) continue;
      auto [x, c] = lab(sites[q]);
      if (x != b || c == a || c == b) continue;
      if (!detail::disjoint_endpoints(sites[p], sites[q])) continue;
      for (std::size_t r = 0; r < sites.size(); ++r) {
        if (r == p || r == q) continue;
        auto [y, z] = lab(sites[r]);
        if (!((y == a && z == c) || (y == c && z == a))) continue;
        if (!detail::disjoint_endpoints(sites[p], sites[r]) ||
            !detail::disjoint_endpoints(sites[q], sites[r]))
          continue;
        Triangle tri;
        tri.sites = {sites[p], sites[q], sites[r]};
        tri.labels = {a, b, c};
        return MgonFinding{tri};
      }
    }
  }
  return std::nullopt;
}

// [a,s0,a,w0] -> gauss [a,w0] with a smoothed; new circle (a,s0).
inline GaussStateCode smooth_one_gon(const GaussStateCode& g, const OneGon& f) {
  detail::check_site(g, f.site, f.a, f.a);
  GaussStateCode out = g;
  const auto& comp = g.gauss[f.site.comp];
  auto s0 = detail::segment_between(comp, f.site.i, f.site.j);
  auto w0 = detail::segment_between(comp, f.site.j, f.site.i);

  Circle circ{f.a};
  for (Label l : detail::labels_of(s0)) circ.push_back(l);
  out.circles.push_back(std::move(circ));

  std::vector<Arc> rebuilt{Arc{f.a, true}};
  rebuilt.insert(rebuilt.end(), w0.begin(), w0.end());
  out.gauss[f.site.comp] = std::move(rebuilt);
  out.smoothed.insert(f.a);
  return out;
}

// Applies the rewrite for the matched case; appends circle (a,s0,b,s1) in the
// oriented cases and (a,s0,b,reverse(s1)) in the unoriented ones.
inline GaussStateCode smooth_bigon(const GaussStateCode& g, const Bigon& f) {
  const bool oriented =
      f.kind == BigonCase::OrientedKnot || f.kind == BigonCase::OrientedLink;
  detail::check_site(g, f.first, f.a, f.b);
  detail::check_site(g, f.second, oriented ? f.b : f.a, oriented ? f.a : f.b);
  detail::require(detail::disjoint_endpoints(f.first, f.second), "sites overlap");

  GaussStateCode out = g;
  const Arc sa{f.a, true}, sb{f.b, true};
  const auto& comp1 = g.gauss[f.first.comp];
  auto s0 = detail::segment_between(comp1, f.first.i, f.first.j);
  std::vector<Arc> s1, w0, w1;

  if (f.kind == BigonCase::OrientedKnot || f.kind == BigonCase::UnorientedKnot) {
    detail::require(f.first.comp == f.second.comp, "case/format mismatch");
    s1 = detail::segment_between(comp1, f.second.i, f.second.j);
    w0 = detail::segment_between(comp1, f.first.j, f.second.i);
    w1 = detail::segment_between(comp1, f.second.j, f.first.i);
  } else {
    detail::require(f.first.comp != f.second.comp, "case/format mismatch");
    const auto& comp2 = g.gauss[f.second.comp];
    s1 = detail::segment_between(comp2, f.second.i, f.second.j);
    w0 = detail::segment_between(comp1, f.first.j, f.first.i);
    w1 = detail::segment_between(comp2, f.second.j, f.second.i);
  }

  Circle circ{f.a};
  for (Label l : detail::labels_of(s0)) circ.push_back(l);
  circ.push_back(f.b);
  auto s1_labels = detail::labels_of(s1);
  if (!oriented) std::reverse(s1_labels.begin(), s1_labels.end());
  for (Label l : s1_labels) circ.push_back(l);
  out.circles.push_back(std::move(circ));
  out.smoothed.insert(f.a);
  out.smoothed.insert(f.b);

  auto join = [](std::initializer_list<std::vector<Arc>> parts) {
    std::vector<Arc> out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
  };

  switch (f.kind) {
    case BigonCase::OrientedKnot: {
      // [[a,s0,b,w0,b,s1,a,w1],...] -> [[a,w1],[b,w0],...]
      out.gauss[f.first.comp] = join({{sa}, w1});
      out.gauss.insert(out.gauss.begin() + f.first.comp + 1, join({{sb}, w0}));
      break;
    }
    case BigonCase::UnorientedKnot: {
      // [[a,s0,b,w0,a,s1,b,w1],...] -> [[a,rev(w0),b,w1],...]
      out.gauss[f.first.comp] = join({{sa}, detail::reversed(w0), {sb}, w1});
      break;
    }
    case BigonCase::OrientedLink: {
      // [[a,s0,b,w0],[b,s1,a,w1],...] -> [[a,w1,b,w0],...]
      out.gauss[f.first.comp] = join({{sa}, w1, {sb}, w0});
      out.gauss.erase(out.gauss.begin() + f.second.comp);
      break;
    }
    case BigonCase::UnorientedLink: {
      // [[a,s0,b,w0],[a,s1,b,w1],...] -> [[a,rev(w1),b,w0],...]
      out.gauss[f.first.comp] = join({{sa}, detail::reversed(w1), {sb}, w0});
      out.gauss.erase(out.gauss.begin() + f.second.comp);
      break;
    }
  }
  return out;
}

namespace detail {

// One of the six appearances of the triangle's crossings: an endpoint of a
// site, bordered by one pairing gap on its outer side.
struct TriApp {
  int site = 0;
  bool at_j = false;  // false: the site's i end, true: the j end
  Label label = 0;
  int gap = 0;        // pairing gap on the outer side
  bool gap_left = false;  // true if this appearance is the gap's left endpoint
};

struct TriGap {
  int left_app = 0;   // index into apps
  int right_app = 0;
  std::vector<Arc> word;
};

struct TriangleLayout {
  std::array<std::vector<Arc>, 3> s_segments;  // per site
  std::vector<TriApp> apps;                    // 6 appearances
  std::vector<TriGap> gaps;                    // 3 pairings, deterministic order
  std::vector<int> involved_comps;             // ascending
};

inline TriangleLayout lay_out_triangle(const GaussStateCode& g, const Triangle& f) {
  TriangleLayout lay;
  for (int t = 0; t < 3; ++t) {
    const Site& s = f.sites[t];
    require(s.comp >= 0 && s.comp < static_cast<int>(g.gauss.size()), "bad component index");
    const int n = static_cast<int>(g.gauss[s.comp].size());
    require(s.i >= 0 && s.i < n && s.j >= 0 && s.j < n, "site out of range");
    Label li = label_at(g, s.comp, s.i), lj = label_at(g, s.comp, s.j);
    check_site(g, s, li, lj);
    lay.s_segments[t] = segment_between(g.gauss[s.comp], s.i, s.j);
  }
  lay.apps.resize(6);
  for (int t = 0; t < 3; ++t) {
    lay.apps[2 * t] = TriApp{t, false, label_at(g, f.sites[t].comp, f.sites[t].i), -1, false};
    lay.apps[2 * t + 1] = TriApp{t, true, label_at(g, f.sites[t].comp, f.sites[t].j), -1, false};
  }

  // Group sites by component, ordered by start position; the gaps between
  // consecutive sites (cyclically) are the pairings.
  std::vector<int> comps;
  for (const Site& s : f.sites) comps.push_back(s.comp);
  std::sort(comps.begin(), comps.end());
  comps.erase(std::unique(comps.begin(), comps.end()), comps.end());
  lay.involved_comps = comps;

  for (int comp : comps) {
    std::vector<int> local;  // site indices in this component, by position
    for (int t = 0; t < 3; ++t)
      if (f.sites[t].comp == comp) local.push_back(t);
    std::sort(local.begin(), local.end(),
              [&](int x, int y) { return f.sites[x].i < f.sites[y].i; });
    for (std::size_t u = 0; u < local.size(); ++u) {
      int from = local[u];
      int to = local[(u + 1) % local.size()];
      TriGap gap;
      gap.left_app = 2 * from + 1;  // the j end of `from`
      gap.right_app = 2 * to;       // the i end of `to`
      gap.word = segment_between(g.gauss[comp], f.sites[from].j, f.sites[to].i);
      int gi = static_cast<int>(lay.gaps.size());
      lay.apps[gap.left_app].gap = gi;
      lay.apps[gap.left_app].gap_left = true;
      lay.apps[gap.right_app].gap = gi;
      lay.apps[gap.right_app].gap_left = false;
      lay.gaps.push_back(std::move(gap));
    }
  }
  return lay;
}

// The other appearance carrying the same crossing label.
inline int partner_of(const TriangleLayout& lay, int app) {
  for (int k = 0; k < 6; ++k)
    if (k != app && lay.apps[k].label == lay.apps[app].label) return k;
  throw WalkError("triangle appearance has no partner");
}

// Glue the three (crossing, s, crossing) segments into one circle.
inline Circle triangle_circle(const TriangleLayout& lay) {
  Circle circ;
  std::array<bool, 3> used{false, false, false};
  circ.push_back(lay.apps[0].label);
  for (Label l : labels_of(lay.s_segments[0])) circ.push_back(l);
  Label cur = lay.apps[1].label;
  used[0] = true;
  for (int step = 0; step < 2; ++step) {
    circ.push_back(cur);
    int t = -1;
    bool forward = false;
    for (int k = 0; k < 3; ++k) {
      if (used[k]) continue;
      if (lay.apps[2 * k].label == cur) {
        t = k;
        forward = true;
        break;
      }
      if (lay.apps[2 * k + 1].label == cur) {
        t = k;
        forward = false;
        break;
      }
    }
    if (t < 0) throw WalkError("triangle circle gluing failed");
    auto seg = labels_of(lay.s_segments[t]);
    if (!forward) std::reverse(seg.begin(), seg.end());
    for (Label l : seg) circ.push_back(l);
    cur = forward ? lay.apps[2 * t + 1].label : lay.apps[2 * t].label;
    used[t] = true;
  }
  if (cur != lay.apps[0].label) throw WalkError("triangle circle does not close");
  return circ;
}

inline void replace_components(GaussStateCode& out, const GaussStateCode& g,
                               const std::vector<int>& involved,
                               std::vector<std::vector<Arc>> fresh) {
  out.gauss.clear();
  for (int k = 0; k < static_cast<int>(g.gauss.size()); ++k) {
    if (k == involved.front()) {
      for (auto& f : fresh) out.gauss.push_back(std::move(f));
    }
    if (std::find(involved.begin(), involved.end(), k) == involved.end())
      out.gauss.push_back(g.gauss[k]);
  }
}

}  // namespace detail

// Triangle smoothing: the triangle becomes a state circle; the affected
// components are rebuilt by the triangle-pairing walk.
inline GaussStateCode smooth_triangle(const GaussStateCode& g, const Triangle& f) {
  auto lay = detail::lay_out_triangle(g, f);

  std::vector<std::vector<Arc>> fresh;
  std::vector<bool> processed(lay.gaps.size(), false);
  std::set<Label> written;

  auto first_unprocessed = [&]() {
    for (std::size_t k = 0; k < processed.size(); ++k)
      if (!processed[k]) return static_cast<int>(k);
    return -1;
  };

  int guard = 0;
  for (int start = first_unprocessed(); start >= 0; start = first_unprocessed()) {
    if (++guard > 8) throw WalkError("triangle pairing walk did not terminate");
    std::vector<Arc> comp;
    const auto& p0 = lay.gaps[start];
    int last_app;
    if (!written.count(lay.apps[p0.right_app].label)) {
      comp.insert(comp.end(), p0.word.begin(), p0.word.end());
      comp.push_back(Arc{lay.apps[p0.right_app].label, true});
      last_app = p0.right_app;
    } else if (!written.count(lay.apps[p0.left_app].label)) {
      auto rev = detail::reversed(p0.word);
      comp.insert(comp.end(), rev.begin(), rev.end());
      comp.push_back(Arc{lay.apps[p0.left_app].label, true});
      last_app = p0.left_app;
    } else {
      throw WalkError("triangle pairing walk: both endpoints already written");
    }
    processed[start] = true;
    written.insert(lay.apps[last_app].label);

    while (true) {
      int partner = detail::partner_of(lay, last_app);
      int gi = lay.apps[partner].gap;
      if (processed[gi]) break;  // close the component
      const auto& p = lay.gaps[gi];
      if (lay.apps[partner].gap_left) {
        comp.insert(comp.end(), p.word.begin(), p.word.end());
        comp.push_back(Arc{lay.apps[p.right_app].label, true});
        last_app = p.right_app;
      } else {
        auto rev = detail::reversed(p.word);
        comp.insert(comp.end(), rev.begin(), rev.end());
        comp.push_back(Arc{lay.apps[p.left_app].label, true});
        last_app = p.left_app;
      }
      processed[gi] = true;
      written.insert(lay.apps[last_app].label);
    }
    fresh.push_back(std::move(comp));
  }
  if (written.size() != 3) throw WalkError("triangle pairing walk missed a crossing");

  GaussStateCode out;
  out.circles = g.circles;
  out.circles.push_back(detail::triangle_circle(lay));
  out.smoothed = g.smoothed;
  for (Label l : f.labels) out.smoothed.insert(l);
  detail::replace_components(out, g, lay.involved_comps, std::move(fresh));
  return out;
}

// Anti-triangle smoothing: all three crossings smoothed the opposite way. No
// new circle; each triangle crossing ends up written twice in the gauss code.
inline GaussStateCode smooth_anti_triangle(const GaussStateCode& g, const Triangle& f) {
  auto lay = detail::lay_out_triangle(g, f);

  std::vector<std::vector<Arc>> fresh;
  std::array<bool, 3> s_written{false, false, false};
  std::vector<bool> w_written(lay.gaps.size(), false);

  auto next_start = [&]() {
    for (int t = 0; t < 3; ++t)
      if (!s_written[t]) return 2 * t;  // the site's i end
    return -1;
  };

  int guard = 0;
  for (int app = next_start(); app >= 0; app = next_start()) {
    if (++guard > 8) throw WalkError("anti-triangle walk did not terminate");
    std::vector<Arc> comp;
    while (true) {
      // Write (crossing, s-segment), leaving by the site's far end.
      int t = lay.apps[app].site;
      if (s_written[t]) throw WalkError("anti-triangle walk revisits an s-segment");
      comp.push_back(Arc{lay.apps[app].label, true});
      auto seg = lay.s_segments[t];
      int exit_app;
      if (!lay.apps[app].at_j) {
        exit_app = 2 * t + 1;
      } else {
        seg = detail::reversed(seg);
        exit_app = 2 * t;
      }
      comp.insert(comp.end(), seg.begin(), seg.end());
      s_written[t] = true;

      // Jump, then write (crossing, word), leaving by the gap's far end.
      int p2 = detail::partner_of(lay, exit_app);
      int gi = lay.apps[p2].gap;
      if (w_written[gi]) throw WalkError("anti-triangle walk revisits a word");
      comp.push_back(Arc{lay.apps[p2].label, true});
      auto word = lay.gaps[gi].word;
      int far_app;
      if (lay.apps[p2].gap_left) {
        far_app = lay.gaps[gi].right_app;
      } else {
        word = detail::reversed(word);
        far_app = lay.gaps[gi].left_app;
      }
      comp.insert(comp.end(), word.begin(), word.end());
      w_written[gi] = true;

      int p3 = detail::partner_of(lay, far_app);
      if (s_written[lay.apps[p3].site]) break;  // close the component
      app = p3;
    }
    fresh.push_back(std::move(comp));
  }

  GaussStateCode out;
  out.circles = g.circles;
  out.smoothed = g.smoothed;
  for (Label l : f.labels) out.smoothed.insert(l);
  detail::replace_components(out, g, lay.involved_comps, std::move(fresh));
  return out;
}

// Dispatch helper: applies whichever rewrite the finding calls for. For a
// triangle this applies the triangle smoothing; the anti-triangle branch is
// taken separately by the engine.
inline GaussStateCode apply_smoothing(const GaussStateCode& g, const MgonFinding& f) {
  if (const auto* one = std::get_if<OneGon>(&f)) return smooth_one_gon(g, *one);
  if (const auto* two = std::get_if<Bigon>(&f)) return smooth_bigon(g, *two);
  return smooth_triangle(g, std::get<Triangle>(f));
}

}  // namespace crosscap
