#pragma once

// Gauss-state codes: the working state of the minimal genus search. A triple
// of (near-Gauss code whose entries may be flagged smoothed, state circles
// formed so far, set of smoothed crossings).

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "crosscap/gauss_code.hpp"

namespace crosscap {

struct Arc {
  Label label = 0;
  bool smoothed = false;

  bool operator==(const Arc&) const = default;
};

using Circle = std::vector<Label>;

struct GaussStateCode {
  std::vector<std::vector<Arc>> gauss;
  std::vector<Circle> circles;
  std::set<Label> smoothed;

  bool operator==(const GaussStateCode&) const = default;
};

inline GaussStateCode make_state(const GaussCode& g) {
  GaussStateCode s;
  s.gauss.reserve(g.components.size());
  for (const auto& comp : g.components) {
    auto& dst = s.gauss.emplace_back();
    dst.reserve(comp.size());
    for (Label x : comp) dst.push_back(Arc{x, false});
  }
  return s;
}

// Debug form: [[gauss],[circles],[smoothed]].
inline std::string serialize_state(const GaussStateCode& s) {
  std::string out = "[[";
  for (std::size_t i = 0; i < s.gauss.size(); ++i) {
    if (i) out += ',';
    out += '[';
    for (std::size_t j = 0; j < s.gauss[i].size(); ++j) {
      if (j) out += ',';
      out += std::to_string(s.gauss[i][j].label);
    }
    out += ']';
  }
  out += "],[";
  for (std::size_t i = 0; i < s.circles.size(); ++i) {
    if (i) out += ',';
    out += '(';
    for (std::size_t j = 0; j < s.circles[i].size(); ++j) {
      if (j) out += ',';
      out += std::to_string(s.circles[i][j]);
    }
    out += ')';
  }
  out += "],[";
  bool first = true;
  for (Label x : s.smoothed) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(x);
  }
  out += "]]";
  return out;
}

// Each label must appear exactly twice across gauss entries and circle
// entries together; smoothed flags must agree with the smoothed set.
inline bool check_conservation(const GaussStateCode& s) {
  std::unordered_map<Label, int> counts;
  for (const auto& comp : s.gauss)
    for (const Arc& a : comp) {
      ++counts[a.label];
      if (a.smoothed != (s.smoothed.count(a.label) > 0)) return false;
    }
  for (const auto& circ : s.circles)
    for (Label x : circ) ++counts[x];
  for (const auto& [label, n] : counts)
    if (n != 2) return false;
  return true;
}

// Circle tuples compare up to cyclic rotation and reversal.
inline Circle canonical_circle(const Circle& c) {
  if (c.empty()) return c;
  Circle best;
  auto consider = [&](const Circle& seq) {
    const std::size_t n = seq.size();
    for (std::size_t r = 0; r < n; ++r) {
      Circle rot(n);
      for (std::size_t i = 0; i < n; ++i) rot[i] = seq[(r + i) % n];
      if (best.empty() || rot < best) best = rot;
    }
  };
  consider(c);
  Circle rev(c.rbegin(), c.rend());
  consider(rev);
  return best;
}

inline bool same_circle(const Circle& a, const Circle& b) {
  return canonical_circle(a) == canonical_circle(b);
}

// Component words compare as cyclic words up to rotation and reversal.
inline std::vector<Label> canonical_component(const std::vector<Arc>& comp) {
  Circle word;
  word.reserve(comp.size());
  for (const Arc& a : comp) word.push_back(a.label);
  return canonical_circle(word);
}

// Moves every fully smoothed component of the gauss list to the circle list.
inline GaussStateCode harvest_closed_components(const GaussStateCode& s) {
  GaussStateCode out;
  out.circles = s.circles;
  out.smoothed = s.smoothed;
  for (const auto& comp : s.gauss) {
    bool closed = std::all_of(comp.begin(), comp.end(), [](const Arc& a) { return a.smoothed; });
    if (closed) {
      Circle circ;
      circ.reserve(comp.size());
      for (const Arc& a : comp) circ.push_back(a.label);
      out.circles.push_back(std::move(circ));
    } else {
      out.gauss.push_back(comp);
    }
  }
  return out;
}

}  // namespace crosscap
