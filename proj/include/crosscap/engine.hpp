#pragma once

// Minimal genus search: repeatedly harvest closed components, detect the
// smallest m-gon, smooth it, and fork on triangles. Leaves are state codes;
// the best one maximizes the circle count.

#include <optional>
#include <string>
#include <vector>

#include "crosscap/smoothing.hpp"

namespace crosscap {

struct StateCode {
  std::vector<Circle> circles;

  bool operator==(const StateCode&) const = default;
};

struct BranchResult {
  std::vector<StateCode> all_leaves;  // in depth-first discovery order
  StateCode best;                     // max circle count, first-found wins ties
  long branch_count = 0;              // nodes expanded
};

struct EngineError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EngineOptions {
  long branch_budget = 1'000'000;  // nodes expanded before giving up
  bool best_only = false;          // drop non-best leaves (best is unchanged)
};

inline std::string serialize_state_code(const StateCode& x) {
  std::string out = "[";
  for (std::size_t i = 0; i < x.circles.size(); ++i) {
    if (i) out += ',';
    out += '(';
    for (std::size_t j = 0; j < x.circles[i].size(); ++j) {
      if (j) out += ',';
      out += std::to_string(x.circles[i][j]);
    }
    out += ')';
  }
  out += ']';
  return out;
}

inline bool check_state_conservation(const StateCode& x) {
  std::unordered_map<Label, int> counts;
  for (const auto& circ : x.circles)
    for (Label l : circ) ++counts[l];
  for (const auto& [label, n] : counts)
    if (n != 2) return false;
  return true;
}

inline BranchResult minimal_genus_states(const GaussCode& g,
                                         const EngineOptions& opt = {}) {
  validate(g);
  BranchResult result;
  std::vector<GaussStateCode> stack{make_state(g)};

  while (!stack.empty()) {
    GaussStateCode node = std::move(stack.back());
    stack.pop_back();
    if (++result.branch_count > opt.branch_budget)
      throw EngineError("branch budget exceeded");

    node = harvest_closed_components(node);
    if (node.gauss.empty()) {
      StateCode leaf{node.circles};
      bool is_best = result.all_leaves.empty() ||
                     leaf.circles.size() > result.best.circles.size();
      if (is_best) result.best = leaf;
      if (!opt.best_only)
        result.all_leaves.push_back(std::move(leaf));
      else if (is_best)
        result.all_leaves.assign(1, result.best);
      continue;
    }

    auto finding = detect_smallest_mgon(node);
    if (!finding)
      throw EngineError("no m-gon found with unsmoothed crossings remaining; "
                        "input is not a realizable reduced diagram code");

    if (const auto* tri = std::get_if<Triangle>(&*finding)) {
      // Triangle branch must be explored first: push anti-triangle below it.
      stack.push_back(smooth_anti_triangle(node, *tri));
      stack.push_back(smooth_triangle(node, *tri));
    } else {
      stack.push_back(apply_smoothing(node, *finding));
    }
  }
  return result;
}

inline StateCode optimal_state(const GaussCode& g, const EngineOptions& opt = {}) {
  return minimal_genus_states(g, opt).best;
}

}  // namespace crosscap
