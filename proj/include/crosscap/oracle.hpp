#pragma once

// Exhaustive-state oracle: enumerate all 2^c smoothing assignments of a Gauss
// code and trace the resulting state circles directly on the double-occurrence
// word. Entirely independent of the m-gon rewriting engine.

#include <cstdint>
#include <vector>

#include "crosscap/state_graph.hpp"

namespace crosscap {

struct OracleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One smoothing choice per crossing, as a bitmask over the sorted label list:
// bit set = unoriented smoothing.
struct SmoothingAssignment {
  std::vector<Label> labels;  // sorted ascending
  std::uint32_t mask = 0;

  bool is_unoriented(Label l) const {
    auto it = std::lower_bound(labels.begin(), labels.end(), l);
    return it != labels.end() && *it == l &&
           (mask >> (it - labels.begin())) & 1u;
  }
};

namespace detail {

struct DartModel {
  // Flattened positions across components; per position: label, partner
  // position, and successor position in either direction along its component.
  std::vector<Label> label;
  std::vector<int> partner;
  std::vector<int> next_fwd;
  std::vector<int> next_bwd;
  std::vector<Label> sorted_labels;
};

inline DartModel build_dart_model(const GaussCode& g) {
  DartModel m;
  std::vector<std::pair<int, int>> comp_range;  // [begin, end) per component
  for (const auto& comp : g.components) {
    int begin = static_cast<int>(m.label.size());
    for (Label l : comp) m.label.push_back(l);
    comp_range.emplace_back(begin, static_cast<int>(m.label.size()));
  }
  const int n = static_cast<int>(m.label.size());
  m.partner.assign(n, -1);
  m.next_fwd.resize(n);
  m.next_bwd.resize(n);
  for (auto [begin, end] : comp_range) {
    for (int p = begin; p < end; ++p) {
      m.next_fwd[p] = (p + 1 < end) ? p + 1 : begin;
      m.next_bwd[p] = (p > begin) ? p - 1 : end - 1;
    }
  }
  std::map<Label, int> first_at;
  for (int p = 0; p < n; ++p) {
    auto [it, inserted] = first_at.try_emplace(m.label[p], p);
    if (!inserted) {
      m.partner[p] = it->second;
      m.partner[it->second] = p;
    }
  }
  for (int p = 0; p < n; ++p)
    if (m.partner[p] < 0) throw ValidityError("label occurs once, expected twice");
  for (const auto& [l, p] : first_at) m.sorted_labels.push_back(l);
  return m;
}

}  // namespace detail

// Traces the Kauffman state: returns one tuple per state circle listing the
// crossings met along it, in traversal order.
inline std::vector<Circle> trace_state(const GaussCode& g, const SmoothingAssignment& a) {
  auto m = detail::build_dart_model(g);
  const int n = static_cast<int>(m.label.size());

  auto step = [&](int dart) {
    int pos = dart >> 1;
    bool bwd = dart & 1;
    if (a.is_unoriented(m.label[pos])) bwd = !bwd;
    int jump = bwd ? m.next_bwd[m.partner[pos]] : m.next_fwd[m.partner[pos]];
    return 2 * jump + (bwd ? 1 : 0);
  };
  // Reversing a circle maps dart (p,d) to (partner(p), d') where d' flips
  // exactly for oriented crossings.
  auto reverse_dart = [&](int dart) {
    int pos = dart >> 1;
    bool bwd = dart & 1;
    if (!a.is_unoriented(m.label[pos])) bwd = !bwd;
    return 2 * m.partner[pos] + (bwd ? 1 : 0);
  };

  std::vector<int> orbit_of(2 * n, -1);
  std::vector<int> orbit_start;
  for (int d = 0; d < 2 * n; ++d) {
    if (orbit_of[d] != -1) continue;
    int id = static_cast<int>(orbit_start.size());
    orbit_start.push_back(d);
    for (int x = d; orbit_of[x] == -1; x = step(x)) orbit_of[x] = id;
  }

  std::vector<Circle> circles;
  std::vector<char> consumed(orbit_start.size(), 0);
  for (std::size_t id = 0; id < orbit_start.size(); ++id) {
    if (consumed[id]) continue;
    int mirror = orbit_of[reverse_dart(orbit_start[id])];
    if (mirror == static_cast<int>(id) || consumed[mirror])
      throw OracleError("dart orbit pairing is inconsistent");
    consumed[id] = consumed[mirror] = 1;
    Circle circ;
    int d = orbit_start[id];
    do {
      circ.push_back(m.label[d >> 1]);
      d = step(d);
    } while (d != orbit_start[id]);
    circles.push_back(std::move(circ));
  }
  return circles;
}

inline int count_circles(const GaussCode& g, const SmoothingAssignment& a) {
  return static_cast<int>(trace_state(g, a).size());
}

struct BruteForceOptions {
  int max_crossings = 16;
};

inline std::pair<int, std::vector<SmoothingAssignment>> brute_force_max_circles(
    const GaussCode& g, const BruteForceOptions& opt = {}) {
  validate(g);
  const int c = crossing_count(g);
  if (c > opt.max_crossings)
    throw OracleError("crossing count " + std::to_string(c) +
                      " exceeds the brute-force bound " +
                      std::to_string(opt.max_crossings));
  auto m = detail::build_dart_model(g);
  int best = -1;
  std::vector<SmoothingAssignment> maximizers;
  for (std::uint32_t mask = 0; mask < (1u << c); ++mask) {
    SmoothingAssignment a{m.sorted_labels, mask};
    int circles = count_circles(g, a);
    if (circles > best) {
      best = circles;
      maximizers.clear();
    }
    if (circles == best) maximizers.push_back(a);
  }
  return {best, std::move(maximizers)};
}

// Independent invariants: Gamma from the exhaustive maximum; gamma decided on
// a maximal state, with the simple-and-bipartite verdict checked for
// constancy across every maximal state.
inline InvariantReport brute_force_invariants(const GaussCode& g,
                                              const BruteForceOptions& opt = {}) {
  auto [best, maximizers] = brute_force_max_circles(g, opt);
  std::vector<StateCode> states;
  states.reserve(maximizers.size());
  for (const auto& a : maximizers) states.push_back(StateCode{trace_state(g, a)});

  bool verdict = is_simple(states.front()) && is_bipartite(states.front());
  for (const auto& x : states)
    if ((is_simple(x) && is_bipartite(x)) != verdict)
      throw OracleError("simple/bipartite verdict differs across maximal states");

  return invariants_from_best(crossing_count(g), states.front());
}

}  // namespace crosscap
