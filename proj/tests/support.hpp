#pragma once

// Shared helpers for the test binaries: fixture loading, canonical state-code
// comparison, golden-table parsing, and randomized input symmetries.

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "crosscap/census.hpp"

namespace testsupport {

using namespace crosscap;

inline std::string data_path(const std::string& rel) {
  return std::string(CROSSCAP_DATA_DIR) + "/" + rel;
}

inline std::vector<CensusRecord> load_records(const std::string& rel) {
  std::ifstream in(data_path(rel));
  if (!in) throw std::runtime_error("cannot open " + data_path(rel));
  auto result = ingest_csv(in);
  if (!result.issues.empty())
    throw std::runtime_error(rel + ": " + std::to_string(result.issues.size()) +
                             " ingest issues");
  return result.records;
}

// Knot fixtures (c<=12) followed by link fixtures (c<=10).
inline std::vector<CensusRecord> load_all_fixtures() {
  auto recs = load_records("knots_c12.csv");
  auto links = load_records("links_c10.csv");
  recs.insert(recs.end(), links.begin(), links.end());
  return recs;
}

// Multiset equality of circles up to rotation/reversal of each tuple.
inline bool same_state_code(const StateCode& a, const StateCode& b) {
  auto key = [](const StateCode& x) {
    std::vector<Circle> circles;
    for (const auto& c : x.circles) circles.push_back(canonical_circle(c));
    std::sort(circles.begin(), circles.end());
    return circles;
  };
  return key(a) == key(b);
}

inline bool same_word(const std::vector<Label>& a, const std::vector<Label>& b) {
  return canonical_circle(a) == canonical_circle(b);
}

// Minimal CSV table reader for the golden files (RFC-4180 quoting via the
// library's own splitter). Rows keyed by column name.
struct GoldenTable {
  std::vector<std::map<std::string, std::string>> rows;
};

inline GoldenTable load_golden(const std::string& rel) {
  std::ifstream in(data_path(rel));
  if (!in) throw std::runtime_error("cannot open " + data_path(rel));
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error(rel + ": empty");
  auto header = detail::split_csv_line(line);
  GoldenTable table;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    auto fields = detail::split_csv_line(line);
    std::map<std::string, std::string> row;
    for (std::size_t i = 0; i < header.size() && i < fields.size(); ++i)
      row[header[i]] = fields[i];
    table.rows.push_back(std::move(row));
  }
  return table;
}

inline std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

// Input symmetries: rotation/reversal of components, component permutation,
// and label permutation all leave the computed invariants unchanged.
inline GaussCode random_symmetry(const GaussCode& g, std::mt19937& rng) {
  GaussCode out = g;
  for (auto& comp : out.components) {
    std::uniform_int_distribution<std::size_t> rot(0, comp.size() - 1);
    std::rotate(comp.begin(), comp.begin() + rot(rng), comp.end());
    if (rng() & 1) std::reverse(comp.begin(), comp.end());
  }
  std::shuffle(out.components.begin(), out.components.end(), rng);
  const int c = crossing_count(out);
  std::vector<Label> perm(c);
  std::iota(perm.begin(), perm.end(), 1);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (auto& comp : out.components)
    for (Label& x : comp) x = perm[x - 1];
  return out;
}

}  // namespace testsupport
