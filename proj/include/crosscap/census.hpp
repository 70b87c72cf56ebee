#pragma once

// Census batch pipeline: CSV ingest, parallel invariant computation with
// order-preserving output, summary tables, defect tables, and the
// exponential-decay regression on defect proportions.

#include <atomic>
#include <cmath>
#include <iomanip>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "crosscap/state_graph.hpp"

namespace crosscap {

struct CsvError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CensusRecord {
  std::string name;
  GaussCode gauss;
};

struct IngestIssue {
  std::size_t row = 0;  // 1-based data row number (header excluded)
  std::string message;
};

struct IngestResult {
  std::vector<CensusRecord> records;
  std::vector<IngestIssue> issues;
};

struct ResultRow {
  std::string name;
  std::string gauss_text;
  std::string state_code_text;
  int unoriented_genus = 0;
  int crosscap = 0;
  int crossing_count = 0;
  bool ok = true;
  std::string error;
};

namespace detail {

// RFC-4180-style line splitting: quoted fields may contain commas; doubled
// quotes inside quoted fields unescape to one quote.
inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char ch = line[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  fields.push_back(std::move(cur));
  return fields;
}

inline std::string csv_quote(const std::string& field) {
  bool needs = field.find_first_of(",\"\n") != std::string::npos;
  if (!needs) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

inline std::string format_fixed(double v, int places) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(places) << v;
  return os.str();
}

}  // namespace detail

// Header must contain a name column ("Name", "Knot", or "Link") and a
// "Gauss Code" column; extra columns are ignored. Bad rows are collected as
// issues, not fatal.
inline IngestResult ingest_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw CsvError("empty input: missing header row");
  auto header = detail::split_csv_line(line);
  int name_col = -1, gauss_col = -1;
  for (int i = 0; i < static_cast<int>(header.size()); ++i) {
    if (header[i] == "Name" || header[i] == "Knot" || header[i] == "Link") {
      if (name_col < 0) name_col = i;
    } else if (header[i] == "Gauss Code") {
      gauss_col = i;
    }
  }
  if (name_col < 0) throw CsvError("missing name column (Name/Knot/Link)");
  if (gauss_col < 0) throw CsvError("missing \"Gauss Code\" column");

  IngestResult result;
  std::set<std::string> seen_names;
  for (std::size_t row = 1; std::getline(in, line); ++row) {
    if (line.empty() || line == "\r") continue;
    auto fields = detail::split_csv_line(line);
    int needed = std::max(name_col, gauss_col);
    if (static_cast<int>(fields.size()) <= needed) {
      result.issues.push_back({row, "too few fields"});
      continue;
    }
    const std::string& name = fields[name_col];
    if (name.empty()) {
      result.issues.push_back({row, "empty name"});
      continue;
    }
    if (!seen_names.insert(name).second) {
      result.issues.push_back({row, "duplicate name " + name});
      continue;
    }
    try {
      result.records.push_back({name, parse_gauss(fields[gauss_col])});
    } catch (const std::exception& e) {
      result.issues.push_back({row, name + ": " + e.what()});
    }
  }
  return result;
}

struct BatchOptions {
  int jobs = 0;  // 0 = hardware concurrency
  EngineOptions engine;
};

inline ResultRow process_record(const CensusRecord& rec,
                                const EngineOptions& engine = {}) {
  ResultRow row;
  row.name = rec.name;
  row.gauss_text = serialize_gauss(rec.gauss);
  try {
    auto rep = compute_invariants(rec.gauss, engine);
    row.state_code_text = serialize_state_code(rep.witness);
    row.unoriented_genus = rep.unoriented_genus;
    row.crosscap = rep.crosscap;
    row.crossing_count = rep.crossing_count;
  } catch (const std::exception& e) {
    row.ok = false;
    row.error = e.what();
  }
  return row;
}

// Record-level fan-out; output order always equals input order.
inline std::vector<ResultRow> process_batch(const std::vector<CensusRecord>& records,
                                            const BatchOptions& opt = {}) {
  std::vector<ResultRow> rows(records.size());
  int jobs = opt.jobs > 0 ? opt.jobs
                          : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<int>(jobs, std::max<std::size_t>(records.size(), 1));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < records.size(); i = next.fetch_add(1))
      rows[i] = process_record(records[i], opt.engine);
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return rows;
}

inline void emit_csv(const std::vector<ResultRow>& rows, std::ostream& out) {
  out << "Name,Gauss Code,State Code,Unoriented Genus,Crosscap Number\n";
  for (const auto& row : rows) {
    if (!row.ok) {
      out << detail::csv_quote(row.name) << ',' << detail::csv_quote(row.gauss_text)
          << ',' << detail::csv_quote("ERROR: " + row.error) << ",,\n";
      continue;
    }
    out << detail::csv_quote(row.name) << ",\"" << row.gauss_text << "\",\""
        << row.state_code_text << "\"," << row.unoriented_genus << ','
        << row.crosscap << '\n';
  }
}

// Per-crossing-number distribution plus mean/median/mode/max, separately for
// each of the two invariants.
struct SummaryRow {
  int crossings = 0;
  std::map<int, int> counts;  // invariant value -> count
  double mean = 0.0;
  double median = 0.0;
  std::vector<int> modes;
  int max = 0;
  int population = 0;
};

struct SummaryTable {
  std::vector<SummaryRow> genus_rows;
  std::vector<SummaryRow> crosscap_rows;
};

namespace detail {

inline SummaryRow summarize_values(int c, std::vector<int> values) {
  SummaryRow row;
  row.crossings = c;
  row.population = static_cast<int>(values.size());
  std::sort(values.begin(), values.end());
  long sum = 0;
  for (int v : values) {
    ++row.counts[v];
    sum += v;
  }
  row.mean = static_cast<double>(sum) / values.size();
  const std::size_t n = values.size();
  row.median = (n % 2) ? values[n / 2]
                       : (values[n / 2 - 1] + values[n / 2]) / 2.0;
  int best = 0;
  for (const auto& [v, k] : row.counts) best = std::max(best, k);
  for (const auto& [v, k] : row.counts)
    if (k == best) row.modes.push_back(v);
  row.max = values.back();
  return row;
}

}  // namespace detail

inline SummaryTable summarize(const std::vector<ResultRow>& rows) {
  std::map<int, std::vector<int>> genus_by_c, crosscap_by_c;
  for (const auto& row : rows) {
    if (!row.ok) continue;
    genus_by_c[row.crossing_count].push_back(row.unoriented_genus);
    crosscap_by_c[row.crossing_count].push_back(row.crosscap);
  }
  if (genus_by_c.empty()) throw CsvError("no successful rows to summarize");
  SummaryTable table;
  for (auto& [c, vals] : genus_by_c)
    table.genus_rows.push_back(detail::summarize_values(c, std::move(vals)));
  for (auto& [c, vals] : crosscap_by_c)
    table.crosscap_rows.push_back(detail::summarize_values(c, std::move(vals)));
  return table;
}

struct DefectRow {
  int crossings = 0;
  std::map<int, int> defects_by_crosscap;  // crosscap value -> defect count
  int total = 0;
  int population = 0;
  double proportion = 0.0;
};

struct DefectTable {
  std::vector<DefectRow> rows;
};

inline DefectTable defect_report(const std::vector<ResultRow>& rows) {
  std::map<int, DefectRow> by_c;
  for (const auto& row : rows) {
    if (!row.ok) continue;
    auto& d = by_c[row.crossing_count];
    d.crossings = row.crossing_count;
    ++d.population;
    if (row.crosscap > row.unoriented_genus) {
      ++d.total;
      ++d.defects_by_crosscap[row.crosscap];
    }
  }
  if (by_c.empty()) throw CsvError("no successful rows for a defect report");
  DefectTable table;
  for (auto& [c, d] : by_c) {
    d.proportion = static_cast<double>(d.total) / d.population;
    table.rows.push_back(std::move(d));
  }
  return table;
}

// Ordinary least squares on (c, ln p): p(c) ~ amplitude * exp(-rate * c).
inline std::pair<double, double> fit_exponential_decay(
    const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 2) throw CsvError("regression needs at least 2 points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [c, p] : points) {
    if (p <= 0) throw CsvError("regression proportions must be positive");
    double y = std::log(p);
    sx += c;
    sy += y;
    sxx += c * c;
    sxy += c * y;
  }
  const double n = static_cast<double>(points.size());
  double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  double intercept = (sy - slope * sx) / n;
  return {std::exp(intercept), -slope};
}

// Plain-text renderings (means to 2 decimals, proportions to 5).

inline std::string render_summary(const SummaryTable& table) {
  std::ostringstream os;
  auto render = [&](const char* title, const std::vector<SummaryRow>& rows) {
    os << title << '\n';
    os << "  c  population  distribution (value:count)  mean  median  mode  max\n";
    for (const auto& row : rows) {
      os << std::setw(3) << row.crossings << "  " << std::setw(10) << row.population
         << "  ";
      std::string dist;
      for (const auto& [v, k] : row.counts) {
        if (!dist.empty()) dist += ' ';
        dist += std::to_string(v) + ":" + std::to_string(k);
      }
      os << std::setw(27) << dist << "  " << detail::format_fixed(row.mean, 2)
         << "  " << detail::format_fixed(row.median, 1) << "  ";
      std::string modes;
      for (int m : row.modes) {
        if (!modes.empty()) modes += ',';
        modes += std::to_string(m);
      }
      os << modes << "  " << row.max << '\n';
    }
  };
  render("Unoriented genus by crossing number:", table.genus_rows);
  render("Crosscap number by crossing number:", table.crosscap_rows);
  return os.str();
}

inline std::string render_defects(const DefectTable& table) {
  std::ostringstream os;
  os << "Records with crosscap > unoriented genus, by crossing number:\n";
  os << "  c  by-crosscap (value:count)  total  population  proportion\n";
  for (const auto& row : table.rows) {
    std::string dist;
    for (const auto& [v, k] : row.defects_by_crosscap) {
      if (!dist.empty()) dist += ' ';
      dist += std::to_string(v) + ":" + std::to_string(k);
    }
    os << std::setw(3) << row.crossings << "  " << std::setw(25) << dist << "  "
       << std::setw(5) << row.total << "  " << std::setw(10) << row.population
       << "  " << detail::format_fixed(row.proportion, 5) << '\n';
  }
  return os.str();
}

}  // namespace crosscap
