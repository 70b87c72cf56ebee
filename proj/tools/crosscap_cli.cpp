// Command-line front end: compute, batch, summarize, defect, verify, convert.
// Exit codes: 0 success, 1 usage error, 2 data error, 3 verification mismatch.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "crosscap/census.hpp"
#include "crosscap/oracle.hpp"

namespace {

using namespace crosscap;

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitMismatch = 3;

int cmd_compute(const std::string& gauss_text) {
  auto g = parse_gauss(gauss_text);
  auto rep = compute_invariants(g);
  std::cout << "crossings:        " << rep.crossing_count << '\n'
            << "state circles:    " << rep.circle_count << '\n'
            << "unoriented genus: " << rep.unoriented_genus << '\n'
            << "crosscap number:  " << rep.crosscap << '\n'
            << "state code:       " << serialize_state_code(rep.witness) << '\n'
            << "simple:           " << (rep.simple ? "yes" : "no") << '\n'
            << "bipartite:        " << (rep.bipartite ? "yes" : "no") << '\n';
  return 0;
}

IngestResult ingest_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CsvError("cannot open " + path);
  auto result = ingest_csv(in);
  for (const auto& issue : result.issues)
    std::cerr << path << ": row " << issue.row << ": " << issue.message << '\n';
  return result;
}

int cmd_batch(const std::string& input, const std::string& output, int jobs,
              bool best_only) {
  auto ingest = ingest_file(input);
  BatchOptions opt;
  opt.jobs = jobs;
  opt.engine.best_only = best_only;
  auto rows = process_batch(ingest.records, opt);
  std::ofstream out(output);
  if (!out) throw CsvError("cannot open " + output + " for writing");
  emit_csv(rows, out);
  std::size_t failures = 0;
  for (const auto& row : rows)
    if (!row.ok) ++failures;
  std::cout << "processed " << rows.size() << " records ("
            << rows.size() - failures << " ok, " << failures << " failed, "
            << ingest.issues.size() << " rejected at ingest)\n";
  return failures || !ingest.issues.empty() ? kExitData : 0;
}

std::vector<ResultRow> reingest_results(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CsvError("cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw CsvError("empty results file");
  auto header = detail::split_csv_line(line);
  auto col = [&](const std::string& name) {
    for (int i = 0; i < static_cast<int>(header.size()); ++i)
      if (header[i] == name) return i;
    throw CsvError("missing column \"" + name + "\" in " + path);
  };
  int name_col = col("Name"), gauss_col = col("Gauss Code");
  int genus_col = col("Unoriented Genus"), crosscap_col = col("Crosscap Number");
  std::vector<ResultRow> rows;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    auto fields = detail::split_csv_line(line);
    if (static_cast<int>(fields.size()) <= crosscap_col) continue;
    ResultRow row;
    row.name = fields[name_col];
    row.gauss_text = fields[gauss_col];
    try {
      row.crossing_count = crossing_count(parse_gauss(row.gauss_text));
      row.unoriented_genus = std::stoi(fields[genus_col]);
      row.crosscap = std::stoi(fields[crosscap_col]);
    } catch (const std::exception&) {
      continue;  // error rows and malformed lines are skipped in summaries
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

int cmd_summarize(const std::string& input) {
  std::cout << render_summary(summarize(reingest_results(input)));
  return 0;
}

int cmd_defect(const std::string& input, bool fit) {
  auto table = defect_report(reingest_results(input));
  std::cout << render_defects(table);
  if (fit) {
    std::vector<std::pair<double, double>> points;
    for (const auto& row : table.rows)
      if (row.total > 0) points.emplace_back(row.crossings, row.proportion);
    auto [amplitude, rate] = fit_exponential_decay(points);
    std::cout << "fit: proportion(c) ~ " << detail::format_fixed(amplitude, 3)
              << " * exp(-" << detail::format_fixed(rate, 3) << " * c)\n";
  }
  return 0;
}

int cmd_verify(const std::string& input, int max_crossings) {
  auto ingest = ingest_file(input);
  BruteForceOptions opt;
  opt.max_crossings = max_crossings;
  int mismatches = 0, checked = 0, skipped = 0;
  for (const auto& rec : ingest.records) {
    if (crossing_count(rec.gauss) > max_crossings) {
      ++skipped;
      continue;
    }
    auto fast = compute_invariants(rec.gauss);
    auto slow = brute_force_invariants(rec.gauss, opt);
    ++checked;
    if (fast.circle_count != slow.circle_count ||
        fast.unoriented_genus != slow.unoriented_genus ||
        fast.crosscap != slow.crosscap) {
      ++mismatches;
      std::cerr << rec.name << ": engine (s=" << fast.circle_count
                << ", genus=" << fast.unoriented_genus << ", crosscap="
                << fast.crosscap << ") vs oracle (s=" << slow.circle_count
                << ", genus=" << slow.unoriented_genus << ", crosscap="
                << slow.crosscap << ")\n";
    }
  }
  std::cout << "verified " << checked << " records against the exhaustive oracle, "
            << mismatches << " mismatches, " << skipped
            << " skipped (over --max-crossings)\n";
  return mismatches ? kExitMismatch : 0;
}

int cmd_convert(const std::string& dt_text) {
  std::cout << serialize_gauss(dt_to_gauss(parse_dt(dt_text))) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unoriented genus and crosscap numbers of prime alternating "
               "knots and links from Gauss codes"};
  app.require_subcommand(1);

  std::string gauss_text, input, output, dt_text;
  int jobs = 0, max_crossings = 16;
  bool best_only = false, fit = false;

  auto* compute = app.add_subcommand("compute", "invariants of one Gauss code");
  compute->add_option("--gauss", gauss_text, "Gauss code, e.g. [[1,2,3,1,2,3]]")
      ->required();

  auto* batch = app.add_subcommand("batch", "process a census CSV");
  batch->add_option("--input", input, "input CSV (Name + Gauss Code columns)")
      ->required();
  batch->add_option("--output", output, "output CSV path")->required();
  batch->add_option("--jobs", jobs, "worker threads (default: cores)");
  batch->add_flag("--best-only", best_only, "keep only the best leaf per record");

  auto* summarize_cmd = app.add_subcommand("summarize", "distribution tables");
  summarize_cmd->add_option("--input", input, "batch output CSV")->required();

  auto* defect = app.add_subcommand("defect", "crosscap > genus table");
  defect->add_option("--input", input, "batch output CSV")->required();
  defect->add_flag("--fit", fit, "fit an exponential decay to the proportions");

  auto* verify = app.add_subcommand("verify", "cross-check against the 2^c oracle");
  verify->add_option("--input", input, "input CSV")->required();
  verify->add_option("--max-crossings", max_crossings, "oracle bound (default 16)");

  auto* convert = app.add_subcommand("convert", "DT code to Gauss code");
  convert->add_option("--dt", dt_text, "DT code, e.g. \"4 6 8 2\"")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (compute->parsed()) return cmd_compute(gauss_text);
    if (batch->parsed()) return cmd_batch(input, output, jobs, best_only);
    if (summarize_cmd->parsed()) return cmd_summarize(input);
    if (defect->parsed()) return cmd_defect(input, fit);
    if (verify->parsed()) return cmd_verify(input, max_crossings);
    if (convert->parsed()) return cmd_convert(dt_text);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}
