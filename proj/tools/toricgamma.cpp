// toricgamma: gamma_2 positivity / nefness of Q-factorial complete toric
// surfaces and 3-folds given by their ray generators.
//
// Exit codes: 0 success (or match), 1 verdict mismatch, 2 input error.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <string>
#include <thread>

#include "toric/classify.hpp"
#include "toric/dataset.hpp"
#include "toric/error.hpp"
#include "toric/intersection.hpp"
#include "toric/reflexive.hpp"
#include "toric/report.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kInputError = 2;

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string surface_name(const toric::SurfaceResult& s) {
  return s.ray ? "S" + std::to_string(*s.ray) : std::string("S");
}

toric::ParsedDataset load(const std::string& file) {
  auto parsed = toric::parse_dataset_lenient(toric::read_text_file(file));
  for (const auto& e : parsed.errors) {
    std::cerr << file << ": line " << e.line << ": " << e.message << '\n';
  }
  return parsed;
}

int run_check(const std::string& file) {
  const auto parsed = load(file);
  bool failed = !parsed.errors.empty();
  for (const auto& rec : parsed.records) {
    try {
      const auto fan = toric::face_fan(rec.generators);
      const auto p = toric::profile(fan);
      std::cout << rec.id << ": dim=" << p.dim << " q_factorial=" << yes_no(p.q_factorial)
                << " complete=" << yes_no(p.complete) << " fano=" << yes_no(p.fano)
                << " terminal=" << yes_no(p.terminal) << " gorenstein=" << yes_no(p.gorenstein)
                << " picard=" << (p.picard ? std::to_string(*p.picard) : "-") << '\n';
    } catch (const toric::Error& e) {
      std::cerr << rec.id << ": " << e.what() << '\n';
      failed = true;
    }
  }
  return failed ? kInputError : kOk;
}

int run_gamma(const std::string& file, bool per_surface) {
  const auto parsed = load(file);
  bool failed = !parsed.errors.empty();
  for (const auto& rec : parsed.records) {
    try {
      const auto r = toric::verdict(rec.id, rec.generators);
      const auto& w = r.witness_surface();
      std::cout << r.id << ": " << toric::to_string(r.verdict) << " (min gamma2 = " << toric::to_string(w.gamma2)
                << " on " << surface_name(w) << ")\n";
      if (per_surface) {
        for (const auto& s : r.surfaces) {
          std::cout << "  " << surface_name(s) << " rho=" << s.rho << " gamma2=" << toric::to_string(s.gamma2)
                    << " closed_form=" << toric::to_string(s.closed_form) << '\n';
        }
      }
    } catch (const toric::Error& e) {
      std::cerr << rec.id << ": " << e.what() << '\n';
      failed = true;
    }
  }
  return failed ? kInputError : kOk;
}

int run_sweep(const std::string& file, const std::string& format, std::size_t jobs) {
  const auto parsed = load(file);
  auto result = toric::sweep(parsed.records, jobs);
  for (const auto& e : parsed.errors) {
    toric::SweepEntry entry;
    entry.id = e.id.empty() ? "line " + std::to_string(e.line) : e.id;
    entry.error = "line " + std::to_string(e.line) + ": " + e.message;
    result.entries.push_back(std::move(entry));
    ++result.summary.total;
    ++result.summary.errors;
  }
  if (format == "csv") {
    std::cout << toric::to_csv(result);
  } else {
    std::cout << toric::to_json(result).dump(2) << '\n';
  }
  return result.summary.errors ? kInputError : kOk;
}

int run_table(const std::filesystem::path& path, const std::map<std::string, toric::Verdict>& expected) {
  std::vector<toric::DatasetRecord> records;
  try {
    records = toric::parse_dataset(toric::read_text_file(path));
  } catch (const toric::Error& e) {
    std::cerr << path.string() << ": " << e.what() << '\n';
    return kInputError;
  }
  const auto result = toric::sweep(records, std::thread::hardware_concurrency());
  int status = kOk;
  std::size_t nef = 0, positive = 0;
  for (const auto& e : result.entries) {
    if (!e.report) {
      std::cerr << e.id << ": " << e.error << '\n';
      status = kInputError;
      continue;
    }
    const auto v = e.report->verdict;
    if (v != toric::Verdict::NotNef) ++nef;
    if (v == toric::Verdict::Positive) ++positive;
    const auto it = expected.find(e.id);
    if (it == expected.end()) {
      std::cout << "unexpected id " << e.id << ": " << toric::to_string(v) << '\n';
      if (status == kOk) status = kMismatch;
    } else if (it->second != v) {
      std::cout << "mismatch " << e.id << ": got " << toric::to_string(v) << ", expected "
                << toric::to_string(it->second) << '\n';
      if (status == kOk) status = kMismatch;
    }
  }
  if (records.size() != expected.size() && status == kOk) {
    std::cout << "expected " << expected.size() << " records, found " << records.size() << '\n';
    status = kMismatch;
  }
  std::cout << nef << '/' << records.size() << " nef, " << positive << " positive\n";
  return status;
}

int run_reflexive() {
  const auto polygons = toric::enumerate_reflexive_polygons();
  std::size_t nef = 0;
  for (const auto& poly : polygons) {
    const auto fan = toric::face_fan(poly);
    const auto g = toric::surface_gamma2(fan);
    if (g >= 0) ++nef;
    for (std::size_t i = 0; i < poly.size(); ++i) std::cout << (i ? " " : "") << poly[i];
    std::cout << "  gamma2=" << toric::to_string(g) << '\n';
  }
  std::cout << polygons.size() << " reflexive polygons, " << nef << " gamma2-nef\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact gamma_2 nefness for Q-factorial complete toric surfaces and 3-folds"};
  app.require_subcommand(1);

  std::string file;
  bool per_surface = false;
  std::string format = "json";
  std::size_t jobs = 1;
  std::string data_dir = toric::default_data_dir().string();

  auto* check = app.add_subcommand("check", "print the variety profile of every record");
  check->add_option("file", file, "dataset file")->required();

  auto* gamma = app.add_subcommand("gamma", "print gamma_2 verdicts");
  gamma->add_option("file", file, "dataset file")->required();
  gamma->add_flag("--per-surface", per_surface, "print gamma_2 . S for every torus-invariant surface");

  auto* sweep = app.add_subcommand("sweep", "batch reports with summary counts");
  sweep->add_option("file", file, "dataset file")->required();
  sweep->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  sweep->add_option("--jobs", jobs, "records evaluated in parallel")->check(CLI::PositiveNumber);

  auto* table1 = app.add_subcommand("table1", "check the bundled del Pezzo list against its known verdicts");
  table1->add_option("--data-dir", data_dir, "directory with the bundled data files");
  auto* table2 = app.add_subcommand("table2", "check the bundled terminal Fano 3-fold list against its known verdicts");
  table2->add_option("--data-dir", data_dir, "directory with the bundled data files");

  auto* reflexive = app.add_subcommand("reflexive2d", "enumerate reflexive polygons up to GL(2,Z)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*check) return run_check(file);
    if (*gamma) return run_gamma(file, per_surface);
    if (*sweep) return run_sweep(file, format, jobs);
    if (*table1) return run_table(std::filesystem::path(data_dir) / "table1_delpezzo.txt", toric::table1_expectations());
    if (*table2) return run_table(std::filesystem::path(data_dir) / "table2_fano3.txt", toric::table2_expectations());
    if (*reflexive) return run_reflexive();
  } catch (const toric::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kOk;
}
