#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "toric/dataset.hpp"
#include "toric/fan.hpp"
#include "toric/linalg.hpp"
#include "toric/variety.hpp"

namespace toric {

enum class Verdict { Positive, NefNotPositive, NotNef };

std::string_view to_string(Verdict v);
std::optional<Verdict> parse_verdict(std::string_view text);

// Which closed form covers a surface: Picard number 1, 2, or neither.
enum class ClosedForm { Rho1, Rho2, None };
std::string_view to_string(ClosedForm c);

struct SurfaceResult {
  std::optional<std::size_t> ray;  // nullopt: the whole surface (d = 2)
  std::size_t rho = 0;
  Rational gamma2;
  ClosedForm closed_form = ClosedForm::None;
};

struct VarietyReport {
  std::string id;
  VarietyProfile profile;
  std::vector<SurfaceResult> surfaces;
  Verdict verdict = Verdict::NotNef;
  std::size_t witness = 0;  // index into surfaces of a minimizing surface

  const SurfaceResult& witness_surface() const { return surfaces.at(witness); }
};

// gamma_2 · S for every torus-invariant surface (every ray when d = 3, the
// surface itself when d = 2) and the resulting verdict. Where a closed form
// applies its sign is checked against the exact value. Throws
// UnsupportedError for non-simplicial fans and PreconditionError for
// incomplete ones.
VarietyReport verdict(std::string id, const Fan& fan);
// Same, on the face fan of the points.
VarietyReport verdict(std::string id, std::span<const LatticeVector> points);

struct SweepEntry {
  std::string id;
  std::optional<VarietyReport> report;
  std::string error;  // set iff report is empty
};

struct SweepSummary {
  std::size_t total = 0;
  std::size_t errors = 0;
  std::map<std::string, std::size_t> by_verdict;
  // Keyed "fano=<0|1> terminal=<0|1> gorenstein=<0|1>".
  std::map<std::string, std::size_t> by_profile;

  std::size_t nef() const;
};

struct SweepResult {
  std::vector<SweepEntry> entries;  // input order
  SweepSummary summary;
};

// Evaluates every record, up to `jobs` at a time. Per-record failures are
// collected in the entry rather than thrown. Output order is the input
// order regardless of `jobs`.
SweepResult sweep(std::span<const DatasetRecord> dataset, std::size_t jobs = 1);

// Known verdicts for the bundled del Pezzo and 3-fold lists, keyed by id.
const std::map<std::string, Verdict>& table1_expectations();
const std::map<std::string, Verdict>& table2_expectations();

}  // namespace toric
