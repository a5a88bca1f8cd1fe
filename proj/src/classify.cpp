#include "toric/classify.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "toric/error.hpp"
#include "toric/intersection.hpp"

namespace toric {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Positive:
      return "gamma2-positive";
    case Verdict::NefNotPositive:
      return "gamma2-nef-not-positive";
    case Verdict::NotNef:
      return "not-gamma2-nef";
  }
  return "?";
}

std::optional<Verdict> parse_verdict(std::string_view text) {
  for (auto v : {Verdict::Positive, Verdict::NefNotPositive, Verdict::NotNef}) {
    if (to_string(v) == text) return v;
  }
  return std::nullopt;
}

std::string_view to_string(ClosedForm c) {
  switch (c) {
    case ClosedForm::Rho1:
      return "rho1";
    case ClosedForm::Rho2:
      return "rho2";
    case ClosedForm::None:
      return "none";
  }
  return "?";
}

namespace {

SurfaceResult evaluate_surface(const Fan& fan, const Cone& tau) {
  SurfaceResult s;
  if (!tau.empty()) s.ray = tau.rays().front();
  s.rho = link_of(fan, tau).length() - 2;
  s.gamma2 = gamma_dot_surface(fan, tau);

  std::optional<Rational> closed;
  if (s.rho == 1) {
    s.closed_form = ClosedForm::Rho1;
    closed = rho1_form(fan, tau).form.diagonal_sum();
  } else if (s.rho == 2) {
    s.closed_form = ClosedForm::Rho2;
    closed = rho2_form(fan, tau).form.diagonal_sum();
  }
  if (closed && sign(*closed) != sign(s.gamma2)) {
    throw std::logic_error("closed form disagrees in sign with the intersection table");
  }
  return s;
}

}  // namespace

VarietyReport verdict(std::string id, const Fan& fan) {
  if (fan.dim() != 2 && fan.dim() != 3) throw DimensionError("verdicts are computed for surfaces and 3-folds");
  if (!is_simplicial(fan)) throw UnsupportedError("non-simplicial fan (not Q-factorial)");
  if (!is_complete(fan)) throw PreconditionError("fan is not complete");

  VarietyReport r;
  r.id = std::move(id);
  r.profile = profile(fan);
  if (fan.dim() == 2) {
    r.surfaces.push_back(evaluate_surface(fan, Cone{}));
  } else {
    for (std::size_t ray = 0; ray < fan.size(); ++ray) r.surfaces.push_back(evaluate_surface(fan, Cone{ray}));
  }

  r.witness = 0;
  for (std::size_t k = 1; k < r.surfaces.size(); ++k) {
    if (r.surfaces[k].gamma2 < r.surfaces[r.witness].gamma2) r.witness = k;
  }
  const Rational& least = r.surfaces[r.witness].gamma2;
  r.verdict = least > 0 ? Verdict::Positive : least == 0 ? Verdict::NefNotPositive : Verdict::NotNef;
  return r;
}

VarietyReport verdict(std::string id, std::span<const LatticeVector> points) {
  return verdict(std::move(id), face_fan(points));
}

std::size_t SweepSummary::nef() const {
  std::size_t n = 0;
  for (auto v : {Verdict::Positive, Verdict::NefNotPositive}) {
    if (auto it = by_verdict.find(std::string(to_string(v))); it != by_verdict.end()) n += it->second;
  }
  return n;
}

SweepResult sweep(std::span<const DatasetRecord> dataset, std::size_t jobs) {
  SweepResult result;
  result.entries.resize(dataset.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < dataset.size(); i = next++) {
      auto& entry = result.entries[i];
      entry.id = dataset[i].id;
      try {
        entry.report = verdict(dataset[i].id, dataset[i].generators);
      } catch (const std::exception& e) {
        entry.error = e.what();
      }
    }
  };
  jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(dataset.size(), 1));
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
  }

  auto& s = result.summary;
  s.total = dataset.size();
  for (const auto& e : result.entries) {
    if (!e.report) {
      ++s.errors;
      continue;
    }
    ++s.by_verdict[std::string(to_string(e.report->verdict))];
    const auto& p = e.report->profile;
    ++s.by_profile["fano=" + std::to_string(p.fano) + " terminal=" + std::to_string(p.terminal) +
                   " gorenstein=" + std::to_string(p.gorenstein)];
  }
  return result;
}

const std::map<std::string, Verdict>& table1_expectations() {
  static const std::map<std::string, Verdict> expected = [] {
    std::map<std::string, Verdict> m;
    for (const char* id : {"12", "13", "14", "15", "16"}) m[id] = Verdict::Positive;
    for (const char* id : {"6", "8", "9", "10", "11"}) m[id] = Verdict::NefNotPositive;
    return m;
  }();
  return expected;
}

const std::map<std::string, Verdict>& table2_expectations() {
  static const std::map<std::string, Verdict> expected = [] {
    std::map<std::string, Verdict> m;
    for (const char* id : {"1", "2", "3", "4", "5", "6", "7", "8"}) m[id] = Verdict::Positive;
    for (const char* id :
         {"9", "24", "34", "35", "36", "38", "43", "45", "47", "62", "105", "110", "123", "131", "140"}) {
      m[id] = Verdict::NefNotPositive;
    }
    return m;
  }();
  return expected;
}

}  // namespace toric
