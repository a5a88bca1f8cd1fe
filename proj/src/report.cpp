#include "toric/report.hpp"

#include <sstream>

namespace toric {

namespace {

nlohmann::json surface_ref(const SurfaceResult& s) {
  if (s.ray) return *s.ray;
  return "whole-surface";
}

std::string surface_label(const SurfaceResult& s) {
  return s.ray ? std::to_string(*s.ray) : "whole-surface";
}

std::string csv_quote(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

nlohmann::json to_json(const VarietyProfile& p) {
  return {
      {"dim", p.dim},
      {"q_factorial", p.q_factorial},
      {"complete", p.complete},
      {"fano", p.fano},
      {"terminal", p.terminal},
      {"gorenstein", p.gorenstein},
      {"picard", p.picard ? nlohmann::json(*p.picard) : nlohmann::json(nullptr)},
  };
}

nlohmann::json to_json(const VarietyReport& r) {
  nlohmann::json surfaces = nlohmann::json::array();
  for (const auto& s : r.surfaces) {
    surfaces.push_back({
        {"ray", surface_ref(s)},
        {"rho", s.rho},
        {"gamma2", to_string(s.gamma2)},
        {"closed_form", to_string(s.closed_form)},
    });
  }
  return {
      {"id", r.id},
      {"profile", to_json(r.profile)},
      {"surfaces", std::move(surfaces)},
      {"verdict", to_string(r.verdict)},
      {"witness", surface_ref(r.witness_surface())},
  };
}

nlohmann::json to_json(const SweepResult& s) {
  nlohmann::json reports = nlohmann::json::array();
  nlohmann::json errors = nlohmann::json::array();
  for (const auto& e : s.entries) {
    if (e.report) {
      reports.push_back(to_json(*e.report));
    } else {
      errors.push_back({{"id", e.id}, {"error", e.error}});
    }
  }
  return {
      {"reports", std::move(reports)},
      {"errors", std::move(errors)},
      {"summary",
       {
           {"total", s.summary.total},
           {"errors", s.summary.errors},
           {"nef", s.summary.nef()},
           {"by_verdict", s.summary.by_verdict},
           {"by_profile", s.summary.by_profile},
       }},
  };
}

std::string to_csv(const SweepResult& s) {
  std::ostringstream os;
  os << "id,dim,picard,q_factorial,fano,terminal,gorenstein,verdict,witness,min_gamma2,error\n";
  for (const auto& e : s.entries) {
    os << e.id << ',';
    if (!e.report) {
      os << ",,,,,,,,," << csv_quote(e.error) << '\n';
      continue;
    }
    const auto& r = *e.report;
    const auto& p = r.profile;
    os << p.dim << ',' << (p.picard ? std::to_string(*p.picard) : "") << ',' << p.q_factorial << ',' << p.fano
       << ',' << p.terminal << ',' << p.gorenstein << ',' << to_string(r.verdict) << ','
       << surface_label(r.witness_surface()) << ',' << to_string(r.witness_surface().gamma2) << ",\n";
  }
  return os.str();
}

}  // namespace toric
