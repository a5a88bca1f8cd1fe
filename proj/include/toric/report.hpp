#pragma once

#include <json.hpp>
#include <string>

#include "toric/classify.hpp"

namespace toric {

// {id, profile:{...}, surfaces:[{ray, rho, gamma2:"p/q", closed_form}],
//  verdict, witness}. gamma2 is an exact fraction string; ray and witness
// are generator indices, or "whole-surface" for a surface.
nlohmann::json to_json(const VarietyProfile& p);
nlohmann::json to_json(const VarietyReport& r);
// {reports:[...], errors:[{id, error}], summary:{...}}
nlohmann::json to_json(const SweepResult& s);

// One row per record; header first.
std::string to_csv(const SweepResult& s);

}  // namespace toric
