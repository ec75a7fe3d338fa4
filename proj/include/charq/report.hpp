#pragma once
#include <string>

#include "charq/charvar.hpp"
#include "charq/congruence.hpp"
#include "charq/mgroup.hpp"
#include "charq/smallgrp.hpp"
#include "charq/speckit.hpp"
#include "json.hpp"

namespace charq {

using json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "charq.run/1";

/// One command invocation; `outputs` is deterministic for fixed inputs.
struct RunReport {
  std::string command;
  json inputs = json::object();
  json outputs = json::object();
  std::string claim;  // the property the outputs bear on
  double elapsed_ms = 0;
  bool pass = false;
};
json to_json(const RunReport& r);

json to_json(const SChoice& c, const FiniteField& k0);
json to_json(const Certificate& c);
json to_json(const AutF2Analysis& a, const PermGroup& g);
json to_json(const CharvarReport& r, const FiniteField& f);
json to_json(const CongruenceResult& r);
json specialization_json(const Specialization& sp);

std::string mat_json_str(const QuadAlgebra& k, const SpecMatrix3& m);
std::string triple_str(const FiniteField& f, TraceTriple t);

/// Compares `outputs` with DIR/<name>.json; returns an empty string on match, else a description.
std::string golden_compare(const std::string& dir, const std::string& name, const json& outputs);

}  // namespace charq
