#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "rfh/engine.hpp"
#include "rfh/problem.hpp"

namespace rfh {

/// Parses a schema-1 problem file. The optional "delta_c" section is folded
/// into the connecting map (as coeff * T^{-1} * id) and recorded in
/// delta_c_coeff; "t_power" fields, when present, are checked against the
/// exponents forced by the grading. Throws ParseError with a located
/// message on malformed input.
GysinProblem problem_from_json(const nlohmann::json& j);

GysinProblem load_problem_file(const std::string& path);

/// Inverse of problem_from_json: the delta_c summand is split back out of
/// the connecting map so the file matches what a user would write.
nlohmann::json problem_to_json(const GysinProblem& p);

nlohmann::json group_to_json(const AbelianGroupDescription& g);
AbelianGroupDescription group_from_json(const nlohmann::json& j);

nlohmann::json result_to_json(const GysinProblem& p, const RFHResult& r, const std::string& mode);
nlohmann::json report_to_json(const GenericHypersurfaceReport& rep);

/// Reads the "groups" array of a result document back into degree-indexed
/// descriptions (used by the serialization fidelity checks).
std::map<int, AbelianGroupDescription> result_groups_from_json(const nlohmann::json& j);

} // namespace rfh
