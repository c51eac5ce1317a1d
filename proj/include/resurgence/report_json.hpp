#pragma once

#include <string>

#include "resurgence/containment.hpp"
#include "resurgence/resurgence.hpp"

namespace resurgence {

/// Report schema (stable field names):
/// {ideal, rho: {exact | interval: {lower, upper}, provenance: [{value, tag,
/// inputs, bound}]}, rho_a: {...}, witnesses: [{s, t, monomial}],
/// containments: [{s, t, holds}], flags: [...], truncated}.
/// Rationals are exact strings ("6/5").
std::string report_to_json(const ResurgenceReport& rep, const VariableSet& vars,
                           bool pretty = true);

std::string containment_to_json(const ContainmentResult& res, const VariableSet& vars,
                                bool pretty = true);

std::string sweep_to_json(const SweepResult& res, const VariableSet& vars, bool pretty = true);

}  // namespace resurgence
