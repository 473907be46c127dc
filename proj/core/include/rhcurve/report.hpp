#pragma once

#include "rhcurve/connection.hpp"
#include "rhcurve/curve.hpp"
#include "rhcurve/forms.hpp"
#include "rhcurve/io.hpp"
#include "rhcurve/local_algebra.hpp"
#include "rhcurve/verdict.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <optional>
#include <string>

namespace rhc::report {

using nlohmann::json;

const char* tool_version();

/// {"name": "rhcurve", "version": ...}
json tool_info();

/// The system, the solver's flag, and the sparse solution or witness as
/// [index, value] pairs.
json to_json(const Certificate& c);
/// Inverse of to_json(Certificate); throws ParseError.
Certificate certificate_from_json(const json& j);

/// Status, truncation degree, certificate, and the solution parts when
/// feasible.
json to_json(const MembershipVerdict& v);
json to_json(const StrongHolomorphyVerdict& v);
json to_json(const TorsionResult& t);
json to_json(const VectorFieldResult& r);

/// Branches with residual orders.
json normalization_to_json(const Normalization& nz);

/// The first `terms` nonzero coefficients of every frame entry on every
/// branch, plus the per-entry strong verdicts.
json frame_summary(const CurveFrame& frame, std::size_t terms = 3);

json to_json(const NonTameWitness& w);

/// Everything a classify run produced. `normalization_source` is
/// "input" or "newton_puiseux".
struct ClassifyRun {
    io::ProblemSpec problem;
    Normalization normalization;
    std::string normalization_source;
    Classification classification;
    long long elapsed_ms = 0;
};

json to_json(const ClassifyRun& run);

/// Exit status of the classify command for a classification status.
int exit_code(ClassificationStatus s);

}  // namespace rhc::report
