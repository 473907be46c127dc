#pragma once

#include "rhcurve/connection.hpp"
#include "rhcurve/curve.hpp"
#include "rhcurve/forms.hpp"
#include "rhcurve/polynomial.hpp"
#include "rhcurve/series.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace rhc::io {

using nlohmann::json;

// All readers throw ParseError. Coefficients are literal strings (integers
// are accepted too); monomial keys follow Monomial::parse.

json to_json(const GR& z);
GR coefficient_from_json(const json& j);

/// {"terms": [{"m": "x^4", "c": "1"}, ...]} in monomial order.
json to_json(const Polynomial2& p);
Polynomial2 polynomial_from_json(const json& j);

/// [[exponent, coefficient], ...] with nonzero coefficients only; exponents
/// are written as strings and read from strings or integers.
json series_to_json(const USeries& s);
USeries series_from_json(const json& j, std::size_t order);

/// {"order": N, "x": [...], "y": [...]}
json to_json(const Branch& b);
Branch branch_from_json(const json& j);

/// {"f": <polynomial>}
json curve_to_json(const PlaneCurve& c);
CurvePtr curve_from_json(const json& j);

/// {"dx": <polynomial>, "dy": <polynomial>}
json to_json(const CurveOneForm& w);
CurveOneForm oneform_from_json(const json& j, const CurvePtr& curve);

/// {"rank": r, "A": [[<one-form>, ...], ...]} row-major.
json to_json(const Connection& c);
Connection connection_from_json(const json& j, const CurvePtr& curve);

/// A classification request.
struct ProblemSpec {
    CurvePtr curve;
    std::optional<std::vector<Branch>> branches;
    std::optional<Connection> connection;
    std::size_t order = 40;
    int degree_cap = 8;
    std::optional<long> seed;
};

/// {"curve": {"f": ...}, "connection": {...}, "branches": [...]?,
///  "order": N?, "degree_cap": D?, "seed": s?}
ProblemSpec problem_from_json(const json& j);
json to_json(const ProblemSpec& p);

/// Parses a file; syntax errors carry the byte offset.
json read_json_file(const std::string& path);
json parse_json_text(const std::string& text);

/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string canonical_dump(const json& j);

}  // namespace rhc::io
