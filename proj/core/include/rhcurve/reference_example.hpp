#pragma once

#include "rhcurve/polynomial.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace rhc::nontame {

/// t^power * (m o branch) == rhs o branch along nontame::branch().
struct DenominatorIdentity {
    int power = 0;
    Monomial m;
    Polynomial2 rhs;
};

/// The twelve identities for power 1..3 and m in {x^3, x^2*y, x*y^2, y^3}.
std::vector<DenominatorIdentity> universal_denominator_identities();

enum class CheckStatus { Pass, Fail, Skipped };

const char* to_string(CheckStatus s);

struct CheckResult {
    std::string id;      // "a" .. "j"
    std::string title;
    CheckStatus status = CheckStatus::Fail;
    std::string detail;
    nlohmann::json data;  // verdicts and certificates behind the check
};

struct Checklist {
    std::size_t order = 0;
    int degree_cap = 0;
    std::vector<CheckResult> checks;

    /// No check failed (skipped ones do not count).
    bool passed() const;
    const CheckResult* first_failure() const;
};

/// Runs checks (a)..(j) on the non-tame example at order N and cap D.
/// Exceptions inside one check turn into a failure of that check. Check (h)
/// is skipped when N < 26.
Checklist run_checklist(std::size_t order = 40, int degree_cap = 8);

nlohmann::json to_json(const Checklist& c);

}  // namespace rhc::nontame
