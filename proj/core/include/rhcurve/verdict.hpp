#pragma once

#include "rhcurve/linear_solver.hpp"
#include "rhcurve/polynomial.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace rhc {

/// The exact linear system behind a verdict together with the solver's
/// answer to it. Re-checking never trusts the solver.
struct Certificate {
    std::shared_ptr<const LinearProblem> problem;
    bool feasible = false;
    std::vector<GR> solution;  // one entry per column when feasible
    std::vector<GR> witness;   // one entry per row when infeasible

    /// Runs check_solution or check_witness, whichever applies.
    bool verify() const;
    /// Nonzero witness entries keyed by row label.
    std::vector<std::pair<std::string, GR>> witness_entries() const;
};

enum class Feasibility { Feasible, Infeasible };

const char* to_string(Feasibility f);

/// Outcome of a truncated membership question.
///
/// Membership is decided in the local ring modulo m^(K+1), m = (x, y), with
/// K = `truncation_degree`: every monomial of degree <= K is compared and
/// products beyond degree K are dropped. Infeasible therefore certifies
/// non-membership for germs at the origin; Feasible holds modulo m^(K+1).
struct MembershipVerdict {
    Feasibility status = Feasibility::Infeasible;
    int truncation_degree = 0;
    /// Solution split into named polynomial unknowns (when feasible).
    std::map<std::string, Polynomial2> parts;
    Certificate certificate;

    bool feasible() const { return status == Feasibility::Feasible; }
};

enum class StrongStatus { StrongUpToOrder, CertifiedNotStrong };

const char* to_string(StrongStatus s);

/// Whether per-branch series come from one ambient function.
struct StrongHolomorphyVerdict {
    StrongStatus status = StrongStatus::CertifiedNotStrong;
    std::size_t order = 0;
    /// Restricts to every target mod s^order (when strong).
    Polynomial2 g;
    Certificate certificate;

    bool strong() const { return status == StrongStatus::StrongUpToOrder; }
};

/// Column labels of the form "<part>:<monomial>" are collected into one
/// polynomial per part.
std::map<std::string, Polynomial2> collect_parts(const LinearProblem& p,
                                                 const std::vector<GR>& solution);

}  // namespace rhc
