#pragma once

// Builder for membership systems compared modulo m^(K+1).

#include "rhcurve/linear_solver.hpp"
#include "rhcurve/polynomial.hpp"
#include "rhcurve/verdict.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace rhc::detail {

class TruncatedSystem {
public:
    /// One block of rows per component name; an empty name list means a
    /// single unnamed component.
    TruncatedSystem(int truncation_degree, std::vector<std::string> components);

    int truncation_degree() const { return k_; }

    /// Adds unknown "<part>:<monomial>" whose column is `column` (one
    /// polynomial per component) truncated to degree K. Returns the column.
    std::size_t add_unknown(const std::string& part, Monomial m,
                            const std::vector<Polynomial2>& column);

    /// Extra equations outside the monomial blocks.
    std::size_t add_extra_row(std::string label) { return problem_->add_row(std::move(label)); }
    void add_extra_entry(std::size_t row, std::size_t col, const GR& v) { problem_->add(row, col, v); }

    /// Unknowns m * generator for every monomial m with
    /// deg(m) + ord(generator) <= K.
    void add_multiples(const std::string& part, const std::vector<Polynomial2>& generator);

    void set_target(const std::vector<Polynomial2>& target);

    MembershipVerdict solve();

    const LinearProblem& problem() const { return *problem_; }

private:
    int k_;
    std::vector<std::string> components_;
    std::vector<Monomial> monomials_;
    std::map<Monomial, std::size_t> monomial_index_;
    std::shared_ptr<LinearProblem> problem_;
};

}  // namespace rhc::detail
