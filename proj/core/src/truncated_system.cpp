#include "truncated_system.hpp"

#include "rhcurve/errors.hpp"

#include <algorithm>
#include <optional>

namespace rhc::detail {

TruncatedSystem::TruncatedSystem(int truncation_degree, std::vector<std::string> components)
    : k_(truncation_degree),
      components_(std::move(components)),
      monomials_(monomials_up_to(truncation_degree)),
      problem_(std::make_shared<LinearProblem>())
{
    if (truncation_degree < 0) {
        throw Error(ErrorKind::InvalidArgument, "negative truncation degree");
    }
    if (components_.empty()) {
        components_.emplace_back();
    }
    for (std::size_t i = 0; i < monomials_.size(); ++i) {
        monomial_index_.emplace(monomials_[i], i);
    }
    for (const auto& comp : components_) {
        for (const auto& m : monomials_) {
            problem_->add_row(comp.empty() ? m.to_string() : comp + ":" + m.to_string());
        }
    }
}

std::size_t TruncatedSystem::add_unknown(const std::string& part, Monomial m,
                                         const std::vector<Polynomial2>& column)
{
    if (column.size() != components_.size()) {
        throw Error(ErrorKind::InvalidArgument, "column has the wrong number of components");
    }
    std::size_t col = problem_->add_column(part + ":" + m.to_string());
    for (std::size_t comp = 0; comp < column.size(); ++comp) {
        for (const auto& [mono, c] : column[comp].terms()) {
            if (mono.degree() > k_) {
                break;  // terms are in graded order
            }
            problem_->add(comp * monomials_.size() + monomial_index_.at(mono), col, c);
        }
    }
    return col;
}

void TruncatedSystem::add_multiples(const std::string& part,
                                    const std::vector<Polynomial2>& generator)
{
    std::optional<int> ord;
    for (const auto& g : generator) {
        if (auto o = g.order()) {
            ord = ord ? std::min(*ord, *o) : *o;
        }
    }
    if (!ord || *ord > k_) {
        return;
    }
    for (const auto& m : monomials_up_to(k_ - *ord)) {
        std::vector<Polynomial2> column;
        Polynomial2 mono = Polynomial2::monomial(m);
        for (const auto& g : generator) {
            column.push_back(mono * g.truncated(k_ - m.degree()));
        }
        add_unknown(part, m, column);
    }
}

void TruncatedSystem::set_target(const std::vector<Polynomial2>& target)
{
    if (target.size() != components_.size()) {
        throw Error(ErrorKind::InvalidArgument, "target has the wrong number of components");
    }
    for (std::size_t comp = 0; comp < target.size(); ++comp) {
        for (const auto& [mono, c] : target[comp].terms()) {
            if (mono.degree() > k_) {
                break;
            }
            problem_->add_rhs(comp * monomials_.size() + monomial_index_.at(mono), c);
        }
    }
}

MembershipVerdict TruncatedSystem::solve()
{
    LinearOutcome out = solve_exact(*problem_);
    MembershipVerdict v;
    v.truncation_degree = k_;
    v.status = out.feasible ? Feasibility::Feasible : Feasibility::Infeasible;
    v.certificate.problem = problem_;
    v.certificate.feasible = out.feasible;
    if (out.feasible) {
        v.parts = collect_parts(*problem_, out.solution);
        v.certificate.solution = std::move(out.solution);
    } else {
        v.certificate.witness = std::move(out.witness);
    }
    return v;
}

}  // namespace rhc::detail
