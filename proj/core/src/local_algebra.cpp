#include "rhcurve/local_algebra.hpp"

#include "rhcurve/errors.hpp"
#include "truncated_system.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace rhc {

MembershipVerdict ideal_membership(const Polynomial2& target,
                                   const std::vector<Polynomial2>& generators, int degree_cap)
{
    if (degree_cap < 0) {
        throw Error(ErrorKind::InvalidArgument, "degree cap must be nonnegative");
    }
    int max_deg = 0;
    for (const auto& g : generators) {
        max_deg = std::max(max_deg, g.degree().value_or(0));
    }
    detail::TruncatedSystem sys(degree_cap + max_deg, {});
    for (std::size_t i = 0; i < generators.size(); ++i) {
        sys.add_multiples("h" + std::to_string(i), {generators[i]});
    }
    sys.set_target({target});
    return sys.solve();
}

StrongHolomorphyVerdict subalgebra_membership(const std::vector<USeries>& targets,
                                              const Normalization& nz, std::size_t order)
{
    const auto& branches = nz.branches();
    if (targets.size() != branches.size()) {
        throw Error(ErrorKind::OrderMismatch,
                    std::to_string(targets.size()) + " targets for " +
                        std::to_string(branches.size()) + " branches");
    }
    if (order == 0) {
        throw Error(ErrorKind::InvalidArgument, "order must be positive");
    }
    for (std::size_t j = 0; j < branches.size(); ++j) {
        if (targets[j].order() < order || branches[j].order() < order) {
            throw Error(ErrorKind::OrderMismatch,
                        "branch " + std::to_string(j) + " is known mod s^" +
                            std::to_string(std::min(targets[j].order(), branches[j].order())) +
                            ", need s^" + std::to_string(order));
        }
    }

    auto problem = std::make_shared<LinearProblem>();
    std::vector<std::size_t> ox, oy;
    std::vector<BranchPowers> powers;
    for (std::size_t j = 0; j < branches.size(); ++j) {
        Branch b = branches[j].truncated(order);
        ox.push_back(b.x().valuation().value_or(order));
        oy.push_back(b.y().valuation().value_or(order));
        powers.emplace_back(b.x(), b.y());
        for (std::size_t k = 0; k < order; ++k) {
            std::size_t r = problem->add_row("b" + std::to_string(j) + ":s^" + std::to_string(k));
            problem->add_rhs(r, targets[j][k]);
        }
    }
    for (const auto& m : monomials_up_to(static_cast<int>(order) - 1)) {
        bool visible = false;
        for (std::size_t j = 0; j < branches.size() && !visible; ++j) {
            visible = ox[j] * m.a + oy[j] * m.b < order;
        }
        if (!visible) {
            continue;
        }
        std::size_t col = problem->add_column("g:" + m.to_string());
        for (std::size_t j = 0; j < branches.size(); ++j) {
            if (ox[j] * m.a + oy[j] * m.b >= order) {
                continue;
            }
            USeries p = powers[j].monomial(m);
            for (std::size_t k = 0; k < order; ++k) {
                problem->add(j * order + k, col, p[k]);
            }
        }
    }

    LinearOutcome out = solve_exact(*problem);
    StrongHolomorphyVerdict v;
    v.order = order;
    v.certificate.problem = problem;
    v.certificate.feasible = out.feasible;
    if (out.feasible) {
        v.status = StrongStatus::StrongUpToOrder;
        auto parts = collect_parts(*problem, out.solution);
        v.g = parts["g"];
        v.certificate.solution = std::move(out.solution);
    } else {
        v.status = StrongStatus::CertifiedNotStrong;
        v.certificate.witness = std::move(out.witness);
    }
    return v;
}

namespace {

const std::map<std::string, std::string>& alias_table()
{
    static const std::map<std::string, std::string> table{
        {"A:1", "A0"}, {"A:x", "A11"}, {"A:y", "A12"},
        {"B:1", "B0"}, {"B:x", "B11"}, {"B:y", "B12"},
    };
    return table;
}

}  // namespace

std::string vector_field_alias(const std::string& label)
{
    auto it = alias_table().find(label);
    return it == alias_table().end() ? label : it->second;
}

VectorFieldResult vector_field_equation_solve(const PlaneCurve& c, int degree_cap,
                                              const std::vector<std::string>& forced_zero)
{
    const int ord = c.multiplicity();
    if (degree_cap < ord) {
        throw Error(ErrorKind::InvalidArgument,
                    "degree cap " + std::to_string(degree_cap) + " is below ord(f) = " +
                        std::to_string(ord));
    }
    std::set<std::string> skip;
    for (const auto& name : forced_zero) {
        bool known = false;
        for (const auto& [label, alias] : alias_table()) {
            if (name == alias || name == label) {
                skip.insert(label);
                known = true;
            }
        }
        if (!known) {
            if (name.size() < 3 || (name[0] != 'A' && name[0] != 'B') || name[1] != ':') {
                throw Error(ErrorKind::InvalidArgument, "unknown vector-field unknown " + name);
            }
            skip.insert(name[0] + std::string(":") +
                        Monomial::parse(std::string_view(name).substr(2)).to_string());
        }
    }

    detail::TruncatedSystem sys(degree_cap, {});
    const int unknown_deg = degree_cap - ord + 1;
    const Polynomial2& f = c.f();
    for (const char* part : {"A", "B"}) {
        Var v = part[0] == 'A' ? Var::X : Var::Y;
        for (const auto& m : monomials_up_to(unknown_deg)) {
            if (skip.count(std::string(part) + ":" + m.to_string())) {
                continue;
            }
            sys.add_unknown(part, m, {p2_partial(Polynomial2::monomial(m) * f, v)});
        }
    }
    sys.set_target({f});

    VectorFieldResult result;
    result.verdict = sys.solve();

    const LinearProblem& p = sys.problem();
    std::vector<std::size_t> linear_cols;
    for (std::size_t col = 0; col < p.cols(); ++col) {
        Monomial m = Monomial::parse(std::string_view(p.col_label(col)).substr(2));
        if (m.degree() == 1) {
            linear_cols.push_back(col);
            result.reduced.unknowns.push_back(vector_field_alias(p.col_label(col)));
        }
    }
    for (std::size_t r = 0; r < p.rows(); ++r) {
        bool touches_linear = false;
        bool only_linear = true;
        for (std::size_t col = 0; col < p.cols(); ++col) {
            if (p.at(r, col).is_zero()) {
                continue;
            }
            bool linear = std::find(linear_cols.begin(), linear_cols.end(), col) != linear_cols.end();
            touches_linear = touches_linear || linear;
            only_linear = only_linear && linear;
        }
        if (!touches_linear || !only_linear) {
            continue;
        }
        std::vector<GR> row;
        for (std::size_t col : linear_cols) {
            row.push_back(p.at(r, col));
        }
        row.push_back(p.rhs(r));
        result.reduced.rows.push_back(p.row_label(r));
        result.reduced.augmented.push_back(std::move(row));
    }
    if (!result.reduced.augmented.empty() &&
        result.reduced.augmented.size() == linear_cols.size() + 1) {
        result.reduced.determinant = determinant(result.reduced.augmented);
    }
    return result;
}

MembershipVerdict exactness_solve(const CurveOneForm& omega, int degree_cap)
{
    if (degree_cap < 0) {
        throw Error(ErrorKind::InvalidArgument, "degree cap must be nonnegative");
    }
    const PlaneCurve& c = *omega.curve();
    const int k = degree_cap + c.degree();
    detail::TruncatedSystem sys(k, {"dx", "dy"});
    for (const auto& m : monomials_up_to(k + 1)) {
        if (m.degree() == 0) {
            continue;
        }
        Polynomial2 mono = Polynomial2::monomial(m);
        sys.add_unknown("H", m, {p2_partial(mono, Var::X), p2_partial(mono, Var::Y)});
    }
    sys.add_multiples("h", {c.fx(), c.fy()});
    sys.add_multiples("beta_dx", {c.f(), Polynomial2()});
    sys.add_multiples("beta_dy", {Polynomial2(), c.f()});
    sys.set_target({omega.a(), omega.b()});
    return sys.solve();
}

}  // namespace rhc
