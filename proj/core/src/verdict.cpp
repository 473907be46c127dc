#include "rhcurve/verdict.hpp"

namespace rhc {

bool Certificate::verify() const
{
    if (!problem) {
        return false;
    }
    return feasible ? check_solution(*problem, solution) : check_witness(*problem, witness);
}

std::vector<std::pair<std::string, GR>> Certificate::witness_entries() const
{
    std::vector<std::pair<std::string, GR>> out;
    for (std::size_t r = 0; r < witness.size(); ++r) {
        if (!witness[r].is_zero()) {
            out.emplace_back(problem->row_label(r), witness[r]);
        }
    }
    return out;
}

const char* to_string(Feasibility f)
{
    return f == Feasibility::Feasible ? "Feasible" : "Infeasible";
}

const char* to_string(StrongStatus s)
{
    return s == StrongStatus::StrongUpToOrder ? "StrongUpToOrder" : "CertifiedNotStrong";
}

std::map<std::string, Polynomial2> collect_parts(const LinearProblem& p,
                                                 const std::vector<GR>& solution)
{
    std::map<std::string, Polynomial2> parts;
    for (std::size_t c = 0; c < p.cols() && c < solution.size(); ++c) {
        const std::string& label = p.col_label(c);
        auto colon = label.find(':');
        if (colon == std::string::npos) {
            continue;
        }
        std::string name = label.substr(0, colon);
        Monomial m = Monomial::parse(std::string_view(label).substr(colon + 1));
        parts[name] += Polynomial2::monomial(m, solution[c]);
    }
    return parts;
}

}  // namespace rhc
