#include "rhcurve/report.hpp"

#include "rhcurve/errors.hpp"

#include <memory>

namespace rhc::report {

namespace {

json sparse(const std::vector<GR>& v)
{
    json out = json::array();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_zero()) {
            out.push_back({i, v[i].to_string()});
        }
    }
    return out;
}

std::vector<GR> dense(const json& j, std::size_t size, const char* what)
{
    if (!j.is_array()) {
        throw ParseError(std::string(what) + ": expected [index, value] pairs");
    }
    std::vector<GR> out(size);
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() ||
            e[0].get<std::size_t>() >= size) {
            throw ParseError(std::string(what) + ": bad [index, value] pair");
        }
        out[e[0].get<std::size_t>()] = io::coefficient_from_json(e[1]);
    }
    return out;
}

json parts_json(const std::map<std::string, Polynomial2>& parts)
{
    json out = json::object();
    for (const auto& [name, p] : parts) {
        out[name] = io::to_json(p);
    }
    return out;
}

}  // namespace

const char* tool_version()
{
    return "0.3.0";
}

json tool_info()
{
    return {{"name", "rhcurve"}, {"version", tool_version()}};
}

json to_json(const Certificate& c)
{
    json system;
    const LinearProblem& p = *c.problem;
    json rows = json::array();
    for (std::size_t r = 0; r < p.rows(); ++r) {
        rows.push_back(p.row_label(r));
    }
    json cols = json::array();
    for (std::size_t k = 0; k < p.cols(); ++k) {
        json entries = json::array();
        for (const auto& [r, v] : p.column(k)) {
            entries.push_back({r, v.to_string()});
        }
        cols.push_back({{"label", p.col_label(k)}, {"entries", entries}});
    }
    json rhs = json::array();
    for (std::size_t r = 0; r < p.rows(); ++r) {
        if (!p.rhs(r).is_zero()) {
            rhs.push_back({r, p.rhs(r).to_string()});
        }
    }
    system["rows"] = rows;
    system["columns"] = cols;
    system["rhs"] = rhs;

    json out{{"feasible", c.feasible}, {"system", system}};
    if (c.feasible) {
        out["solution"] = sparse(c.solution);
    } else {
        out["witness"] = sparse(c.witness);
    }
    return out;
}

Certificate certificate_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("system") || !j.contains("feasible")) {
        throw ParseError("certificate: expected \"feasible\" and \"system\"");
    }
    const json& s = j["system"];
    auto problem = std::make_shared<LinearProblem>();
    for (const auto& label : s.at("rows")) {
        problem->add_row(label.get<std::string>());
    }
    for (const auto& col : s.at("columns")) {
        std::size_t k = problem->add_column(col.at("label").get<std::string>());
        std::vector<GR> entries = dense(col.at("entries"), problem->rows(), "certificate column");
        for (std::size_t r = 0; r < entries.size(); ++r) {
            if (!entries[r].is_zero()) {
                problem->add(r, k, entries[r]);
            }
        }
    }
    std::vector<GR> rhs = dense(s.at("rhs"), problem->rows(), "certificate rhs");
    for (std::size_t r = 0; r < rhs.size(); ++r) {
        if (!rhs[r].is_zero()) {
            problem->add_rhs(r, rhs[r]);
        }
    }
    Certificate c;
    c.feasible = j["feasible"].get<bool>();
    if (c.feasible) {
        c.solution = dense(j.at("solution"), problem->cols(), "certificate solution");
    } else {
        c.witness = dense(j.at("witness"), problem->rows(), "certificate witness");
    }
    c.problem = std::move(problem);
    return c;
}

json to_json(const MembershipVerdict& v)
{
    json out{{"status", to_string(v.status)},
             {"truncation_degree", v.truncation_degree},
             {"certificate", to_json(v.certificate)}};
    if (v.feasible()) {
        out["solution"] = parts_json(v.parts);
    }
    return out;
}

json to_json(const StrongHolomorphyVerdict& v)
{
    json out{{"status", to_string(v.status)},
             {"order", v.order},
             {"certificate", to_json(v.certificate)}};
    if (v.strong()) {
        out["g"] = io::to_json(v.g);
    }
    return out;
}

json to_json(const TorsionResult& t)
{
    json vals = json::array();
    for (const auto& v : t.pullback_valuations) {
        vals.push_back(v ? json(*v) : json(nullptr));
    }
    return {{"torsion", t.torsion}, {"order_checked", t.order_checked}, {"pullback_valuations", vals}};
}

json to_json(const VectorFieldResult& r)
{
    json out = to_json(r.verdict);
    json aug = json::array();
    for (const auto& row : r.reduced.augmented) {
        json jr = json::array();
        for (const auto& v : row) {
            jr.push_back(v.to_string());
        }
        aug.push_back(jr);
    }
    out["reduced"] = {{"unknowns", r.reduced.unknowns}, {"rows", r.reduced.rows}, {"augmented", aug}};
    if (r.reduced.determinant) {
        out["reduced"]["determinant"] = r.reduced.determinant->to_string();
    }
    return out;
}

json normalization_to_json(const Normalization& nz)
{
    json branches = json::array();
    for (const auto& b : nz.branches()) {
        json jb = io::to_json(b);
        jb["residual_order"] = verify_branch(*nz.curve(), b).to_string();
        branches.push_back(jb);
    }
    return {{"order", nz.order()}, {"branches", branches}};
}

json frame_summary(const CurveFrame& frame, std::size_t terms)
{
    json branches = json::array();
    for (const auto& bf : frame.frames) {
        json entries = json::array();
        for (const auto& s : bf.s) {
            json lead = json::array();
            for (std::size_t k = 0; k < s.order() && lead.size() < terms; ++k) {
                if (!s[k].is_zero()) {
                    lead.push_back({std::to_string(k), s[k].to_string()});
                }
            }
            entries.push_back(lead);
        }
        branches.push_back({{"branch", bf.branch_index}, {"leading_terms", entries}});
    }
    json strong = json::array();
    for (const auto& v : frame.strong) {
        strong.push_back(to_json(v));
    }
    return {{"rank", frame.rank}, {"order", frame.order}, {"branches", branches}, {"strong", strong}};
}

json to_json(const NonTameWitness& w)
{
    return {{"primitive", to_json(w.primitive)},
            {"h", io::to_json(w.h)},
            {"omega", io::to_json(w.omega)},
            {"torsion", to_json(w.torsion)},
            {"is_zero", to_json(w.is_zero)},
            {"corrected", to_json(w.corrected)}};
}

json to_json(const ClassifyRun& run)
{
    const Classification& c = run.classification;
    json flat = json::array();
    for (const auto& v : c.flatness) {
        flat.push_back(to_json(v));
    }
    json par = json::array();
    for (const auto& v : c.parallelism) {
        par.push_back(to_json(v));
    }
    json norm = normalization_to_json(run.normalization);
    norm["source"] = run.normalization_source;

    json out{{"tool", tool_info()},
             {"input", io::to_json(run.problem)},
             {"normalization", norm},
             {"order", c.order},
             {"degree_cap", c.degree_cap},
             {"flatness", flat},
             {"parallelism", par},
             {"status", to_string(c.status)},
             {"note", c.note},
             {"timing_ms", run.elapsed_ms},
             {"seed", run.problem.seed ? json(*run.problem.seed) : json(nullptr)}};
    out["frame"] = c.frame ? frame_summary(*c.frame) : json(nullptr);
    out["witness"] = c.witness ? to_json(*c.witness) : json(nullptr);
    return out;
}

int exit_code(ClassificationStatus s)
{
    switch (s) {
    case ClassificationStatus::StrongFrame:
        return 0;
    case ClassificationStatus::NonTame:
        return 3;
    case ClassificationStatus::NoStrongFrameUpToOrder:
        return 4;
    case ClassificationStatus::FlatnessFailed:
        return 5;
    }
    return 4;
}

}  // namespace rhc::report
