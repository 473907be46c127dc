#include "rhcurve/io.hpp"

#include "rhcurve/errors.hpp"

#include <fstream>
#include <sstream>

namespace rhc::io {

namespace {

const json& require(const json& j, const char* key, const char* what)
{
    if (!j.is_object()) {
        throw ParseError(std::string(what) + ": expected a JSON object");
    }
    auto it = j.find(key);
    if (it == j.end()) {
        throw ParseError(std::string(what) + ": missing key \"" + key + "\"");
    }
    return *it;
}

std::size_t size_from_json(const json& j, const char* what)
{
    if (j.is_number_unsigned()) {
        return j.get<std::size_t>();
    }
    if (j.is_number_integer() && j.get<long>() >= 0) {
        return static_cast<std::size_t>(j.get<long>());
    }
    if (j.is_string()) {
        const std::string& s = j.get_ref<const std::string&>();
        std::size_t pos = 0;
        try {
            unsigned long v = std::stoul(s, &pos);
            if (pos == s.size()) {
                return v;
            }
        } catch (const std::exception&) {
        }
        throw ParseError(std::string(what) + ": \"" + s + "\" is not a nonnegative integer", pos);
    }
    throw ParseError(std::string(what) + ": expected a nonnegative integer");
}

}  // namespace

json to_json(const GR& z)
{
    return z.to_string();
}

GR coefficient_from_json(const json& j)
{
    if (j.is_string()) {
        return GR::parse(j.get_ref<const std::string&>());
    }
    if (j.is_number_integer()) {
        return GR(j.get<long>());
    }
    throw ParseError("coefficient: expected a string literal such as \"3/2-1/4*i\"");
}

json to_json(const Polynomial2& p)
{
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) {
        terms.push_back({{"m", m.to_string()}, {"c", c.to_string()}});
    }
    return {{"terms", terms}};
}

Polynomial2 polynomial_from_json(const json& j)
{
    const json& terms = require(j, "terms", "polynomial");
    if (!terms.is_array()) {
        throw ParseError("polynomial: \"terms\" must be an array");
    }
    Polynomial2 p;
    for (const auto& t : terms) {
        const json& m = require(t, "m", "polynomial term");
        if (!m.is_string()) {
            throw ParseError("polynomial term: \"m\" must be a string");
        }
        p += Polynomial2::monomial(Monomial::parse(m.get_ref<const std::string&>()),
                                   coefficient_from_json(require(t, "c", "polynomial term")));
    }
    return p;
}

json series_to_json(const USeries& s)
{
    json out = json::array();
    for (std::size_t k = 0; k < s.order(); ++k) {
        if (!s[k].is_zero()) {
            out.push_back({std::to_string(k), s[k].to_string()});
        }
    }
    return out;
}

USeries series_from_json(const json& j, std::size_t order)
{
    if (!j.is_array()) {
        throw ParseError("series: expected an array of [exponent, coefficient] pairs");
    }
    std::vector<GR> coeffs(order);
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2) {
            throw ParseError("series: each entry must be an [exponent, coefficient] pair");
        }
        std::size_t e = size_from_json(pair[0], "series exponent");
        if (e < order) {
            coeffs[e] += coefficient_from_json(pair[1]);
        }
    }
    return USeries(order, std::move(coeffs));
}

json to_json(const Branch& b)
{
    return {{"order", b.order()}, {"x", series_to_json(b.x())}, {"y", series_to_json(b.y())}};
}

Branch branch_from_json(const json& j)
{
    std::size_t order = size_from_json(require(j, "order", "branch"), "branch order");
    return Branch(series_from_json(require(j, "x", "branch"), order),
                  series_from_json(require(j, "y", "branch"), order), order);
}

json curve_to_json(const PlaneCurve& c)
{
    return {{"f", to_json(c.f())}};
}

CurvePtr curve_from_json(const json& j)
{
    return make_curve(polynomial_from_json(require(j, "f", "curve")));
}

json to_json(const CurveOneForm& w)
{
    return {{"dx", to_json(w.a())}, {"dy", to_json(w.b())}};
}

CurveOneForm oneform_from_json(const json& j, const CurvePtr& curve)
{
    return {curve, polynomial_from_json(require(j, "dx", "one-form")),
            polynomial_from_json(require(j, "dy", "one-form"))};
}

json to_json(const Connection& c)
{
    json rows = json::array();
    for (std::size_t i = 0; i < c.rank(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < c.rank(); ++k) {
            row.push_back(to_json(c.entry(i, k)));
        }
        rows.push_back(row);
    }
    return {{"rank", c.rank()}, {"A", rows}};
}

Connection connection_from_json(const json& j, const CurvePtr& curve)
{
    std::size_t rank = size_from_json(require(j, "rank", "connection"), "connection rank");
    const json& a = require(j, "A", "connection");
    if (!a.is_array() || a.size() != rank) {
        throw ParseError("connection: \"A\" must be an array of " + std::to_string(rank) + " rows");
    }
    std::vector<CurveOneForm> entries;
    for (const auto& row : a) {
        if (!row.is_array() || row.size() != rank) {
            throw ParseError("connection: every row of \"A\" needs " + std::to_string(rank) +
                             " one-forms");
        }
        for (const auto& e : row) {
            entries.push_back(oneform_from_json(e, curve));
        }
    }
    return Connection(curve, rank, std::move(entries));
}

ProblemSpec problem_from_json(const json& j)
{
    ProblemSpec p;
    p.curve = curve_from_json(require(j, "curve", "problem"));
    p.connection = connection_from_json(require(j, "connection", "problem"), p.curve);
    if (j.contains("branches")) {
        const json& bs = j["branches"];
        if (!bs.is_array()) {
            throw ParseError("problem: \"branches\" must be an array");
        }
        std::vector<Branch> branches;
        for (const auto& b : bs) {
            branches.push_back(branch_from_json(b));
        }
        p.branches = std::move(branches);
    }
    if (j.contains("order")) {
        p.order = size_from_json(j["order"], "problem order");
    }
    if (j.contains("degree_cap")) {
        p.degree_cap = static_cast<int>(size_from_json(j["degree_cap"], "problem degree_cap"));
    }
    if (j.contains("seed")) {
        if (!j["seed"].is_number_integer()) {
            throw ParseError("problem: \"seed\" must be an integer");
        }
        p.seed = j["seed"].get<long>();
    }
    return p;
}

json to_json(const ProblemSpec& p)
{
    json j;
    j["curve"] = curve_to_json(*p.curve);
    if (p.connection) {
        j["connection"] = to_json(*p.connection);
    }
    if (p.branches) {
        json bs = json::array();
        for (const auto& b : *p.branches) {
            bs.push_back(to_json(b));
        }
        j["branches"] = bs;
    }
    j["order"] = p.order;
    j["degree_cap"] = p.degree_cap;
    if (p.seed) {
        j["seed"] = *p.seed;
    }
    return j;
}

json parse_json_text(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
    }
}

json read_json_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_json_text(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what(), e.position());
    }
}

std::string canonical_dump(const json& j)
{
    return j.dump(2) + "\n";
}

}  // namespace rhc::io
