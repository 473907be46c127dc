// rhcurve command-line front end.

#include "rhcurve/connection.hpp"
#include "rhcurve/curve.hpp"
#include "rhcurve/errors.hpp"
#include "rhcurve/io.hpp"
#include "rhcurve/local_algebra.hpp"
#include "rhcurve/reference_example.hpp"
#include "rhcurve/report.hpp"

#include <CLI11.hpp>

#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using nlohmann::json;

enum Exit {
    kOk = 0,
    kParse = 1,
    kNormalization = 2,
    kChecklistFailed = 6,
};

struct Style {
    bool color = false;

    std::string paint(const std::string& text, const char* code) const
    {
        return color ? std::string("\033[") + code + "m" + text + "\033[0m" : text;
    }
    std::string good(const std::string& t) const { return paint(t, "32"); }
    std::string bad(const std::string& t) const { return paint(t, "31"); }
    std::string note(const std::string& t) const { return paint(t, "33"); }
    std::string bold(const std::string& t) const { return paint(t, "1"); }
};

Style make_style()
{
    Style s;
    if (const char* env = std::getenv("RH_COLOR")) {
        s.color = std::string(env) == "1";
    } else {
        s.color = isatty(STDOUT_FILENO) != 0;
    }
    return s;
}

std::string series_text(const rhc::USeries& s, std::size_t max_terms = 6)
{
    std::ostringstream out;
    std::size_t shown = 0;
    for (std::size_t k = 0; k < s.order() && shown < max_terms; ++k) {
        if (s[k].is_zero()) {
            continue;
        }
        std::string c = s[k].to_string();
        bool compound = c.find_first_of("+-", 1) != std::string::npos;
        bool negative = !compound && c[0] == '-';
        if (negative) {
            c.erase(0, 1);
        }
        if (shown > 0) {
            out << (negative ? " - " : " + ");
        } else if (negative) {
            out << "-";
        }
        if (compound) {
            c = "(" + c + ")";
        }
        if (k == 0) {
            out << c;
        } else {
            out << (c == "1" ? "" : c + "*") << "s^" << k;
        }
        ++shown;
    }
    if (shown == 0) {
        out << "0";
    }
    out << " + O(s^" << s.order() << ")";
    return out.str();
}

std::string valuation_text(const rhc::USeries& s)
{
    auto v = s.valuation();
    return v ? std::to_string(*v) : "inf";
}

void print_verdict(const rhc::MembershipVerdict& v, const Style& st)
{
    std::cout << "  status: "
              << (v.feasible() ? st.good(to_string(v.status)) : st.bad(to_string(v.status)))
              << "  (compared modulo m^" << v.truncation_degree + 1 << ")\n";
    std::cout << "  certificate re-check: " << (v.certificate.verify() ? "ok" : "FAILED") << "\n";
    if (v.feasible()) {
        for (const auto& [name, p] : v.parts) {
            std::cout << "  " << name << " = " << p.to_string() << "\n";
        }
    } else {
        auto entries = v.certificate.witness_entries();
        std::cout << "  witness (" << entries.size() << " nonzero rows):\n";
        std::size_t shown = 0;
        for (const auto& [row, val] : entries) {
            if (shown++ == 12) {
                std::cout << "    ...\n";
                break;
            }
            std::cout << "    " << row << " : " << val.to_string() << "\n";
        }
    }
}

int cmd_puiseux(const std::string& path, std::size_t order, bool as_json, const Style& st)
{
    rhc::CurvePtr curve = rhc::io::curve_from_json(rhc::io::read_json_file(path));
    rhc::Normalization nz = rhc::newton_puiseux(curve, order);
    if (as_json) {
        json out{{"tool", rhc::report::tool_info()},
                 {"curve", rhc::io::curve_to_json(*curve)},
                 {"normalization", rhc::report::normalization_to_json(nz)}};
        std::cout << rhc::io::canonical_dump(out);
        return kOk;
    }
    std::cout << st.bold("curve") << " f = " << curve->f().to_string() << "\n";
    std::cout << nz.branches().size() << " branch(es) to order " << order << "\n";
    std::size_t j = 0;
    for (const auto& b : nz.branches()) {
        std::cout << st.bold("branch " + std::to_string(j++)) << "  ords (" << valuation_text(b.x())
                  << ", " << valuation_text(b.y())
                  << ")  residual order " << rhc::verify_branch(*curve, b).to_string() << "\n";
        std::cout << "  x = " << series_text(b.x()) << "\n";
        std::cout << "  y = " << series_text(b.y()) << "\n";
    }
    return kOk;
}

int cmd_classify(const std::string& path, std::optional<std::size_t> order, std::optional<int> cap,
                 std::optional<long> seed, bool as_json, const Style& st)
{
    rhc::io::ProblemSpec problem = rhc::io::problem_from_json(rhc::io::read_json_file(path));
    if (order) {
        problem.order = *order;
    }
    if (cap) {
        problem.degree_cap = *cap;
    }
    if (seed) {
        problem.seed = *seed;
    }
    if (problem.order < 2 || problem.degree_cap < 1) {
        throw rhc::Error(rhc::ErrorKind::InvalidArgument, "order must be >= 2 and cap >= 1");
    }

    auto start = std::chrono::steady_clock::now();
    std::string source = problem.branches ? "input" : "newton_puiseux";
    rhc::Normalization nz = problem.branches
                                ? rhc::Normalization(problem.curve, *problem.branches)
                                : rhc::newton_puiseux(problem.curve, problem.order);
    if (nz.order() < problem.order) {
        throw rhc::Error(rhc::ErrorKind::OrderMismatch,
                         "branches are known to order " + std::to_string(nz.order()) +
                             ", below the requested " + std::to_string(problem.order));
    }
    nz = nz.truncated(problem.order);
    rhc::Classification cl =
        rhc::classify(*problem.connection, nz, problem.order, problem.degree_cap);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();

    int code = rhc::report::exit_code(cl.status);
    if (as_json) {
        rhc::report::ClassifyRun run{problem, nz, source, cl, static_cast<long long>(ms)};
        std::cout << rhc::io::canonical_dump(rhc::report::to_json(run));
        return code;
    }

    std::cout << st.bold("curve") << " f = " << problem.curve->f().to_string() << "\n";
    std::cout << "rank " << problem.connection->rank() << ", N = " << problem.order
              << ", D = " << problem.degree_cap << ", " << nz.branches().size() << " branch(es) from "
              << source << "\n";
    std::size_t flat_ok = 0;
    for (const auto& v : cl.flatness) {
        flat_ok += v.feasible() ? 1 : 0;
    }
    std::cout << "flatness: " << flat_ok << "/" << cl.flatness.size() << " entries Feasible\n";
    if (cl.frame) {
        std::size_t strong = 0;
        for (const auto& v : cl.frame->strong) {
            strong += v.strong() ? 1 : 0;
        }
        std::cout << "frame: " << strong << "/" << cl.frame->strong.size()
                  << " entries StrongUpToOrder\n";
        for (const auto& bf : cl.frame->frames) {
            std::cout << "  branch " << bf.branch_index << " S[0][0] = " << series_text(bf.s[0], 3)
                      << "\n";
        }
    }
    if (!cl.parallelism.empty()) {
        std::size_t ok = 0;
        for (const auto& v : cl.parallelism) {
            ok += v.feasible() ? 1 : 0;
        }
        std::cout << "parallel polynomial frame: " << ok << "/" << cl.parallelism.size()
                  << " columns Feasible\n";
    }
    if (cl.witness) {
        const auto& w = *cl.witness;
        std::cout << "witness: H = " << w.h.to_string() << "\n";
        std::cout << "  omega = A - dH pulls back to zero mod s^" << w.torsion.order_checked << "\n";
        std::cout << "  omega == 0 in forms of the curve: " << to_string(w.is_zero.status)
                  << "; with invisible corrections: " << to_string(w.corrected.status) << "\n";
    }
    std::string status = to_string(cl.status);
    std::cout << "status: "
              << (cl.status == rhc::ClassificationStatus::StrongFrame ? st.good(status)
                                                                      : st.bad(status))
              << "\n";
    if (!cl.note.empty()) {
        std::cout << "note: " << cl.note << "\n";
    }
    std::cout << "time: " << ms << " ms\n";
    return code;
}

int cmd_paper_example(std::size_t order, int cap, bool as_json, const Style& st)
{
    rhc::nontame::Checklist list = rhc::nontame::run_checklist(order, cap);
    const rhc::nontame::CheckResult* fail = list.first_failure();
    if (as_json) {
        std::cout << rhc::io::canonical_dump(rhc::nontame::to_json(list));
    } else {
        std::cout << st.bold("reference example") << " f = x^4 + x*y^4 + y^5, N = " << order
                  << ", D = " << cap << "\n";
        for (const auto& c : list.checks) {
            std::string s = to_string(c.status);
            std::string painted = c.status == rhc::nontame::CheckStatus::Pass   ? st.good(s)
                                  : c.status == rhc::nontame::CheckStatus::Fail ? st.bad(s)
                                                                                : st.note(s);
            std::cout << "(" << c.id << ") " << painted << "  " << c.title << ": " << c.detail
                      << "\n";
        }
    }
    if (fail) {
        std::cerr << "check (" << fail->id << ") failed: " << fail->title << "\n";
        return kChecklistFailed;
    }
    return kOk;
}

int cmd_membership(const std::string& target_path, const std::string& gens_path, int cap,
                   bool as_json, const Style& st)
{
    rhc::Polynomial2 target = rhc::io::polynomial_from_json(rhc::io::read_json_file(target_path));
    json gj = rhc::io::read_json_file(gens_path);
    if (gj.is_object() && gj.contains("generators")) {
        gj = gj["generators"];
    }
    if (!gj.is_array()) {
        throw rhc::ParseError(gens_path + ": expected an array of polynomials or {\"generators\": [...]}");
    }
    std::vector<rhc::Polynomial2> gens;
    for (const auto& g : gj) {
        gens.push_back(rhc::io::polynomial_from_json(g));
    }
    rhc::MembershipVerdict v = rhc::ideal_membership(target, gens, cap);
    if (as_json) {
        json jg = json::array();
        for (const auto& g : gens) {
            jg.push_back(rhc::io::to_json(g));
        }
        json out{{"tool", rhc::report::tool_info()},
                 {"target", rhc::io::to_json(target)},
                 {"generators", jg},
                 {"degree_cap", cap},
                 {"verdict", rhc::report::to_json(v)}};
        std::cout << rhc::io::canonical_dump(out);
        return kOk;
    }
    std::cout << st.bold("target") << " " << target.to_string() << "\n";
    for (std::size_t i = 0; i < gens.size(); ++i) {
        std::cout << "  g" << i << " = " << gens[i].to_string() << "\n";
    }
    print_verdict(v, st);
    return kOk;
}

int error_exit(const rhc::Error& e)
{
    switch (e.kind()) {
    case rhc::ErrorKind::Parse:
    case rhc::ErrorKind::InvalidArgument:
        return kParse;
    default:
        return kNormalization;
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Flat connections at plane curve singularities, in exact arithmetic"};
    app.require_subcommand(1);
    app.set_version_flag("--version", rhc::report::tool_version());

    bool as_json = false;
    std::size_t order = 40;
    int cap = 8;
    long seed = 0;
    std::string file_a;
    std::string file_b;

    auto* puiseux = app.add_subcommand("puiseux", "Branches of a curve by Newton polygons");
    puiseux->add_option("curve_file", file_a, "curve JSON")->required();
    puiseux->add_option("-n,--order", order, "series order N")->check(CLI::Range(2, 100000));
    puiseux->add_flag("--json", as_json, "canonical JSON output");

    auto* classify = app.add_subcommand("classify", "Classify a flat connection");
    classify->add_option("problem_file", file_a, "problem JSON")->required();
    auto* c_order = classify->add_option("-n,--order", order, "series order N (overrides the file)")
                        ->check(CLI::Range(2, 100000));
    auto* c_cap = classify->add_option("--cap", cap, "degree cap D (overrides the file)")
                      ->check(CLI::Range(1, 64));
    auto* c_seed = classify->add_option("--seed", seed, "seed recorded in the report");
    classify->add_flag("--json", as_json, "canonical JSON output");

    auto* paper = app.add_subcommand("paper-example", "Run the built-in non-tame example checklist");
    paper->add_option("-n,--order", order, "series order N")->check(CLI::Range(8, 100000));
    paper->add_option("--cap", cap, "degree cap D")->check(CLI::Range(1, 64));
    paper->add_flag("--json", as_json, "canonical JSON output");

    auto* member = app.add_subcommand("membership", "Truncated ideal membership");
    member->add_option("target_file", file_a, "polynomial JSON")->required();
    member->add_option("generators_file", file_b, "array of polynomial JSON")->required();
    member->add_option("--cap", cap, "degree cap D")->check(CLI::Range(0, 64));
    member->add_flag("--json", as_json, "canonical JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kParse;
    }

    const Style st = make_style();
    try {
        if (*puiseux) {
            return cmd_puiseux(file_a, order, as_json, st);
        }
        if (*classify) {
            std::optional<std::size_t> n;
            std::optional<int> d;
            std::optional<long> s;
            if (c_order->count() > 0) {
                n = order;
            }
            if (c_cap->count() > 0) {
                d = cap;
            }
            if (c_seed->count() > 0) {
                s = seed;
            }
            return cmd_classify(file_a, n, d, s, as_json, st);
        }
        if (*paper) {
            return cmd_paper_example(order, cap, as_json, st);
        }
        if (*member) {
            return cmd_membership(file_a, file_b, cap, as_json, st);
        }
    } catch (const rhc::ParseError& e) {
        std::cerr << "parse error: " << e.what();
        if (e.position() != std::string::npos) {
            std::cerr << " (at byte " << e.position() << ")";
        }
        std::cerr << "\n";
        return kParse;
    } catch (const rhc::Error& e) {
        std::cerr << to_string(e.kind()) << ": " << e.what() << "\n";
        return error_exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNormalization;
    }
    return kOk;
}
