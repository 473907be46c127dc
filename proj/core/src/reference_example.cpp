#include "rhcurve/reference_example.hpp"

#include "rhcurve/connection.hpp"
#include "rhcurve/curve.hpp"
#include "rhcurve/errors.hpp"
#include "rhcurve/forms.hpp"
#include "rhcurve/io.hpp"
#include "rhcurve/local_algebra.hpp"
#include "rhcurve/report.hpp"

#include <functional>
#include <sstream>

namespace rhc::nontame {

namespace {

using nlohmann::json;

Polynomial2 mono(int a, int b)
{
    return Polynomial2::monomial(Monomial{a, b});
}

// Minimal order at which every check has something to look at.
constexpr std::size_t kMinOrder = 8;
// (h) looks at t^1..t^24.
constexpr std::size_t kSupportBound = 24;

CheckResult run_one(const std::string& id, const std::string& title,
                    const std::function<void(CheckResult&)>& body)
{
    CheckResult r;
    r.id = id;
    r.title = title;
    r.data = json::object();
    try {
        body(r);
    } catch (const std::exception& e) {
        r.status = CheckStatus::Fail;
        r.detail = std::string("exception: ") + e.what();
    }
    return r;
}

void set(CheckResult& r, bool ok, std::string detail)
{
    r.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
    r.detail = std::move(detail);
}

}  // namespace

std::vector<DenominatorIdentity> universal_denominator_identities()
{
    const Polynomial2 s = -(mono(1, 0) + mono(0, 1));
    const Monomial x3{3, 0}, x2y{2, 1}, xy2{1, 2}, y3{0, 3};
    return {
        {1, x3, s * mono(0, 3)},  {1, x2y, mono(3, 0)},     {1, xy2, mono(2, 1)},
        {1, y3, mono(1, 2)},      {2, x3, s * mono(1, 2)},  {2, x2y, s * mono(0, 3)},
        {2, xy2, mono(3, 0)},     {2, y3, mono(2, 1)},      {3, x3, s * mono(2, 1)},
        {3, x2y, s * mono(1, 2)}, {3, xy2, s * mono(0, 3)}, {3, y3, mono(3, 0)},
    };
}

const char* to_string(CheckStatus s)
{
    switch (s) {
    case CheckStatus::Pass:
        return "PASS";
    case CheckStatus::Fail:
        return "FAIL";
    case CheckStatus::Skipped:
        return "SKIPPED";
    }
    return "FAIL";
}

bool Checklist::passed() const
{
    return first_failure() == nullptr;
}

const CheckResult* Checklist::first_failure() const
{
    for (const auto& c : checks) {
        if (c.status == CheckStatus::Fail) {
            return &c;
        }
    }
    return nullptr;
}

Checklist run_checklist(std::size_t order, int degree_cap)
{
    if (order < kMinOrder) {
        throw Error(ErrorKind::InvalidArgument,
                    "the reference checklist needs order >= " + std::to_string(kMinOrder));
    }
    if (degree_cap < 1) {
        throw Error(ErrorKind::InvalidArgument, "degree cap must be positive");
    }
    const std::size_t n = order;
    Checklist out;
    out.order = n;
    out.degree_cap = degree_cap;

    const CurvePtr c = curve();
    const Branch psi = branch(n);
    const Normalization nz(c, {psi});
    const CurveOneForm a = alpha();

    out.checks.push_back(run_one("a", "f vanishes along the branch", [&](CheckResult& r) {
        ResidualOrder res = verify_branch(*c, psi);
        r.data["residual_order"] = res.to_string();
        set(r, res.infinite, "f(psi) == 0 mod t^" + std::to_string(n));
    }));

    out.checks.push_back(run_one("b", "branch is primitive", [&](CheckResult& r) {
        std::size_t g = exponent_gcd(psi.x(), psi.y());
        Normalization np = newton_puiseux(c, n);
        bool same = np.branches().size() == 1 && same_branch_image(np.branches()[0], psi);
        r.data["exponent_gcd"] = g;
        r.data["newton_puiseux_branches"] = np.branches().size();
        r.data["same_image_as_newton_puiseux"] = same;
        set(r, g == 1 && same,
            "exponent gcd " + std::to_string(g) + ", " + std::to_string(np.branches().size()) +
                " branch(es) found by newton_puiseux" + (same ? ", same image" : ", image differs"));
    }));

    out.checks.push_back(run_one("c", "-(x+y) pulls back to t^4", [&](CheckResult& r) {
        USeries h = p2_eval_on_branch(t4_lift(), psi.x(), psi.y());
        bool ok = h == USeries::monomial(n, 4);
        r.data["pullback"] = io::series_to_json(h);
        set(r, ok, ok ? "exact mod t^" + std::to_string(n) : "pullback differs from t^4");
    }));

    out.checks.push_back(run_one("d", "universal denominator identities", [&](CheckResult& r) {
        BranchPowers bp(psi.x(), psi.y());
        std::size_t good = 0;
        json rows = json::array();
        for (const auto& id : universal_denominator_identities()) {
            USeries lhs = USeries::monomial(n, static_cast<std::size_t>(id.power)) *
                          bp.eval(Polynomial2::monomial(id.m));
            USeries rhs = bp.eval(id.rhs);
            bool ok = lhs == rhs;
            good += ok ? 1 : 0;
            rows.push_back({{"power", id.power},
                            {"monomial", id.m.to_string()},
                            {"rhs", io::to_json(id.rhs)},
                            {"holds", ok}});
        }
        r.data["identities"] = rows;
        set(r, good == 12, std::to_string(good) + "/12 identities hold mod t^" + std::to_string(n));
    }));

    out.checks.push_back(run_one("e", "constrained vector field system", [&](CheckResult& r) {
        VectorFieldResult vf = vector_field_equation_solve(*c, 5, {"A0", "B0", "A12", "B11"});
        const std::vector<std::vector<GR>> expected = {{5, 1, 1}, {1, 6, 1}, {2, 5, 1}};
        bool matrix_ok = vf.reduced.augmented == expected;
        bool det_ok = vf.reduced.determinant && *vf.reduced.determinant == GR(-1);
        bool infeasible = !vf.verdict.feasible() && vf.verdict.certificate.verify();
        r.data["result"] = report::to_json(vf);
        std::ostringstream d;
        d << "K=5 augmented " << (matrix_ok ? "matches" : "differs") << ", determinant "
          << (vf.reduced.determinant ? vf.reduced.determinant->to_string() : "n/a") << ", "
          << to_string(vf.verdict.status);
        set(r, matrix_ok && det_ok && infeasible, d.str());
    }));

    out.checks.push_back(run_one("f", "alpha is not exact", [&](CheckResult& r) {
        json verdicts = json::array();
        bool ok = true;
        for (int d = 1; d <= 6; ++d) {
            MembershipVerdict v = exactness_solve(a, d);
            ok = ok && !v.feasible() && v.certificate.verify();
            verdicts.push_back(report::to_json(v));
        }
        r.data["verdicts"] = verdicts;
        set(r, ok, ok ? "Infeasible with verified witnesses for D = 1..6"
                      : "some cap in 1..6 did not give a verified Infeasible");
    }));

    out.checks.push_back(run_one("g", "alpha is closed", [&](CheckResult& r) {
        MembershipVerdict closed = is_closed(a, degree_cap);
        MembershipVerdict against_f = ideal_membership(d_oneform(a).c(), {c->f()}, degree_cap);
        bool h_ok = against_f.feasible() && against_f.parts.count("h0") &&
                    against_f.parts.at("h0") == Polynomial2::monomial(Monomial{0, 0}, GR(-1));
        bool ok = closed.feasible() && closed.certificate.verify() && h_ok &&
                  against_f.certificate.verify();
        r.data["is_closed"] = report::to_json(closed);
        r.data["against_f"] = report::to_json(against_f);
        set(r, ok, std::string("is_closed ") + to_string(closed.status) + ", d(alpha) = h*f with h " +
                       (h_ok ? "= -1" : "!= -1"));
    }));

    out.checks.push_back(run_one("h", "primitive G vanishes through t^24", [&](CheckResult& r) {
        USeries g = primitive(n);
        auto val = g.valuation();
        r.data["order"] = val ? json(*val) : json(nullptr);
        r.data["precision"] = g.order();
        if (n < kSupportBound + 2) {
            r.status = CheckStatus::Skipped;
            r.detail = "order " + std::to_string(n) + " leaves too few coefficients to test t^1..t^" +
                       std::to_string(kSupportBound) + " (needs order >= " +
                       std::to_string(kSupportBound + 2) + ")";
            return;
        }
        bool zero = true;
        for (std::size_t k = 1; k <= kSupportBound; ++k) {
            zero = zero && g[k].is_zero();
        }
        std::string where = val ? "first nonzero exponent " + std::to_string(*val) + " (coefficient " +
                                      g[*val].to_string() + ")"
                                : "zero mod t^" + std::to_string(g.order());
        if (val) {
            r.data["leading_coefficient"] = g[*val].to_string();
        }
        set(r, zero && g[0].is_zero(), "t^1..t^24 " + std::string(zero ? "vanish" : "do not vanish") +
                                           ", " + where);
    }));

    out.checks.push_back(run_one("i", "G is strongly holomorphic", [&](CheckResult& r) {
        USeries g = primitive(n);
        StrongHolomorphyVerdict v = subalgebra_membership({g.truncated(n)}, nz, n);
        r.data["verdict"] = report::to_json(v);
        set(r, v.strong() && v.certificate.verify(), to_string(v.status));
    }));

    out.checks.push_back(run_one("j", "classification is NonTame", [&](CheckResult& r) {
        Classification cl = classify(connection(), nz, n, degree_cap);
        bool reverified = cl.witness && cl.witness->reverify(connection(), nz);
        r.data["status"] = to_string(cl.status);
        if (cl.witness) {
            r.data["witness"] = report::to_json(*cl.witness);
        }
        set(r, cl.status == ClassificationStatus::NonTame && reverified,
            std::string(to_string(cl.status)) +
                (reverified ? ", witness re-verified" : ", no verified witness"));
    }));

    return out;
}

nlohmann::json to_json(const Checklist& c)
{
    json checks = json::array();
    for (const auto& r : c.checks) {
        checks.push_back({{"id", r.id},
                          {"title", r.title},
                          {"status", to_string(r.status)},
                          {"detail", r.detail},
                          {"data", r.data}});
    }
    const CheckResult* fail = c.first_failure();
    return {{"tool", report::tool_info()},
            {"order", c.order},
            {"degree_cap", c.degree_cap},
            {"checks", checks},
            {"passed", c.passed()},
            {"first_failure", fail ? json(fail->id) : json(nullptr)}};
}

}  // namespace rhc::nontame
