// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 when any
// criterion fails. Usage: rhcurve_acceptance [--seed S]

#include "rhcurve/connection.hpp"
#include "rhcurve/curve.hpp"
#include "rhcurve/forms.hpp"
#include "rhcurve/io.hpp"
#include "rhcurve/local_algebra.hpp"
#include "rhcurve/reference_example.hpp"
#include "rhcurve/report.hpp"

#include "test_support.hpp"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace rhc;

namespace {

constexpr std::size_t kOrder = 40;
constexpr int kCap = 8;

Polynomial2 X = Polynomial2::x();
Polynomial2 Y = Polynomial2::y();

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<Outcome()>& body)
{
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    if (!o.pass) {
        ++failures;
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " -- "
              << o.detail << " [" << ms << " ms]" << std::endl;
}

// y*A == 0 and y*b != 0, evaluated straight from the serialized
// certificate without going through the library's checker.
bool witness_holds_in_json(const nlohmann::json& cert)
{
    if (cert.at("feasible").get<bool>()) {
        return false;
    }
    std::map<std::size_t, GR> y;
    for (const auto& e : cert.at("witness")) {
        y[e[0].get<std::size_t>()] = GR::parse(e[1].get<std::string>());
    }
    if (y.empty()) {
        return false;
    }
    for (const auto& col : cert.at("system").at("columns")) {
        GR s;
        for (const auto& e : col.at("entries")) {
            auto it = y.find(e[0].get<std::size_t>());
            if (it != y.end()) {
                s += it->second * GR::parse(e[1].get<std::string>());
            }
        }
        if (!s.is_zero()) {
            return false;
        }
    }
    GR rhs;
    for (const auto& e : cert.at("system").at("rhs")) {
        auto it = y.find(e[0].get<std::size_t>());
        if (it != y.end()) {
            rhs += it->second * GR::parse(e[1].get<std::string>());
        }
    }
    return !rhs.is_zero();
}

Normalization reference_normalization(std::size_t n)
{
    return Normalization(nontame::curve(), {nontame::branch(n)});
}

// Random rank-one form of degree <= 3 on the node with d(A) vanishing at
// the origin, which is exactly flatness there.
CurveOneForm random_node_form(std::mt19937_64& rng, const CurvePtr& node)
{
    Polynomial2 a = rhc::testing::random_polynomial(rng, 0, 3);
    Polynomial2 b = rhc::testing::random_polynomial(rng, 0, 3);
    GR c0 = p2_partial(b, Var::X).constant_term() - p2_partial(a, Var::Y).constant_term();
    b -= c0 * X;
    return {node, a, b};
}

std::vector<std::pair<GR, GR>> random_directions(std::mt19937_64& rng, std::size_t count)
{
    std::uniform_int_distribution<int> d(-3, 3);
    std::vector<std::pair<GR, GR>> out;
    while (out.size() < count) {
        long a = d(rng), b = d(rng);
        if (a == 0 && b == 0) {
            continue;
        }
        bool fresh = true;
        for (const auto& [p, q] : out) {
            fresh = fresh && !(p * GR(b) - q * GR(a)).is_zero();
        }
        if (fresh) {
            out.emplace_back(GR(a), GR(b));
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv)
{
    unsigned long seed = 20240601;
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::strcmp(argv[i], "--seed") == 0) {
            seed = std::strtoul(argv[i + 1], nullptr, 10);
        }
    }
    std::cout << "rhcurve " << report::tool_version() << " acceptance, N = " << kOrder
              << ", D = " << kCap << ", seed = " << seed << std::endl;

    const CurvePtr ref = nontame::curve();
    const Branch psi = nontame::branch(kOrder);
    const Normalization ref_nz = reference_normalization(kOrder);
    const CurveOneForm alpha = nontame::alpha();

    criterion(1, "f vanishes along the branch mod t^40", [&] {
        ResidualOrder r = verify_branch(*ref, psi);
        return Outcome{r.infinite, "residual order " + r.to_string()};
    });

    criterion(2, "-(x+y) pulls back to t^4 mod t^40", [&] {
        USeries h = p2_eval_on_branch(nontame::t4_lift(), psi.x(), psi.y());
        return Outcome{h == USeries::monomial(kOrder, 4), "pullback valuation " +
                                                              std::to_string(*h.valuation())};
    });

    criterion(3, "twelve universal denominator identities", [&] {
        std::size_t good = 0;
        for (const auto& id : nontame::universal_denominator_identities()) {
            USeries t_i = USeries::monomial(kOrder, static_cast<std::size_t>(id.power));
            USeries lhs = t_i * p2_eval_on_branch(Polynomial2::monomial(id.m), psi.x(), psi.y());
            USeries rhs = p2_eval_on_branch(id.rhs, psi.x(), psi.y());
            good += (lhs - rhs).is_zero() ? 1 : 0;
        }
        return Outcome{good == 12, std::to_string(good) + "/12 hold exactly"};
    });

    criterion(4, "constrained vector field system at K = 5", [&] {
        VectorFieldResult r = vector_field_equation_solve(*ref, 5, {"A0", "B0", "A12", "B11"});
        const std::vector<std::vector<GR>> expected = {{5, 1, 1}, {1, 6, 1}, {2, 5, 1}};
        bool aug = r.reduced.augmented == expected;
        bool det = r.reduced.determinant && *r.reduced.determinant == GR(-1);
        bool inf = !r.verdict.feasible() && r.verdict.certificate.verify();
        std::ostringstream d;
        d << "augmented " << (aug ? "[[5,1|1],[1,6|1],[2,5|1]]" : "differs") << ", det "
          << (r.reduced.determinant ? r.reduced.determinant->to_string() : "n/a") << ", "
          << to_string(r.verdict.status);
        return Outcome{aug && det && inf, d.str()};
    });

    criterion(5, "unconstrained vector field system infeasible at some K <= 8, monotone", [&] {
        int first = -1;
        bool monotone = true;
        bool certified = true;
        for (int k = 4; k <= 8; ++k) {
            VectorFieldResult r = vector_field_equation_solve(*ref, k);
            certified = certified && r.verdict.certificate.verify();
            if (!r.verdict.feasible() && first < 0) {
                first = k;
            }
            if (first >= 0 && r.verdict.feasible()) {
                monotone = false;
            }
        }
        return Outcome{first > 0 && monotone && certified,
                       "first Infeasible at K = " + std::to_string(first) +
                           (monotone ? ", stays Infeasible through K = 8" : ", NOT monotone")};
    });

    criterion(6, "alpha is not exact for D = 1..6", [&] {
        std::string d;
        bool ok = true;
        for (int cap = 1; cap <= 6; ++cap) {
            MembershipVerdict v = exactness_solve(alpha, cap);
            bool good = !v.feasible() && v.certificate.verify();
            ok = ok && good;
            d += (good ? "I" : "?");
        }
        return Outcome{ok, "verified Infeasible per cap: " + d};
    });

    criterion(7, "alpha is closed, d(alpha) = -1 * f", [&] {
        MembershipVerdict closed = is_closed(alpha, kCap);
        MembershipVerdict h = ideal_membership(d_oneform(alpha).c(), {ref->f()}, kCap);
        bool h_ok = h.feasible() && h.parts["h0"] == Polynomial2(GR(-1));
        return Outcome{closed.feasible() && closed.certificate.verify() && h_ok &&
                           h.certificate.verify(),
                       std::string("is_closed ") + to_string(closed.status) + ", h = " +
                           h.parts["h0"].to_string()};
    });

    criterion(8, "primitive G vanishes for t^1..t^24; exact order reported", [&] {
        USeries g = nontame::primitive(kOrder);
        bool zero = g[0].is_zero();
        for (std::size_t k = 1; k <= 24; ++k) {
            zero = zero && g[k].is_zero();
        }
        auto v = g.valuation();
        return Outcome{zero && v.has_value(),
                       v ? "first nonzero exponent " + std::to_string(*v) + ", coefficient " +
                               g[*v].to_string()
                         : std::string("G vanishes mod t^40")};
    });

    criterion(9, "G is strongly holomorphic at N = 40", [&] {
        StrongHolomorphyVerdict v =
            subalgebra_membership({nontame::primitive(kOrder)}, ref_nz, kOrder);
        return Outcome{v.strong() && v.certificate.verify(), to_string(v.status)};
    });

    criterion(10, "d + alpha classifies NonTame with a re-verified witness", [&] {
        Classification cl = classify(nontame::connection(), ref_nz, kOrder, kCap);
        if (cl.status != ClassificationStatus::NonTame || !cl.witness) {
            return Outcome{false, to_string(cl.status)};
        }
        const NonTameWitness& w = *cl.witness;
        bool rev = w.reverify(nontame::connection(), ref_nz);
        // independent re-derivation of the torsion claim
        CurveOneForm omega = alpha - d_function(w.h, ref);
        USeries pb = pullback(omega, psi);
        bool torsion = pb.order() >= kOrder - 1 && pb.is_zero();
        MembershipVerdict z = is_zero_oneform(omega, kCap);
        bool nonzero = !z.feasible() && witness_holds_in_json(report::to_json(z.certificate));
        bool gauge = p2_eval_on_branch(w.h, psi.x(), psi.y()) == nontame::primitive(kOrder);
        std::ostringstream d;
        d << "NonTame; pullback of alpha - dH zero mod t^" << pb.order() << ", is_zero "
          << to_string(z.status) << " at D = " << kCap << ", H o psi "
          << (gauge ? "== G" : "!= G") << ", witness re-verify " << (rev ? "ok" : "FAILED");
        return Outcome{rev && torsion && nonzero && gauge, d.str()};
    });

    criterion(11, "no parallel unit at the origin for D = 1..6", [&] {
        std::string d;
        bool ok = true;
        for (int cap = 1; cap <= 6; ++cap) {
            MembershipVerdict v = parallel_section_at_origin(nontame::connection(), kOrder, cap);
            bool good = !v.feasible() && v.certificate.verify();
            ok = ok && good;
            d += (good ? "I" : "?");
        }
        return Outcome{ok, "verified Infeasible per cap: " + d};
    });

    criterion(12, "node: 50 random flat connections classify StrongFrame at N = 24", [&] {
        std::mt19937_64 rng(seed + 12);
        const std::size_t n = 24;
        Normalization nz = newton_puiseux(make_curve(X * Y), n);
        int strong = 0;
        int rank_two = 0;
        for (int it = 0; it < 50; ++it) {
            Connection conn = Connection::rank_one(random_node_form(rng, nz.curve()));
            if (it % 5 == 4) {
                Polynomial2 g = rhc::testing::random_polynomial(rng, 1, 3);
                CurveOneForm dg = d_function(g, nz.curve());
                CurveOneForm z(nz.curve(), {}, {});
                conn = Connection(nz.curve(), 2, {dg, z, z, dg});
                ++rank_two;
            }
            Classification cl = classify(conn, nz, n, 6);
            strong += cl.status == ClassificationStatus::StrongFrame ? 1 : 0;
        }
        return Outcome{strong == 50, std::to_string(strong) + "/50 StrongFrame (" +
                                         std::to_string(rank_two) + " of rank two)"};
    });

    criterion(13, "unions of 2-4 lines: 50 random flat rank-one connections StrongFrame", [&] {
        std::mt19937_64 rng(seed + 13);
        const std::size_t n = 24;
        int strong = 0;
        for (int it = 0; it < 50; ++it) {
            auto [curve, nz] = make_line_union(random_directions(rng, 2 + it % 3), n);
            CurveOneForm a = rhc::testing::random_flat_form(rng, curve, 3);
            Classification cl = classify(Connection::rank_one(a), nz, n, 6);
            strong += cl.status == ClassificationStatus::StrongFrame ? 1 : 0;
        }
        return Outcome{strong == 50, std::to_string(strong) + "/50 StrongFrame"};
    });

    criterion(14, "exponential oracle, ODE residual and gauge equivariance (25 cases)", [&] {
        std::mt19937_64 rng(seed + 14);
        const std::size_t n = 24;
        std::vector<Normalization> curves = {
            newton_puiseux(make_curve(X * Y), n),
            newton_puiseux(make_curve(Y.pow(2) - X.pow(3)), n),
            reference_normalization(n),
            make_line_union({{GR(1), GR(0)}, {GR(1), GR(1)}, {GR(1), GR(-2)}}, n).second,
        };
        int good = 0;
        for (int it = 0; it < 25; ++it) {
            const Normalization& nz = curves[it % curves.size()];
            Polynomial2 g = rhc::testing::random_polynomial(rng, 1, 4);
            CurveOneForm dg = d_function(g, nz.curve());
            CurveOneForm z(nz.curve(), {}, {});
            Connection one = Connection::rank_one(dg);
            Connection two(nz.curve(), 2, {dg, z, z, dg});
            ScalarMatrix cm;
            do {
                cm = {rhc::testing::random_gaussian(rng), rhc::testing::random_gaussian(rng),
                      rhc::testing::random_gaussian(rng), rhc::testing::random_gaussian(rng)};
            } while ((cm[0] * cm[3] - cm[1] * cm[2]).is_zero());
            bool ok = true;
            for (std::size_t j = 0; j < nz.branches().size(); ++j) {
                const Branch& b = nz.branches()[j];
                BranchFrame f = solve_frame_on_branch(one, b, identity_matrix(1), n, j);
                USeries oracle = rhc::testing::exp_by_definition(-p2_eval_on_branch(g, b.x(), b.y()));
                ok = ok && f.entry(0, 0) == oracle && check_frame_residual(f);

                BranchFrame base = solve_frame_on_branch(two, b, identity_matrix(2), n, j);
                BranchFrame moved = solve_frame_on_branch(two, b, cm, n, j);
                ok = ok && check_frame_residual(base) && check_frame_residual(moved);
                for (std::size_t r = 0; r < 2; ++r) {
                    for (std::size_t c = 0; c < 2; ++c) {
                        USeries expect = cm[c] * base.entry(r, 0) + cm[2 + c] * base.entry(r, 1);
                        ok = ok && moved.entry(r, c) == expect;
                    }
                }
            }
            good += ok ? 1 : 0;
        }
        return Outcome{good == 25, std::to_string(good) + "/25 cases exact"};
    });

    criterion(15, "t on the reference branch is CertifiedNotStrong at N = 10, 20, 40", [&] {
        bool ok = true;
        std::string d;
        for (std::size_t n : {10u, 20u, 40u}) {
            StrongHolomorphyVerdict v =
                subalgebra_membership({USeries::monomial(n, 1)}, reference_normalization(n), n);
            nlohmann::json cert =
                io::parse_json_text(io::canonical_dump(report::to_json(v.certificate)));
            bool good = !v.strong() && witness_holds_in_json(cert);
            ok = ok && good;
            d += " N=" + std::to_string(n) + (good ? ":certified" : ":FAILED");
        }
        return Outcome{ok, "independently checked witnesses" + d};
    });

    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " failing")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
