#include "rhcurve/connection.hpp"

#include "rhcurve/errors.hpp"
#include "rhcurve/linear_solver.hpp"
#include "rhcurve/local_algebra.hpp"
#include "truncated_system.hpp"

#include <algorithm>

namespace rhc {

Connection::Connection(CurvePtr curve, std::size_t rank, std::vector<CurveOneForm> entries)
    : curve_(std::move(curve)), rank_(rank), entries_(std::move(entries))
{
    if (!curve_) {
        throw Error(ErrorKind::InvalidArgument, "connection without a curve");
    }
    if (rank_ == 0) {
        throw Error(ErrorKind::InvalidArgument, "connection rank must be positive");
    }
    if (entries_.size() != rank_ * rank_) {
        throw Error(ErrorKind::InvalidArgument,
                    "connection of rank " + std::to_string(rank_) + " needs " +
                        std::to_string(rank_ * rank_) + " entries, got " +
                        std::to_string(entries_.size()));
    }
    for (const auto& e : entries_) {
        if (!(e.curve()->f() == curve_->f())) {
            throw Error(ErrorKind::InvalidArgument, "connection entry lives on another curve");
        }
    }
}

Connection Connection::rank_one(const CurveOneForm& a)
{
    return Connection(a.curve(), 1, {a});
}

ScalarMatrix identity_matrix(std::size_t rank)
{
    ScalarMatrix m(rank * rank);
    for (std::size_t i = 0; i < rank; ++i) {
        m[i * rank + i] = GR(1);
    }
    return m;
}

std::vector<MembershipVerdict> is_flat(const Connection& conn, int degree_cap)
{
    const PlaneCurve& c = *conn.curve();
    const std::size_t r = conn.rank();
    std::vector<MembershipVerdict> out;
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            Polynomial2 curvature = d_oneform(conn.entry(i, j)).c();
            for (std::size_t k = 0; k < r; ++k) {
                curvature += wedge(conn.entry(i, k), conn.entry(k, j)).c();
            }
            out.push_back(ideal_membership(curvature, {c.f(), c.fx(), c.fy()}, degree_cap));
        }
    }
    return out;
}

namespace {

using CoeffMatrix = std::vector<GR>;  // r x r, row-major

std::vector<std::vector<GR>> to_rows(const ScalarMatrix& m, std::size_t r)
{
    std::vector<std::vector<GR>> rows(r);
    for (std::size_t i = 0; i < r; ++i) {
        rows[i].assign(m.begin() + static_cast<long>(i * r), m.begin() + static_cast<long>((i + 1) * r));
    }
    return rows;
}

}  // namespace

BranchFrame solve_frame_on_branch(const Connection& conn, const Branch& b, const ScalarMatrix& s0,
                                  std::size_t order, std::size_t branch_index)
{
    const std::size_t r = conn.rank();
    if (s0.size() != r * r) {
        throw Error(ErrorKind::InvalidArgument, "initial value has the wrong size");
    }
    if (determinant(to_rows(s0, r)).is_zero()) {
        throw Error(ErrorKind::SingularInitialValue, "initial frame value is singular");
    }
    if (order < 2 || b.order() < order) {
        throw Error(ErrorKind::OrderMismatch,
                    "frame of order " + std::to_string(order) + " on a branch of order " +
                        std::to_string(b.order()));
    }
    Branch br = b.truncated(order);

    BranchFrame frame;
    frame.branch_index = branch_index;
    frame.rank = r;
    frame.s0 = s0;
    for (const auto& e : conn.entries()) {
        frame.m.push_back(pullback(e, br));
    }

    // coefficient matrices S_n, n < order
    std::vector<CoeffMatrix> sc(order, CoeffMatrix(r * r));
    sc[0] = s0;
    for (std::size_t n = 0; n + 1 < order; ++n) {
        CoeffMatrix acc(r * r);
        for (std::size_t i = 0; i <= n; ++i) {
            const CoeffMatrix& sj = sc[n - i];
            for (std::size_t p = 0; p < r; ++p) {
                for (std::size_t k = 0; k < r; ++k) {
                    const GR& mik = frame.m[p * r + k][i];
                    if (mik.is_zero()) {
                        continue;
                    }
                    for (std::size_t q = 0; q < r; ++q) {
                        acc[p * r + q] += mik * sj[k * r + q];
                    }
                }
            }
        }
        GR scale = GR(-1) / GR(static_cast<long>(n + 1));
        for (auto& v : acc) {
            v *= scale;
        }
        sc[n + 1] = std::move(acc);
    }
    for (std::size_t e = 0; e < r * r; ++e) {
        std::vector<GR> coeffs(order);
        for (std::size_t n = 0; n < order; ++n) {
            coeffs[n] = sc[n][e];
        }
        frame.s.emplace_back(order, std::move(coeffs));
    }
    return frame;
}

bool check_frame_residual(const BranchFrame& frame)
{
    const std::size_t r = frame.rank;
    for (std::size_t e = 0; e < r * r; ++e) {
        if (!(frame.s[e][0] == frame.s0[e])) {
            return false;
        }
    }
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            USeries res = u_derive(frame.entry(i, j));
            for (std::size_t k = 0; k < r; ++k) {
                res = res + frame.m[i * r + k] * frame.entry(k, j);
            }
            if (!res.is_zero()) {
                return false;
            }
        }
    }
    return true;
}

bool CurveFrame::all_strong() const
{
    return std::all_of(strong.begin(), strong.end(),
                       [](const StrongHolomorphyVerdict& v) { return v.strong(); });
}

std::vector<Polynomial2> CurveFrame::polynomial_frame() const
{
    std::vector<Polynomial2> out;
    for (const auto& v : strong) {
        out.push_back(v.g);
    }
    return out;
}

CurveFrame build_continuous_frame(const Connection& conn, const Normalization& nz,
                                  std::size_t order)
{
    const std::size_t r = conn.rank();
    CurveFrame cf;
    cf.rank = r;
    cf.order = order;
    const ScalarMatrix id = identity_matrix(r);
    for (std::size_t j = 0; j < nz.branches().size(); ++j) {
        cf.frames.push_back(solve_frame_on_branch(conn, nz.branches()[j], id, order, j));
    }
    for (std::size_t e = 0; e < r * r; ++e) {
        std::vector<USeries> targets;
        for (const auto& fr : cf.frames) {
            targets.push_back(fr.s[e]);
        }
        cf.strong.push_back(subalgebra_membership(targets, nz, order));
    }
    return cf;
}

namespace {

// Is there a correction Q, vanishing on every branch mod s^N, that makes
// the expression zero in the module of forms (compared mod m^(K+1))?
// covariant: entry i of the column reads d(P_i + Q_i) + sum_k A_ik (P_k + Q_k).
// otherwise (rank one): A - d(P + Q).
// Q splits into terms of degree <= K+1, which enter the comparison, and
// higher ones that only matter on the branches.
MembershipVerdict corrected_zero_check(const Connection& conn, const Normalization& nz,
                                       std::size_t order, int degree_cap,
                                       const std::vector<Polynomial2>& base, bool covariant)
{
    const PlaneCurve& c = *conn.curve();
    const std::size_t r = base.size();
    const int k = degree_cap + c.degree();
    std::vector<std::string> comps;
    for (std::size_t i = 0; i < r; ++i) {
        std::string suffix = r == 1 ? "" : std::to_string(i);
        comps.push_back("dx" + suffix);
        comps.push_back("dy" + suffix);
    }
    detail::TruncatedSystem sys(k, comps);

    std::vector<BranchPowers> powers;
    std::vector<std::size_t> ox, oy;
    for (const auto& b : nz.branches()) {
        Branch bt = b.truncated(order);
        powers.emplace_back(bt.x(), bt.y());
        ox.push_back(bt.x().valuation().value_or(order));
        oy.push_back(bt.y().valuation().value_or(order));
    }
    auto visible_on = [&](std::size_t j, const Monomial& m) {
        return ox[j] * m.a + oy[j] * m.b < order;
    };

    std::vector<std::vector<std::size_t>> pb_rows(r);
    for (std::size_t i = 0; i < r; ++i) {
        std::string suffix = r == 1 ? "" : std::to_string(i);
        for (std::size_t j = 0; j < nz.branches().size(); ++j) {
            for (std::size_t n = 0; n < order; ++n) {
                pb_rows[i].push_back(sys.add_extra_row("pullback" + suffix + ":b" +
                                                       std::to_string(j) + ":s^" +
                                                       std::to_string(n)));
            }
        }
    }
    auto add_pullback = [&](std::size_t i, std::size_t col, const Monomial& m) {
        for (std::size_t j = 0; j < powers.size(); ++j) {
            if (!visible_on(j, m)) {
                continue;
            }
            USeries p = powers[j].monomial(m);
            for (std::size_t n = 0; n < order; ++n) {
                sys.add_extra_entry(pb_rows[i][j * order + n], col, p[n]);
            }
        }
    };

    const int top = static_cast<int>(order) - 1;
    for (std::size_t i = 0; i < r; ++i) {
        std::string suffix = r == 1 ? "" : std::to_string(i);
        for (const auto& m : monomials_up_to(std::max(top, k + 1))) {
            bool visible = false;
            for (std::size_t j = 0; j < powers.size(); ++j) {
                visible = visible || visible_on(j, m);
            }
            std::vector<Polynomial2> column(2 * r);
            if (m.degree() <= k + 1) {
                Polynomial2 mono = Polynomial2::monomial(m);
                column[2 * i] = p2_partial(mono, Var::X);
                column[2 * i + 1] = p2_partial(mono, Var::Y);
                if (covariant) {
                    for (std::size_t row = 0; row < r; ++row) {
                        const CurveOneForm& a = conn.entry(row, i);
                        column[2 * row] += mono * a.a().truncated(k - m.degree());
                        column[2 * row + 1] += mono * a.b().truncated(k - m.degree());
                    }
                }
            } else if (!visible) {
                continue;
            }
            std::size_t col = sys.add_unknown((m.degree() <= k + 1 ? "Q" : "E") + suffix, m, column);
            add_pullback(i, col, m);
        }
        std::vector<Polynomial2> gen_h(2 * r), gen_x(2 * r), gen_y(2 * r);
        gen_h[2 * i] = c.fx();
        gen_h[2 * i + 1] = c.fy();
        gen_x[2 * i] = c.f();
        gen_y[2 * i + 1] = c.f();
        sys.add_multiples("h" + suffix, gen_h);
        sys.add_multiples("beta_dx" + suffix, gen_x);
        sys.add_multiples("beta_dy" + suffix, gen_y);
    }

    std::vector<Polynomial2> target(2 * r);
    for (std::size_t i = 0; i < r; ++i) {
        CurveOneForm expr = d_function(base[i], conn.curve());
        if (covariant) {
            for (std::size_t kk = 0; kk < r; ++kk) {
                expr = expr + base[kk] * conn.entry(i, kk);
            }
            expr = -expr;
        } else {
            expr = conn.entry(0, 0) - expr;
        }
        target[2 * i] = expr.a();
        target[2 * i + 1] = expr.b();
    }
    sys.set_target(target);
    return sys.solve();
}

}  // namespace

const char* to_string(ClassificationStatus s)
{
    switch (s) {
    case ClassificationStatus::FlatnessFailed:
        return "FlatnessFailed";
    case ClassificationStatus::StrongFrame:
        return "StrongFrame";
    case ClassificationStatus::NonTame:
        return "NonTame";
    case ClassificationStatus::NoStrongFrameUpToOrder:
        return "NoStrongFrameUpToOrder";
    }
    return "?";
}

bool NonTameWitness::reverify(const Connection& conn, const Normalization& nz) const
{
    if (conn.rank() != 1 || !primitive.strong() || !primitive.certificate.verify()) {
        return false;
    }
    CurveOneForm expected = conn.entry(0, 0) - d_function(h, conn.curve());
    if (!(expected.a() == omega.a()) || !(expected.b() == omega.b())) {
        return false;
    }
    TorsionResult t = is_torsion(omega, nz.truncated(primitive.order));
    if (!t.torsion) {
        return false;
    }
    const int cap = is_zero.truncation_degree - conn.curve()->degree();
    MembershipVerdict z = is_zero_oneform(omega, cap);
    MembershipVerdict zc = corrected_zero_check(conn, nz.truncated(primitive.order), primitive.order,
                                                cap, {h}, false);
    return !z.feasible() && z.certificate.verify() && !is_zero.feasible() &&
           is_zero.certificate.verify() && !zc.feasible() && zc.certificate.verify() &&
           !corrected.feasible() && corrected.certificate.verify();
}

Classification classify(const Connection& conn, const Normalization& nz, std::size_t order,
                        int degree_cap)
{
    Classification out;
    out.order = order;
    out.degree_cap = degree_cap;

    out.flatness = is_flat(conn, degree_cap);
    for (const auto& v : out.flatness) {
        if (!v.feasible()) {
            out.status = ClassificationStatus::FlatnessFailed;
            return out;
        }
    }

    out.frame = build_continuous_frame(conn, nz, order);
    const std::size_t r = conn.rank();
    const Normalization local = nz.truncated(order);
    if (out.frame->all_strong()) {
        std::vector<Polynomial2> p = out.frame->polynomial_frame();
        bool parallel = true;
        for (std::size_t j = 0; j < r; ++j) {
            std::vector<Polynomial2> column;
            for (std::size_t i = 0; i < r; ++i) {
                column.push_back(p[i * r + j]);
            }
            out.parallelism.push_back(
                corrected_zero_check(conn, local, order, degree_cap, column, true));
            parallel = parallel && out.parallelism.back().feasible();
        }
        if (parallel) {
            out.status = ClassificationStatus::StrongFrame;
            return out;
        }
    }

    if (r != 1) {
        out.status = ClassificationStatus::NoStrongFrameUpToOrder;
        out.note = "rank-not-supported: the non-tameness witness search is rank one only";
        return out;
    }

    std::vector<USeries> primitives;
    for (const auto& b : nz.branches()) {
        primitives.push_back(u_integrate(pullback(conn.entry(0, 0), b.truncated(order)), GR()));
    }
    StrongHolomorphyVerdict prim = subalgebra_membership(primitives, nz, order);
    if (!prim.strong()) {
        out.status = ClassificationStatus::NoStrongFrameUpToOrder;
        out.note = "the branch primitive of A is not strongly holomorphic";
        return out;
    }
    CurveOneForm omega = conn.entry(0, 0) - d_function(prim.g, conn.curve());
    TorsionResult torsion = is_torsion(omega, local);
    MembershipVerdict zero = is_zero_oneform(omega, degree_cap);
    MembershipVerdict corrected = corrected_zero_check(conn, local, order, degree_cap, {prim.g}, false);
    Polynomial2 h = prim.g;
    const bool nontame = torsion.torsion && !corrected.feasible();
    out.witness = NonTameWitness{std::move(prim), std::move(h), omega, torsion, zero, corrected};
    if (nontame) {
        out.status = ClassificationStatus::NonTame;
    } else {
        out.status = ClassificationStatus::NoStrongFrameUpToOrder;
        out.note = torsion.torsion ? "A - dH vanishes up to a correction invisible on the branches"
                                   : "A - dH does not pull back to zero";
    }
    return out;
}

MembershipVerdict parallel_section_at_origin(const Connection& conn, std::size_t order,
                                             int degree_cap)
{
    if (conn.rank() != 1) {
        throw Error(ErrorKind::RankNotSupported,
                    "parallel_section_at_origin supports rank one, got rank " +
                        std::to_string(conn.rank()));
    }
    if (degree_cap < 0) {
        throw Error(ErrorKind::InvalidArgument, "degree cap must be nonnegative");
    }
    const PlaneCurve& c = *conn.curve();
    const CurveOneForm& a = conn.entry(0, 0);
    const int k = degree_cap + c.degree();
    const int s_deg = std::min(static_cast<int>(order), k + 1);
    detail::TruncatedSystem sys(k, {"dx", "dy"});
    for (const auto& m : monomials_up_to(s_deg)) {
        if (m.degree() == 0) {
            continue;
        }
        Polynomial2 mono = Polynomial2::monomial(m);
        sys.add_unknown("s", m,
                        {p2_partial(mono, Var::X) + mono * a.a().truncated(k - m.degree()),
                         p2_partial(mono, Var::Y) + mono * a.b().truncated(k - m.degree())});
    }
    sys.add_multiples("h", {c.fx(), c.fy()});
    sys.add_multiples("beta_dx", {c.f(), Polynomial2()});
    sys.add_multiples("beta_dy", {Polynomial2(), c.f()});
    sys.set_target({-a.a(), -a.b()});
    MembershipVerdict v = sys.solve();
    if (v.feasible()) {
        v.parts["s"] += Polynomial2(GR(1));
    }
    return v;
}

namespace nontame {

Connection connection()
{
    return Connection::rank_one(alpha());
}

USeries primitive(std::size_t order)
{
    return u_integrate(pullback(alpha(), branch(order)), GR());
}

}  // namespace nontame

}  // namespace rhc
