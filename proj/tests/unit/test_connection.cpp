#include "rhcurve/connection.hpp"
#include "rhcurve/curve.hpp"
#include "rhcurve/errors.hpp"
#include "rhcurve/local_algebra.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace rhc;

namespace {

Polynomial2 X = Polynomial2::x();
Polynomial2 Y = Polynomial2::y();

// binomial(n, k) as an exact rational
mpq_class binomial(long n, long k)
{
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return mpq_class(r);
}

// G' = t^28 (125 + 220 t + 96 t^2)/30 * (1+t)^-8, expanded with
// (1+t)^-8 = sum_k (-1)^k C(k+7, 7) t^k and integrated termwise.
std::vector<mpq_class> primitive_oracle(std::size_t n)
{
    std::vector<mpq_class> dg(n, 0);
    const long num[3] = {125, 220, 96};
    for (long j = 0; j < 3; ++j) {
        for (long k = 0; 28 + j + k < static_cast<long>(n); ++k) {
            mpq_class inv = binomial(k + 7, 7) * (k % 2 == 0 ? 1 : -1);
            dg[28 + j + k] += inv * num[j] / 30;
        }
    }
    std::vector<mpq_class> g(n, 0);
    for (std::size_t k = 1; k < n; ++k) {
        g[k] = dg[k - 1] / static_cast<long>(k);
    }
    return g;
}

Connection scalar_connection(const CurvePtr& c, const Polynomial2& g, std::size_t rank)
{
    std::vector<CurveOneForm> entries;
    for (std::size_t i = 0; i < rank; ++i) {
        for (std::size_t j = 0; j < rank; ++j) {
            entries.push_back(i == j ? d_function(g, c) : CurveOneForm(c, {}, {}));
        }
    }
    return Connection(c, rank, std::move(entries));
}

}  // namespace

// Frozen: first nonzero exponent 29 with coefficient 25/174.
TEST(Primitive, MatchesBinomialOracle)
{
    const std::size_t n = 40;
    USeries g = nontame::primitive(n);
    std::vector<mpq_class> oracle = primitive_oracle(n);
    ASSERT_EQ(g.order(), n);
    for (std::size_t k = 0; k < n; ++k) {
        EXPECT_EQ(g[k], GR(oracle[k])) << "t^" << k;
    }
    EXPECT_EQ(g.valuation(), std::optional<std::size_t>(29));
    EXPECT_EQ(g[29], GR::fraction(25, 174));
}

TEST(Flatness, RankOneAndTwo)
{
    CurvePtr node = make_curve(X * Y);
    auto flat = is_flat(Connection::rank_one(CurveOneForm(node, Y, Polynomial2())), 4);
    ASSERT_EQ(flat.size(), 1u);
    EXPECT_FALSE(flat[0].feasible());
    EXPECT_TRUE(flat[0].certificate.verify());

    auto ref = is_flat(nontame::connection(), 6);
    EXPECT_TRUE(ref[0].feasible());

    // [[0, dx], [dy, 0]]: A^A has entries dx^dy and dy^dx
    CurveOneForm z(node, {}, {});
    Connection twisted(node, 2,
                       {z, CurveOneForm(node, GR(1), {}), CurveOneForm(node, {}, GR(1)), z});
    auto tw = is_flat(twisted, 4);
    EXPECT_EQ(tw.size(), 4u);
    EXPECT_FALSE(tw[0].feasible());
}

TEST(Frame, ExponentialOracleAndResidual)
{
    std::mt19937_64 rng(51);
    const std::size_t n = 18;
    Normalization nz = newton_puiseux(make_curve((Y.pow(2) - X.pow(3)) * X), n);
    for (int it = 0; it < 6; ++it) {
        Polynomial2 g = rhc::testing::random_polynomial(rng, 1, 4);
        Connection conn = Connection::rank_one(d_function(g, nz.curve()));
        for (std::size_t j = 0; j < nz.branches().size(); ++j) {
            const Branch& b = nz.branches()[j];
            BranchFrame f = solve_frame_on_branch(conn, b, identity_matrix(1), n, j);
            EXPECT_TRUE(check_frame_residual(f));
            USeries h = -p2_eval_on_branch(g, b.x(), b.y());
            EXPECT_EQ(f.entry(0, 0), rhc::testing::exp_by_definition(h));
        }
    }
}

TEST(Frame, GaugeEquivarianceAndDeterminant)
{
    std::mt19937_64 rng(52);
    const std::size_t n = 14;
    const CurvePtr c = nontame::curve();
    const Branch b = nontame::branch(n);
    for (int it = 0; it < 4; ++it) {
        std::vector<CurveOneForm> entries;
        for (int k = 0; k < 4; ++k) {
            entries.emplace_back(c, rhc::testing::random_polynomial(rng, 0, 2),
                                 rhc::testing::random_polynomial(rng, 0, 2));
        }
        Connection conn(c, 2, entries);
        ScalarMatrix cm = {rhc::testing::random_gaussian(rng), rhc::testing::random_gaussian(rng),
                           rhc::testing::random_gaussian(rng), rhc::testing::random_gaussian(rng)};
        if ((cm[0] * cm[3] - cm[1] * cm[2]).is_zero()) {
            continue;
        }
        BranchFrame base = solve_frame_on_branch(conn, b, identity_matrix(2), n);
        BranchFrame moved = solve_frame_on_branch(conn, b, cm, n);
        EXPECT_TRUE(check_frame_residual(base));
        EXPECT_TRUE(check_frame_residual(moved));
        for (std::size_t i = 0; i < 2; ++i) {
            for (std::size_t j = 0; j < 2; ++j) {
                USeries expect = cm[0 * 2 + j] * base.entry(i, 0) + cm[1 * 2 + j] * base.entry(i, 1);
                EXPECT_EQ(moved.entry(i, j), expect);
            }
        }
        USeries det = base.entry(0, 0) * base.entry(1, 1) - base.entry(0, 1) * base.entry(1, 0);
        EXPECT_EQ(det[0], GR(1));
    }
    EXPECT_THROW(solve_frame_on_branch(nontame::connection(), b, {GR(0)}, n), Error);
}

TEST(Frame, ZeroConnectionGivesIdentity)
{
    const std::size_t n = 12;
    Normalization nz = newton_puiseux(make_curve(X * Y), n);
    CurveOneForm z(nz.curve(), {}, {});
    Connection conn(nz.curve(), 2, {z, z, z, z});
    CurveFrame f = build_continuous_frame(conn, nz, n);
    ASSERT_TRUE(f.all_strong());
    std::vector<Polynomial2> p = f.polynomial_frame();
    EXPECT_EQ(p, (std::vector<Polynomial2>{GR(1), GR(0), GR(0), GR(1)}));
}

TEST(Classify, ReferenceConnectionIsNonTame)
{
    const std::size_t n = 40;
    Normalization nz(nontame::curve(), {nontame::branch(n)});
    Classification cl = classify(nontame::connection(), nz, n, 8);
    ASSERT_EQ(cl.status, ClassificationStatus::NonTame);
    ASSERT_TRUE(cl.witness.has_value());
    EXPECT_TRUE(cl.witness->reverify(nontame::connection(), nz));
    EXPECT_TRUE(cl.witness->torsion.torsion);
    EXPECT_GE(cl.witness->torsion.order_checked, n - 1);
    EXPECT_FALSE(cl.witness->is_zero.feasible());
    EXPECT_FALSE(cl.witness->corrected.feasible());
    // H restricts to the primitive G (both vanish at the origin)
    const Branch& b = nz.branches()[0];
    EXPECT_EQ(p2_eval_on_branch(cl.witness->h, b.x(), b.y()), nontame::primitive(n));
    ASSERT_TRUE(cl.frame.has_value());
    EXPECT_TRUE(cl.frame->all_strong());
}

TEST(Classify, ExactConnectionsOnTheNode)
{
    std::mt19937_64 rng(53);
    const std::size_t n = 24;
    Normalization nz = newton_puiseux(make_curve(X * Y), n);
    for (int it = 0; it < 4; ++it) {
        Polynomial2 g = rhc::testing::random_polynomial(rng, 1, 3);
        Classification cl = classify(scalar_connection(nz.curve(), g, 1 + it % 2), nz, n, 6);
        EXPECT_EQ(cl.status, ClassificationStatus::StrongFrame) << g.to_string();
    }
    Classification bad = classify(Connection::rank_one(CurveOneForm(nz.curve(), Y, {})), nz, n, 6);
    EXPECT_EQ(bad.status, ClassificationStatus::FlatnessFailed);
    EXPECT_FALSE(bad.frame.has_value());
}

// The torsion class of alpha in a rank-two block reaches the witness step,
// which is rank one only.
TEST(Classify, RankTwoBlockIsReportedNotThrown)
{
    const std::size_t n = 30;
    Normalization nz(nontame::curve(), {nontame::branch(n)});
    CurveOneForm z(nz.curve(), {}, {});
    Connection conn(nz.curve(), 2, {nontame::alpha(), z, z, z});
    Classification cl = classify(conn, nz, n, 6);
    EXPECT_EQ(cl.status, ClassificationStatus::NoStrongFrameUpToOrder);
    EXPECT_NE(cl.note.find("rank-not-supported"), std::string::npos);
    ASSERT_EQ(cl.parallelism.size(), 2u);
    EXPECT_FALSE(cl.parallelism[0].feasible());
    EXPECT_TRUE(cl.parallelism[1].feasible());
}

// Quasi-homogeneous curves: closed forms have strongly holomorphic parallel
// frames, no spurious NonTame from the truncated primitive.
TEST(Classify, QuasiHomogeneousCurvesGiveStrongFrames)
{
    std::mt19937_64 rng(54);
    const std::size_t n = 30;
    for (const Polynomial2& f : {X.pow(4) - Y.pow(5), X.pow(3) - Y.pow(7)}) {
        Normalization nz = newton_puiseux(make_curve(f), n);
        for (int it = 0; it < 2; ++it) {
            CurveOneForm a = rhc::testing::random_flat_form(rng, nz.curve(), 3);
            Classification cl = classify(Connection::rank_one(a), nz, n, 6);
            EXPECT_EQ(cl.status, ClassificationStatus::StrongFrame) << f.to_string();
        }
    }
}

TEST(ParallelSection, TrivialAndReference)
{
    CurvePtr smooth = make_curve(Y);
    MembershipVerdict trivial =
        parallel_section_at_origin(Connection::rank_one(CurveOneForm(smooth, {}, {})), 12, 3);
    ASSERT_TRUE(trivial.feasible());
    EXPECT_EQ(trivial.parts["s"], Polynomial2(GR(1)));

    for (int d = 1; d <= 3; ++d) {
        MembershipVerdict v = parallel_section_at_origin(nontame::connection(), 40, d);
        EXPECT_FALSE(v.feasible()) << "D = " << d;
        EXPECT_TRUE(v.certificate.verify());
    }
    CurveOneForm z(smooth, {}, {});
    EXPECT_THROW(parallel_section_at_origin(Connection(smooth, 2, {z, z, z, z}), 12, 3), Error);
}

// A = dx on the line y = 0: s = exp(-x) is not polynomial, but its
// truncation solves the system modulo the cap.
TEST(ParallelSection, FeasibleAtCapForExactForm)
{
    CurvePtr line = make_curve(Y);
    MembershipVerdict v = parallel_section_at_origin(Connection::rank_one(d_function(X, line)), 20, 4);
    ASSERT_TRUE(v.feasible());
    EXPECT_TRUE(v.certificate.verify());
    // the x-part of s agrees with exp(-x) - 1 through the compared degrees
    Polynomial2 s = v.parts["s"];
    EXPECT_EQ(s.coeff({1, 0}), GR(-1));
    EXPECT_EQ(s.coeff({2, 0}), GR::fraction(1, 2));
}
