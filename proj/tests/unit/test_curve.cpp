#include "rhcurve/curve.hpp"
#include "rhcurve/errors.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace rhc;

namespace {

Polynomial2 X = Polynomial2::x();
Polynomial2 Y = Polynomial2::y();

GR q(long p, long d = 1)
{
    return GR::fraction(p, d);
}

// x = -t^5/(1+t), y = -t^4/(1+t) from the closed form, coefficient by
// coefficient: -t^a/(1+t) = sum_k (-1)^(k+1) t^(a+k).
USeries closed_form(std::size_t a, std::size_t n)
{
    std::vector<GR> c(n);
    for (std::size_t k = 0; a + k < n; ++k) {
        c[a + k] = (k % 2 == 0) ? GR(-1) : GR(1);
    }
    return USeries(n, c);
}

}  // namespace

TEST(Curve, ConstructionChecks)
{
    EXPECT_THROW(make_curve(Polynomial2()), Error);
    EXPECT_THROW(make_curve(X + Polynomial2(GR(1))), Error);
    CurvePtr c = make_curve(X.pow(4) + X * Y.pow(4) + Y.pow(5));
    EXPECT_EQ(c->degree(), 5);
    EXPECT_EQ(c->multiplicity(), 4);
}

TEST(Curve, BranchValidation)
{
    EXPECT_THROW(Branch(USeries(8, {1, 1}), USeries::monomial(8, 1), 8), Error);  // not centered
    EXPECT_THROW(Branch(USeries(8), USeries(8), 8), Error);                        // zero
    EXPECT_THROW(Branch(USeries::monomial(8, 2), USeries::monomial(8, 4), 8), Error);  // gcd 2
    EXPECT_THROW(Branch(USeries::monomial(4, 1), USeries::monomial(4, 1), 8), Error);  // short
    Branch ok(USeries::monomial(8, 2), USeries::monomial(8, 3), 8);
    EXPECT_EQ(exponent_gcd(ok.x(), ok.y()), 1u);
}

TEST(Curve, ReferenceBranchMatchesClosedForm)
{
    for (std::size_t n : {6u, 12u, 40u}) {
        Branch b = nontame::branch(n);
        EXPECT_EQ(b.x(), closed_form(5, n));
        EXPECT_EQ(b.y(), closed_form(4, n));
        EXPECT_TRUE(verify_branch(*nontame::curve(), b).infinite);
        EXPECT_EQ(p2_eval_on_branch(nontame::t4_lift(), b.x(), b.y()), USeries::monomial(n, 4));
    }
}

TEST(Curve, ResidualOrderOfAPerturbedBranch)
{
    Branch b = nontame::branch(40);
    Branch off(b.x(), b.y() + USeries::monomial(40, 15), 40);
    ResidualOrder r = verify_branch(*nontame::curve(), off);
    EXPECT_FALSE(r.infinite);
    // df/dy along the branch has order 16 and the perturbation enters at 15.
    EXPECT_EQ(r.order, 15u + 16u);
}

TEST(NewtonPuiseux, CuspNodeAndReferenceCurve)
{
    Normalization cusp = newton_puiseux(make_curve(Y.pow(2) - X.pow(3)), 12);
    ASSERT_EQ(cusp.branches().size(), 1u);
    EXPECT_EQ(cusp.branches()[0].x(), USeries::monomial(12, 2));
    EXPECT_EQ(cusp.branches()[0].y(), USeries::monomial(12, 3));

    Normalization node = newton_puiseux(make_curve(X * Y), 10);
    EXPECT_EQ(node.branches().size(), 2u);

    Normalization ref = newton_puiseux(nontame::curve(), 40);
    ASSERT_EQ(ref.branches().size(), 1u);
    const Branch& b = ref.branches()[0];
    EXPECT_EQ(b.x().valuation(), std::optional<std::size_t>(5));
    EXPECT_EQ(b.y().valuation(), std::optional<std::size_t>(4));
    EXPECT_TRUE(verify_branch(*nontame::curve(), b).infinite);
    EXPECT_TRUE(same_branch_image(b, nontame::branch(40)));
}

TEST(NewtonPuiseux, IrrationalEdgeIsReported)
{
    try {
        newton_puiseux(make_curve(Y.pow(2) - q(2) * X.pow(2)), 8);
        FAIL() << "expected IrrationalLeadingCoefficient";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::IrrationalLeadingCoefficient);
        EXPECT_NE(std::string(e.what()).find("edge"), std::string::npos);
    }
    // x^2 + y^2 splits over Q(i)
    EXPECT_EQ(newton_puiseux(make_curve(X.pow(2) + Y.pow(2)), 8).branches().size(), 2u);
}

// Every branch found satisfies f, is primitive, and the number of branches
// of a product is the sum.
TEST(NewtonPuiseux, ProductsOfKnownCurves)
{
    std::vector<Polynomial2> pieces = {Y - X.pow(2), Y + X.pow(2), Y.pow(2) - X.pow(3),
                                       Y - X.pow(3), X - Y.pow(2) + Y.pow(3)};
    std::vector<std::size_t> counts = {1, 1, 1, 1, 1};
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        for (std::size_t j = i + 1; j < pieces.size(); ++j) {
            CurvePtr c = make_curve(pieces[i] * pieces[j]);
            Normalization nz = newton_puiseux(c, 16);
            EXPECT_EQ(nz.branches().size(), counts[i] + counts[j]) << c->f().to_string();
            for (const auto& b : nz.branches()) {
                EXPECT_TRUE(verify_branch(*c, b).infinite);
                EXPECT_EQ(exponent_gcd(b.x(), b.y()), 1u);
            }
        }
    }
}

TEST(NewtonPuiseux, GaussianCoefficients)
{
    // y^2 + x^3 needs i: (s^2, i s^3) up to reparametrization
    CurvePtr c = make_curve(Y.pow(2) + X.pow(3));
    Normalization nz = newton_puiseux(c, 10);
    ASSERT_EQ(nz.branches().size(), 1u);
    EXPECT_TRUE(verify_branch(*c, nz.branches()[0]).infinite);
    Branch expected(USeries::monomial(10, 2), USeries::monomial(10, 3, GR::i()), 10);
    EXPECT_TRUE(same_branch_image(nz.branches()[0], expected));
}

TEST(Curve, SameBranchImageUnderReparametrization)
{
    const std::size_t n = 20;
    Branch b = nontame::branch(n);
    // s -> 2s + s^2
    USeries sub(n, {0, 2, 1});
    Branch re(u_compose(b.x(), sub), u_compose(b.y(), sub), n);
    EXPECT_TRUE(same_branch_image(b, re));
    Branch other(USeries::monomial(n, 5), USeries::monomial(n, 4), n);
    EXPECT_FALSE(same_branch_image(b, other));
}

TEST(Curve, LineUnions)
{
    auto [c, nz] = make_line_union({{q(1), q(0)}, {q(0), q(1)}, {q(1), q(1)}}, 12);
    EXPECT_EQ(c->degree(), 3);
    EXPECT_EQ(nz.branches().size(), 3u);
    for (const auto& b : nz.branches()) {
        EXPECT_TRUE(verify_branch(*c, b).infinite);
    }
    EXPECT_THROW(make_line_union({{q(1), q(2)}, {q(2), q(4)}}, 12), Error);
}

TEST(Curve, NormalizationRejectsBadBranches)
{
    CurvePtr c = make_curve(X * Y);
    Branch on_x(USeries::monomial(10, 1), USeries(10), 10);
    Branch off(USeries::monomial(10, 1), USeries::monomial(10, 1), 10);
    EXPECT_THROW(Normalization(c, {on_x, off}), Error);
    EXPECT_THROW(Normalization(c, {on_x, on_x}), Error);
    Normalization ok(c, {on_x});
    EXPECT_EQ(ok.truncated(6).order(), 6u);
}
