#include "rhcurve/errors.hpp"
#include "rhcurve/gaussian_rational.hpp"
#include "rhcurve/polynomial.hpp"
#include "rhcurve/series.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace rhc;
using rhc::testing::random_gaussian;
using rhc::testing::random_series;

namespace {

GR q(long p, long d = 1)
{
    return GR::fraction(p, d);
}

}  // namespace

TEST(GaussianRational, CanonicalLiterals)
{
    EXPECT_EQ(q(6, 4).to_string(), "3/2");
    EXPECT_EQ(GR(mpq_class(-1, 2), mpq_class(1, 4)).to_string(), "-1/2+1/4*i");
    EXPECT_EQ(GR(mpq_class(0), mpq_class(-1)).to_string(), "0-1*i");
    EXPECT_EQ(GR().to_string(), "0");
    for (const char* lit : {"0", "7", "-3/5", "2/3-1/7*i", "i", "-5/2*i", "1+i"}) {
        EXPECT_EQ(GR::parse(GR::parse(lit).to_string()), GR::parse(lit)) << lit;
    }
}

TEST(GaussianRational, ParseErrorsCarryPosition)
{
    try {
        GR::parse("3/x");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_NE(e.position(), std::string::npos);
    }
    EXPECT_THROW(GR::parse(""), ParseError);
    EXPECT_THROW(GR::parse("1/0"), ParseError);
}

TEST(GaussianRational, FieldAxiomsOnRandomElements)
{
    std::mt19937_64 rng(11);
    for (int it = 0; it < 200; ++it) {
        GR a = random_gaussian(rng), b = random_gaussian(rng), c = random_gaussian(rng);
        EXPECT_EQ((a + b) * c, a * c + b * c);
        EXPECT_EQ(a * b, b * a);
        if (!a.is_zero()) {
            EXPECT_TRUE((a * a.inverse()).is_one());
            EXPECT_EQ(a.pow(-2) * a.pow(2), GR(1));
        }
    }
    EXPECT_THROW(GR().inverse(), Error);
    EXPECT_EQ(GR::i() * GR::i(), GR(-1));
}

TEST(Series, RingIdentitiesOnRandomSeries)
{
    std::mt19937_64 rng(12);
    for (int it = 0; it < 30; ++it) {
        USeries a = random_series(rng, 15), b = random_series(rng, 15), c = random_series(rng, 15);
        EXPECT_EQ((a + b) * c, a * c + b * c);
        EXPECT_EQ(a * (b * c), (a * b) * c);
        EXPECT_EQ(u_derive(a * b), u_derive(a) * b.truncated(14) + a.truncated(14) * u_derive(b));
    }
}

TEST(Series, InverseAndGeometric)
{
    USeries g = USeries::geometric_alternating(20);
    USeries one_plus_t(20, {1, 1});
    EXPECT_EQ(u_inverse(one_plus_t), g);
    EXPECT_EQ(one_plus_t * g, USeries::constant(20, GR(1)));
    EXPECT_THROW(u_inverse(USeries::monomial(20, 1)), Error);

    std::mt19937_64 rng(13);
    for (int it = 0; it < 20; ++it) {
        USeries a = random_series(rng, 12);
        if (a[0].is_zero()) {
            continue;
        }
        EXPECT_EQ(a * u_inverse(a), USeries::constant(12, GR(1)));
    }
}

TEST(Series, IntegrateDeriveRoundTrip)
{
    std::mt19937_64 rng(14);
    USeries a = random_series(rng, 10);
    USeries ia = u_integrate(a, q(3));
    EXPECT_EQ(ia.order(), 11u);
    EXPECT_EQ(ia[0], q(3));
    EXPECT_EQ(u_derive(ia), a);
    EXPECT_THROW(u_derive(USeries(1)), Error);
}

TEST(Series, ComposeAndExp)
{
    const std::size_t n = 14;
    std::mt19937_64 rng(15);
    USeries outer = random_series(rng, n);
    USeries u = random_series(rng, n, 1);
    USeries v = random_series(rng, n, 1);
    // (outer o u) o v == outer o (u o v)
    EXPECT_EQ(u_compose(u_compose(outer, u), v), u_compose(outer, u_compose(u, v)));
    EXPECT_THROW(u_compose(outer, random_series(rng, n, 0) + USeries::constant(n, GR(1))), Error);

    // exp against the definition and exp(a + b) = exp(a) exp(b)
    EXPECT_EQ(u_exp(u), rhc::testing::exp_by_definition(u));
    EXPECT_EQ(u_exp(u + v), u_exp(u) * u_exp(v));
    EXPECT_EQ(u_exp(USeries::monomial(n, 1)), USeries::exp_series(n));
}

TEST(Series, ValuationAndAgreement)
{
    USeries a(10, {0, 0, 0, 5});
    EXPECT_EQ(a.valuation(), std::optional<std::size_t>(3));
    EXPECT_FALSE(USeries(10).valuation().has_value());
    USeries b = a + USeries::monomial(10, 7);
    EXPECT_TRUE(agree_mod(a, b, 7));
    EXPECT_FALSE(agree_mod(a, b, 8));
    EXPECT_EQ((a + USeries(6)).order(), 6u);
}

TEST(Polynomial, MonomialParsingAndOrder)
{
    EXPECT_EQ(Monomial::parse("x^4*y"), (Monomial{4, 1}));
    EXPECT_EQ(Monomial::parse("1"), (Monomial{0, 0}));
    EXPECT_EQ(Monomial::parse("y^5"), (Monomial{0, 5}));
    EXPECT_EQ(Monomial::parse("x*y^4").to_string(), "x*y^4");
    EXPECT_THROW(Monomial::parse("z^2"), ParseError);
    EXPECT_LT((Monomial{0, 2}), (Monomial{3, 0}));  // graded first
    EXPECT_EQ(monomials_up_to(3).size(), 10u);
    EXPECT_EQ(monomials_of_degree(4).size(), 5u);
}

TEST(Polynomial, ArithmeticAndDerivatives)
{
    Polynomial2 x = Polynomial2::x(), y = Polynomial2::y();
    Polynomial2 f = x.pow(4) + x * y.pow(4) + y.pow(5);
    EXPECT_EQ(f.degree(), 5);
    EXPECT_EQ(f.order(), 4);
    EXPECT_EQ(p2_partial(f, Var::X), q(4) * x.pow(3) + y.pow(4));
    EXPECT_EQ(p2_partial(f, Var::Y), q(4) * x * y.pow(3) + q(5) * y.pow(4));
    EXPECT_EQ(f.evaluate(q(1), q(-1)), GR(1));
    EXPECT_TRUE((f - f).is_zero());
    EXPECT_EQ(f.truncated(4), x.pow(4));
    EXPECT_EQ(f.homogeneous_part(5), x * y.pow(4) + y.pow(5));
}

TEST(Polynomial, PullbackIsARingMap)
{
    std::mt19937_64 rng(16);
    const std::size_t n = 16;
    USeries bx = random_series(rng, n, 1), by = random_series(rng, n, 1);
    for (int it = 0; it < 10; ++it) {
        Polynomial2 p = rhc::testing::random_polynomial(rng, 0, 4);
        Polynomial2 r = rhc::testing::random_polynomial(rng, 0, 4, 0.6, true);
        EXPECT_EQ(p2_eval_on_branch(p * r, bx, by),
                  p2_eval_on_branch(p, bx, by) * p2_eval_on_branch(r, bx, by));
        BranchPowers bp(bx, by);
        EXPECT_EQ(bp.eval(p + r), p2_eval_on_branch(p, bx, by) + p2_eval_on_branch(r, bx, by));
    }
}
