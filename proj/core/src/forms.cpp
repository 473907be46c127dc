#include "rhcurve/forms.hpp"

#include "rhcurve/errors.hpp"
#include "rhcurve/local_algebra.hpp"
#include "truncated_system.hpp"

namespace rhc {

CurveOneForm::CurveOneForm(CurvePtr curve, Polynomial2 a, Polynomial2 b)
    : curve_(std::move(curve)), a_(std::move(a)), b_(std::move(b))
{
    if (!curve_) {
        throw Error(ErrorKind::InvalidArgument, "one-form without a curve");
    }
}

namespace {

void require_same_curve(const CurveOneForm& l, const CurveOneForm& r)
{
    if (l.curve() != r.curve() && !(l.curve()->f() == r.curve()->f())) {
        throw Error(ErrorKind::InvalidArgument, "one-forms live on different curves");
    }
}

}  // namespace

CurveOneForm CurveOneForm::operator-() const
{
    return {curve_, -a_, -b_};
}

CurveOneForm operator+(const CurveOneForm& l, const CurveOneForm& r)
{
    require_same_curve(l, r);
    return {l.curve_, l.a_ + r.a_, l.b_ + r.b_};
}

CurveOneForm operator-(const CurveOneForm& l, const CurveOneForm& r)
{
    require_same_curve(l, r);
    return {l.curve_, l.a_ - r.a_, l.b_ - r.b_};
}

CurveOneForm operator*(const Polynomial2& g, const CurveOneForm& w)
{
    return {w.curve_, g * w.a_, g * w.b_};
}

CurveOneForm d_function(const Polynomial2& g, const CurvePtr& curve)
{
    return {curve, p2_partial(g, Var::X), p2_partial(g, Var::Y)};
}

CurveTwoForm d_oneform(const CurveOneForm& w)
{
    return {w.curve(), p2_partial(w.b(), Var::X) - p2_partial(w.a(), Var::Y)};
}

CurveTwoForm wedge(const CurveOneForm& u, const CurveOneForm& v)
{
    require_same_curve(u, v);
    return {u.curve(), u.a() * v.b() - u.b() * v.a()};
}

MembershipVerdict is_closed(const CurveOneForm& w, int degree_cap)
{
    const PlaneCurve& c = *w.curve();
    return ideal_membership(d_oneform(w).c(), {c.f(), c.fx(), c.fy()}, degree_cap);
}

MembershipVerdict is_zero_oneform(const CurveOneForm& w, int degree_cap)
{
    if (degree_cap < 0) {
        throw Error(ErrorKind::InvalidArgument, "degree cap must be nonnegative");
    }
    const PlaneCurve& c = *w.curve();
    detail::TruncatedSystem sys(degree_cap + c.degree(), {"dx", "dy"});
    sys.add_multiples("h", {c.fx(), c.fy()});
    sys.add_multiples("beta_dx", {c.f(), Polynomial2()});
    sys.add_multiples("beta_dy", {Polynomial2(), c.f()});
    sys.set_target({w.a(), w.b()});
    return sys.solve();
}

USeries pullback(const CurveOneForm& w, const Branch& b)
{
    if (b.order() < 2) {
        throw Error(ErrorKind::PrecisionExhausted, "pullback needs branch order >= 2");
    }
    BranchPowers powers(b.x(), b.y());
    USeries xs = u_derive(b.x());
    USeries ys = u_derive(b.y());
    return powers.eval(w.a()) * xs + powers.eval(w.b()) * ys;
}

TorsionResult is_torsion(const CurveOneForm& w, const Normalization& nz)
{
    TorsionResult out;
    out.torsion = true;
    out.order_checked = nz.order() - 1;
    for (const auto& b : nz.branches()) {
        USeries p = pullback(w, b).truncated(out.order_checked);
        auto v = p.valuation();
        out.pullback_valuations.push_back(v);
        out.torsion = out.torsion && !v;
    }
    return out;
}

namespace nontame {

CurveOneForm alpha()
{
    Polynomial2 x = Polynomial2::x();
    Polynomial2 y = Polynomial2::y();
    Polynomial2 a = x.pow(4) * y + GR::fraction(1, 5) * x * y.pow(5) + GR::fraction(1, 6) * y.pow(6);
    return {curve(), a, Polynomial2()};
}

}  // namespace nontame

}  // namespace rhc
