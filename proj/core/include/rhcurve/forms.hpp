#pragma once

#include "rhcurve/curve.hpp"
#include "rhcurve/polynomial.hpp"
#include "rhcurve/series.hpp"
#include "rhcurve/verdict.hpp"

#include <cstddef>
#include <vector>

namespace rhc {

/// a*dx + b*dy on a curve, an ambient representative of a class modulo
/// span{f*dx, f*dy, df}. There is no normal form; ask is_zero_oneform.
class CurveOneForm {
public:
    CurveOneForm(CurvePtr curve, Polynomial2 a, Polynomial2 b);

    const CurvePtr& curve() const { return curve_; }
    const Polynomial2& a() const { return a_; }
    const Polynomial2& b() const { return b_; }

    CurveOneForm operator-() const;
    friend CurveOneForm operator+(const CurveOneForm& l, const CurveOneForm& r);
    friend CurveOneForm operator-(const CurveOneForm& l, const CurveOneForm& r);
    friend CurveOneForm operator*(const Polynomial2& g, const CurveOneForm& w);

private:
    CurvePtr curve_;
    Polynomial2 a_;
    Polynomial2 b_;
};

/// c*dx^dy on a curve, modulo the ideal (f, fx, fy).
class CurveTwoForm {
public:
    CurveTwoForm(CurvePtr curve, Polynomial2 c) : curve_(std::move(curve)), c_(std::move(c)) {}

    const CurvePtr& curve() const { return curve_; }
    const Polynomial2& c() const { return c_; }

private:
    CurvePtr curve_;
    Polynomial2 c_;
};

CurveOneForm d_function(const Polynomial2& g, const CurvePtr& curve);
/// c = b_x - a_y
CurveTwoForm d_oneform(const CurveOneForm& w);
/// u ^ v for one-forms u, v as a two-form coefficient.
CurveTwoForm wedge(const CurveOneForm& u, const CurveOneForm& v);

/// Membership of d_oneform(w).c in (f, fx, fy) at cap D; Infeasible
/// certifies that w is not closed.
MembershipVerdict is_closed(const CurveOneForm& w, int degree_cap);

/// Membership of (a, b) in span{f*dx, f*dy, df}, compared modulo
/// m^(D + deg f + 1). Infeasible certifies w != 0 in the module of forms of
/// the curve germ. Solution parts: "h" (df), "beta_dx", "beta_dy".
MembershipVerdict is_zero_oneform(const CurveOneForm& w, int degree_cap);

/// Coefficient of ds in the pullback of w along b, known mod s^(N-1).
USeries pullback(const CurveOneForm& w, const Branch& b);

struct TorsionResult {
    bool torsion = false;
    /// Pullbacks are compared modulo s^order_checked.
    std::size_t order_checked = 0;
    /// s-order of each pullback; nullopt when it vanishes to order_checked.
    std::vector<std::optional<std::size_t>> pullback_valuations;
};

/// True iff w pulls back to zero on every branch. The verdict says nothing
/// about branches missing from `nz`.
TorsionResult is_torsion(const CurveOneForm& w, const Normalization& nz);

namespace nontame {

/// (x^4*y + x*y^5/5 + y^6/6) dx on nontame::curve().
CurveOneForm alpha();

}  // namespace nontame

}  // namespace rhc
