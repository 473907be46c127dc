#pragma once

#include "rhcurve/polynomial.hpp"
#include "rhcurve/series.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rhc {

/// Germ at the origin of the plane curve f = 0.
class PlaneCurve {
public:
    /// Throws Error{InvalidArgument} when f is zero or f(0,0) != 0.
    explicit PlaneCurve(Polynomial2 f);

    const Polynomial2& f() const { return f_; }
    const Polynomial2& fx() const { return fx_; }
    const Polynomial2& fy() const { return fy_; }

    /// Total degree of f.
    int degree() const { return *f_.degree(); }
    /// Lowest degree of a term of f (multiplicity of the singularity).
    int multiplicity() const { return *f_.order(); }

private:
    Polynomial2 f_;
    Polynomial2 fx_;
    Polynomial2 fy_;
};

using CurvePtr = std::shared_ptr<const PlaneCurve>;

CurvePtr make_curve(Polynomial2 f);

/// Parametrization s -> (x(s), y(s)) of one local irreducible component,
/// known modulo s^order. Centered at the origin and primitive (the exponents
/// carrying nonzero coefficients have gcd 1).
class Branch {
public:
    /// Truncates both series to `order`; throws Error{InvalidBranch} on
    /// a nonzero constant term, an identically-zero parametrization, a
    /// non-primitive one, or series known to less than `order`.
    Branch(USeries x, USeries y, std::size_t order);

    const USeries& x() const { return x_; }
    const USeries& y() const { return y_; }
    std::size_t order() const { return order_; }

    Branch truncated(std::size_t order) const;

    friend bool operator==(const Branch&, const Branch&) = default;

private:
    USeries x_;
    USeries y_;
    std::size_t order_;
};

/// gcd of all exponents carrying a nonzero coefficient in x or y; 0 when both
/// series vanish.
std::size_t exponent_gcd(const USeries& x, const USeries& y);

/// s-order of f(x(s), y(s)); `infinite` when it vanishes mod s^order.
struct ResidualOrder {
    bool infinite = false;
    std::size_t order = 0;

    std::string to_string() const { return infinite ? "infinity" : std::to_string(order); }
    friend bool operator==(const ResidualOrder&, const ResidualOrder&) = default;
};

ResidualOrder verify_branch(const PlaneCurve& c, const Branch& b);

/// Branch set of a curve at the origin.
class Normalization {
public:
    /// Checks that every branch satisfies f to its order and that the
    /// branches are pairwise distinct; throws Error{InvalidBranch} otherwise.
    Normalization(CurvePtr curve, std::vector<Branch> branches);

    const CurvePtr& curve() const { return curve_; }
    const std::vector<Branch>& branches() const { return branches_; }
    /// Common order of the branches (the minimum when they differ).
    std::size_t order() const;

    /// Every branch truncated to min(order, its own order).
    Normalization truncated(std::size_t order) const;

private:
    CurvePtr curve_;
    std::vector<Branch> branches_;
};

/// All branches of f at the origin to order N by the Newton polygon method.
///
/// Edge equations are solved exactly over Q(i); when one has a root outside
/// Q(i) the method throws Error{IrrationalLeadingCoefficient} naming the edge.
/// Ramified branches come out as integer-exponent parametrizations
/// x = lambda*s^e, y = y(s). Square-freeness of f is the caller's business.
Normalization newton_puiseux(const CurvePtr& c, std::size_t order);

/// Union of the lines through 0 with directions (a_j, b_j):
/// f = prod (b_j x - a_j y), branches (a_j s, b_j s).
/// Throws Error{DuplicateDirection} for proportional (or zero) directions.
std::pair<CurvePtr, Normalization> make_line_union(const std::vector<std::pair<GR, GR>>& directions,
                                                   std::size_t order);

/// True when the two branches trace the same image up to an invertible
/// reparametrization s -> rho*s + ....
///
/// Both branches are first reparametrized so that their lower-order
/// coordinate becomes a monomial; the comparison then loses that many
/// orders of precision. rho must lie in Q(i).
bool same_branch_image(const Branch& a, const Branch& b);

/// The curve x^4 + x*y^4 + y^5 with its flat non-tame connection form; see
/// connection.hpp for the form itself.
namespace nontame {

CurvePtr curve();

/// t -> (-t^5/(1+t), -t^4/(1+t)) expanded mod t^order (order >= 6).
Branch branch(std::size_t order);

/// -(x + y), which pulls back to t^4 along branch().
Polynomial2 t4_lift();

}  // namespace nontame

}  // namespace rhc
