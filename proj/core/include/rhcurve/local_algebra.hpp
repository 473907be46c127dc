#pragma once

#include "rhcurve/curve.hpp"
#include "rhcurve/forms.hpp"
#include "rhcurve/polynomial.hpp"
#include "rhcurve/series.hpp"
#include "rhcurve/verdict.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace rhc {

/// Is target in the ideal (g_1, ..., g_k) of the local ring at the origin?
///
/// Compared modulo m^(K+1) with K = D + max deg(g_i): multipliers range over
/// all monomials m with deg(m) + ord(g_i) <= K. Solution parts are "h0",
/// "h1", ... in generator order.
MembershipVerdict ideal_membership(const Polynomial2& target,
                                   const std::vector<Polynomial2>& generators, int degree_cap);

/// Searches one polynomial g with g(branch_j) == targets[j] mod s^N for all
/// branches at once.
///
/// Monomials of s-order >= N on every branch cannot contribute, so the
/// search is exhaustive: CertifiedNotStrong means that no analytic function
/// restricts to the targets. Throws Error{OrderMismatch} when the target
/// count differs from the branch count or some order is below N.
StrongHolomorphyVerdict subalgebra_membership(const std::vector<USeries>& targets,
                                              const Normalization& nz, std::size_t order);

/// Rows of the vector-field system that only involve degree-one unknowns.
struct ReducedSystem {
    std::vector<std::string> unknowns;
    std::vector<std::string> rows;
    /// One row per entry of `rows`: coefficients of `unknowns`, then the
    /// right-hand side.
    std::vector<std::vector<GR>> augmented;
    /// Set when the augmented matrix is square.
    std::optional<GR> determinant;
};

struct VectorFieldResult {
    MembershipVerdict verdict;
    ReducedSystem reduced;
};

/// f = d(f*A)/dx + d(f*B)/dy, compared in every degree <= K, with unknown
/// coefficients of A and B up to degree K - ord(f) + 1. Any analytic solution
/// truncates to a solution, so Infeasible rules out analytic A, B.
///
/// Unknowns are labelled "A:<monomial>" and "B:<monomial>"; the degree <= 1
/// ones also answer to A0, A11, A12, B0, B11, B12 (A0 = A:1, A11 = A:x,
/// A12 = A:y, likewise for B). `forced_zero` removes unknowns by either name.
VectorFieldResult vector_field_equation_solve(const PlaneCurve& c, int degree_cap,
                                              const std::vector<std::string>& forced_zero = {});

/// Is omega == dH + h*df + f*beta for germs H, h, beta? Compared modulo
/// m^(D + deg f + 1); Infeasible certifies omega is not exact near 0.
/// Solution parts: "H", "h", "beta_dx", "beta_dy".
MembershipVerdict exactness_solve(const CurveOneForm& omega, int degree_cap);

/// Short name (A0, A11, ...) of a vector-field unknown label, or the label
/// itself when it has none.
std::string vector_field_alias(const std::string& label);

}  // namespace rhc
