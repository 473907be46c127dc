#pragma once

#include "rhcurve/gaussian_rational.hpp"

#include <cstddef>
#include <vector>

namespace rhc {

/// Dense univariate polynomial over Q(i), coefficient of z^k at index k.
/// Trailing zeros are stripped by every routine below.
using UPoly = std::vector<GR>;

void upoly_normalize(UPoly& p);
GR upoly_eval(const UPoly& p, const GR& z);
UPoly upoly_derivative(const UPoly& p);
/// Returns {quotient, remainder}; divisor must be nonzero.
std::pair<UPoly, UPoly> upoly_divmod(const UPoly& num, const UPoly& den);
/// Monic gcd.
UPoly upoly_gcd(UPoly a, UPoly b);

struct RootWithMultiplicity {
    GR root;
    int multiplicity = 0;
};

struct RootSplit {
    std::vector<RootWithMultiplicity> roots;
    /// Part of the input with no root in Q(i) (degree 0 when fully split).
    UPoly remainder;
};

/// Exact Q(i)-roots of p with multiplicities.
///
/// Candidates come from a floating-point root finder applied to the
/// square-free part; each candidate is snapped to the lattice (1/L)Z[i], L
/// the leading coefficient after clearing denominators, and then confirmed by
/// exact evaluation. A confirmed root is always exact; a root whose lattice
/// representative is too large for long double may be missed and stays in
/// `remainder`.
RootSplit gaussian_rational_roots(const UPoly& p);

}  // namespace rhc
