#pragma once

// Seeded generators and small oracles shared by the unit and acceptance tests.

#include "rhcurve/curve.hpp"
#include "rhcurve/forms.hpp"
#include "rhcurve/gaussian_rational.hpp"
#include "rhcurve/polynomial.hpp"
#include "rhcurve/series.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <random>
#include <vector>

namespace rhc::testing {

inline GR random_rational(std::mt19937_64& rng, int range = 5, int den = 3)
{
    std::uniform_int_distribution<int> num(-range, range);
    std::uniform_int_distribution<int> d(1, den);
    return GR(mpq_class(num(rng), d(rng)));
}

inline GR random_gaussian(std::mt19937_64& rng, int range = 4)
{
    return {random_rational(rng, range).re(), random_rational(rng, range).re()};
}

/// Random polynomial with total degree in [min_degree, max_degree]; every
/// monomial is present with probability `density`.
inline Polynomial2 random_polynomial(std::mt19937_64& rng, int min_degree, int max_degree,
                                     double density = 0.6, bool gaussian = false)
{
    std::bernoulli_distribution keep(density);
    Polynomial2 p;
    for (const auto& m : monomials_up_to(max_degree)) {
        if (m.degree() < min_degree || !keep(rng)) {
            continue;
        }
        p += Polynomial2::monomial(m, gaussian ? random_gaussian(rng) : random_rational(rng));
    }
    return p;
}

inline USeries random_series(std::mt19937_64& rng, std::size_t order, std::size_t start = 0)
{
    std::vector<GR> c(order);
    for (std::size_t k = start; k < order; ++k) {
        c[k] = random_rational(rng, 4, 4);
    }
    return USeries(order, std::move(c));
}

/// exp(h) = sum h^k / k! computed from the definition, h(0) = 0.
inline USeries exp_by_definition(const USeries& h)
{
    const std::size_t n = h.order();
    USeries sum = USeries::constant(n, GR(1));
    USeries term = USeries::constant(n, GR(1));
    for (std::size_t k = 1; k < n; ++k) {
        term = GR(mpq_class(1, static_cast<long>(k))) * (term * h);
        sum = sum + term;
    }
    return sum;
}

/// Polynomial with integral in x: F with dF/dx = p.
inline Polynomial2 integrate_x(const Polynomial2& p)
{
    Polynomial2 out;
    for (const auto& [m, c] : p.terms()) {
        out += Polynomial2::monomial({m.a + 1, m.b}, c * GR(mpq_class(1, m.a + 1)));
    }
    return out;
}

/// A rank-one form a dx + b dy with b_x - a_y = p*fx + q*fy for random a,
/// p, q; flat on every curve f = 0.
inline CurveOneForm random_flat_form(std::mt19937_64& rng, const CurvePtr& c, int degree)
{
    Polynomial2 a = random_polynomial(rng, 0, degree);
    Polynomial2 p = random_polynomial(rng, 0, 1, 0.5);
    Polynomial2 q = random_polynomial(rng, 0, 1, 0.5);
    Polynomial2 rhs = p2_partial(a, Var::Y) + p * c->fx() + q * c->fy();
    Polynomial2 r;
    const Polynomial2 extra = random_polynomial(rng, 0, degree);
    for (const auto& [m, coef] : extra.terms()) {
        if (m.a == 0) {
            r += Polynomial2::monomial(m, coef);
        }
    }
    return {c, a, integrate_x(rhs) + r};
}

}  // namespace rhc::testing
