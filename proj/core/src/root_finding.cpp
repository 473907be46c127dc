#include "rhcurve/roots.hpp"

#include "rhcurve/errors.hpp"

#include <cmath>
#include <complex>

namespace rhc {

void upoly_normalize(UPoly& p)
{
    while (!p.empty() && p.back().is_zero()) {
        p.pop_back();
    }
}

GR upoly_eval(const UPoly& p, const GR& z)
{
    GR acc;
    for (std::size_t k = p.size(); k-- > 0;) {
        acc = acc * z + p[k];
    }
    return acc;
}

UPoly upoly_derivative(const UPoly& p)
{
    UPoly d;
    for (std::size_t k = 1; k < p.size(); ++k) {
        d.push_back(GR(static_cast<long>(k)) * p[k]);
    }
    upoly_normalize(d);
    return d;
}

std::pair<UPoly, UPoly> upoly_divmod(const UPoly& num, const UPoly& den)
{
    UPoly d = den;
    upoly_normalize(d);
    if (d.empty()) {
        throw Error(ErrorKind::InvalidArgument, "polynomial division by zero");
    }
    UPoly r = num;
    upoly_normalize(r);
    if (r.size() < d.size()) {
        return {UPoly{}, r};
    }
    UPoly q(r.size() - d.size() + 1);
    GR lead_inv = d.back().inverse();
    for (std::size_t k = r.size() - 1;; --k) {
        GR c = r[k] * lead_inv;
        std::size_t shift = k - (d.size() - 1);
        q[shift] = c;
        if (!c.is_zero()) {
            for (std::size_t j = 0; j < d.size(); ++j) {
                r[shift + j] -= c * d[j];
            }
        }
        if (k == d.size() - 1) {
            break;
        }
    }
    upoly_normalize(q);
    upoly_normalize(r);
    return {q, r};
}

UPoly upoly_gcd(UPoly a, UPoly b)
{
    upoly_normalize(a);
    upoly_normalize(b);
    while (!b.empty()) {
        auto [q, r] = upoly_divmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        GR inv = a.back().inverse();
        for (auto& c : a) {
            c *= inv;
        }
    }
    return a;
}

namespace {

using Complex = std::complex<long double>;

Complex to_complex(const GR& z)
{
    return {static_cast<long double>(z.re().get_d()), static_cast<long double>(z.im().get_d())};
}

// Durand-Kerner on the monic normalization.
std::vector<Complex> approximate_roots(const UPoly& p)
{
    std::size_t n = p.size() - 1;
    std::vector<Complex> c(p.size());
    Complex lead = to_complex(p.back());
    for (std::size_t k = 0; k < p.size(); ++k) {
        c[k] = to_complex(p[k]) / lead;
    }
    auto eval = [&](Complex z) {
        Complex acc = 0;
        for (std::size_t k = c.size(); k-- > 0;) {
            acc = acc * z + c[k];
        }
        return acc;
    };
    long double radius = 1;
    for (std::size_t k = 0; k < n; ++k) {
        radius = std::max(radius, 1 + std::abs(c[k]));
    }
    std::vector<Complex> z(n);
    const Complex seed(0.4L, 0.9L);
    for (std::size_t k = 0; k < n; ++k) {
        z[k] = std::pow(seed, static_cast<long double>(k)) * (radius / 2);
    }
    for (int iter = 0; iter < 2000; ++iter) {
        long double change = 0;
        for (std::size_t i = 0; i < n; ++i) {
            Complex denom = 1;
            for (std::size_t j = 0; j < n; ++j) {
                if (j != i) {
                    denom *= (z[i] - z[j]);
                }
            }
            if (std::abs(denom) == 0) {
                denom = Complex(1e-30L, 0);
            }
            Complex delta = eval(z[i]) / denom;
            z[i] -= delta;
            change = std::max(change, std::abs(delta));
        }
        if (change < 1e-18L * radius) {
            break;
        }
    }
    return z;
}

mpz_class lcm_of_denominators(const UPoly& p)
{
    mpz_class l = 1;
    for (const auto& c : p) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.re().get_den_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.im().get_den_mpz_t());
    }
    return l;
}

}  // namespace

RootSplit gaussian_rational_roots(const UPoly& input)
{
    RootSplit out;
    UPoly p = input;
    upoly_normalize(p);
    if (p.empty()) {
        throw Error(ErrorKind::InvalidArgument, "root finding on the zero polynomial");
    }
    // Roots at zero first; the lattice snapping below assumes nonzero roots.
    int zero_mult = 0;
    while (p.size() > 1 && p.front().is_zero()) {
        p.erase(p.begin());
        ++zero_mult;
    }
    if (zero_mult > 0) {
        out.roots.push_back({GR(), zero_mult});
    }
    if (p.size() <= 1) {
        out.remainder = p;
        return out;
    }

    UPoly squarefree = upoly_divmod(p, upoly_gcd(p, upoly_derivative(p))).first;
    GR scale(mpq_class(lcm_of_denominators(squarefree)));
    UPoly scaled = squarefree;
    for (auto& c : scaled) {
        c *= scale;
    }
    const GR lead = scaled.back();

    std::vector<GR> found;
    if (scaled.size() > 1) {
        for (const Complex& approx : approximate_roots(scaled)) {
            Complex lattice = to_complex(lead) * approx;
            long double re0 = std::round(lattice.real());
            long double im0 = std::round(lattice.imag());
            for (int dr = -1; dr <= 1; ++dr) {
                for (int di = -1; di <= 1; ++di) {
                    mpq_class re(mpz_class(static_cast<double>(re0 + dr)));
                    mpq_class im(mpz_class(static_cast<double>(im0 + di)));
                    GR candidate = GR(re, im) / lead;
                    if (candidate.is_zero()) {
                        continue;
                    }
                    bool dup = false;
                    for (const auto& f : found) {
                        dup = dup || f == candidate;
                    }
                    if (!dup && upoly_eval(squarefree, candidate).is_zero()) {
                        found.push_back(candidate);
                    }
                }
            }
        }
    }

    for (const auto& r : found) {
        UPoly linear{-r, GR(1)};
        int mult = 0;
        while (true) {
            auto [q, rem] = upoly_divmod(p, linear);
            if (!rem.empty()) {
                break;
            }
            p = std::move(q);
            ++mult;
        }
        out.roots.push_back({r, mult});
    }
    out.remainder = p;
    return out;
}

}  // namespace rhc
