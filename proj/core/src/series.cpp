#include "rhcurve/series.hpp"

#include "rhcurve/errors.hpp"

#include <algorithm>

namespace rhc {

USeries::USeries(std::size_t order) : coeffs_(order) {}

USeries::USeries(std::size_t order, std::vector<GR> coeffs) : coeffs_(std::move(coeffs))
{
    coeffs_.resize(order);
}

USeries::USeries(std::size_t order, std::initializer_list<GR> coeffs)
    : USeries(order, std::vector<GR>(coeffs))
{
}

USeries USeries::constant(std::size_t order, const GR& c)
{
    USeries r(order);
    if (order > 0) {
        r.coeffs_[0] = c;
    }
    return r;
}

USeries USeries::monomial(std::size_t order, std::size_t k, const GR& c)
{
    USeries r(order);
    if (k < order) {
        r.coeffs_[k] = c;
    }
    return r;
}

USeries USeries::exp_series(std::size_t order)
{
    USeries r(order);
    mpq_class term = 1;
    for (std::size_t k = 0; k < order; ++k) {
        if (k > 0) {
            term /= static_cast<unsigned long>(k);
        }
        r.coeffs_[k] = GR(term);
    }
    return r;
}

USeries USeries::geometric_alternating(std::size_t order)
{
    USeries r(order);
    for (std::size_t k = 0; k < order; ++k) {
        r.coeffs_[k] = GR(k % 2 == 0 ? 1 : -1);
    }
    return r;
}

bool USeries::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const GR& c) { return c.is_zero(); });
}

std::optional<std::size_t> USeries::valuation() const
{
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (!coeffs_[k].is_zero()) {
            return k;
        }
    }
    return std::nullopt;
}

USeries USeries::truncated(std::size_t order) const
{
    return USeries(std::min(order, this->order()),
                   std::vector<GR>(coeffs_.begin(),
                                   coeffs_.begin() + static_cast<std::ptrdiff_t>(
                                                         std::min(order, this->order()))));
}

USeries USeries::operator-() const
{
    USeries r(*this);
    for (auto& c : r.coeffs_) {
        c = -c;
    }
    return r;
}

USeries operator+(const USeries& a, const USeries& b)
{
    std::size_t n = std::min(a.order(), b.order());
    USeries r(n);
    for (std::size_t k = 0; k < n; ++k) {
        r.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
    }
    return r;
}

USeries operator-(const USeries& a, const USeries& b)
{
    std::size_t n = std::min(a.order(), b.order());
    USeries r(n);
    for (std::size_t k = 0; k < n; ++k) {
        r.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
    }
    return r;
}

USeries operator*(const USeries& a, const USeries& b)
{
    std::size_t n = std::min(a.order(), b.order());
    USeries r(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; i + j < n; ++j) {
            if (b.coeffs_[j].is_zero()) {
                continue;
            }
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return r;
}

USeries operator*(const GR& c, const USeries& a)
{
    USeries r(a);
    for (auto& x : r.coeffs_) {
        if (!x.is_zero()) {
            x *= c;
        }
    }
    return r;
}

USeries u_add(const USeries& a, const USeries& b) { return a + b; }

USeries u_mul(const USeries& a, const USeries& b) { return a * b; }

USeries u_inverse(const USeries& a)
{
    if (a.order() == 0 || a[0].is_zero()) {
        throw Error(ErrorKind::NotAUnit, "series with zero constant term has no inverse");
    }
    std::size_t n = a.order();
    std::vector<GR> inv(n);
    GR c0inv = a[0].inverse();
    inv[0] = c0inv;
    for (std::size_t k = 1; k < n; ++k) {
        GR acc;
        for (std::size_t j = 1; j <= k; ++j) {
            if (!a[j].is_zero() && !inv[k - j].is_zero()) {
                acc += a[j] * inv[k - j];
            }
        }
        inv[k] = -(acc * c0inv);
    }
    return USeries(n, std::move(inv));
}

USeries u_derive(const USeries& a)
{
    if (a.order() <= 1) {
        throw Error(ErrorKind::PrecisionExhausted, "derivative of a series known only mod s^1");
    }
    std::size_t n = a.order() - 1;
    std::vector<GR> d(n);
    for (std::size_t k = 0; k < n; ++k) {
        d[k] = GR(static_cast<long>(k + 1)) * a[k + 1];
    }
    return USeries(n, std::move(d));
}

USeries u_integrate(const USeries& a, const GR& constant)
{
    std::size_t n = a.order() + 1;
    std::vector<GR> r(n);
    r[0] = constant;
    for (std::size_t k = 0; k < a.order(); ++k) {
        if (!a[k].is_zero()) {
            r[k + 1] = a[k] / GR(static_cast<long>(k + 1));
        }
    }
    return USeries(n, std::move(r));
}

USeries u_compose(const USeries& outer, const USeries& inner)
{
    if (inner.order() > 0 && !inner[0].is_zero()) {
        throw Error(ErrorKind::InnerNotNilpotent, "inner series must have zero constant term");
    }
    std::size_t n = std::min(outer.order(), inner.order());
    // Horner: outer_0 + inner*(outer_1 + inner*(...)).
    USeries acc(n);
    for (std::size_t k = n; k-- > 0;) {
        acc = acc * inner.truncated(n);
        acc = acc + USeries::constant(n, outer[k]);
    }
    return acc;
}

USeries u_exp(const USeries& a)
{
    return u_compose(USeries::exp_series(a.order()), a);
}

bool agree_mod(const USeries& a, const USeries& b, std::size_t n)
{
    if (n > a.order() || n > b.order()) {
        throw Error(ErrorKind::OrderMismatch, "comparison beyond known precision");
    }
    for (std::size_t k = 0; k < n; ++k) {
        if (!(a[k] == b[k])) {
            return false;
        }
    }
    return true;
}

}  // namespace rhc
