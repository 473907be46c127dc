#pragma once

#include "rhcurve/gaussian_rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace rhc {

/// Univariate power series in a branch parameter s, known modulo s^order.
///
/// Dense storage: coeffs()[k] is the coefficient of s^k and there are exactly
/// order() of them. Binary operations never claim more precision than the
/// less precise operand.
class USeries {
public:
    USeries() = default;
    /// Zero series mod s^order.
    explicit USeries(std::size_t order);
    /// Takes the first `order` entries of `coeffs`, zero-padding if short.
    USeries(std::size_t order, std::vector<GR> coeffs);
    USeries(std::size_t order, std::initializer_list<GR> coeffs);

    static USeries constant(std::size_t order, const GR& c);
    /// c * s^k mod s^order.
    static USeries monomial(std::size_t order, std::size_t k, const GR& c = GR(1));
    /// sum_k s^k / k!
    static USeries exp_series(std::size_t order);
    /// sum_k (-1)^k s^k, i.e. 1/(1+s).
    static USeries geometric_alternating(std::size_t order);

    std::size_t order() const { return coeffs_.size(); }
    std::span<const GR> coeffs() const { return coeffs_; }
    const GR& operator[](std::size_t k) const { return coeffs_[k]; }
    /// Coefficient of s^k, zero past the known order.
    GR coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : GR(); }

    bool is_zero() const;
    /// Index of the first nonzero coefficient; nullopt when zero mod s^order.
    std::optional<std::size_t> valuation() const;

    USeries truncated(std::size_t order) const;

    USeries operator-() const;
    friend USeries operator+(const USeries& a, const USeries& b);
    friend USeries operator-(const USeries& a, const USeries& b);
    friend USeries operator*(const USeries& a, const USeries& b);
    friend USeries operator*(const GR& c, const USeries& a);

    /// Same order and same coefficients. Use agree_mod for comparisons at a
    /// chosen precision.
    friend bool operator==(const USeries& a, const USeries& b) = default;

private:
    std::vector<GR> coeffs_;
};

/// The named operations; thin wrappers kept for parity with the written
/// contracts and used heavily in tests.
USeries u_add(const USeries& a, const USeries& b);
USeries u_mul(const USeries& a, const USeries& b);
/// Throws Error{NotAUnit} when the constant term vanishes.
USeries u_inverse(const USeries& a);
/// Lowers the order by one; throws Error{PrecisionExhausted} at order 1.
USeries u_derive(const USeries& a);
/// Raises the order by one; the constant term of the result is `constant`.
USeries u_integrate(const USeries& a, const GR& constant);
/// outer(inner(s)) mod s^min(orders); throws Error{InnerNotNilpotent} when
/// inner(0) != 0.
USeries u_compose(const USeries& outer, const USeries& inner);
/// exp(a) for a with zero constant term (same precondition as u_compose).
USeries u_exp(const USeries& a);

/// True when a and b agree modulo s^n (n must not exceed either order).
bool agree_mod(const USeries& a, const USeries& b, std::size_t n);

}  // namespace rhc
