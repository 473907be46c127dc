#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace rhc {

/// Element a + b*i of the Gaussian rationals Q(i).
///
/// Both parts are GMP rationals kept in canonical (reduced, positive
/// denominator) form, so equality is structural and zero is always 0/1.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long n) : re_(n) {}  // NOLINT: implicit from integers is intended
    GaussianRational(mpq_class re) : re_(std::move(re)) { re_.canonicalize(); }
    GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im))
    {
        re_.canonicalize();
        im_.canonicalize();
    }

    /// p/q with q != 0; throws std::invalid_argument on q == 0.
    static GaussianRational fraction(long p, long q);
    static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    /// |z|^2 as a rational.
    mpq_class norm() const { return re_ * re_ + im_ * im_; }
    /// Throws Error{NotAUnit} on zero.
    GaussianRational inverse() const;
    GaussianRational pow(long e) const;

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b)
    {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    /// Total bit length of numerators and denominators; used as pivot height.
    std::size_t height() const;

    /// Canonical literal: "p", "p/q", "p/q+r/s*i", "p/q-r/s*i" (parts with q = 1
    /// drop the denominator).
    std::string to_string() const;
    /// Parses the coefficient literal grammar (see to_string; also accepts a bare
    /// imaginary part such as "3/2*i" or "-i"). Throws ParseError.
    static GaussianRational parse(std::string_view text);

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

using GR = GaussianRational;

}  // namespace rhc
