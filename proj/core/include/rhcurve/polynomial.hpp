#pragma once

#include "rhcurve/gaussian_rational.hpp"
#include "rhcurve/series.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rhc {

/// Exponent pair of x^a y^b.
struct Monomial {
    int a = 0;
    int b = 0;

    int degree() const { return a + b; }

    /// Graded order; inside one degree, y^d comes first and x^d last.
    friend std::strong_ordering operator<=>(const Monomial& l, const Monomial& r)
    {
        if (auto c = l.degree() <=> r.degree(); c != 0) {
            return c;
        }
        return l.a <=> r.a;
    }
    friend bool operator==(const Monomial&, const Monomial&) = default;

    /// Key grammar "x^a*y^b"; exponent 1 is written bare, exponent 0 factors
    /// are dropped and the empty monomial is "1".
    std::string to_string() const;
    /// Accepts the key grammar plus "" and "1" for the constant monomial.
    static Monomial parse(std::string_view text);
};

/// All monomials of total degree exactly d, in Monomial order.
std::vector<Monomial> monomials_of_degree(int d);
/// All monomials of total degree <= d, in Monomial order.
std::vector<Monomial> monomials_up_to(int d);

enum class Var { X, Y };

/// Exact sparse polynomial in the ambient coordinates (x, y).
class Polynomial2 {
public:
    using Terms = std::map<Monomial, GR>;

    Polynomial2() = default;
    Polynomial2(const GR& c);  // NOLINT: constants convert implicitly
    explicit Polynomial2(Terms terms);

    static Polynomial2 x() { return monomial({1, 0}); }
    static Polynomial2 y() { return monomial({0, 1}); }
    static Polynomial2 monomial(Monomial m, const GR& c = GR(1));

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    GR coeff(Monomial m) const;
    GR constant_term() const { return coeff({0, 0}); }

    /// Max total degree; nullopt for the zero polynomial.
    std::optional<int> degree() const;
    /// Lowest total degree of a term (the order at the origin); nullopt for zero.
    std::optional<int> order() const;
    int max_exponent(Var v) const;

    /// Terms of total degree exactly d.
    Polynomial2 homogeneous_part(int d) const;
    /// Drops every term of total degree > d.
    Polynomial2 truncated(int d) const;

    Polynomial2 operator-() const;
    Polynomial2& operator+=(const Polynomial2& o);
    Polynomial2& operator-=(const Polynomial2& o);
    friend Polynomial2 operator+(Polynomial2 a, const Polynomial2& b) { return a += b; }
    friend Polynomial2 operator-(Polynomial2 a, const Polynomial2& b) { return a -= b; }
    friend Polynomial2 operator*(const Polynomial2& a, const Polynomial2& b);
    friend Polynomial2 operator*(const GR& c, const Polynomial2& a);
    friend bool operator==(const Polynomial2&, const Polynomial2&) = default;

    Polynomial2 pow(int e) const;
    GR evaluate(const GR& x, const GR& y) const;

    /// Human-readable sum, e.g. "x^4 + x*y^4 + y^5".
    std::string to_string() const;

private:
    void add_term(const Monomial& m, const GR& c);

    Terms terms_;
};

/// Formal partial derivative.
Polynomial2 p2_partial(const Polynomial2& p, Var v);

/// p(x(s), y(s)) modulo s^min(x.order, y.order).
USeries p2_eval_on_branch(const Polynomial2& p, const USeries& x, const USeries& y);

/// Caches the powers x(s)^a, y(s)^b so that many polynomials can be pulled
/// back along the same branch cheaply.
class BranchPowers {
public:
    BranchPowers(const USeries& x, const USeries& y);

    std::size_t order() const { return order_; }
    /// Pullback of x^a y^b.
    USeries monomial(Monomial m);
    USeries eval(const Polynomial2& p);

private:
    const USeries& power(std::vector<USeries>& cache, const USeries& base, int e);

    std::size_t order_;
    USeries x_, y_;
    std::vector<USeries> xpow_, ypow_;
};

}  // namespace rhc
