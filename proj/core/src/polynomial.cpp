#include "rhcurve/polynomial.hpp"

#include "rhcurve/errors.hpp"

#include <algorithm>
#include <cctype>

namespace rhc {

std::string Monomial::to_string() const
{
    auto factor = [](char var, int e) {
        std::string s(1, var);
        if (e != 1) {
            s += "^" + std::to_string(e);
        }
        return s;
    };
    if (a == 0 && b == 0) {
        return "1";
    }
    if (b == 0) {
        return factor('x', a);
    }
    if (a == 0) {
        return factor('y', b);
    }
    return factor('x', a) + "*" + factor('y', b);
}

Monomial Monomial::parse(std::string_view text)
{
    Monomial m;
    if (text.empty() || text == "1") {
        return m;
    }
    std::size_t pos = 0;
    bool seen_x = false;
    bool seen_y = false;
    auto fail = [&](const std::string& msg) {
        throw ParseError("monomial \"" + std::string(text) + "\": " + msg + " at offset " +
                             std::to_string(pos),
                         pos);
    };
    while (true) {
        if (pos >= text.size()) {
            fail("expected 'x' or 'y'");
        }
        char var = text[pos];
        if (var != 'x' && var != 'y') {
            fail("expected 'x' or 'y'");
        }
        if ((var == 'x' && (seen_x || seen_y)) || (var == 'y' && seen_y)) {
            fail("factors must appear as x then y, each at most once");
        }
        ++pos;
        int e = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                ++pos;
            }
            if (start == pos) {
                fail("expected exponent digits");
            }
            e = std::stoi(std::string(text.substr(start, pos - start)));
        }
        if (var == 'x') {
            m.a = e;
            seen_x = true;
        } else {
            m.b = e;
            seen_y = true;
        }
        if (pos == text.size()) {
            break;
        }
        if (text[pos] != '*') {
            fail("expected '*'");
        }
        ++pos;
    }
    return m;
}

std::vector<Monomial> monomials_of_degree(int d)
{
    std::vector<Monomial> out;
    for (int a = 0; a <= d; ++a) {
        out.push_back({a, d - a});
    }
    return out;
}

std::vector<Monomial> monomials_up_to(int d)
{
    std::vector<Monomial> out;
    for (int k = 0; k <= d; ++k) {
        auto row = monomials_of_degree(k);
        out.insert(out.end(), row.begin(), row.end());
    }
    return out;
}

Polynomial2::Polynomial2(const GR& c)
{
    add_term({0, 0}, c);
}

Polynomial2::Polynomial2(Terms terms)
{
    for (auto& [m, c] : terms) {
        add_term(m, c);
    }
}

Polynomial2 Polynomial2::monomial(Monomial m, const GR& c)
{
    Polynomial2 p;
    p.add_term(m, c);
    return p;
}

void Polynomial2::add_term(const Monomial& m, const GR& c)
{
    if (m.a < 0 || m.b < 0) {
        throw Error(ErrorKind::InvalidArgument, "negative exponent in monomial");
    }
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

GR Polynomial2::coeff(Monomial m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? GR() : it->second;
}

std::optional<int> Polynomial2::degree() const
{
    if (terms_.empty()) {
        return std::nullopt;
    }
    return terms_.rbegin()->first.degree();
}

std::optional<int> Polynomial2::order() const
{
    if (terms_.empty()) {
        return std::nullopt;
    }
    return terms_.begin()->first.degree();
}

int Polynomial2::max_exponent(Var v) const
{
    int e = 0;
    for (const auto& [m, c] : terms_) {
        e = std::max(e, v == Var::X ? m.a : m.b);
    }
    return e;
}

Polynomial2 Polynomial2::homogeneous_part(int d) const
{
    Polynomial2 p;
    for (const auto& [m, c] : terms_) {
        if (m.degree() == d) {
            p.terms_.emplace(m, c);
        }
    }
    return p;
}

Polynomial2 Polynomial2::truncated(int d) const
{
    Polynomial2 p;
    for (const auto& [m, c] : terms_) {
        if (m.degree() <= d) {
            p.terms_.emplace(m, c);
        }
    }
    return p;
}

Polynomial2 Polynomial2::operator-() const
{
    Polynomial2 p(*this);
    for (auto& [m, c] : p.terms_) {
        c = -c;
    }
    return p;
}

Polynomial2& Polynomial2::operator+=(const Polynomial2& o)
{
    for (const auto& [m, c] : o.terms_) {
        add_term(m, c);
    }
    return *this;
}

Polynomial2& Polynomial2::operator-=(const Polynomial2& o)
{
    for (const auto& [m, c] : o.terms_) {
        add_term(m, -c);
    }
    return *this;
}

Polynomial2 operator*(const Polynomial2& a, const Polynomial2& b)
{
    Polynomial2 p;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            p.add_term({ma.a + mb.a, ma.b + mb.b}, ca * cb);
        }
    }
    return p;
}

Polynomial2 operator*(const GR& c, const Polynomial2& a)
{
    if (c.is_zero()) {
        return {};
    }
    Polynomial2 p(a);
    for (auto& [m, v] : p.terms_) {
        v *= c;
    }
    return p;
}

Polynomial2 Polynomial2::pow(int e) const
{
    if (e < 0) {
        throw Error(ErrorKind::InvalidArgument, "negative power of a polynomial");
    }
    Polynomial2 r(GR(1));
    for (int k = 0; k < e; ++k) {
        r = r * *this;
    }
    return r;
}

GR Polynomial2::evaluate(const GR& x, const GR& y) const
{
    GR acc;
    for (const auto& [m, c] : terms_) {
        acc += c * x.pow(m.a) * y.pow(m.b);
    }
    return acc;
}

std::string Polynomial2::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    // Highest degree first reads more naturally.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        std::string coeff = c.to_string();
        bool compound = !c.is_real();
        bool negative = !compound && sgn(c.re()) < 0;
        if (!first) {
            out += negative ? " - " : " + ";
        } else if (negative) {
            out += "-";
        }
        first = false;
        std::string mag = negative ? (-c).to_string() : coeff;
        if (compound) {
            mag = "(" + mag + ")";
        }
        if (m.degree() == 0) {
            out += mag;
        } else if (mag == "1") {
            out += m.to_string();
        } else {
            out += mag + "*" + m.to_string();
        }
    }
    return out;
}

Polynomial2 p2_partial(const Polynomial2& p, Var v)
{
    Polynomial2::Terms out;
    for (const auto& [m, c] : p.terms()) {
        int e = v == Var::X ? m.a : m.b;
        if (e == 0) {
            continue;
        }
        Monomial d = v == Var::X ? Monomial{m.a - 1, m.b} : Monomial{m.a, m.b - 1};
        out.emplace(d, GR(static_cast<long>(e)) * c);
    }
    return Polynomial2(std::move(out));
}

BranchPowers::BranchPowers(const USeries& x, const USeries& y)
    : order_(std::min(x.order(), y.order())), x_(x.truncated(order_)), y_(y.truncated(order_))
{
    xpow_.push_back(USeries::constant(order_, GR(1)));
    ypow_.push_back(USeries::constant(order_, GR(1)));
}

const USeries& BranchPowers::power(std::vector<USeries>& cache, const USeries& base, int e)
{
    while (static_cast<int>(cache.size()) <= e) {
        cache.push_back(cache.back() * base);
    }
    return cache[static_cast<std::size_t>(e)];
}

USeries BranchPowers::monomial(Monomial m)
{
    const USeries& xa = power(xpow_, x_, m.a);
    const USeries& yb = power(ypow_, y_, m.b);
    if (m.a == 0) {
        return yb;
    }
    if (m.b == 0) {
        return xa;
    }
    return xa * yb;
}

USeries BranchPowers::eval(const Polynomial2& p)
{
    USeries acc(order_);
    for (const auto& [m, c] : p.terms()) {
        acc = acc + c * monomial(m);
    }
    return acc;
}

USeries p2_eval_on_branch(const Polynomial2& p, const USeries& x, const USeries& y)
{
    BranchPowers powers(x, y);
    return powers.eval(p);
}

}  // namespace rhc
