#include "rhcurve/gaussian_rational.hpp"

#include "rhcurve/errors.hpp"

#include <cctype>
#include <ostream>

namespace rhc {

const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::InnerNotNilpotent: return "InnerNotNilpotent";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::IrrationalLeadingCoefficient: return "IrrationalLeadingCoefficient";
    case ErrorKind::DuplicateDirection: return "DuplicateDirection";
    case ErrorKind::InvalidBranch: return "InvalidBranch";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::SingularInitialValue: return "SingularInitialValue";
    case ErrorKind::RankNotSupported: return "RankNotSupported";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Parse: return "ParseError";
    }
    return "Unknown";
}

GaussianRational GaussianRational::fraction(long p, long q)
{
    if (q == 0) {
        throw Error(ErrorKind::InvalidArgument, "zero denominator");
    }
    mpq_class r(p, q);
    return GaussianRational(r);
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o)
{
    re_ += o.re_;
    if (sgn(o.im_) != 0) {
        im_ += o.im_;
    }
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o)
{
    re_ -= o.re_;
    if (sgn(o.im_) != 0) {
        im_ -= o.im_;
    }
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o)
{
    // Real operands dominate in practice; skip the complex product for them.
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    if (sgn(o.im_) == 0) {
        re_ *= o.re_;
        im_ *= o.re_;
        return *this;
    }
    if (sgn(im_) == 0) {
        im_ = re_ * o.im_;
        re_ *= o.re_;
        return *this;
    }
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational GaussianRational::inverse() const
{
    if (is_zero()) {
        throw Error(ErrorKind::NotAUnit, "division by zero in Q(i)");
    }
    if (sgn(im_) == 0) {
        return GaussianRational(mpq_class(1) / re_);
    }
    mpq_class n = norm();
    return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o)
{
    if (o.is_zero()) {
        throw Error(ErrorKind::NotAUnit, "division by zero in Q(i)");
    }
    if (sgn(o.im_) == 0) {
        re_ /= o.re_;
        if (sgn(im_) != 0) {
            im_ /= o.re_;
        }
        return *this;
    }
    return *this *= o.inverse();
}

GaussianRational GaussianRational::pow(long e) const
{
    if (e < 0) {
        return inverse().pow(-e);
    }
    GaussianRational result(1);
    GaussianRational base = *this;
    while (e > 0) {
        if (e & 1) {
            result *= base;
        }
        e >>= 1;
        if (e > 0) {
            base *= base;
        }
    }
    return result;
}

std::size_t GaussianRational::height() const
{
    auto bits = [](const mpz_class& z) { return mpz_sizeinbase(z.get_mpz_t(), 2); };
    return bits(re_.get_num()) + bits(re_.get_den()) + bits(im_.get_num()) + bits(im_.get_den());
}

std::string GaussianRational::to_string() const
{
    std::string out = re_.get_str();
    if (sgn(im_) == 0) {
        return out;
    }
    mpq_class mag = abs(im_);
    out += sgn(im_) > 0 ? "+" : "-";
    out += mag.get_str();
    out += "*i";
    return out;
}

namespace {

// Recursive-descent reader for  part  ::= ['+'|'-'] digits ['/' digits]
class LiteralReader {
public:
    explicit LiteralReader(std::string_view text) : text_(text) {}

    bool done() const { return pos_ == text_.size(); }
    std::size_t pos() const { return pos_; }
    char peek() const { return done() ? '\0' : text_[pos_]; }

    [[noreturn]] void fail(const std::string& msg) const
    {
        throw ParseError("coefficient \"" + std::string(text_) + "\": " + msg + " at offset " +
                             std::to_string(pos_),
                         pos_);
    }

    int sign()
    {
        if (peek() == '+') {
            ++pos_;
            return 1;
        }
        if (peek() == '-') {
            ++pos_;
            return -1;
        }
        return 0;
    }

    bool at_digit() const { return !done() && std::isdigit(static_cast<unsigned char>(peek())); }

    mpz_class integer()
    {
        std::size_t start = pos_;
        while (at_digit()) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected digits");
        }
        return mpz_class(std::string(text_.substr(start, pos_ - start)));
    }

    // digits ['/' digits]; numerator sign handled by caller.
    mpq_class magnitude()
    {
        mpz_class num = integer();
        mpz_class den = 1;
        if (peek() == '/') {
            ++pos_;
            den = integer();
            if (den == 0) {
                fail("zero denominator");
            }
        }
        mpq_class q(num, den);
        q.canonicalize();
        return q;
    }

    // Optional "*i" or "i" suffix marking an imaginary part.
    bool imaginary_suffix()
    {
        if (peek() == '*') {
            ++pos_;
            if (peek() != 'i') {
                fail("expected 'i' after '*'");
            }
            ++pos_;
            return true;
        }
        if (peek() == 'i') {
            ++pos_;
            return true;
        }
        return false;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

GaussianRational GaussianRational::parse(std::string_view text)
{
    LiteralReader r(text);
    if (r.done()) {
        r.fail("empty literal");
    }
    mpq_class re = 0;
    mpq_class im = 0;
    bool have_re = false;
    bool have_im = false;
    bool first = true;
    while (!r.done()) {
        int s = r.sign();
        if (!first && s == 0) {
            r.fail("expected '+' or '-'");
        }
        first = false;
        mpq_class value = 1;
        bool explicit_value = false;
        if (r.at_digit()) {
            value = r.magnitude();
            explicit_value = true;
        }
        bool imag = r.imaginary_suffix();
        if (!explicit_value && !imag) {
            r.fail("expected a number");
        }
        if (s < 0) {
            value = -value;
        }
        if (imag) {
            if (have_im) {
                r.fail("duplicate imaginary part");
            }
            im = value;
            have_im = true;
        } else {
            if (have_re || have_im) {
                r.fail("real part must come first");
            }
            re = value;
            have_re = true;
        }
    }
    return {re, im};
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z)
{
    return os << z.to_string();
}

}  // namespace rhc
