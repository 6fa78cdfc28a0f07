#include "bsv/scalars.hpp"

#include "bsv/errors.hpp"
#include "expr_parser.hpp"

#include <ostream>

namespace bsv {

std::string to_string(BigRational const& q) {
    return q.get_str();
}

EisensteinRational EisensteinRational::rational(long num, long den) {
    if (den == 0)
        throw DivisionByZero();
    BigRational q(num, den);
    q.canonicalize();
    return EisensteinRational(q);
}

EisensteinRational EisensteinRational::conjugate() const {
    // re + zc·ζ² = (re − zc) − zc·ζ
    return {re_ - zc_, -zc_};
}

BigRational EisensteinRational::norm() const {
    return BigRational(re_ * re_ - re_ * zc_ + zc_ * zc_);
}

EisensteinRational EisensteinRational::inverse() const {
    if (is_zero())
        throw DivisionByZero();
    BigRational const n = norm();
    EisensteinRational c = conjugate();
    return {BigRational(c.re_ / n), BigRational(c.zc_ / n)};
}

EisensteinRational& EisensteinRational::operator+=(EisensteinRational const& o) {
    re_ += o.re_;
    zc_ += o.zc_;
    return *this;
}

EisensteinRational& EisensteinRational::operator-=(EisensteinRational const& o) {
    re_ -= o.re_;
    zc_ -= o.zc_;
    return *this;
}

EisensteinRational& EisensteinRational::operator*=(EisensteinRational const& o) {
    if (is_rational() && o.is_rational()) {
        re_ *= o.re_;
        return *this;
    }
    // (a + bζ)(c + dζ) = ac + (ad + bc)ζ + bdζ², with ζ² = −1 − ζ
    BigRational const bd = zc_ * o.zc_;
    BigRational const re = re_ * o.re_ - bd;
    BigRational const zc = re_ * o.zc_ + zc_ * o.re_ - bd;
    re_ = re;
    zc_ = zc;
    return *this;
}

EisensteinRational& EisensteinRational::operator/=(EisensteinRational const& o) {
    if (o.is_rational()) {
        if (sgn(o.re_) == 0)
            throw DivisionByZero();
        re_ /= o.re_;
        zc_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

EisensteinRational EisensteinRational::pow(std::int64_t e) const {
    if (e < 0)
        return inverse().pow(-e);
    EisensteinRational result(1);
    EisensteinRational base = *this;
    while (e > 0) {
        if (e & 1)
            result *= base;
        e >>= 1;
        if (e > 0)
            base *= base;
    }
    return result;
}

std::string to_string(EisensteinRational const& x) {
    if (x.is_rational())
        return to_string(x.re());

    BigInt d;
    mpz_lcm(d.get_mpz_t(), x.re().get_den_mpz_t(), x.zc().get_den_mpz_t());
    BigInt const a = x.re().get_num() * (d / x.re().get_den());
    BigInt const b = x.zc().get_num() * (d / x.zc().get_den());

    std::string zpart;
    if (b == 1)
        zpart = "z";
    else if (b == -1)
        zpart = "-z";
    else
        zpart = b.get_str() + "*z";

    std::string out;
    if (a == 0) {
        out = zpart;
    } else {
        out = "(" + a.get_str();
        if (b > 0)
            out += "+";
        out += zpart + ")";
    }
    if (d != 1)
        out += "/" + d.get_str();
    return out;
}

std::ostream& operator<<(std::ostream& os, EisensteinRational const& x) {
    return os << to_string(x);
}

namespace {

struct ScalarOps {
    EisensteinRational from_integer(BigInt const& n) { return EisensteinRational(BigRational(n)); }
    EisensteinRational identifier(std::string_view name) {
        if (name == "z")
            return EisensteinRational::zeta();
        throw Error("unknown symbol '" + std::string(name) + "' in scalar");
    }
    EisensteinRational divide(EisensteinRational const& a, EisensteinRational const& b) { return a / b; }
    EisensteinRational power(EisensteinRational const& a, unsigned e) { return a.pow(e); }
};

} // namespace

EisensteinRational parse_scalar(std::string_view text) {
    ScalarOps ops;
    return detail::ExprParser<EisensteinRational, ScalarOps>(text, ops).parse();
}

} // namespace bsv
