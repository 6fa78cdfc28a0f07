#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace bsv {

using BigInt = mpz_class;
// mpq_class keeps gcd(num, den) = 1 and den > 0 after every operation.
using BigRational = mpq_class;

std::string to_string(BigRational const& q);

/// An element re + zc*ζ of Q(ζ), where ζ is a primitive cube root of unity
/// (ζ² + ζ + 1 = 0). The pair (re, zc) is the unique representation on the
/// basis {1, ζ}; ζ² is never stored.
class EisensteinRational {
public:
    EisensteinRational() = default;
    EisensteinRational(long value) : re_(value) {}  // NOLINT: implicit from integers is intended
    EisensteinRational(BigRational re) : re_(std::move(re)) {}  // NOLINT
    EisensteinRational(BigRational re, BigRational zc) : re_(std::move(re)), zc_(std::move(zc)) {}

    static EisensteinRational zeta() { return {0, 1}; }
    static EisensteinRational rational(long num, long den);

    BigRational const& re() const noexcept { return re_; }
    BigRational const& zc() const noexcept { return zc_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(zc_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(zc_) == 0; }
    bool is_rational() const { return sgn(zc_) == 0; }

    /// Galois conjugate, ζ ↦ ζ².
    EisensteinRational conjugate() const;
    /// The rational norm a·conj(a) = re² − re·zc + zc².
    BigRational norm() const;
    /// Throws DivisionByZero on zero.
    EisensteinRational inverse() const;

    EisensteinRational& operator+=(EisensteinRational const& o);
    EisensteinRational& operator-=(EisensteinRational const& o);
    EisensteinRational& operator*=(EisensteinRational const& o);
    EisensteinRational& operator/=(EisensteinRational const& o);

    friend EisensteinRational operator+(EisensteinRational a, EisensteinRational const& b) { return a += b; }
    friend EisensteinRational operator-(EisensteinRational a, EisensteinRational const& b) { return a -= b; }
    friend EisensteinRational operator*(EisensteinRational a, EisensteinRational const& b) { return a *= b; }
    friend EisensteinRational operator/(EisensteinRational a, EisensteinRational const& b) { return a /= b; }
    EisensteinRational operator-() const { return {-re_, -zc_}; }

    friend bool operator==(EisensteinRational const& a, EisensteinRational const& b) {
        return a.re_ == b.re_ && a.zc_ == b.zc_;
    }
    friend bool operator!=(EisensteinRational const& a, EisensteinRational const& b) { return !(a == b); }

    /// Arbitrary total order on representations, for use as a map key only.
    friend bool representation_less(EisensteinRational const& a, EisensteinRational const& b) {
        if (a.re_ != b.re_)
            return a.re_ < b.re_;
        return a.zc_ < b.zc_;
    }

    /// Non-negative integer power; negative exponents go through inverse().
    EisensteinRational pow(std::int64_t e) const;

private:
    BigRational re_{0};
    BigRational zc_{0};
};

/// Canonical text: `a`, `a/b`, `z`, `-2*z/3`, `(a+b*z)/d`.
std::string to_string(EisensteinRational const& x);
std::ostream& operator<<(std::ostream& os, EisensteinRational const& x);

/// Parses the scalar grammar: integers, `z`, `+ - * /`, `^` with integer
/// exponents, and parentheses. Whitespace-insensitive. Throws ParseError.
EisensteinRational parse_scalar(std::string_view text);

} // namespace bsv
