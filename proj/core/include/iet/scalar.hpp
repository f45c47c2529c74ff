#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "iet/errors.hpp"

namespace iet {

using BigInt = mpz_class;
using Rational = mpq_class;

/// An exact element a + b*sqrt(d) of Q or of a real quadratic field Q(sqrt d).
///
/// The radicand d is a squarefree integer >= 2, or 0 for purely rational
/// values; b == 0 forces d == 0, so equal rationals compare equal no matter
/// which field they were computed in. Operations mixing two distinct
/// irrational radicands throw FieldMismatchError. All arithmetic and
/// comparisons are exact; comparison never consults floating point.
class Scalar {
public:
    Scalar() : d_(0) {}
    Scalar(long n) : a_(n), d_(0) {}
    Scalar(long num, unsigned long den);
    explicit Scalar(Rational a);
    Scalar(Rational a, Rational b, long d);

    static Scalar sqrt_of(long d) { return Scalar(Rational(0), Rational(1), d); }

    const Rational& rational_part() const { return a_; }
    const Rational& radical_part() const { return b_; }
    long radicand() const { return d_; }
    bool is_rational() const { return d_ == 0; }

    /// -1, 0, or +1, decided by sign analysis and exact squaring.
    int sign() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
    friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
    friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
    friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

    Scalar inverse() const;
    Scalar abs() const { return sign() < 0 ? -*this : *this; }

    bool operator==(const Scalar& o) const { return (*this - o).sign() == 0; }
    std::strong_ordering operator<=>(const Scalar& o) const {
        int s = (*this - o).sign();
        return s < 0   ? std::strong_ordering::less
               : s > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
    }

    bool is_zero() const { return a_ == 0 && b_ == 0; }

private:
    void normalize();

    Rational a_; // rational part
    Rational b_; // coefficient of sqrt(d); 0 iff d_ == 0
    long d_;     // squarefree radicand >= 2, or 0
};

/// Exact floor/fractional split: x = k + r with k integral and 0 <= r < 1.
std::pair<BigInt, Scalar> floor_frac(const Scalar& x);

/// The fractional part {x} in [0, 1).
Scalar frac(const Scalar& x);

/// True for integers d >= 2 that are squarefree and not perfect squares.
bool valid_radicand(long d);

/// Parses the scalar grammar `p/q` or `p/q+r/s*sqrt(D)` (signs allowed on p
/// and r, `/1` may be omitted). Throws ParseError naming the offending token.
Scalar parse_scalar(std::string_view text);

/// Canonical lowest-terms text; parse_scalar(format_scalar(x)) == x.
std::string format_scalar(const Scalar& x);

/// Truncated decimal rendering with the given number of significant digits.
std::string decimal_string(const Scalar& x, int significant_digits);

} // namespace iet
