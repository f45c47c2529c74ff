#include "iet/scalar.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace iet {

namespace {

long combine_radicands(const Rational& b1, long d1, const Rational& b2, long d2) {
    const bool r1 = b1 != 0;
    const bool r2 = b2 != 0;
    if (r1 && r2 && d1 != d2) {
        throw FieldMismatchError("cannot combine sqrt(" + std::to_string(d1) +
                                 ") with sqrt(" + std::to_string(d2) + ")");
    }
    return r1 ? d1 : (r2 ? d2 : 0);
}

int sgn(const Rational& q) { return mpq_sgn(q.get_mpq_t()); }

} // namespace

bool valid_radicand(long d) {
    if (d < 2) return false;
    mpz_class z(d);
    if (mpz_perfect_square_p(z.get_mpz_t())) return false;
    for (long p = 2; p * p <= d; ++p) {
        if (d % (p * p) == 0) return false;
    }
    return true;
}

Scalar::Scalar(long num, unsigned long den) : a_(num, den), d_(0) {
    if (den == 0) throw std::domain_error("Scalar: zero denominator");
    a_.canonicalize();
}

Scalar::Scalar(Rational a) : a_(std::move(a)), d_(0) {}

Scalar::Scalar(Rational a, Rational b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (b_ != 0 && !valid_radicand(d_)) {
        throw std::domain_error("Scalar: radicand " + std::to_string(d_) +
                                " is not a squarefree integer >= 2");
    }
    normalize();
}

void Scalar::normalize() {
    if (b_ == 0) d_ = 0;
}

int Scalar::sign() const {
    const int sa = sgn(a_);
    const int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 against b^2 d. Equality would force
    // sqrt(d) rational, which valid_radicand rules out.
    Rational lhs = a_ * a_;
    Rational rhs = b_ * b_ * d_;
    int c = cmp(lhs, rhs);
    return c > 0 ? sa : sb;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    d_ = combine_radicands(b_, d_, o.b_, o.d_);
    a_ += o.a_;
    b_ += o.b_;
    normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    d_ = combine_radicands(b_, d_, o.b_, o.d_);
    a_ -= o.a_;
    b_ -= o.b_;
    normalize();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    const long d = combine_radicands(b_, d_, o.b_, o.d_);
    Rational a = a_ * o.a_;
    if (b_ != 0 && o.b_ != 0) a += b_ * o.b_ * d;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    d_ = d;
    normalize();
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("Scalar: inverse of zero");
    if (b_ == 0) {
        Rational r = 1 / a_;
        return Scalar(r);
    }
    // (a + b sqrt d)^-1 = (a - b sqrt d) / (a^2 - b^2 d)
    Rational norm = a_ * a_ - b_ * b_ * d_;
    return Scalar(a_ / norm, -b_ / norm, d_);
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

std::pair<BigInt, Scalar> floor_frac(const Scalar& x) {
    BigInt k;
    if (x.is_rational()) {
        const Rational& q = x.rational_part();
        mpz_fdiv_q(k.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    } else {
        // Bracket b*sqrt(d) by scaled integer square roots tight enough to
        // pin the floor, then verify with exact sign comparisons.
        const Rational& a = x.rational_part();
        const Rational& b = x.radical_part();
        const mp_bitcnt_t bits =
            mpz_sizeinbase(b.get_num().get_mpz_t(), 2) + mpz_sizeinbase(b.get_den().get_mpz_t(), 2) + 8;
        mpz_class scaled = BigInt(x.radicand()) << (2 * bits);
        mpz_class root = sqrt(scaled); // floor(sqrt(d) * 2^bits)
        Rational lo(root, BigInt(1) << bits);
        lo.canonicalize();
        Rational approx = a + b * lo; // within |b| * 2^-bits of x
        mpz_fdiv_q(k.get_mpz_t(), approx.get_num().get_mpz_t(), approx.get_den().get_mpz_t());
        while ((x - Scalar(Rational(k + 1))).sign() >= 0) ++k;
        while ((x - Scalar(Rational(k))).sign() < 0) --k;
    }
    Scalar r = x - Scalar(Rational(k));
    return {std::move(k), std::move(r)};
}

Scalar frac(const Scalar& x) { return floor_frac(x).second; }

namespace {

// --- scalar grammar -------------------------------------------------------
//
//   scalar  := term (('+'|'-') radical)?   | radical
//   term    := sign? digits ('/' digits)?
//   radical := term '*' 'sqrt' '(' digits ')'

struct Cursor {
    std::string_view text;
    size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    bool consume(char c) {
        if (!done() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("scalar '" + std::string(text) + "': " + what);
    }
};

BigInt parse_digits(Cursor& c, const char* role) {
    size_t start = c.pos;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
    if (c.pos == start) c.fail(std::string("expected digits for ") + role);
    return BigInt(std::string(c.text.substr(start, c.pos - start)), 10);
}

Rational parse_rational(Cursor& c) {
    int sign = 1;
    if (c.consume('-')) sign = -1;
    else c.consume('+');
    BigInt num = parse_digits(c, "numerator");
    BigInt den = 1;
    if (c.consume('/')) {
        den = parse_digits(c, "denominator");
        if (den == 0) c.fail("zero denominator");
    }
    Rational q(sign < 0 ? -num : num, den);
    q.canonicalize();
    return q;
}

bool at_sqrt_keyword(const Cursor& c) { return c.text.compare(c.pos, 5, "sqrt(") == 0; }

long parse_radicand(Cursor& c) {
    // consumes "sqrt(" digits ")"
    c.pos += 5;
    BigInt d = parse_digits(c, "radicand");
    if (!c.consume(')')) c.fail("expected ')' after radicand");
    if (!d.fits_slong_p()) c.fail("radicand " + d.get_str() + " out of range");
    long dl = d.get_si();
    if (mpz_perfect_square_p(BigInt(dl).get_mpz_t()))
        c.fail("radicand " + d.get_str() + " is a perfect square");
    if (!valid_radicand(dl)) c.fail("radicand " + d.get_str() + " is not squarefree");
    return dl;
}

} // namespace

Scalar parse_scalar(std::string_view text) {
    size_t first = text.find_first_not_of(" \t");
    size_t last = text.find_last_not_of(" \t");
    if (first == std::string_view::npos) throw ParseError("scalar: empty input");
    Cursor c{text.substr(first, last - first + 1)};

    Rational a(0);
    Rational b(0);
    long d = 0;

    if (at_sqrt_keyword(c)) {
        b = 1;
        d = parse_radicand(c);
    } else {
        Rational head = parse_rational(c);
        if (c.consume('*')) {
            if (!at_sqrt_keyword(c)) c.fail("expected sqrt( after '*'");
            b = head;
            d = parse_radicand(c);
        } else {
            a = head;
            if (!c.done() && (c.peek() == '+' || c.peek() == '-')) {
                // the sign belongs to the radical coefficient
                b = parse_rational(c);
                if (!c.consume('*')) c.fail("expected '*sqrt(...)' after radical coefficient");
                if (!at_sqrt_keyword(c)) c.fail("expected sqrt( after '*'");
                d = parse_radicand(c);
            }
        }
    }
    if (!c.done()) c.fail("trailing characters '" + std::string(c.text.substr(c.pos)) + "'");
    if (b == 0) return Scalar(a);
    return Scalar(a, b, d);
}

namespace {

std::string rational_text(const Rational& q) {
    return q.get_str(); // "n" or "n/d", lowest terms, den > 0
}

} // namespace

std::string format_scalar(const Scalar& x) {
    if (x.is_rational()) return rational_text(x.rational_part());
    std::string out = rational_text(x.rational_part());
    const Rational& b = x.radical_part();
    out += (sgn(b) < 0) ? '-' : '+';
    Rational mag = ::abs(b);
    out += rational_text(mag);
    out += "*sqrt(";
    out += std::to_string(x.radicand());
    out += ')';
    return out;
}

std::string decimal_string(const Scalar& x, int significant_digits) {
    if (significant_digits < 1) throw std::domain_error("decimal_string: need >= 1 digit");
    const int s = x.sign();
    if (s == 0) return "0";
    Scalar y = x.abs();

    // decimal exponent e with 10^(e-1) <= y < 10^e
    int e = 1;
    auto pow10 = [](int k) {
        Rational p(1);
        mpz_class ten(10);
        if (k >= 0) {
            mpz_class t;
            mpz_pow_ui(t.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(k));
            p = Rational(t);
        } else {
            mpz_class t;
            mpz_pow_ui(t.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(-k));
            p = Rational(1, t);
            p.canonicalize();
        }
        return p;
    };
    while (y < Scalar(pow10(e - 1))) --e;
    while (!(y < Scalar(pow10(e)))) ++e;

    BigInt mantissa = floor_frac(y * Scalar(pow10(significant_digits - e))).first;
    std::string digits = mantissa.get_str();
    // truncation can only lose, never gain, a digit
    while (static_cast<int>(digits.size()) < significant_digits)
        digits.insert(digits.begin(), '0');

    std::string out;
    if (s < 0) out += '-';
    if (e <= 0) {
        out += "0.";
        out.append(static_cast<size_t>(-e), '0');
        out += digits;
    } else if (e >= significant_digits) {
        out += digits;
        out.append(static_cast<size_t>(e - significant_digits), '0');
    } else {
        out += digits.substr(0, static_cast<size_t>(e));
        out += '.';
        out += digits.substr(static_cast<size_t>(e));
    }
    return out;
}

} // namespace iet
