#ifndef POLYCAUCHY_RATIONAL_HPP
#define POLYCAUCHY_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace polycauchy
{

using BigInt = mpz_class;

// Arbitrary-precision rational, always in canonical form: positive
// denominator, numerator and denominator coprime, zero stored as 0/1.
class ExactRational
{
public:
    ExactRational() = default;
    ExactRational(long value) : value_(value) {}
    ExactRational(const BigInt &value) : value_(value) {}
    ExactRational(const BigInt &num, const BigInt &den);
    ExactRational(long num, long den);

    // Accepts "p", "-p", "p/q", "-p/q" with decimal digits.
    static ExactRational parse(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    ExactRational inverse() const;

    ExactRational &operator+=(const ExactRational &other);
    ExactRational &operator-=(const ExactRational &other);
    ExactRational &operator*=(const ExactRational &other);
    ExactRational &operator/=(const ExactRational &other);

    friend ExactRational operator+(ExactRational a, const ExactRational &b) { return a += b; }
    friend ExactRational operator-(ExactRational a, const ExactRational &b) { return a -= b; }
    friend ExactRational operator*(ExactRational a, const ExactRational &b) { return a *= b; }
    friend ExactRational operator/(ExactRational a, const ExactRational &b) { return a /= b; }
    ExactRational operator-() const;

    friend bool operator==(const ExactRational &a, const ExactRational &b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const ExactRational &a, const ExactRational &b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    // "p/q", or "p" when q = 1; the sign lives on the numerator.
    std::string to_string() const;

    const mpq_class &raw() const { return value_; }

private:
    explicit ExactRational(mpq_class value);

    mpq_class value_{0};
};

std::ostream &operator<<(std::ostream &os, const ExactRational &r);

} // namespace polycauchy

#endif
