#include <polycauchy/rational.hpp>

#include <ostream>
#include <stdexcept>

namespace polycauchy
{

namespace
{

BigInt parse_integer(std::string_view digits, std::string_view whole)
{
    if (digits.empty()) {
        throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    }
    for (char c : digits) {
        if (c < '0' || c > '9') {
            throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
        }
    }
    return BigInt(std::string(digits), 10);
}

} // namespace

ExactRational::ExactRational(mpq_class value) : value_(std::move(value))
{
    value_.canonicalize();
}

ExactRational::ExactRational(const BigInt &num, const BigInt &den)
{
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

ExactRational::ExactRational(long num, long den) : ExactRational(BigInt(num), BigInt(den)) {}

ExactRational ExactRational::parse(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    BigInt num = parse_integer(body.substr(0, slash), text);
    BigInt den = 1;
    if (slash != std::string_view::npos) {
        den = parse_integer(body.substr(slash + 1), text);
        if (den == 0) {
            throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        }
    }
    if (negative) {
        num = -num;
    }
    return ExactRational(num, den);
}

ExactRational ExactRational::inverse() const
{
    if (is_zero()) {
        throw std::domain_error("inverse of zero");
    }
    mpq_class r;
    mpq_inv(r.get_mpq_t(), value_.get_mpq_t());
    return ExactRational(std::move(r));
}

ExactRational &ExactRational::operator+=(const ExactRational &other)
{
    value_ += other.value_;
    return *this;
}

ExactRational &ExactRational::operator-=(const ExactRational &other)
{
    value_ -= other.value_;
    return *this;
}

ExactRational &ExactRational::operator*=(const ExactRational &other)
{
    value_ *= other.value_;
    return *this;
}

ExactRational &ExactRational::operator/=(const ExactRational &other)
{
    if (other.is_zero()) {
        throw std::domain_error("division by zero");
    }
    value_ /= other.value_;
    return *this;
}

ExactRational ExactRational::operator-() const
{
    ExactRational r(*this);
    mpq_neg(r.value_.get_mpq_t(), r.value_.get_mpq_t());
    return r;
}

std::string ExactRational::to_string() const
{
    return value_.get_str(10);
}

std::ostream &operator<<(std::ostream &os, const ExactRational &r)
{
    return os << r.to_string();
}

} // namespace polycauchy
