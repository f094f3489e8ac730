#include <polycauchy/polynomial.hpp>

#include <stdexcept>

namespace polycauchy
{

Polynomial::Polynomial(const ExactRational &constant)
{
    if (!constant.is_zero()) {
        coeffs_.push_back(constant);
    }
}

Polynomial::Polynomial(std::vector<ExactRational> coefficients) : coeffs_(std::move(coefficients))
{
    trim();
}

Polynomial::Polynomial(std::initializer_list<ExactRational> coefficients) : coeffs_(coefficients)
{
    trim();
}

Polynomial Polynomial::x()
{
    return Polynomial{0, 1};
}

Polynomial Polynomial::monomial(const ExactRational &c, std::size_t power)
{
    std::vector<ExactRational> v(power + 1);
    v[power] = c;
    return Polynomial(std::move(v));
}

void Polynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

std::optional<std::size_t> Polynomial::degree() const
{
    if (coeffs_.empty()) {
        return std::nullopt;
    }
    return coeffs_.size() - 1;
}

ExactRational Polynomial::coefficient(std::size_t power) const
{
    return power < coeffs_.size() ? coeffs_[power] : ExactRational{};
}

ExactRational Polynomial::leading_coefficient() const
{
    return coeffs_.empty() ? ExactRational{} : coeffs_.back();
}

ExactRational Polynomial::operator()(const ExactRational &at) const
{
    ExactRational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= at;
        acc += *it;
    }
    return acc;
}

// Horner over the linear polynomial (x + c).
Polynomial Polynomial::shifted(const ExactRational &c) const
{
    if (c.is_zero()) {
        return *this;
    }
    const Polynomial linear{c, 1};
    Polynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= linear;
        acc += Polynomial(*it);
    }
    return acc;
}

Polynomial Polynomial::derivative() const
{
    if (coeffs_.size() <= 1) {
        return {};
    }
    std::vector<ExactRational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        d[i - 1] = coeffs_[i] * ExactRational(static_cast<long>(i));
    }
    return Polynomial(std::move(d));
}

Polynomial &Polynomial::operator+=(const Polynomial &other)
{
    if (other.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size());
    }
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
        coeffs_[i] += other.coeffs_[i];
    }
    trim();
    return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &other)
{
    if (other.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size());
    }
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
        coeffs_[i] -= other.coeffs_[i];
    }
    trim();
    return *this;
}

Polynomial operator*(const Polynomial &a, const Polynomial &b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<ExactRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Polynomial(std::move(out));
}

Polynomial &Polynomial::operator*=(const Polynomial &other)
{
    *this = *this * other;
    return *this;
}

Polynomial &Polynomial::operator*=(const ExactRational &c)
{
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto &v : coeffs_) {
        v *= c;
    }
    return *this;
}

Polynomial Polynomial::operator-() const
{
    Polynomial r(*this);
    for (auto &v : r.coeffs_) {
        v = -v;
    }
    return r;
}

std::string Polynomial::to_string() const
{
    if (coeffs_.empty()) {
        return "0";
    }
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const ExactRational &c = coeffs_[i];
        if (c.is_zero()) {
            continue;
        }
        const bool negative = c.sign() < 0;
        const ExactRational mag = negative ? -c : c;
        if (out.empty()) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        const bool unit = mag == ExactRational(1);
        if (i == 0) {
            out += mag.to_string();
            continue;
        }
        if (!unit) {
            out += mag.to_string() + "*";
        }
        out += "x";
        if (i > 1) {
            out += "^" + std::to_string(i);
        }
    }
    return out;
}

nlohmann::json Polynomial::to_json() const
{
    auto arr = nlohmann::json::array();
    for (const auto &c : coeffs_) {
        arr.push_back(c.to_string());
    }
    return arr;
}

Polynomial falling_factorial_poly(unsigned n)
{
    Polynomial p(1);
    for (unsigned i = 0; i < n; ++i) {
        p *= Polynomial{ExactRational(-static_cast<long>(i)), 1};
    }
    return p;
}

Polynomial rising_factorial_poly(unsigned n)
{
    Polynomial p(1);
    for (unsigned i = 0; i < n; ++i) {
        p *= Polynomial{ExactRational(static_cast<long>(i)), 1};
    }
    return p;
}

} // namespace polycauchy
