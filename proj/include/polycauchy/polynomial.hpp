#ifndef POLYCAUCHY_POLYNOMIAL_HPP
#define POLYCAUCHY_POLYNOMIAL_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include <polycauchy/rational.hpp>

namespace polycauchy
{

// Dense univariate polynomial in x over the rationals. Coefficient i
// multiplies x^i; trailing zeros are always trimmed, so the zero
// polynomial has no coefficients at all.
class Polynomial
{
public:
    Polynomial() = default;
    Polynomial(const ExactRational &constant);
    Polynomial(long constant) : Polynomial(ExactRational(constant)) {}
    explicit Polynomial(std::vector<ExactRational> coefficients);
    Polynomial(std::initializer_list<ExactRational> coefficients);

    static Polynomial x();
    static Polynomial monomial(const ExactRational &c, std::size_t power);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    // nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const;
    // Zero beyond the degree.
    ExactRational coefficient(std::size_t power) const;
    ExactRational leading_coefficient() const;
    std::span<const ExactRational> coefficients() const { return coeffs_; }

    ExactRational operator()(const ExactRational &at) const;
    // q(x) = p(x + c).
    Polynomial shifted(const ExactRational &c) const;
    Polynomial derivative() const;

    Polynomial &operator+=(const Polynomial &other);
    Polynomial &operator-=(const Polynomial &other);
    Polynomial &operator*=(const Polynomial &other);
    Polynomial &operator*=(const ExactRational &c);

    friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
    friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
    friend Polynomial operator*(Polynomial a, const ExactRational &c) { return a *= c; }
    friend Polynomial operator*(const ExactRational &c, Polynomial a) { return a *= c; }
    Polynomial operator-() const;

    friend bool operator==(const Polynomial &, const Polynomial &) = default;

    // "c_d*x^d + ... + c_1*x + c_0"; unit coefficients are elided.
    std::string to_string() const;
    // Coefficient strings, index = power.
    nlohmann::json to_json() const;

private:
    void trim();

    std::vector<ExactRational> coeffs_;
};

inline ExactRational poly_eval(const Polynomial &p, const ExactRational &at) { return p(at); }
inline Polynomial poly_shift(const Polynomial &p, const ExactRational &c) { return p.shifted(c); }

// x(x-1)...(x-n+1)
Polynomial falling_factorial_poly(unsigned n);
// x(x+1)...(x+n-1)
Polynomial rising_factorial_poly(unsigned n);

} // namespace polycauchy

#endif
