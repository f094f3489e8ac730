#ifndef POLYCAUCHY_POWER_SERIES_HPP
#define POLYCAUCHY_POWER_SERIES_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include <polycauchy/combinatorics.hpp>
#include <polycauchy/polynomial.hpp>
#include <polycauchy/rational.hpp>

namespace polycauchy
{

class SeriesError : public std::domain_error
{
public:
    enum class Kind {
        nonzero_constant_term, // composition inner series, exp/log arguments
        non_unit,              // reciprocal or negative power of a non-unit
        negative_valuation,    // quotient would need Laurent terms
        zero_divisor,          // divisor vanishes up to its truncation order
        order_exceeded,        // coefficient requested past the truncation order
    };

    SeriesError(Kind kind, const std::string &what) : std::domain_error(what), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

// Ring operations needed by TruncatedSeries beyond + - *.
template <typename Ring>
struct CoefficientRing;

template <>
struct CoefficientRing<ExactRational> {
    static ExactRational zero() { return {}; }
    static ExactRational one() { return 1; }
    static bool is_zero(const ExactRational &a) { return a.is_zero(); }
    static bool is_unit(const ExactRational &a) { return !a.is_zero(); }
    static ExactRational inverse(const ExactRational &a) { return a.inverse(); }
    static std::string render(const ExactRational &a) { return a.to_string(); }
    static nlohmann::json to_json(const ExactRational &a) { return a.to_string(); }
};

// Polynomials in x; the units are the nonzero constants.
template <>
struct CoefficientRing<Polynomial> {
    static Polynomial zero() { return {}; }
    static Polynomial one() { return 1; }
    static bool is_zero(const Polynomial &a) { return a.is_zero(); }
    static bool is_unit(const Polynomial &a) { return a.degree() == std::size_t{0}; }
    static Polynomial inverse(const Polynomial &a) { return Polynomial(a.coefficient(0).inverse()); }
    static std::string render(const Polynomial &a) { return a.to_string(); }
    static nlohmann::json to_json(const Polynomial &a) { return a.to_json(); }
};

// Power series a_0 + a_1 t + ... + a_N t^N known up to order N inclusive.
// Coefficients are plain (not divided by n!); terms past N are unknown, and
// every operation returns the order it can actually vouch for.
template <typename Ring>
class TruncatedSeries
{
    using R = CoefficientRing<Ring>;

public:
    using coefficient_type = Ring;

    explicit TruncatedSeries(std::vector<Ring> coefficients) : coeffs_(std::move(coefficients))
    {
        if (coeffs_.empty()) {
            throw std::invalid_argument("TruncatedSeries needs at least the constant coefficient");
        }
    }

    static TruncatedSeries zero(std::size_t order) { return TruncatedSeries(std::vector<Ring>(order + 1, R::zero())); }
    static TruncatedSeries constant(const Ring &c, std::size_t order)
    {
        auto s = zero(order);
        s.coeffs_[0] = c;
        return s;
    }
    static TruncatedSeries one(std::size_t order) { return constant(R::one(), order); }
    // c t^power, zero if power > order.
    static TruncatedSeries monomial(const Ring &c, std::size_t power, std::size_t order)
    {
        auto s = zero(order);
        if (power <= order) {
            s.coeffs_[power] = c;
        }
        return s;
    }
    static TruncatedSeries variable(std::size_t order) { return monomial(R::one(), 1, order); }

    std::size_t order_bound() const { return coeffs_.size() - 1; }
    std::span<const Ring> coefficients() const { return coeffs_; }
    const Ring &operator[](std::size_t i) const { return coeffs_.at(i); }
    const Ring &coefficient(std::size_t i) const
    {
        if (i >= coeffs_.size()) {
            throw SeriesError(SeriesError::Kind::order_exceeded,
                              "coefficient t^" + std::to_string(i) + " is beyond truncation order "
                                  + std::to_string(order_bound()));
        }
        return coeffs_[i];
    }

    // Index of the first nonzero coefficient; nullopt when every known
    // coefficient vanishes.
    std::optional<std::size_t> valuation() const
    {
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (!R::is_zero(coeffs_[i])) {
                return i;
            }
        }
        return std::nullopt;
    }

    TruncatedSeries truncated(std::size_t order) const
    {
        if (order >= order_bound()) {
            return *this;
        }
        return TruncatedSeries(std::vector<Ring>(coeffs_.begin(), coeffs_.begin() + order + 1));
    }

    TruncatedSeries &operator+=(const TruncatedSeries &o)
    {
        shrink_to(o.order_bound());
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            coeffs_[i] += o.coeffs_[i];
        }
        return *this;
    }
    TruncatedSeries &operator-=(const TruncatedSeries &o)
    {
        shrink_to(o.order_bound());
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            coeffs_[i] -= o.coeffs_[i];
        }
        return *this;
    }
    TruncatedSeries &operator*=(const Ring &c)
    {
        for (auto &v : coeffs_) {
            v *= c;
        }
        return *this;
    }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries &b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries &b) { return a -= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const Ring &c) { return a *= c; }
    friend TruncatedSeries operator*(const Ring &c, TruncatedSeries a) { return a *= c; }

    // Cauchy product truncated at the smaller order.
    friend TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b)
    {
        const std::size_t n = std::min(a.order_bound(), b.order_bound());
        std::vector<Ring> out(n + 1, R::zero());
        for (std::size_t i = 0; i <= n; ++i) {
            if (R::is_zero(a.coeffs_[i])) {
                continue;
            }
            for (std::size_t j = 0; i + j <= n; ++j) {
                if (!R::is_zero(b.coeffs_[j])) {
                    out[i + j] += a.coeffs_[i] * b.coeffs_[j];
                }
            }
        }
        return TruncatedSeries(std::move(out));
    }
    TruncatedSeries &operator*=(const TruncatedSeries &o) { return *this = *this * o; }

    TruncatedSeries operator-() const
    {
        TruncatedSeries r(*this);
        for (auto &v : r.coeffs_) {
            v = -v;
        }
        return r;
    }

    // Equal as far as both are known.
    friend bool operator==(const TruncatedSeries &, const TruncatedSeries &) = default;

    // "a0 + a1*t + a2*t^2 + ..."; zero coefficients are skipped.
    std::string to_string() const
    {
        std::string out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (R::is_zero(coeffs_[i])) {
                continue;
            }
            std::string c = R::render(coeffs_[i]);
            const bool compound = c.find_first_of(" ", 1) != std::string::npos;
            bool negative = !compound && c.front() == '-';
            if (negative) {
                c.erase(0, 1);
            }
            if (!out.empty()) {
                out += negative ? " - " : " + ";
            } else if (negative) {
                out += "-";
            }
            if (compound) {
                c = "(" + c + ")";
            }
            if (i == 0) {
                out += c;
                continue;
            }
            if (c != "1") {
                out += c + "*";
            }
            out += "t";
            if (i > 1) {
                out += "^" + std::to_string(i);
            }
        }
        return out.empty() ? "0" : out;
    }

    // {"order_bound": N, "egf": flag, "coefficients": [...]}. With egf set,
    // coefficient i is emitted multiplied by i!.
    nlohmann::json to_json(bool egf = false) const
    {
        nlohmann::json j;
        j["order_bound"] = order_bound();
        j["egf"] = egf;
        auto arr = nlohmann::json::array();
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (egf) {
                arr.push_back(R::to_json(coeffs_[i] * Ring(ExactRational(factorial(static_cast<unsigned>(i))))));
            } else {
                arr.push_back(R::to_json(coeffs_[i]));
            }
        }
        j["coefficients"] = std::move(arr);
        return j;
    }

private:
    void shrink_to(std::size_t order)
    {
        if (order < order_bound()) {
            coeffs_.resize(order + 1);
        }
    }

    std::vector<Ring> coeffs_;
};

using ScalarSeries = TruncatedSeries<ExactRational>;
using PolySeries = TruncatedSeries<Polynomial>;

// Scalar series viewed with constant polynomial coefficients.
PolySeries lift(const ScalarSeries &s);

// f(g(t)) by Horner's scheme, truncated at min of both orders. g must have
// zero constant term.
template <typename Ring>
TruncatedSeries<Ring> compose(const TruncatedSeries<Ring> &f, const TruncatedSeries<Ring> &g)
{
    using R = CoefficientRing<Ring>;
    if (!R::is_zero(g[0])) {
        throw SeriesError(SeriesError::Kind::nonzero_constant_term,
                          "compose: inner series has a nonzero constant term");
    }
    const std::size_t n = std::min(f.order_bound(), g.order_bound());
    const auto inner = g.truncated(n);
    auto acc = TruncatedSeries<Ring>::zero(n);
    for (std::size_t i = n + 1; i-- > 0;) {
        acc = acc * inner + TruncatedSeries<Ring>::constant(f[i], n);
    }
    return acc;
}

// 1/f; f(0) must be a unit of the coefficient ring.
template <typename Ring>
TruncatedSeries<Ring> recip(const TruncatedSeries<Ring> &f)
{
    using R = CoefficientRing<Ring>;
    if (!R::is_unit(f[0])) {
        throw SeriesError(SeriesError::Kind::non_unit, "recip: constant term " + R::render(f[0]) + " is not a unit");
    }
    const std::size_t n = f.order_bound();
    const Ring inv0 = R::inverse(f[0]);
    std::vector<Ring> g(n + 1, R::zero());
    g[0] = inv0;
    for (std::size_t j = 1; j <= n; ++j) {
        Ring acc = R::zero();
        for (std::size_t i = 1; i <= j; ++i) {
            if (!R::is_zero(f[i])) {
                acc += f[i] * g[j - i];
            }
        }
        g[j] = -(acc * inv0);
    }
    return TruncatedSeries<Ring>(std::move(g));
}

// f/g where g = t^v u(t) with u(0) a unit and f divisible by t^v. The
// result is known to order min(N_f, N_g) - v.
template <typename Ring>
TruncatedSeries<Ring> div_with_valuation(const TruncatedSeries<Ring> &f, const TruncatedSeries<Ring> &g)
{
    using R = CoefficientRing<Ring>;
    const auto v = g.valuation();
    if (!v) {
        throw SeriesError(SeriesError::Kind::zero_divisor, "division by a series that vanishes to its truncation order");
    }
    if (!R::is_unit(g[*v])) {
        throw SeriesError(SeriesError::Kind::non_unit,
                          "division: leading coefficient " + R::render(g[*v]) + " is not a unit");
    }
    const std::size_t n = std::min(f.order_bound(), g.order_bound());
    if (*v > n) {
        throw SeriesError(SeriesError::Kind::zero_divisor, "division: divisor valuation exceeds known order");
    }
    for (std::size_t i = 0; i < *v; ++i) {
        if (!R::is_zero(f[i])) {
            throw SeriesError(SeriesError::Kind::negative_valuation,
                              "division: numerator valuation " + std::to_string(i) + " < divisor valuation "
                                  + std::to_string(*v));
        }
    }
    const std::size_t m = n - *v;
    std::vector<Ring> fs(f.coefficients().begin() + *v, f.coefficients().begin() + *v + m + 1);
    std::vector<Ring> gs(g.coefficients().begin() + *v, g.coefficients().begin() + *v + m + 1);
    return TruncatedSeries<Ring>(std::move(fs)) * recip(TruncatedSeries<Ring>(std::move(gs)));
}

// f^k by repeated squaring; negative k needs a unit constant term.
template <typename Ring>
TruncatedSeries<Ring> pow_int(const TruncatedSeries<Ring> &f, long k)
{
    auto base = k < 0 ? recip(f) : f;
    unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
    auto acc = TruncatedSeries<Ring>::one(f.order_bound());
    while (e > 0) {
        if (e & 1U) {
            acc *= base;
        }
        e >>= 1U;
        if (e > 0) {
            base *= base;
        }
    }
    return acc;
}

// Termwise d/dt; the order bound drops by one.
template <typename Ring>
TruncatedSeries<Ring> derivative_t(const TruncatedSeries<Ring> &f)
{
    if (f.order_bound() == 0) {
        throw SeriesError(SeriesError::Kind::order_exceeded, "derivative of a series known only to order 0");
    }
    std::vector<Ring> d;
    d.reserve(f.order_bound());
    for (std::size_t i = 1; i <= f.order_bound(); ++i) {
        d.push_back(f[i] * Ring(ExactRational(static_cast<long>(i))));
    }
    return TruncatedSeries<Ring>(std::move(d));
}

// <f(t) | x^n> = n! [t^n] f.
template <typename Ring>
Ring umbral_apply(const TruncatedSeries<Ring> &f, std::size_t n)
{
    return f.coefficient(n) * Ring(ExactRational(factorial(static_cast<unsigned>(n))));
}

// n! [t^n] f for every n up to the order bound.
template <typename Ring>
std::vector<Ring> egf_coefficients(const TruncatedSeries<Ring> &f)
{
    std::vector<Ring> out;
    out.reserve(f.order_bound() + 1);
    for (std::size_t i = 0; i <= f.order_bound(); ++i) {
        out.push_back(umbral_apply(f, i));
    }
    return out;
}

// sum_{i>=1} (-1)^(i+1) t^i / i
ScalarSeries log1p_series(std::size_t order);
// e^(ct)
ScalarSeries exp_series(std::size_t order, const ExactRational &c = 1);
// e^(ct) - 1
ScalarSeries expm1_series(std::size_t order, const ExactRational &c = 1);
// sum_m t^m / (m! (m+1)^k)
ScalarSeries lif_series(long k, std::size_t order);
// (1+t)^c(x) = sum_j binom(c(x), j) t^j with polynomial coefficients.
PolySeries binomial_pow_poly(const Polynomial &c, std::size_t order);

} // namespace polycauchy

#endif
