#include <polycauchy/power_series.hpp>

namespace polycauchy
{

PolySeries lift(const ScalarSeries &s)
{
    std::vector<Polynomial> out;
    out.reserve(s.order_bound() + 1);
    for (const auto &c : s.coefficients()) {
        out.emplace_back(c);
    }
    return PolySeries(std::move(out));
}

ScalarSeries log1p_series(std::size_t order)
{
    std::vector<ExactRational> c(order + 1);
    for (std::size_t i = 1; i <= order; ++i) {
        c[i] = ExactRational(i % 2 == 1 ? 1 : -1, static_cast<long>(i));
    }
    return ScalarSeries(std::move(c));
}

ScalarSeries exp_series(std::size_t order, const ExactRational &c)
{
    std::vector<ExactRational> out(order + 1);
    ExactRational term = 1;
    for (std::size_t i = 0; i <= order; ++i) {
        out[i] = term;
        term = term * c / ExactRational(static_cast<long>(i + 1));
    }
    return ScalarSeries(std::move(out));
}

ScalarSeries expm1_series(std::size_t order, const ExactRational &c)
{
    auto s = exp_series(order, c);
    return s - ScalarSeries::one(order);
}

ScalarSeries lif_series(long k, std::size_t order)
{
    std::vector<ExactRational> out(order + 1);
    for (std::size_t m = 0; m <= order; ++m) {
        out[m] = ExactRational(BigInt(1), factorial(static_cast<unsigned>(m))) * int_pow_rational(m + 1, -k);
    }
    return ScalarSeries(std::move(out));
}

PolySeries binomial_pow_poly(const Polynomial &c, std::size_t order)
{
    std::vector<Polynomial> out;
    out.reserve(order + 1);
    Polynomial term(1);
    for (std::size_t j = 0; j <= order; ++j) {
        out.push_back(term);
        // binom(c, j+1) = binom(c, j) (c - j) / (j + 1)
        term *= c - Polynomial(ExactRational(static_cast<long>(j)));
        term *= ExactRational(1, static_cast<long>(j + 1));
    }
    return PolySeries(std::move(out));
}

} // namespace polycauchy
