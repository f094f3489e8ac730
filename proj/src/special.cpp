#include <polycauchy/special.hpp>

#include <stdexcept>

#include <polycauchy/combinatorics.hpp>

namespace polycauchy
{

namespace
{

ExactRational nth_egf(const ScalarSeries &s, unsigned n)
{
    return umbral_apply(s, n);
}

// ((e^t - lambda)/(1 - lambda))^(-r)
ScalarSeries frobenius_euler_gf(unsigned r, const ExactRational &lambda, std::size_t order)
{
    if (lambda == ExactRational(1)) {
        throw std::domain_error("Frobenius-Euler polynomials are undefined for lambda = 1");
    }
    auto base = exp_series(order) - ScalarSeries::constant(lambda, order);
    base *= (ExactRational(1) - lambda).inverse();
    return pow_int(base, -static_cast<long>(r));
}

Polynomial appell_poly(unsigned n, const std::vector<ExactRational> &numbers)
{
    std::vector<ExactRational> c(n + 1);
    for (unsigned j = 0; j <= n; ++j) {
        c[j] = ExactRational(binomial(n, j)) * numbers[n - j];
    }
    return Polynomial(std::move(c));
}

} // namespace

ScalarSeries bernoulli_gf(std::size_t order)
{
    auto t = ScalarSeries::variable(order + 1);
    return div_with_valuation(t, expm1_series(order + 1));
}

ScalarSeries cauchy_gf(std::size_t order)
{
    auto t = ScalarSeries::variable(order + 1);
    return div_with_valuation(t, log1p_series(order + 1));
}

ScalarSeries norlund_gf(std::size_t order)
{
    auto one_plus_t = ScalarSeries::one(order) + ScalarSeries::variable(order);
    return cauchy_gf(order) * recip(one_plus_t);
}

ScalarSeries binomial_pow_series(const ExactRational &a, std::size_t order)
{
    std::vector<ExactRational> out(order + 1);
    ExactRational term = 1;
    for (std::size_t j = 0; j <= order; ++j) {
        out[j] = term;
        term = term * (a - ExactRational(static_cast<long>(j))) / ExactRational(static_cast<long>(j + 1));
    }
    return ScalarSeries(std::move(out));
}

ExactRational bernoulli(unsigned n)
{
    return nth_egf(bernoulli_gf(n), n);
}

ExactRational bernoulli_higher(unsigned n, long r)
{
    return nth_egf(pow_int(bernoulli_gf(n), r), n);
}

Polynomial bernoulli_higher_poly(unsigned n, long r)
{
    const auto s = pow_int(bernoulli_gf(n), r);
    return appell_poly(n, egf_coefficients(s));
}

ExactRational norlund(unsigned n)
{
    return nth_egf(norlund_gf(n), n);
}

ExactRational cauchy(unsigned n)
{
    return nth_egf(cauchy_gf(n), n);
}

ExactRational carlitz_beta(unsigned n, long r, const ExactRational &a)
{
    return nth_egf(pow_int(cauchy_gf(n), r) * binomial_pow_series(a, n), n);
}

Polynomial frobenius_euler_poly(unsigned n, unsigned r, const ExactRational &lambda)
{
    return appell_poly(n, egf_coefficients(frobenius_euler_gf(r, lambda, n)));
}

ExactRational frobenius_euler(unsigned n, unsigned r, const ExactRational &lambda, const ExactRational &x)
{
    return frobenius_euler_poly(n, r, lambda)(x);
}

BernoulliCache::BernoulliCache(unsigned n_max, long r_min, long r_max)
    : n_max_(n_max), r_min_(r_min), r_max_(r_max)
{
    if (r_min > r_max) {
        throw std::invalid_argument("BernoulliCache: empty order range");
    }
    const auto base = bernoulli_gf(n_max);
    ordinary_ = egf_coefficients(base);
    const auto inverse = recip(base);
    for (long r = r_min; r <= r_max; ++r) {
        higher_.push_back(egf_coefficients(r >= 0 ? pow_int(base, r) : pow_int(inverse, -r)));
    }
}

const ExactRational &BernoulliCache::ordinary(unsigned n) const
{
    if (n > n_max_) {
        throw std::out_of_range("BernoulliCache::ordinary beyond the cached index");
    }
    return ordinary_[n];
}

ExactRational BernoulliCache::higher(unsigned n, long r) const
{
    if (n <= n_max_ && r >= r_min_ && r <= r_max_) {
        return higher_[static_cast<std::size_t>(r - r_min_)][n];
    }
    return bernoulli_higher(n, r);
}

} // namespace polycauchy
