#ifndef POLYCAUCHY_SPECIAL_HPP
#define POLYCAUCHY_SPECIAL_HPP

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include <polycauchy/polynomial.hpp>
#include <polycauchy/power_series.hpp>
#include <polycauchy/rational.hpp>

namespace polycauchy
{

// Generating series, each to the requested order.

// t/(e^t - 1)
ScalarSeries bernoulli_gf(std::size_t order);
// t/log(1+t)
ScalarSeries cauchy_gf(std::size_t order);
// t/((1+t) log(1+t))
ScalarSeries norlund_gf(std::size_t order);
// (1+t)^a for rational a
ScalarSeries binomial_pow_series(const ExactRational &a, std::size_t order);

// Every number below is n! [t^n] of its generating function, computed
// through the series oracle.

// B_n with B_1 = -1/2.
ExactRational bernoulli(unsigned n);
// B_n^(r): (t/(e^t-1))^r, any integer r.
ExactRational bernoulli_higher(unsigned n, long r);
// B_n^(r)(x) = sum_j C(n,j) B_{n-j}^(r) x^j.
Polynomial bernoulli_higher_poly(unsigned n, long r);
// B_n^(n) read off t/((1+t) log(1+t)).
ExactRational norlund(unsigned n);
// Cauchy numbers of the first kind: t/log(1+t).
ExactRational cauchy(unsigned n);
// beta_n^(r)(a): (t/log(1+t))^r (1+t)^a.
ExactRational carlitz_beta(unsigned n, long r, const ExactRational &a);
// H_n^(r)(x|lambda): ((1-lambda)/(e^t-lambda))^r e^{xt}. Throws
// std::domain_error for lambda = 1.
Polynomial frobenius_euler_poly(unsigned n, unsigned r, const ExactRational &lambda);
ExactRational frobenius_euler(unsigned n, unsigned r, const ExactRational &lambda, const ExactRational &x);

// Ordinary and higher-order Bernoulli numbers precomputed up to a fixed
// index. Immutable after construction; lookups outside the built range are
// computed on the spot.
class BernoulliCache
{
public:
    BernoulliCache(unsigned n_max, long r_min, long r_max);

    const ExactRational &ordinary(unsigned n) const;
    ExactRational higher(unsigned n, long r) const;
    unsigned n_max() const { return n_max_; }

private:
    unsigned n_max_;
    long r_min_;
    long r_max_;
    std::vector<ExactRational> ordinary_;
    // higher_[r - r_min_][n]
    std::vector<std::vector<ExactRational>> higher_;
};

} // namespace polycauchy

#endif
