#ifndef POLYCAUCHY_POLY_CAUCHY_HPP
#define POLYCAUCHY_POLY_CAUCHY_HPP

#include <vector>

#include <polycauchy/polynomial.hpp>
#include <polycauchy/power_series.hpp>
#include <polycauchy/rational.hpp>

namespace polycauchy
{

// C_n^(k)(x): degree n, leading coefficient (-1)^n, value at 0 is C_n^(k).
struct PolyCauchyPoly {
    unsigned n = 0;
    long k = 0;
    Polynomial poly;
};

// Lif_k(log(1+t)), the EGF of the poly-Cauchy numbers.
ScalarSeries pc_number_gf(long k, std::size_t order);
// Lif_k(log(1+t)) (1+t)^(-x), the EGF of the poly-Cauchy polynomials.
PolySeries pc_poly_gf(long k, std::size_t order);

// sum_m S1(n,m) / (m+1)^k
ExactRational pc_number(unsigned n, long k);

// Closed form: [x^j] = (-1)^j sum_{m>=j} C(m,j) S1(n,m) / (m-j+1)^k.
PolyCauchyPoly pc_poly(unsigned n, long k);

// Independent route: n! [t^n] of the bivariate generating function.
Polynomial pc_poly_oracle(unsigned n, long k);

// T_n^(r,k) via the multinomial convolution of r Cauchy sequences with the
// poly-Cauchy sequence of index k.
ExactRational t_number(unsigned n, unsigned r, long k);
// T_n^(r,k) as n! [t^n] (t/log(1+t))^r Lif_k(log(1+t)).
ExactRational t_number_series(unsigned n, unsigned r, long k);

// d/dx C_n^(k)(x) written as (-1)^n n! sum_{l<n} (-1)^l / ((n-l) l!) C_l^(k)(x).
// Throws std::invalid_argument for n = 0.
Polynomial pc_derivative(unsigned n, long k);

// sum_j (-1)^(n-j) C(n,j) C_j^(k)(x) y^(n-j), with y^(m) the rising
// factorial; equals C_n^(k)(x + y).
Polynomial pc_shift_identity(unsigned n, long k, const ExactRational &y);

// Coefficients c_0..c_n with sum_m c_m B_m^(r)(x) = C_n^(k)(x), built from
// the Carlitz values beta_a^(r)(-r).
std::vector<ExactRational> expand_bernoulli_basis(unsigned n, long k, long r);
// Same coefficients with beta_a^(r)(-r) replaced by its expansion over
// products of Norlund numbers B_{a_1}^(a_1) ... B_{a_r}^(a_r). Needs r >= 0.
std::vector<ExactRational> expand_bernoulli_basis_norlund(unsigned n, long k, long r);

// Coefficients with sum_m c_m H_m^(r)(x|lambda) = C_n^(k)(x), using the
// values C_{n-m-l}^(k)(a) for a = 0..r. Throws std::domain_error for
// lambda = 1.
std::vector<ExactRational> expand_frobenius_basis(unsigned n, long k, unsigned r, const ExactRational &lambda);
// Same coefficients with C_N^(k)(a) expanded over the numbers C_{N-b}^(k).
std::vector<ExactRational> expand_frobenius_basis_alt(unsigned n, long k, unsigned r,
                                                      const ExactRational &lambda);

// Coefficient of x^(m) is (-1)^m C(n,m) C_{n-m}^(k).
std::vector<ExactRational> expand_rising_basis(unsigned n, long k);

ExactRational rational_pow(const ExactRational &base, unsigned e);

} // namespace polycauchy

#endif
