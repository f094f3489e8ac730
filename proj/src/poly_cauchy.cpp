#include <polycauchy/poly_cauchy.hpp>

#include <stdexcept>

#include <polycauchy/combinatorics.hpp>
#include <polycauchy/special.hpp>
#include <polycauchy/stirling.hpp>

namespace polycauchy
{

namespace
{

ExactRational sign(long e)
{
    return e % 2 == 0 ? ExactRational(1) : ExactRational(-1);
}

ExactRational Q(const BigInt &v)
{
    return ExactRational(v);
}

std::vector<ExactRational> pc_numbers_upto(unsigned n, long k)
{
    std::vector<ExactRational> out;
    out.reserve(n + 1);
    for (unsigned i = 0; i <= n; ++i) {
        out.push_back(pc_number(i, k));
    }
    return out;
}

// Shared shape of both Bernoulli-basis routes:
// c_m = (-1)^m sum_l sum_a C(n,l+m) C(n-m-l,a) S1(l+m,m) beta[a] C_{n-m-l-a}^(k)
std::vector<ExactRational> bernoulli_basis_from(unsigned n, long k, const std::vector<ExactRational> &beta)
{
    const auto pcn = pc_numbers_upto(n, k);
    std::vector<ExactRational> out(n + 1);
    for (unsigned m = 0; m <= n; ++m) {
        ExactRational acc;
        for (unsigned l = 0; l + m <= n; ++l) {
            const BigInt s = stirling1(l + m, m);
            if (s == 0) {
                continue;
            }
            const ExactRational outer = Q(binomial(n, l + m) * s);
            for (unsigned a = 0; a + l + m <= n; ++a) {
                acc += outer * Q(binomial(n - m - l, a)) * beta[a] * pcn[n - m - l - a];
            }
        }
        out[m] = sign(m) * acc;
    }
    return out;
}

void require_lambda(const ExactRational &lambda)
{
    if (lambda == ExactRational(1)) {
        throw std::domain_error("lambda = 1 is a pole of the Frobenius-Euler generating function");
    }
}

} // namespace

ExactRational rational_pow(const ExactRational &base, unsigned e)
{
    ExactRational r = 1;
    for (unsigned i = 0; i < e; ++i) {
        r *= base;
    }
    return r;
}

ScalarSeries pc_number_gf(long k, std::size_t order)
{
    return compose(lif_series(k, order), log1p_series(order));
}

PolySeries pc_poly_gf(long k, std::size_t order)
{
    return lift(pc_number_gf(k, order)) * binomial_pow_poly(-Polynomial::x(), order);
}

ExactRational pc_number(unsigned n, long k)
{
    ExactRational acc;
    for (unsigned m = 0; m <= n; ++m) {
        acc += Q(stirling1(n, m)) * int_pow_rational(m + 1, -k);
    }
    return acc;
}

PolyCauchyPoly pc_poly(unsigned n, long k)
{
    std::vector<ExactRational> c(n + 1);
    for (unsigned j = 0; j <= n; ++j) {
        ExactRational acc;
        for (unsigned m = j; m <= n; ++m) {
            acc += Q(binomial(m, j) * stirling1(n, m)) * int_pow_rational(m - j + 1, -k);
        }
        c[j] = sign(j) * acc;
    }
    return {n, k, Polynomial(std::move(c))};
}

Polynomial pc_poly_oracle(unsigned n, long k)
{
    return umbral_apply(pc_poly_gf(k, n), n);
}

ExactRational t_number(unsigned n, unsigned r, long k)
{
    std::vector<ExactRational> cauchy_numbers;
    for (unsigned i = 0; i <= n; ++i) {
        cauchy_numbers.push_back(cauchy(i));
    }
    const auto pcn = pc_numbers_upto(n, k);
    ExactRational acc;
    for (const auto &comp : weak_compositions(n, r + 1)) {
        ExactRational term = Q(multinomial(n, comp.parts));
        for (unsigned i = 0; i < r && !term.is_zero(); ++i) {
            term *= cauchy_numbers[comp.parts[i]];
        }
        acc += term * pcn[comp.parts[r]];
    }
    return acc;
}

ExactRational t_number_series(unsigned n, unsigned r, long k)
{
    return umbral_apply(pow_int(cauchy_gf(n), r) * pc_number_gf(k, n), n);
}

Polynomial pc_derivative(unsigned n, long k)
{
    if (n == 0) {
        throw std::invalid_argument("pc_derivative needs n >= 1");
    }
    Polynomial acc;
    for (unsigned l = 0; l < n; ++l) {
        const ExactRational w = sign(l) / (ExactRational(static_cast<long>(n - l)) * Q(factorial(l)));
        acc += w * pc_poly(l, k).poly;
    }
    return (sign(n) * Q(factorial(n))) * acc;
}

Polynomial pc_shift_identity(unsigned n, long k, const ExactRational &y)
{
    Polynomial acc;
    for (unsigned j = 0; j <= n; ++j) {
        const ExactRational w = sign(n - j) * Q(binomial(n, j)) * rising_factorial(y, n - j);
        acc += w * pc_poly(j, k).poly;
    }
    return acc;
}

std::vector<ExactRational> expand_bernoulli_basis(unsigned n, long k, long r)
{
    const auto beta = egf_coefficients(pow_int(cauchy_gf(n), r) * binomial_pow_series(ExactRational(-r), n));
    return bernoulli_basis_from(n, k, beta);
}

std::vector<ExactRational> expand_bernoulli_basis_norlund(unsigned n, long k, long r)
{
    if (r < 0) {
        throw std::invalid_argument("the Norlund-product route needs r >= 0");
    }
    std::vector<ExactRational> norlund_numbers;
    for (unsigned i = 0; i <= n; ++i) {
        norlund_numbers.push_back(norlund(i));
    }
    std::vector<ExactRational> beta(n + 1);
    for (unsigned a = 0; a <= n; ++a) {
        if (r == 0) {
            beta[a] = a == 0 ? 1 : 0;
            continue;
        }
        ExactRational acc;
        for (const auto &comp : weak_compositions(a, static_cast<unsigned>(r))) {
            ExactRational term = Q(multinomial(a, comp.parts));
            for (unsigned part : comp.parts) {
                term *= norlund_numbers[part];
            }
            acc += term;
        }
        beta[a] = acc;
    }
    return bernoulli_basis_from(n, k, beta);
}

std::vector<ExactRational> expand_frobenius_basis(unsigned n, long k, unsigned r, const ExactRational &lambda)
{
    require_lambda(lambda);
    std::vector<Polynomial> pcp;
    for (unsigned i = 0; i <= n; ++i) {
        pcp.push_back(pc_poly(i, k).poly);
    }
    const ExactRational scale = rational_pow((ExactRational(1) - lambda).inverse(), r);
    std::vector<ExactRational> out(n + 1);
    for (unsigned m = 0; m <= n; ++m) {
        ExactRational acc;
        for (unsigned l = 0; l + m <= n; ++l) {
            const BigInt s = stirling1(l + m, m);
            if (s == 0) {
                continue;
            }
            const ExactRational outer = Q(binomial(n, l + m) * s);
            for (unsigned a = 0; a <= r; ++a) {
                acc += sign(a) * outer * Q(binomial(r, a)) * rational_pow(lambda, r - a)
                       * pcp[n - m - l](ExactRational(static_cast<long>(a)));
            }
        }
        out[m] = sign(m + r) * scale * acc;
    }
    return out;
}

std::vector<ExactRational> expand_frobenius_basis_alt(unsigned n, long k, unsigned r,
                                                      const ExactRational &lambda)
{
    require_lambda(lambda);
    const auto pcn = pc_numbers_upto(n, k);
    const ExactRational scale = rational_pow((ExactRational(1) - lambda).inverse(), r);
    std::vector<ExactRational> out(n + 1);
    for (unsigned m = 0; m <= n; ++m) {
        ExactRational acc;
        for (unsigned l = 0; l + m <= n; ++l) {
            const BigInt s = stirling1(l + m, m);
            if (s == 0) {
                continue;
            }
            const ExactRational outer = Q(binomial(n, l + m) * s);
            const unsigned rest = n - m - l;
            for (unsigned b = 0; b <= rest; ++b) {
                const ExactRational inner = Q(falling_factorial(rest, b)) * pcn[rest - b];
                for (unsigned a = 0; a <= r; ++a) {
                    const BigInt c = binomial(r, a) * generalized_binomial(static_cast<long>(a + b) - 1, b);
                    if (c == 0) {
                        continue;
                    }
                    acc += sign(a + b) * outer * Q(c) * inner * rational_pow(lambda, r - a);
                }
            }
        }
        out[m] = sign(m + r) * scale * acc;
    }
    return out;
}

std::vector<ExactRational> expand_rising_basis(unsigned n, long k)
{
    std::vector<ExactRational> out(n + 1);
    for (unsigned m = 0; m <= n; ++m) {
        out[m] = sign(m) * Q(binomial(n, m)) * pc_number(n - m, k);
    }
    return out;
}

} // namespace polycauchy
