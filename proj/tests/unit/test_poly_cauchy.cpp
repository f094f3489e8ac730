#include "doctest.h"

#include <polycauchy/combinatorics.hpp>
#include <polycauchy/poly_cauchy.hpp>
#include <polycauchy/special.hpp>

using namespace polycauchy;

namespace
{

// Stirling numbers from the expansion of the falling factorial.
std::vector<std::vector<BigInt>> stirling_rows(unsigned n_max)
{
    std::vector<std::vector<BigInt>> rows{{1}};
    for (unsigned i = 0; i < n_max; ++i) {
        const auto &c = rows.back();
        std::vector<BigInt> next(c.size() + 1, 0);
        for (std::size_t j = 0; j < c.size(); ++j) {
            next[j + 1] += c[j];
            next[j] -= c[j] * i;
        }
        rows.push_back(std::move(next));
    }
    return rows;
}

// integral over y in [0, 1] of (y - a)_n, for integer a
ExactRational cauchy_integral(unsigned n, long a)
{
    std::vector<ExactRational> c{ExactRational(1)};
    for (unsigned i = 0; i < n; ++i) {
        std::vector<ExactRational> next(c.size() + 1);
        for (std::size_t j = 0; j < c.size(); ++j) {
            next[j + 1] += c[j];
            next[j] -= c[j] * ExactRational(a + static_cast<long>(i));
        }
        c = std::move(next);
    }
    ExactRational s;
    for (std::size_t m = 0; m < c.size(); ++m) {
        s += c[m] / ExactRational(static_cast<long>(m + 1));
    }
    return s;
}

} // namespace

TEST_CASE("spot values")
{
    for (long k = -3; k <= 3; ++k) {
        CHECK(pc_number(1, k) == int_pow_rational(2, -k));
    }
    CHECK(pc_number(2, 1) == ExactRational(-1, 6));
    CHECK(pc_number(0, 5) == ExactRational(1));
}

TEST_CASE("poly-Cauchy numbers from an independent Stirling triangle")
{
    const auto s1 = stirling_rows(20);
    for (unsigned n = 0; n <= 20; ++n) {
        for (long k = -4; k <= 4; ++k) {
            ExactRational expected;
            for (unsigned m = 0; m <= n; ++m) {
                expected += ExactRational(s1[n][m]) * int_pow_rational(m + 1, -k);
            }
            CHECK(pc_number(n, k) == expected);
        }
    }
}

TEST_CASE("k = 1 polynomials are integrals of shifted falling factorials")
{
    for (unsigned n = 0; n <= 12; ++n) {
        const auto p = pc_poly(n, 1).poly;
        for (long a = -3; a <= 5; ++a) {
            CHECK(p(ExactRational(a)) == cauchy_integral(n, a));
        }
    }
}

TEST_CASE("polynomial shape")
{
    for (unsigned n = 0; n <= 14; ++n) {
        for (long k = -3; k <= 3; ++k) {
            const auto pc = pc_poly(n, k);
            CHECK(pc.n == n);
            CHECK(pc.k == k);
            CHECK(pc.poly.degree() == std::size_t{n});
            CHECK(pc.poly.leading_coefficient() == ExactRational(n % 2 ? -1 : 1));
            CHECK(pc.poly(ExactRational(0)) == pc_number(n, k));
        }
    }
}

TEST_CASE("closed form agrees with the series oracle")
{
    for (unsigned n = 0; n <= 10; ++n) {
        for (long k = -3; k <= 3; ++k) {
            CHECK(pc_poly(n, k).poly == pc_poly_oracle(n, k));
        }
    }
    const auto gf = pc_number_gf(2, 8);
    for (unsigned n = 0; n <= 8; ++n) {
        CHECK(umbral_apply(gf, n) == pc_number(n, 2));
    }
}

TEST_CASE("T-numbers")
{
    for (unsigned n = 0; n <= 8; ++n) {
        for (long k = -2; k <= 2; ++k) {
            CHECK(t_number(n, 0, k) == pc_number(n, k));
            for (unsigned r = 0; r <= 3; ++r) {
                CHECK(t_number(n, r, k) == t_number_series(n, r, k));
            }
            // r = 1: binomial convolution with the Cauchy numbers
            ExactRational conv;
            for (unsigned i = 0; i <= n; ++i) {
                conv += ExactRational(binomial(n, i)) * cauchy(i) * pc_number(n - i, k);
            }
            CHECK(t_number(n, 1, k) == conv);
        }
    }
}

TEST_CASE("derivative and shift")
{
    CHECK_THROWS_AS(pc_derivative(0, 1), std::invalid_argument);
    for (unsigned n = 1; n <= 10; ++n) {
        for (long k = -2; k <= 2; ++k) {
            CHECK(pc_derivative(n, k) == pc_poly(n, k).poly.derivative());
        }
    }
    for (unsigned n = 0; n <= 8; ++n) {
        for (const auto &y : {ExactRational(0), ExactRational(3), ExactRational(-2, 3)}) {
            CHECK(pc_shift_identity(n, 1, y) == pc_poly(n, 1).poly.shifted(y));
        }
    }
}

TEST_CASE("basis expansions reconstruct the polynomial")
{
    for (unsigned n = 0; n <= 7; ++n) {
        for (long k = -2; k <= 2; ++k) {
            const auto target = pc_poly(n, k).poly;
            const auto rising = expand_rising_basis(n, k);
            Polynomial acc;
            for (unsigned m = 0; m <= n; ++m) {
                CHECK(rising[m] == ExactRational(m % 2 ? -1 : 1) * ExactRational(binomial(n, m)) * pc_number(n - m, k));
                acc += rising[m] * rising_factorial_poly(m);
            }
            CHECK(acc == target);
            for (long r = 0; r <= 3; ++r) {
                const auto c = expand_bernoulli_basis(n, k, r);
                CHECK(c == expand_bernoulli_basis_norlund(n, k, r));
                Polynomial b;
                for (unsigned m = 0; m <= n; ++m) {
                    b += c[m] * bernoulli_higher_poly(m, r);
                }
                CHECK(b == target);
                const ExactRational lambda(-1);
                const auto f = expand_frobenius_basis(n, k, static_cast<unsigned>(r), lambda);
                CHECK(f == expand_frobenius_basis_alt(n, k, static_cast<unsigned>(r), lambda));
                Polynomial h;
                for (unsigned m = 0; m <= n; ++m) {
                    h += f[m] * frobenius_euler_poly(m, static_cast<unsigned>(r), lambda);
                }
                CHECK(h == target);
            }
        }
    }
    CHECK_THROWS(expand_bernoulli_basis_norlund(3, 1, -1));
    CHECK_THROWS_AS(expand_frobenius_basis(3, 1, 1, ExactRational(1)), std::domain_error);
}

TEST_CASE("rational powers")
{
    CHECK(rational_pow(ExactRational(2, 3), 3) == ExactRational(8, 27));
    CHECK(rational_pow(ExactRational(-5), 0) == ExactRational(1));
}
