#include "doctest.h"

#include <random>

#include <polycauchy/combinatorics.hpp>
#include <polycauchy/polynomial.hpp>

using namespace polycauchy;

namespace
{

ExactRational random_rational(std::mt19937 &rng)
{
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 12);
    return ExactRational(num(rng), den(rng));
}

Polynomial random_poly(std::mt19937 &rng)
{
    std::uniform_int_distribution<int> deg(-1, 6);
    std::vector<ExactRational> c;
    for (int i = 0, d = deg(rng); i <= d; ++i) {
        c.push_back(random_rational(rng));
    }
    return Polynomial(std::move(c));
}

// Power sum evaluation, kept apart from the Horner evaluator under test.
ExactRational naive_eval(const Polynomial &p, const ExactRational &a)
{
    ExactRational sum;
    ExactRational power(1);
    for (const auto &c : p.coefficients()) {
        sum += c * power;
        power *= a;
    }
    return sum;
}

} // namespace

TEST_CASE("construction trims and reports degree")
{
    CHECK(Polynomial().is_zero());
    CHECK_FALSE(Polynomial().degree().has_value());
    CHECK(Polynomial({1, 2, 0, 0}).degree() == std::size_t{1});
    CHECK(Polynomial({0, 0}).is_zero());
    CHECK(Polynomial(5).degree() == std::size_t{0});
    CHECK(Polynomial::monomial(ExactRational(3), 4).coefficient(4) == ExactRational(3));
    CHECK(Polynomial::monomial(ExactRational(0), 4).is_zero());
    CHECK(Polynomial({1, 2}).coefficient(7) == ExactRational(0));
}

TEST_CASE("text rendering")
{
    CHECK(Polynomial().to_string() == "0");
    CHECK(Polynomial({-1, 0, 1}).to_string() == "x^2 - 1");
    CHECK(Polynomial({ExactRational(1, 2), -1}).to_string() == "-x + 1/2");
    CHECK(Polynomial({ExactRational(1, 4), 0, ExactRational(-3, 2), -1}).to_string()
          == "-x^3 - 3/2*x^2 + 1/4");
    CHECK(Polynomial({0, 2}).to_string() == "2*x");
    CHECK(Polynomial(ExactRational(-7, 3)).to_string() == "-7/3");
}

TEST_CASE("json rendering is the coefficient array by power")
{
    const auto j = Polynomial({ExactRational(1, 2), 0, -3}).to_json();
    REQUIRE(j.is_array());
    CHECK(j.size() == 3);
    CHECK(j[0] == "1/2");
    CHECK(j[1] == "0");
    CHECK(j[2] == "-3");
}

TEST_CASE("ring laws and evaluation homomorphism")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = random_poly(rng);
        const auto q = random_poly(rng);
        const auto r = random_poly(rng);
        const auto a = random_rational(rng);
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p - p == Polynomial());
        CHECK(p(a) == naive_eval(p, a));
        CHECK((p * q)(a) == p(a) * q(a));
        CHECK((p + q)(a) == p(a) + q(a));
        if (!p.is_zero() && !q.is_zero()) {
            CHECK((p * q).degree() == *p.degree() + *q.degree());
        }
    }
}

TEST_CASE("shift and derivative")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = random_poly(rng);
        const auto a = random_rational(rng);
        const auto c = random_rational(rng);
        CHECK(p.shifted(c)(a) == p(a + c));
        CHECK(poly_shift(p, c) == p.shifted(c));
        CHECK(p.shifted(c).shifted(-c) == p);
        CHECK(poly_eval(p, a) == p(a));
        // product rule
        const auto q = random_poly(rng);
        CHECK((p * q).derivative() == p.derivative() * q + p * q.derivative());
    }
    CHECK(Polynomial({1, 2, 3}).derivative() == Polynomial({2, 6}));
    CHECK(Polynomial(4).derivative().is_zero());
}

TEST_CASE("falling and rising factorial polynomials")
{
    for (unsigned n = 0; n <= 12; ++n) {
        for (long x = -5; x <= 12; ++x) {
            CHECK(falling_factorial_poly(n)(ExactRational(x)) == ExactRational(falling_factorial(x, n)));
            CHECK(rising_factorial_poly(n)(ExactRational(x)) == rising_factorial(ExactRational(x), n));
        }
        // x^(n) = (-1)^n (-x)_n
        const Polynomial reflected = falling_factorial_poly(n) * ExactRational(n % 2 ? -1 : 1);
        CHECK(rising_factorial_poly(n)(ExactRational(3, 2)) == reflected(ExactRational(-3, 2)));
    }
}
