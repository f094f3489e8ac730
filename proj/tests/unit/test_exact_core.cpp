#include "doctest.h"

#include <random>
#include <set>
#include <thread>

#include <polycauchy/combinatorics.hpp>
#include <polycauchy/rational.hpp>
#include <polycauchy/stirling.hpp>

using namespace polycauchy;

namespace
{

ExactRational random_rational(std::mt19937 &rng)
{
    std::uniform_int_distribution<long> num(-1000, 1000);
    std::uniform_int_distribution<long> den(1, 1000);
    return ExactRational(num(rng), den(rng));
}

// Coefficients of x(x-1)...(x-n+1), by direct multiplication.
std::vector<BigInt> falling_factorial_coefficients(unsigned n)
{
    std::vector<BigInt> c{1};
    for (unsigned i = 0; i < n; ++i) {
        std::vector<BigInt> next(c.size() + 1, 0);
        for (std::size_t j = 0; j < c.size(); ++j) {
            next[j + 1] += c[j];
            next[j] -= c[j] * i;
        }
        c = std::move(next);
    }
    return c;
}

} // namespace

TEST_CASE("rationals stay canonical")
{
    const ExactRational a(6, -4);
    CHECK(a.numerator() == -3);
    CHECK(a.denominator() == 2);
    CHECK(a.to_string() == "-3/2");
    CHECK(ExactRational(4, 2).to_string() == "2");
    CHECK(ExactRational(0, 5) == ExactRational(0));
    CHECK(ExactRational(0, 5).denominator() == 1);
}

TEST_CASE("rational errors")
{
    CHECK_THROWS_AS(ExactRational(1, 0), std::domain_error);
    CHECK_THROWS_AS(ExactRational(1) / ExactRational(0), std::domain_error);
    CHECK_THROWS_AS(ExactRational(0).inverse(), std::domain_error);
    CHECK_THROWS_AS(ExactRational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(ExactRational::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(ExactRational::parse("1/"), std::invalid_argument);
    CHECK_THROWS_AS(ExactRational::parse(""), std::invalid_argument);
}

TEST_CASE("rational parse")
{
    CHECK(ExactRational::parse("-3/4") == ExactRational(-3, 4));
    CHECK(ExactRational::parse("10/4") == ExactRational(5, 2));
    CHECK(ExactRational::parse("7") == ExactRational(7));
    CHECK(ExactRational::parse("123456789012345678901234567890").numerator()
          == BigInt("123456789012345678901234567890"));
}

TEST_CASE("field laws on random rationals")
{
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 500; ++trial) {
        const auto a = random_rational(rng);
        const auto b = random_rational(rng);
        const auto c = random_rational(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == ExactRational(0));
        CHECK(a + ExactRational(0) == a);
        CHECK(a * ExactRational(1) == a);
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == ExactRational(1));
            CHECK((b / a) * a == b);
        }
        CHECK(ExactRational::parse(a.to_string()) == a);
    }
}

TEST_CASE("rational ordering")
{
    CHECK(ExactRational(1, 3) < ExactRational(1, 2));
    CHECK(ExactRational(-1, 2) < ExactRational(-1, 3));
    CHECK(ExactRational(2, 4) == ExactRational(1, 2));
    CHECK(ExactRational(-5, 3).sign() == -1);
    CHECK(ExactRational(3).is_integer());
    CHECK_FALSE(ExactRational(3, 2).is_integer());
}

TEST_CASE("factorial and binomial")
{
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(factorial(25) == BigInt("15511210043330985984000000"));
    for (unsigned n = 1; n <= 40; ++n) {
        for (long k = 1; k < static_cast<long>(n); ++k) {
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
        }
        CHECK(binomial(n, 0) == 1);
        CHECK(binomial(n, n) == 1);
        CHECK(binomial(n, -1) == 0);
        CHECK(binomial(n, n + 1) == 0);
    }
}

TEST_CASE("generalized binomial")
{
    CHECK(generalized_binomial(-1, 0) == 1);
    CHECK(generalized_binomial(-1, 3) == -1);
    CHECK(generalized_binomial(-1, 4) == 1);
    CHECK(generalized_binomial(-3, 2) == 6);
    CHECK(generalized_binomial(5, 2) == 10);
    CHECK(generalized_binomial(2, 5) == 0);
    CHECK(generalized_binomial(4, -1) == 0);
    // C(-n, k) = (-1)^k C(n+k-1, k)
    for (long n = 1; n < 8; ++n) {
        for (long k = 0; k < 8; ++k) {
            const BigInt expected = (k % 2 ? -1 : 1) * binomial(static_cast<unsigned>(n + k - 1), k);
            CHECK(generalized_binomial(-n, k) == expected);
        }
    }
}

TEST_CASE("multinomial theorem")
{
    // sum over weak compositions of n into m parts of n!/(p_1!...p_m!) = m^n
    for (unsigned m = 1; m <= 4; ++m) {
        for (unsigned n = 0; n <= 7; ++n) {
            BigInt sum = 0;
            for (const auto &comp : weak_compositions(n, m)) {
                sum += multinomial(n, comp.parts);
            }
            BigInt expected = 1;
            for (unsigned i = 0; i < n; ++i) {
                expected *= m;
            }
            CHECK(sum == expected);
        }
    }
    const std::vector<unsigned> too_many{3, 3};
    CHECK_THROWS_AS(multinomial(5, too_many), std::invalid_argument);
    const std::vector<unsigned> partial{1, 2};
    CHECK(multinomial(5, partial) == 30); // 5!/(1! 2! 2!)
}

TEST_CASE("weak compositions enumerate each tuple once, lexicographically")
{
    for (unsigned parts = 1; parts <= 4; ++parts) {
        for (unsigned total = 0; total <= 6; ++total) {
            std::set<std::vector<unsigned>> seen;
            std::vector<unsigned> previous;
            for (const auto &comp : weak_compositions(total, parts)) {
                REQUIRE(comp.parts.size() == parts);
                unsigned s = 0;
                for (unsigned p : comp.parts) {
                    s += p;
                }
                CHECK(s == total);
                CHECK(comp.total == total);
                if (!previous.empty()) {
                    CHECK(previous < comp.parts);
                }
                previous = comp.parts;
                seen.insert(comp.parts);
            }
            CHECK(seen.size() == binomial(total + parts - 1, parts - 1).get_ui());
        }
    }
    CHECK_THROWS_AS(weak_compositions(3, 0), std::invalid_argument);
}

TEST_CASE("power, falling and rising factorials")
{
    CHECK(int_pow_rational(2, 3) == ExactRational(8));
    CHECK(int_pow_rational(2, -3) == ExactRational(1, 8));
    CHECK(int_pow_rational(7, 0) == ExactRational(1));
    CHECK(falling_factorial(5, 3) == 60);
    CHECK(falling_factorial(2, 3) == 0);
    CHECK(falling_factorial(-2, 2) == 6);
    CHECK(rising_factorial(ExactRational(3), 2) == ExactRational(12));
    CHECK(rising_factorial(ExactRational(1, 2), 2) == ExactRational(3, 4));
    CHECK(rising_factorial(ExactRational(-1), 3) == ExactRational(0));
}

TEST_CASE("Stirling numbers of the first kind")
{
    CHECK(stirling1(0, 0) == 1);
    CHECK(stirling1(4, 2) == 11);
    CHECK(stirling1(4, 1) == -6);
    CHECK(stirling1(5, 5) == 1);
    CHECK(stirling1(5, 6) == 0);
    CHECK(stirling1(5, -1) == 0);
    CHECK(stirling1(3, 0) == 0);
    for (unsigned n = 0; n <= 30; ++n) {
        const auto c = falling_factorial_coefficients(n);
        for (unsigned m = 0; m <= n; ++m) {
            CHECK(stirling1(n, m) == c[m]);
        }
    }
    // row sums: sum_m S1(n,m) = (1)_n = 0 for n >= 2
    for (unsigned n = 2; n <= 60; ++n) {
        BigInt s = 0;
        for (unsigned m = 0; m <= n; ++m) {
            s += stirling1(n, m);
        }
        CHECK(s == 0);
    }
}

TEST_CASE("Stirling table extends safely under concurrent readers")
{
    Stirling1Table table;
    std::vector<std::jthread> threads;
    std::vector<BigInt> results(4);
    for (unsigned i = 0; i < 4; ++i) {
        threads.emplace_back([&, i] {
            table.ensure(100 + 20 * i);
            results[i] = table(100 + 20 * i, 3);
        });
    }
    threads.clear();
    for (unsigned i = 0; i < 4; ++i) {
        const auto c = falling_factorial_coefficients(100 + 20 * i);
        CHECK(results[i] == c[3]);
    }
}
