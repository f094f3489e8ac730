#include <polycauchy/combinatorics.hpp>

#include <numeric>
#include <stdexcept>

namespace polycauchy
{

BigInt factorial(unsigned n)
{
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(unsigned n, long k)
{
    if (k < 0 || k > static_cast<long>(n)) {
        return 0;
    }
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
    return r;
}

BigInt generalized_binomial(long n, long k)
{
    if (k < 0) {
        return 0;
    }
    BigInt r;
    BigInt big_n(n);
    mpz_bin_ui(r.get_mpz_t(), big_n.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

BigInt multinomial(unsigned n, std::span<const unsigned> parts)
{
    unsigned long sum = 0;
    for (unsigned p : parts) {
        sum += p;
    }
    if (sum > n) {
        throw std::invalid_argument("multinomial: parts sum to " + std::to_string(sum) + " > n = "
                                    + std::to_string(n));
    }
    BigInt r = factorial(n);
    for (unsigned p : parts) {
        r /= factorial(p);
    }
    r /= factorial(static_cast<unsigned>(n - sum));
    return r;
}

ExactRational int_pow_rational(unsigned long base, long k)
{
    if (base == 0) {
        throw std::domain_error("int_pow_rational: base must be >= 1");
    }
    BigInt p;
    const unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
    mpz_ui_pow_ui(p.get_mpz_t(), base, e);
    return k < 0 ? ExactRational(BigInt(1), p) : ExactRational(p);
}

BigInt falling_factorial(long x, unsigned n)
{
    BigInt r = 1;
    for (unsigned i = 0; i < n; ++i) {
        r *= x - static_cast<long>(i);
    }
    return r;
}

ExactRational rising_factorial(const ExactRational &x, unsigned n)
{
    ExactRational r = 1;
    for (unsigned i = 0; i < n; ++i) {
        r *= x + ExactRational(static_cast<long>(i));
    }
    return r;
}

WeakCompositions::WeakCompositions(unsigned total, unsigned parts) : total_(total), parts_(parts)
{
    if (parts == 0) {
        throw std::invalid_argument("weak_compositions: parts must be >= 1");
    }
}

WeakCompositions::iterator::iterator(unsigned total, unsigned parts) : done_(false)
{
    current_.total = total;
    current_.parts.assign(parts, 0);
    current_.parts.back() = total;
}

// Successor in lexicographic order: bump the entry just before the last
// nonzero one and move the remainder of that last entry to the tail.
WeakCompositions::iterator &WeakCompositions::iterator::operator++()
{
    auto &a = current_.parts;
    std::size_t j = a.size();
    while (j > 0 && a[j - 1] == 0) {
        --j;
    }
    if (j <= 1) {
        done_ = true;
        return *this;
    }
    --j;
    const unsigned rest = a[j] - 1;
    a[j - 1] += 1;
    a[j] = 0;
    a.back() = rest;
    return *this;
}

} // namespace polycauchy
