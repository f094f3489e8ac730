#ifndef POLYCAUCHY_COMBINATORICS_HPP
#define POLYCAUCHY_COMBINATORICS_HPP

#include <cstddef>
#include <iterator>
#include <span>
#include <vector>

#include <polycauchy/rational.hpp>

namespace polycauchy
{

BigInt factorial(unsigned n);

// C(n, k); zero outside 0 <= k <= n.
BigInt binomial(unsigned n, long k);

// C(n, k) for any integer n via the falling factorial n(n-1)...(n-k+1)/k!,
// so C(-1, 0) = 1 and C(-1, k) = (-1)^k. Zero for k < 0.
BigInt generalized_binomial(long n, long k);

// n! / (p_1! ... p_m! (n - sum p)!). Throws std::invalid_argument when the
// parts sum past n.
BigInt multinomial(unsigned n, std::span<const unsigned> parts);

// base^k exactly, k of either sign. base must be >= 1.
ExactRational int_pow_rational(unsigned long base, long k);

// (x)_n evaluated at an integer.
BigInt falling_factorial(long x, unsigned n);
// x^(n) = x(x+1)...(x+n-1) evaluated at a rational.
ExactRational rising_factorial(const ExactRational &x, unsigned n);

// A weak composition: `parts` sums to `total`, zeros allowed.
struct Composition {
    std::vector<unsigned> parts;
    unsigned total = 0;
};

// Lazy lexicographic stream of the weak compositions of `total` into
// `parts` pieces. Only the current composition is held in memory.
class WeakCompositions
{
public:
    class iterator
    {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Composition;
        using difference_type = std::ptrdiff_t;
        using pointer = const Composition *;
        using reference = const Composition &;

        iterator() = default;

        reference operator*() const { return current_; }
        pointer operator->() const { return &current_; }
        iterator &operator++();
        void operator++(int) { ++*this; }

        friend bool operator==(const iterator &it, std::default_sentinel_t) { return it.done_; }

    private:
        friend class WeakCompositions;
        iterator(unsigned total, unsigned parts);

        Composition current_;
        bool done_ = true;
    };

    // Throws std::invalid_argument when parts == 0.
    WeakCompositions(unsigned total, unsigned parts);

    iterator begin() const { return iterator(total_, parts_); }
    std::default_sentinel_t end() const { return {}; }

private:
    unsigned total_;
    unsigned parts_;
};

inline WeakCompositions weak_compositions(unsigned total, unsigned parts)
{
    return WeakCompositions(total, parts);
}

} // namespace polycauchy

#endif
