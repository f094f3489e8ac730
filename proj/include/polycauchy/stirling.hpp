#ifndef POLYCAUCHY_STIRLING_HPP
#define POLYCAUCHY_STIRLING_HPP

#include <atomic>
#include <cstddef>
#include <mutex>
#include <vector>

#include <polycauchy/rational.hpp>

namespace polycauchy
{

// Signed Stirling numbers of the first kind, S1(n, m) = [x^m] (x)_n, built
// row by row from S1(n+1, m) = S1(n, m-1) - n S1(n, m).
//
// Extension takes an exclusive lock. Row storage is reserved up front and
// never reallocates, so rows below the published count are read without
// locking.
class Stirling1Table
{
public:
    static constexpr std::size_t max_rows = 2048;

    explicit Stirling1Table(unsigned n_max = 0);

    Stirling1Table(const Stirling1Table &) = delete;
    Stirling1Table &operator=(const Stirling1Table &) = delete;

    // Builds rows 0..n_max. Throws std::out_of_range past max_rows.
    void ensure(unsigned n_max);
    unsigned rows_built() const { return static_cast<unsigned>(built_.load(std::memory_order_acquire)); }

    // Zero outside the triangle; extends the table when n is new.
    BigInt operator()(unsigned n, long m);
    const BigInt &at(unsigned n, unsigned m);

private:
    std::vector<std::vector<BigInt>> rows_;
    std::atomic<std::size_t> built_{0};
    std::mutex extend_;
};

// Process-wide table.
Stirling1Table &stirling1_table();

inline BigInt stirling1(unsigned n, long m)
{
    return stirling1_table()(n, m);
}

} // namespace polycauchy

#endif
