#include <polycauchy/stirling.hpp>

#include <stdexcept>
#include <string>

namespace polycauchy
{

Stirling1Table::Stirling1Table(unsigned n_max)
{
    rows_.reserve(max_rows);
    ensure(n_max);
}

void Stirling1Table::ensure(unsigned n_max)
{
    if (n_max < built_.load(std::memory_order_acquire)) {
        return;
    }
    if (n_max >= max_rows) {
        throw std::out_of_range("Stirling1Table: row " + std::to_string(n_max) + " exceeds capacity");
    }
    std::lock_guard lock(extend_);
    while (rows_.size() <= n_max) {
        const std::size_t n = rows_.size();
        std::vector<BigInt> row(n + 1);
        if (n == 0) {
            row[0] = 1;
        } else {
            const auto &prev = rows_[n - 1];
            const long k = static_cast<long>(n - 1);
            for (std::size_t m = 1; m <= n; ++m) {
                row[m] = prev[m - 1];
                if (m < n) {
                    row[m] -= k * prev[m];
                }
            }
        }
        rows_.push_back(std::move(row));
        built_.store(rows_.size(), std::memory_order_release);
    }
}

const BigInt &Stirling1Table::at(unsigned n, unsigned m)
{
    ensure(n);
    if (m > n) {
        throw std::out_of_range("Stirling1Table::at outside the triangle");
    }
    return rows_[n][m];
}

BigInt Stirling1Table::operator()(unsigned n, long m)
{
    if (m < 0 || m > static_cast<long>(n)) {
        return 0;
    }
    return at(n, static_cast<unsigned>(m));
}

Stirling1Table &stirling1_table()
{
    static Stirling1Table table(64);
    return table;
}

} // namespace polycauchy
