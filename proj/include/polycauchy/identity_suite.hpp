#ifndef POLYCAUCHY_IDENTITY_SUITE_HPP
#define POLYCAUCHY_IDENTITY_SUITE_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include <polycauchy/polynomial.hpp>
#include <polycauchy/rational.hpp>
#include <polycauchy/special.hpp>

namespace polycauchy
{

// Every identity the suite can check. Report order follows this order.
enum class IdentityId {
    T1,
    T2,
    T3,
    T4,
    T5,
    T5_COR,
    L6,
    L7,
    E58_TNUM,
    T8,
    T8_NORLUND,
    T9,
    T9_ALT,
    T10,
    E39,
    E62,
    E67,
    E55_LIF1,
    NORLUND_EQ_CAUCHY,
    ORACLE_EQ26,
};

struct IdentityInfo {
    IdentityId id;
    std::string_view name;
    std::string_view statement;
};

std::span<const IdentityInfo> identity_manifest();
std::string_view identity_name(IdentityId id);
std::optional<IdentityId> parse_identity_id(std::string_view name);

struct Param {
    std::string name;
    ExactRational value;

    friend bool operator==(const Param &, const Param &) = default;
};
using GridPoint = std::vector<Param>;

enum class CheckStatus { pass, fail };

struct CheckReport {
    IdentityId id{};
    GridPoint params;
    CheckStatus status = CheckStatus::pass;
    // Both set on failure, empty on success.
    std::optional<std::string> lhs;
    std::optional<std::string> rhs;
    double ms = 0.0;
};

// When set, every check negates one designated summand on its right-hand
// side. Used to prove the harness notices a broken identity.
struct CheckOptions {
    bool inject_sign_flip = false;
};

// Values shared by many checks, computed once before any parallel phase and
// read-only afterwards. Lookups outside the built bounds are computed on the
// spot.
class SuiteTables
{
public:
    struct Bounds {
        unsigned n_max = 0;
        long k_min = 0;
        long k_max = 0;
        // Largest n for the composition-indexed Bernoulli sums.
        unsigned composition_n_max = 0;
        // Largest r for T_n^(r,k).
        unsigned t_r_max = 0;
    };

    explicit SuiteTables(const Bounds &bounds);

    const Bounds &bounds() const { return bounds_; }

    Polynomial pc_poly(unsigned n, long k) const;
    ExactRational pc_number(unsigned n, long k) const;
    ExactRational cauchy(unsigned n) const;
    const BernoulliCache &bernoulli() const { return bernoulli_; }
    // B_n^(r)(x) from the cached numbers.
    Polynomial bernoulli_poly(unsigned n, long r) const;
    // T_n^(r,k), generating-function route.
    ExactRational t_number(unsigned n, unsigned r, long k) const;
    // sum over weak compositions (l_1..l_n) of l of
    // multinomial(n-1; l_1..l_n, n-1-l) B_{l_1}...B_{l_n}; needs l < n.
    ExactRational composition_sum(unsigned n, unsigned l) const;

private:
    bool has_k(long k) const { return k >= bounds_.k_min && k <= bounds_.k_max; }

    Bounds bounds_;
    BernoulliCache bernoulli_;
    std::vector<std::vector<Polynomial>> pc_poly_;     // [k - k_min][n]
    std::vector<std::vector<ExactRational>> t_number_; // [(k - k_min) * (t_r_max + 1) + r][n]
    std::vector<ExactRational> cauchy_;
    std::vector<std::vector<ExactRational>> composition_sum_; // [n][l]
};

// Individual checks. Each compares two exact routes and reports both
// sides on failure.
CheckReport check_T1(unsigned n, long k, const SuiteTables &tables, const CheckOptions &opts = {});
CheckReport check_T2(unsigned n, unsigned j, long k, const SuiteTables &tables, const CheckOptions &opts = {});
CheckReport check_T3(unsigned n, long k, const SuiteTables &tables, const CheckOptions &opts = {});
CheckReport check_T4(unsigned n, long k, const SuiteTables &tables, const CheckOptions &opts = {});
CheckReport check_T5(unsigned n, unsigned m, long k, const SuiteTables &tables, const CheckOptions &opts = {});
CheckReport check_T5_COR(unsigned n, long k, const SuiteTables &tables, const CheckOptions &opts = {});
CheckReport check_L6(unsigned n, long k, const SuiteTables &tables, const CheckOptions &opts = {});
CheckReport check_L7(unsigned n, unsigned m, long k, const SuiteTables &tables, const CheckOptions &opts = {});
CheckReport check_E58_TNUM(unsigned n, unsigned r, long k, const SuiteTables &tables, const CheckOptions &opts = {});
CheckReport check_T8(unsigned n, unsigned r, long k, bool norlund_route, const SuiteTables &tables,
                     const CheckOptions &opts = {});
CheckReport check_T9(unsigned n, unsigned r, long k, const ExactRational &lambda, bool alternative_route,
                     const SuiteTables &tables, const CheckOptions &opts = {});
CheckReport check_T10(unsigned n, long k, const SuiteTables &tables, const CheckOptions &opts = {});
CheckReport check_E39(unsigned n, long k, const ExactRational &y, const SuiteTables &tables,
                      const CheckOptions &opts = {});
CheckReport check_E62(unsigned m, long k, unsigned order, const SuiteTables &tables, const CheckOptions &opts = {});
CheckReport check_E67(unsigned n, long k, const SuiteTables &tables, const CheckOptions &opts = {});
CheckReport check_E55_LIF1(unsigned n, const SuiteTables &tables, const CheckOptions &opts = {});
CheckReport check_NORLUND_EQ_CAUCHY(unsigned l, const SuiteTables &tables, const CheckOptions &opts = {});
CheckReport check_ORACLE_EQ26(unsigned n, long k, const SuiteTables &tables, const CheckOptions &opts = {});

// Runs one check at a grid point produced by build_grid.
CheckReport run_check(IdentityId id, const GridPoint &point, const SuiteTables &tables,
                      const CheckOptions &opts = {});

struct SuiteConfig {
    // Empty selects every identity.
    std::vector<IdentityId> only;
    // Replaces the upper bound of each check's leading index.
    std::optional<long> n_max;
    // Replace the k range of every check that has one.
    std::optional<long> k_min;
    std::optional<long> k_max;
    bool inject_sign_flip = false;
    // 0 uses the hardware concurrency.
    unsigned threads = 0;
};

struct GridTask {
    IdentityId id;
    GridPoint point;
};

// Throws std::invalid_argument for invalid bounds.
std::vector<GridTask> build_grid(const SuiteConfig &config);
SuiteTables::Bounds table_bounds_for(std::span<const GridTask> tasks);

// Results ordered by (id, grid point) regardless of scheduling.
std::vector<CheckReport> run_suite(const SuiteConfig &config);

std::size_t count_failures(std::span<const CheckReport> reports);
nlohmann::json report_json(std::span<const CheckReport> reports, bool include_timing = true);
std::string report_text(std::span<const CheckReport> reports);

} // namespace polycauchy

#endif
