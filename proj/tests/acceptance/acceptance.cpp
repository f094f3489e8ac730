// Acceptance suite: one PASS/FAIL line per criterion, exact equality
// throughout. Exit status is the number of failed criteria.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include <polycauchy/combinatorics.hpp>
#include <polycauchy/gf_expr.hpp>
#include <polycauchy/identity_suite.hpp>
#include <polycauchy/poly_cauchy.hpp>
#include <polycauchy/special.hpp>
#include <polycauchy/stirling.hpp>

using namespace polycauchy;

namespace
{

struct Outcome {
    bool ok;
    std::string detail;
};

std::size_t failed_criteria = 0;

void criterion(int number, const std::string &title, const std::function<Outcome()> &body)
{
    const auto start = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
        o = body();
    } catch (const std::exception &e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.ok) {
        ++failed_criteria;
    }
    std::printf("%s %2d %s (%.2fs)%s%s\n", o.ok ? "PASS" : "FAIL", number, title.c_str(), secs,
                o.detail.empty() ? "" : ": ", o.detail.c_str());
    std::fflush(stdout);
}

// Runs the identities in `ids` on their default grids; checks that every
// point passes and that the grid includes the points in `must_cover`.
Outcome suite_passes(std::vector<IdentityId> ids, const std::function<bool(const CheckReport &)> &extra = {})
{
    SuiteConfig config;
    config.only = std::move(ids);
    const auto results = run_suite(config);
    std::set<IdentityId> seen;
    for (const auto &r : results) {
        seen.insert(r.id);
        if (r.status == CheckStatus::fail) {
            return {false, report_text(std::span(&r, 1))};
        }
        if (extra && !extra(r)) {
            return {false, "unexpected grid point in " + std::string(identity_name(r.id))};
        }
    }
    if (seen.size() != config.only.size()) {
        return {false, "an identity produced no grid points"};
    }
    return {true, std::to_string(results.size()) + " points"};
}

long param(const CheckReport &r, const std::string &name)
{
    for (const auto &p : r.params) {
        if (p.name == name) {
            return p.value.numerator().get_si();
        }
    }
    return -1000;
}

// Every (n, k) pair of the stated box appears among the results.
std::function<bool(const CheckReport &)> within(long n_hi, long k_lo, long k_hi)
{
    return [=](const CheckReport &r) {
        const long k = param(r, "k");
        return param(r, "n") <= n_hi && k >= k_lo && k <= k_hi;
    };
}

int run_process(const std::string &command, std::string &output)
{
    FILE *pipe = popen(command.c_str(), "r");
    if (!pipe) {
        return -1;
    }
    char buf[65536];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) {
        output.append(buf, got);
    }
    const int status = pclose(pipe);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

} // namespace

int main()
{
    criterion(1, "closed form equals series oracle, n <= 20, |k| <= 3", [] {
        for (unsigned n = 0; n <= 20; ++n) {
            for (long k = -3; k <= 3; ++k) {
                if (pc_poly(n, k).poly != pc_poly_oracle(n, k)) {
                    return Outcome{false, "n=" + std::to_string(n) + " k=" + std::to_string(k)};
                }
            }
        }
        return Outcome{true, ""};
    });

    criterion(2, "T1 and T2, n <= 8, 0 <= j <= n, |k| <= 2", [] {
        SuiteConfig config;
        config.only = {IdentityId::T1, IdentityId::T2};
        const auto results = run_suite(config);
        std::size_t t2_points = 0;
        for (const auto &r : results) {
            if (r.status == CheckStatus::fail) {
                return Outcome{false, report_text(std::span(&r, 1))};
            }
            t2_points += r.id == IdentityId::T2 && param(r, "j") >= 1;
        }
        // sum_{n=1..8} n pairs (n, j >= 1), times 5 values of k
        return Outcome{t2_points == 36 * 5, std::to_string(results.size()) + " points"};
    });

    criterion(3, "T3 recurrence, n <= 12, |k| <= 2",
              [] { return suite_passes({IdentityId::T3}, within(12, -2, 2)); });

    criterion(4, "T4 with vanishing l = n term, 1 <= n <= 12, |k| <= 2",
              [] { return suite_passes({IdentityId::T4}, within(12, -2, 2)); });

    criterion(5, "T5 and T5_COR, 1 <= m <= n <= 12, |k| <= 2",
              [] { return suite_passes({IdentityId::T5, IdentityId::T5_COR}, within(12, -2, 2)); });

    criterion(6, "L6, L7 and T-number two-path agreement", [] {
        return suite_passes({IdentityId::L6, IdentityId::L7, IdentityId::E58_TNUM}, [](const CheckReport &r) {
            if (r.id == IdentityId::L7) {
                return param(r, "m") <= 4 && param(r, "n") <= 10;
            }
            if (r.id == IdentityId::E58_TNUM) {
                return param(r, "r") <= 3 && param(r, "n") <= 10;
            }
            return param(r, "n") <= 12;
        });
    });

    criterion(7, "Sheffer shift identity, y in 0..n, n <= 12, |k| <= 2",
              [] { return suite_passes({IdentityId::E39}, within(12, -2, 2)); });

    criterion(8, "cleared-denominator derivative series, m <= 5, N = 12", [] {
        return suite_passes({IdentityId::E62}, [](const CheckReport &r) { return param(r, "N") == 12; });
    });

    criterion(9, "derivative formula, 1 <= n <= 15, |k| <= 2",
              [] { return suite_passes({IdentityId::E67}, within(15, -2, 2)); });

    criterion(10, "Bernoulli, Frobenius-Euler and rising-factorial basis expansions", [] {
        return suite_passes({IdentityId::T8, IdentityId::T8_NORLUND, IdentityId::T9, IdentityId::T9_ALT,
                             IdentityId::T10});
    });

    criterion(11, "cross-family anchors", [] {
        for (unsigned n = 0; n <= 16; ++n) {
            if (pc_number(n, 1) != cauchy(n)) {
                return Outcome{false, "C_n^(1) != C_n at n=" + std::to_string(n)};
            }
            if (bernoulli_higher_poly(n, n)(ExactRational(1)) != cauchy(n)) {
                return Outcome{false, "B_n^(n)(1) != C_n at n=" + std::to_string(n)};
            }
            if (norlund(n) != bernoulli_higher(n, n)) {
                return Outcome{false, "Norlund paths disagree at n=" + std::to_string(n)};
            }
        }
        const auto lif = lif_series(1, 32);
        const auto t = ScalarSeries::variable(33);
        if (lif != div_with_valuation(expm1_series(33), t)) {
            return Outcome{false, "Lif_1 != (e^t-1)/t"};
        }
        return suite_passes({IdentityId::E55_LIF1, IdentityId::NORLUND_EQ_CAUCHY});
    });

    criterion(12, "spot values", [] {
        for (long k = -3; k <= 3; ++k) {
            if (pc_number(1, k) != int_pow_rational(2, -k)) {
                return Outcome{false, "C_1^(k) at k=" + std::to_string(k)};
            }
        }
        const bool ok = pc_number(2, 1) == ExactRational(-1, 6) && norlund(2) == ExactRational(5, 6)
                        && stirling1(4, 2) == 11;
        return Outcome{ok, ""};
    });

    criterion(13, "DSL corpus round-trips and evaluates; malformed inputs carry spans", [] {
        const std::vector<std::string> corpus{
            "lif(3; t)", "lif(2; log1p(t))", "lif(-1; log1p(t)) * exp(-x*log1p(t))", "t/log1p(t)",
            "t/(exp(t) - 1)", "(t/(exp(t) - 1))^4", "(t/(exp(t) - 1))^2 * exp(x*t)", "t/((1 + t)*log1p(t))",
            "(t/log1p(t))^3 * lif(-2; log1p(t))", "((1 - 3)/(exp(t) - 3))^2 * exp(x*t)", "(exp(t) - 1)/t",
            "exp(-x*log1p(t))", "(t/log1p(t))^2 * exp(2*log1p(t))", "log1p(t)", "exp(t)", "lif(0; t)",
            "1 - 3/4*t^2", "-t^3 + x", "(1 + t)^-3", "exp(log1p(t)) - 1", "2 - -3*t"};
        for (const auto &text : corpus) {
            const auto tree = parse(text);
            if (!structurally_equal(*tree, *parse(render(*tree)))) {
                return Outcome{false, "round trip of " + text};
            }
            if (eval_series(*tree, 10).order_bound() != 10) {
                return Outcome{false, "order of " + text};
            }
        }
        const std::vector<std::string> malformed{"t +", "", "2t", "1.5", "t $", "foo", "(t", "t)", "t^x",
                                                 "t^(1/2)", "lif(t; t)", "1/t", "1/(x+t)", "exp(1+t)", "x^-1",
                                                 std::string(3000, '(') + "t"};
        for (const auto &text : malformed) {
            try {
                (void)eval_series(text, 6);
                return Outcome{false, "accepted " + text};
            } catch (const GfError &e) {
                if (e.span().start > e.span().end || e.span().end > text.size()) {
                    return Outcome{false, "span outside input for " + text};
                }
            }
        }
        return Outcome{true, std::to_string(corpus.size()) + " good, " + std::to_string(malformed.size()) + " bad"};
    });

    criterion(14, "an injected sign flip is detected in every identity", [] {
        SuiteConfig config;
        config.inject_sign_flip = true;
        const auto results = run_suite(config);
        std::set<IdentityId> caught;
        for (const auto &r : results) {
            if (r.status == CheckStatus::fail) {
                if (!r.lhs || !r.rhs) {
                    return Outcome{false, "failure without witnesses"};
                }
                caught.insert(r.id);
            }
        }
        return Outcome{caught.size() == identity_manifest().size(),
                       std::to_string(caught.size()) + "/" + std::to_string(identity_manifest().size()) + " caught"};
    });

    criterion(15, "default verify run: exit 0, zero failures, schema-valid JSON, < 5 min", [] {
        std::string output;
        const auto start = std::chrono::steady_clock::now();
        const int status = run_process(std::string("\"") + POLYCAUCHY_CLI_PATH + "\" verify --report json", output);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (status != 0) {
            return Outcome{false, "exit status " + std::to_string(status)};
        }
        const auto j = nlohmann::json::parse(output);
        if (!j.is_object() || !j["total"].is_number_unsigned() || !j["failed"].is_number_unsigned()
            || !j["records"].is_array() || j["failed"] != 0 || j["total"] != j["records"].size()) {
            return Outcome{false, "bad report header"};
        }
        std::set<std::string> ids;
        for (const auto &rec : j["records"]) {
            const bool ok = rec.size() == 6 && rec["id"].is_string() && rec["params"].is_object()
                            && rec["status"] == "pass" && rec["lhs"].is_null() && rec["rhs"].is_null()
                            && rec["ms"].is_number();
            if (!ok) {
                return Outcome{false, "bad record " + rec.dump()};
            }
            ids.insert(rec["id"].get<std::string>());
        }
        if (ids.size() != identity_manifest().size()) {
            return Outcome{false, "missing identities"};
        }
        return Outcome{secs < 300.0, std::to_string(j["total"].get<std::size_t>()) + " records"};
    });

    std::printf("%zu of 15 criteria failed\n", failed_criteria);
    return failed_criteria == 0 ? 0 : 1;
}
