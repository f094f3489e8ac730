#include <polycauchy/cli.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>

#include "CLI11.hpp"

#include <polycauchy/gf_expr.hpp>
#include <polycauchy/identity_suite.hpp>
#include <polycauchy/poly_cauchy.hpp>
#include <polycauchy/special.hpp>
#include <polycauchy/stirling.hpp>

namespace polycauchy
{

namespace
{

constexpr long max_index_n = 512;
constexpr long max_abs_k = 16;
constexpr long max_abs_r = 64;

// Thrown for semantic usage errors found after CLI11 parsing.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Opt {
    CLI::Option *option = nullptr;
    long value = 0;

    bool given() const { return option->count() > 0; }
};

// CLI11 binds the address of o.value, so o must outlive parsing.
void add_long(CLI::App &app, Opt &o, const std::string &name, const std::string &help)
{
    o.option = app.add_option(name, o.value, help);
}

long require_opt(const Opt &o, const std::string &family)
{
    if (!o.given()) {
        throw UsageError(o.option->get_name() + " is required for " + family);
    }
    return o.value;
}

unsigned check_n(long n, const char *name = "--n")
{
    if (n < 0 || n > max_index_n) {
        throw UsageError(std::string(name) + " must lie in [0, " + std::to_string(max_index_n) + "]");
    }
    return static_cast<unsigned>(n);
}

long check_k(long k)
{
    if (k < -max_abs_k || k > max_abs_k) {
        throw UsageError("--k must satisfy |k| <= " + std::to_string(max_abs_k));
    }
    return k;
}

long check_r(long r, bool natural)
{
    if ((natural && r < 0) || r < -max_abs_r || r > max_abs_r) {
        throw UsageError(natural ? "--r must lie in [0, " + std::to_string(max_abs_r) + "]"
                                 : "--r must satisfy |r| <= " + std::to_string(max_abs_r));
    }
    return r;
}

// Options shared by `number` and `table`.
struct FamilyArgs {
    std::string family;
    Opt n;
    Opt k;
    Opt r;
    Opt m;

    // Value of the family at index n, using the remaining parameters.
    ExactRational value(unsigned n_value) const
    {
        if (family == "polycauchy") {
            return pc_number(n_value, check_k(require_opt(k, family)));
        }
        if (family == "cauchy") {
            return cauchy(n_value);
        }
        if (family == "bernoulli") {
            return r.given() ? bernoulli_higher(n_value, check_r(r.value, false)) : bernoulli(n_value);
        }
        if (family == "norlund") {
            return norlund(n_value);
        }
        if (family == "stirling1") {
            const long m_value = require_opt(m, family);
            return ExactRational(stirling1(n_value, m_value));
        }
        if (family == "tnum") {
            const auto r_value = static_cast<unsigned>(check_r(require_opt(r, family), true));
            return t_number_series(n_value, r_value, check_k(require_opt(k, family)));
        }
        throw UsageError("unknown family '" + family + "'");
    }

    nlohmann::json params() const
    {
        nlohmann::json p = nlohmann::json::object();
        for (const Opt *o : {&k, &r, &m}) {
            if (o->given()) {
                p[o->option->get_name().substr(2)] = o->value;
            }
        }
        return p;
    }
};

const std::vector<std::string> families{"polycauchy", "cauchy", "bernoulli", "norlund", "stirling1", "tnum"};

void add_family_options(CLI::App &cmd, FamilyArgs &args)
{
    cmd.add_option("--family", args.family, "number family")->required()->check(CLI::IsMember(families));
    add_long(cmd, args.k, "--k", "polylogarithm index");
    add_long(cmd, args.r, "--r", "order (higher-order Bernoulli, T-numbers)");
    add_long(cmd, args.m, "--m", "second Stirling index");
}

void print_coefficients(std::ostream &out, const std::vector<ExactRational> &coeffs)
{
    for (std::size_t m = 0; m < coeffs.size(); ++m) {
        out << m << ": " << coeffs[m] << '\n';
    }
}

std::vector<std::string> reversed(const std::vector<std::string> &args)
{
    return {args.rbegin(), args.rend()};
}

} // namespace

int cli_dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact poly-Cauchy numbers, polynomials and identity checks", "polycauchy"};
    app.require_subcommand(1);

    std::function<int()> action;

    // number
    FamilyArgs number_args;
    auto *number = app.add_subcommand("number", "print one exact value");
    add_family_options(*number, number_args);
    add_long(*number, number_args.n, "--n", "index");
    number->callback([&] {
        action = [&] {
            const unsigned n = check_n(require_opt(number_args.n, number_args.family));
            out << number_args.value(n) << '\n';
            return exit_ok;
        };
    });

    // poly
    Opt poly_n;
    Opt poly_k;
    Opt poly_r;
    std::string basis = "monomial";
    std::string lambda_text;
    auto *poly = app.add_subcommand("poly", "print C_n^(k)(x) or its coefficients in another basis");
    add_long(*poly, poly_n, "--n", "degree");
    poly_n.option->required();
    add_long(*poly, poly_k, "--k", "polylogarithm index");
    poly_k.option->required();
    poly->add_option("--basis", basis, "monomial, rising, bernoulli or frobenius")
        ->check(CLI::IsMember({"monomial", "rising", "bernoulli", "frobenius"}));
    add_long(*poly, poly_r, "--r", "basis order");
    poly->add_option("--lambda", lambda_text, "Frobenius-Euler parameter p/q");
    poly->callback([&] {
        action = [&] {
            const unsigned n = check_n(poly_n.value);
            const long k = check_k(poly_k.value);
            if (basis == "monomial") {
                out << pc_poly(n, k).poly.to_string() << '\n';
            } else if (basis == "rising") {
                print_coefficients(out, expand_rising_basis(n, k));
            } else if (basis == "bernoulli") {
                const long r = check_r(require_opt(poly_r, "the bernoulli basis"), true);
                print_coefficients(out, expand_bernoulli_basis(n, k, r));
            } else {
                const long r = check_r(require_opt(poly_r, "the frobenius basis"), true);
                if (lambda_text.empty()) {
                    throw UsageError("--lambda is required for the frobenius basis");
                }
                ExactRational lambda;
                try {
                    lambda = ExactRational::parse(lambda_text);
                } catch (const std::exception &e) {
                    throw UsageError(std::string("--lambda: ") + e.what());
                }
                if (lambda == ExactRational(1)) {
                    throw UsageError("--lambda must differ from 1");
                }
                print_coefficients(out, expand_frobenius_basis(n, k, static_cast<unsigned>(r), lambda));
            }
            return exit_ok;
        };
    });

    // table
    FamilyArgs table_args;
    long rows = 0;
    std::string table_format = "csv";
    auto *table = app.add_subcommand("table", "print the first rows of a family");
    add_family_options(*table, table_args);
    table->add_option("--rows", rows, "number of rows, n = 0..rows-1")->required()->check(CLI::Range(0L, max_index_n + 1));
    table->add_option("--format", table_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    table->callback([&] {
        action = [&] {
            std::vector<ExactRational> values;
            for (long n = 0; n < rows; ++n) {
                values.push_back(table_args.value(static_cast<unsigned>(n)));
            }
            if (table_format == "csv") {
                out << "n,value\n";
                for (std::size_t n = 0; n < values.size(); ++n) {
                    out << n << ',' << values[n] << '\n';
                }
            } else {
                nlohmann::json j;
                j["family"] = table_args.family;
                j["params"] = table_args.params();
                auto arr = nlohmann::json::array();
                for (const auto &v : values) {
                    arr.push_back(v.to_string());
                }
                j["values"] = std::move(arr);
                out << j.dump(2) << '\n';
            }
            return exit_ok;
        };
    });

    // series
    std::string expr_text;
    long order = 0;
    bool egf = false;
    std::string series_format = "text";
    auto *series = app.add_subcommand("series", "expand a generating-function expression");
    series->add_option("expr", expr_text, "expression in t, x, log1p, exp, lif(k; ...)")->required();
    series->add_option("--order", order, "truncation order")
        ->required()
        ->check(CLI::Range(0L, static_cast<long>(max_series_order)));
    series->add_flag("--egf", egf, "multiply coefficient n by n!");
    series->add_option("--format", series_format, "text or json")->check(CLI::IsMember({"text", "json"}));
    series->callback([&] {
        action = [&] {
            std::optional<PolySeries> parsed;
            try {
                parsed = eval_series(expr_text, static_cast<std::size_t>(order));
            } catch (const GfError &e) {
                err << caret_diagnostic(expr_text, e);
                return exit_usage;
            }
            PolySeries s = *parsed;
            if (series_format == "json") {
                out << s.to_json(egf).dump(2) << '\n';
                return exit_ok;
            }
            if (egf) {
                std::vector<Polynomial> scaled;
                for (std::size_t i = 0; i <= s.order_bound(); ++i) {
                    scaled.push_back(ExactRational(factorial(static_cast<unsigned>(i))) * s[i]);
                }
                s = PolySeries(std::move(scaled));
            }
            out << s.to_string() << '\n';
            return exit_ok;
        };
    });

    // verify
    std::vector<std::string> only;
    Opt nmax;
    Opt kmin;
    Opt kmax;
    std::string report = "text";
    unsigned threads = 0;
    bool inject = false;
    bool no_timing = false;
    auto *verify = app.add_subcommand("verify", "run the identity suite");
    verify->add_option("--only", only, "comma-separated identity ids")->delimiter(',');
    add_long(*verify, nmax, "--nmax", "upper bound of each check's leading index");
    add_long(*verify, kmin, "--kmin", "lower bound of k");
    add_long(*verify, kmax, "--kmax", "upper bound of k");
    verify->add_option("--report", report, "text or json")->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--threads", threads, "worker threads, 0 for all cores");
    verify->add_flag("--inject-sign-flip", inject, "negate one summand per check (self-test)");
    verify->add_flag("--no-timing", no_timing, "report every elapsed time as 0");
    verify->callback([&] {
        action = [&] {
            SuiteConfig config;
            for (const auto &name : only) {
                const auto id = parse_identity_id(name);
                if (!id) {
                    throw UsageError("unknown identity id '" + name + "'");
                }
                config.only.push_back(*id);
            }
            if (nmax.given()) {
                config.n_max = nmax.value;
            }
            if (kmin.given()) {
                config.k_min = kmin.value;
            }
            if (kmax.given()) {
                config.k_max = kmax.value;
            }
            config.inject_sign_flip = inject;
            config.threads = threads;
            std::vector<CheckReport> results;
            try {
                results = run_suite(config);
            } catch (const std::invalid_argument &e) {
                throw UsageError(e.what());
            }
            if (report == "json") {
                out << report_json(results, !no_timing).dump(2) << '\n';
            } else {
                out << report_text(results);
            }
            return count_failures(results) == 0 ? exit_ok : exit_check_failed;
        };
    });

    try {
        auto argv = reversed(args);
        app.parse(argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }
    try {
        return action ? action() : exit_usage;
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::domain_error &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
}

} // namespace polycauchy
