#include <polycauchy/identity_suite.hpp>

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <polycauchy/combinatorics.hpp>
#include <polycauchy/poly_cauchy.hpp>
#include <polycauchy/power_series.hpp>
#include <polycauchy/stirling.hpp>

namespace polycauchy
{

namespace
{

constexpr std::array<IdentityInfo, 20> manifest{{
    {IdentityId::T1, "T1",
     "C_n^(k)(x) = sum_l sum_{l_1+..+l_n=l} multinomial(n-1; l_1..l_n, n-1-l) B_{l_1}..B_{l_n} "
     "sum_j (-1)^j C(n-l,j) x^j / (n-l-j+1)^k"},
    {IdentityId::T2, "T2",
     "sum_{m>=j} C(m,j) S1(n,m)/(m-j+1)^k = composition-indexed Bernoulli sum = (-1)^j times the "
     "B_{a-1-l}^(a) sum; j = 0 is the three-way formula for C_n^(k)"},
    {IdentityId::T3, "T3",
     "C_{n+1}^(k)(x) = sum_l S1(n,l) sum_j (-1)^j C(l,j) (x+1)^j/(l-j+2)^k - x C_n^(k)(x+1)"},
    {IdentityId::T4, "T4",
     "C_n^(k)(x) = -x C_{n-1}^(k)(x+1) + (1/n) sum_{l<=n} C(n,l) B_l^(l)(1) "
     "(C_{n-l}^(k-1)(x+1) - C_{n-l}^(k)(x+1)); the l = n summand vanishes"},
    {IdentityId::T5, "T5",
     "sum_l m! C(n,l+m) S1(l+m,m) C_{n-l-m}^(k) = sum_l (m-1)! C(n-1,l+m-1) S1(l+m-1,m-1) "
     "((m-1) C_{n-l-m}^(k)(1) + C_{n-l-m}^(k-1)(1))"},
    {IdentityId::T5_COR, "T5_COR", "C_{n-1}^(k-1)(1) = sum_l (-1)^l l! C(n,l+1) C_{n-l-1}^(k)"},
    {IdentityId::L6, "L6", "C_n^(k) = (1/n) sum_l (-1)^(n-l) (n-l)! C(n,l) (T_l^(1,k-1) - T_l^(1,k))"},
    {IdentityId::L7, "L7",
     "C_n^(k) = sum_{a,l,s} (-1)^s C(m+s-1,s) (n-m)!/(n-m+a-s)! S1(m,a) S1(a+1,l+1) T_{n-m+a-s}^(a,k-l)"},
    {IdentityId::E58_TNUM, "E58_TNUM",
     "T_n^(r,k) as a multinomial convolution of Cauchy numbers equals n! [t^n] (t/log(1+t))^r Lif_k(log(1+t))"},
    {IdentityId::T8, "T8",
     "C_n^(k)(x) = sum_m c_m B_m^(r)(x) with c_m built from Carlitz values beta_a^(r)(-r)"},
    {IdentityId::T8_NORLUND, "T8_NORLUND",
     "the Bernoulli-basis coefficients built from products of Norlund numbers B_a^(a) agree with the "
     "Carlitz route and reconstruct C_n^(k)(x)"},
    {IdentityId::T9, "T9",
     "C_n^(k)(x) = sum_m c_m H_m^(r)(x|lambda) with c_m built from C_{n-m-l}^(k)(a), a = 0..r"},
    {IdentityId::T9_ALT, "T9_ALT",
     "the Frobenius-Euler coefficients built from C(a+b-1,b) (n-m-l)_b C_{n-m-l-b}^(k) agree and reconstruct "
     "C_n^(k)(x)"},
    {IdentityId::T10, "T10", "C_n^(k)(x) = sum_m (-1)^m C(n,m) C_{n-m}^(k) x^(m)"},
    {IdentityId::E39, "E39", "C_n^(k)(x+y) = sum_j (-1)^(n-j) C(n,j) C_j^(k)(x) y^(n-j)"},
    {IdentityId::E62, "E62",
     "(1+t)^m log(1+t)^m d^m/dt^m Lif_k(log(1+t)) = sum_a sum_l S1(m,a) S1(a+1,l+1) Lif_{k-l}(log(1+t)) "
     "log(1+t)^(m-a)"},
    {IdentityId::E67, "E67", "d/dx C_n^(k)(x) = (-1)^n n! sum_{l<n} (-1)^l C_l^(k)(x) / ((n-l) l!)"},
    {IdentityId::E55_LIF1, "E55_LIF1",
     "C_n^(1) = C_n(0) = Cauchy number n! [t^n] t/log(1+t), and Lif_1(t) = (e^t-1)/t"},
    {IdentityId::NORLUND_EQ_CAUCHY, "NORLUND_EQ_CAUCHY",
     "B_l^(l)(1) = C_l, and B_l^(l) read from t/((1+t)log(1+t)) equals l! [t^l] (t/(e^t-1))^l"},
    {IdentityId::ORACLE_EQ26, "ORACLE_EQ26",
     "the Stirling closed form of C_n^(k)(x) equals n! [t^n] Lif_k(log(1+t)) (1+t)^(-x)"},
}};

ExactRational sign(long e)
{
    return e % 2 == 0 ? ExactRational(1) : ExactRational(-1);
}

ExactRational Q(const BigInt &v)
{
    return ExactRational(v);
}

ExactRational Q(long v)
{
    return ExactRational(v);
}

// 1/base^k
ExactRational inv_pow(long base, long k)
{
    return int_pow_rational(static_cast<unsigned long>(base), -k);
}

ExactRational flip(const CheckOptions &opts)
{
    return opts.inject_sign_flip ? ExactRational(-1) : ExactRational(1);
}

std::string render(const std::vector<ExactRational> &v)
{
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i ? ", " : "") + v[i].to_string();
    }
    return out + "]";
}

Param P(std::string name, const ExactRational &v)
{
    return {std::move(name), v};
}

Param P(std::string name, long v)
{
    return {std::move(name), ExactRational(v)};
}

CheckReport report(IdentityId id, GridPoint params, bool ok, const std::string &lhs, const std::string &rhs)
{
    CheckReport r;
    r.id = id;
    r.params = std::move(params);
    r.status = ok ? CheckStatus::pass : CheckStatus::fail;
    if (!ok) {
        r.lhs = lhs;
        r.rhs = rhs;
    }
    return r;
}

template <typename T>
CheckReport compare(IdentityId id, GridPoint params, const T &lhs, const T &rhs)
{
    const bool ok = lhs == rhs;
    if constexpr (std::is_same_v<T, std::vector<ExactRational>>) {
        return report(id, std::move(params), ok, ok ? "" : render(lhs), ok ? "" : render(rhs));
    } else {
        return report(id, std::move(params), ok, ok ? "" : lhs.to_string(), ok ? "" : rhs.to_string());
    }
}

void require(bool cond, const char *what)
{
    if (!cond) {
        throw std::invalid_argument(what);
    }
}

Polynomial reconstruct(const std::vector<ExactRational> &coeffs, const std::vector<Polynomial> &basis,
                       const CheckOptions &opts)
{
    Polynomial acc;
    for (std::size_t m = 0; m < coeffs.size(); ++m) {
        // The top term is the one flipped under mutation; its coefficient is
        // (-1)^n times a nonzero leading factor.
        const ExactRational w = m + 1 == coeffs.size() ? coeffs[m] * flip(opts) : coeffs[m];
        acc += w * basis[m];
    }
    return acc;
}

} // namespace

std::span<const IdentityInfo> identity_manifest()
{
    return manifest;
}

std::string_view identity_name(IdentityId id)
{
    return manifest[static_cast<std::size_t>(id)].name;
}

std::optional<IdentityId> parse_identity_id(std::string_view name)
{
    for (const auto &info : manifest) {
        if (info.name == name) {
            return info.id;
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// SuiteTables

SuiteTables::SuiteTables(const Bounds &bounds)
    : bounds_(bounds), bernoulli_(bounds.n_max, 0, static_cast<long>(bounds.n_max))
{
    require(bounds.k_min <= bounds.k_max, "SuiteTables: empty k range");
    stirling1_table().ensure(bounds.n_max);

    for (long k = bounds.k_min; k <= bounds.k_max; ++k) {
        std::vector<Polynomial> row;
        for (unsigned n = 0; n <= bounds.n_max; ++n) {
            row.push_back(polycauchy::pc_poly(n, k).poly);
        }
        pc_poly_.push_back(std::move(row));
    }

    const auto cgf = cauchy_gf(bounds.n_max);
    cauchy_ = egf_coefficients(cgf);
    for (long k = bounds.k_min; k <= bounds.k_max; ++k) {
        const auto lif = pc_number_gf(k, bounds.n_max);
        for (unsigned r = 0; r <= bounds.t_r_max; ++r) {
            t_number_.push_back(egf_coefficients(pow_int(cgf, r) * lif));
        }
    }

    for (unsigned n = 0; n <= bounds.composition_n_max; ++n) {
        std::vector<ExactRational> row;
        for (unsigned l = 0; n > 0 && l < n; ++l) {
            ExactRational acc;
            for (const auto &comp : weak_compositions(l, n)) {
                ExactRational term = Q(multinomial(n - 1, comp.parts));
                for (unsigned part : comp.parts) {
                    term *= bernoulli_.ordinary(part);
                    if (term.is_zero()) {
                        break;
                    }
                }
                acc += term;
            }
            row.push_back(acc);
        }
        composition_sum_.push_back(std::move(row));
    }
}

Polynomial SuiteTables::pc_poly(unsigned n, long k) const
{
    if (n <= bounds_.n_max && has_k(k)) {
        return pc_poly_[static_cast<std::size_t>(k - bounds_.k_min)][n];
    }
    return polycauchy::pc_poly(n, k).poly;
}

ExactRational SuiteTables::pc_number(unsigned n, long k) const
{
    if (n <= bounds_.n_max && has_k(k)) {
        return pc_poly_[static_cast<std::size_t>(k - bounds_.k_min)][n].coefficient(0);
    }
    return polycauchy::pc_number(n, k);
}

ExactRational SuiteTables::cauchy(unsigned n) const
{
    return n <= bounds_.n_max ? cauchy_[n] : polycauchy::cauchy(n);
}

Polynomial SuiteTables::bernoulli_poly(unsigned n, long r) const
{
    std::vector<ExactRational> c(n + 1);
    for (unsigned j = 0; j <= n; ++j) {
        c[j] = Q(binomial(n, j)) * bernoulli_.higher(n - j, r);
    }
    return Polynomial(std::move(c));
}

ExactRational SuiteTables::t_number(unsigned n, unsigned r, long k) const
{
    if (n <= bounds_.n_max && r <= bounds_.t_r_max && has_k(k)) {
        return t_number_[static_cast<std::size_t>(k - bounds_.k_min) * (bounds_.t_r_max + 1) + r][n];
    }
    return t_number_series(n, r, k);
}

ExactRational SuiteTables::composition_sum(unsigned n, unsigned l) const
{
    require(l < n, "composition_sum needs l < n");
    if (n <= bounds_.composition_n_max) {
        return composition_sum_[n][l];
    }
    ExactRational acc;
    for (const auto &comp : weak_compositions(l, n)) {
        ExactRational term = Q(multinomial(n - 1, comp.parts));
        for (unsigned part : comp.parts) {
            term *= polycauchy::bernoulli(part);
        }
        acc += term;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Checks

CheckReport check_T1(unsigned n, long k, const SuiteTables &tables, const CheckOptions &opts)
{
    require(n >= 1, "T1 needs n >= 1");
    std::vector<ExactRational> c(n + 1);
    for (unsigned l = 0; l < n; ++l) {
        ExactRational term = tables.composition_sum(n, l) * inv_pow(n - l + 1, k);
        c[0] += l == 0 ? term * flip(opts) : term;
    }
    for (unsigned j = 1; j <= n; ++j) {
        for (unsigned l = 0; l + j <= n; ++l) {
            c[j] += sign(j) * Q(binomial(n - l, j)) * tables.composition_sum(n, l) * inv_pow(n - l - j + 1, k);
        }
    }
    return compare(IdentityId::T1, {P("n", n), P("k", k)}, tables.pc_poly(n, k), Polynomial(std::move(c)));
}

CheckReport check_T2(unsigned n, unsigned j, long k, const SuiteTables &tables, const CheckOptions &opts)
{
    require(n >= 1 && j <= n, "T2 needs n >= 1 and j <= n");
    const auto &bern = tables.bernoulli();
    ExactRational stirling_form;
    ExactRational composition_form;
    ExactRational bernoulli_form;
    if (j == 0) {
        for (unsigned m = 0; m <= n; ++m) {
            stirling_form += Q(stirling1(n, m)) * inv_pow(m + 1, k);
        }
        for (unsigned l = 0; l < n; ++l) {
            ExactRational term = tables.composition_sum(n, l) * inv_pow(n - l + 1, k);
            composition_form += l == 0 ? term * flip(opts) : term;
        }
        for (unsigned a = 1; a <= n; ++a) {
            for (unsigned l = 0; l < a; ++l) {
                bernoulli_form += sign(l + 1) / Q(factorial(a)) * Q(binomial(n - 1, a - 1) * binomial(a - 1, l))
                                  * bern.higher(a - 1 - l, a) * inv_pow(l + 2, k);
            }
        }
        bernoulli_form *= sign(n) * Q(factorial(n));
    } else {
        for (unsigned m = j; m <= n; ++m) {
            stirling_form += Q(binomial(m, j) * stirling1(n, m)) * inv_pow(m - j + 1, k);
        }
        for (unsigned l = 0; l + j <= n; ++l) {
            ExactRational term = tables.composition_sum(n, l) * Q(binomial(n - l, j)) * inv_pow(n - l - j + 1, k);
            composition_form += l == 0 ? term * flip(opts) : term;
        }
        for (unsigned a = j; a <= n; ++a) {
            for (unsigned l = j - 1; l < a; ++l) {
                bernoulli_form += sign(l + 1 - j) / Q(factorial(a))
                                  * Q(binomial(n - 1, a - 1) * binomial(a - 1, l) * binomial(l + 1, j))
                                  * bern.higher(a - 1 - l, a) * inv_pow(l + 2 - j, k);
            }
        }
        // The B_{a-1-l}^(a) sum is the full x^j coefficient, so it carries
        // the (-1)^j that the other two forms leave out.
        bernoulli_form *= sign(n) * Q(factorial(n)) * sign(j);
    }
    const bool ok = stirling_form == composition_form && stirling_form == bernoulli_form;
    return report(IdentityId::T2, {P("n", n), P("j", j), P("k", k)}, ok, stirling_form.to_string(),
                  composition_form.to_string() + " | " + bernoulli_form.to_string());
}

CheckReport check_T3(unsigned n, long k, const SuiteTables &tables, const CheckOptions &opts)
{
    const Polynomial x_plus_1{1, 1};
    Polynomial rhs;
    for (unsigned l = 0; l <= n; ++l) {
        const BigInt s = stirling1(n, l);
        if (s == 0) {
            continue;
        }
        Polynomial inner;
        Polynomial power(1);
        for (unsigned j = 0; j <= l; ++j) {
            inner += (sign(j) * Q(binomial(l, j)) * inv_pow(l - j + 2, k)) * power;
            power *= x_plus_1;
        }
        rhs += Q(s) * inner;
    }
    rhs -= flip(opts) * (Polynomial::x() * tables.pc_poly(n, k).shifted(1));
    return compare(IdentityId::T3, {P("n", n), P("k", k)}, tables.pc_poly(n + 1, k), rhs);
}

CheckReport check_T4(unsigned n, long k, const SuiteTables &tables, const CheckOptions &opts)
{
    require(n >= 1, "T4 needs n >= 1");
    Polynomial sum;
    Polynomial last;
    for (unsigned l = 0; l <= n; ++l) {
        const ExactRational b = tables.bernoulli_poly(l, l)(1);
        Polynomial term = (Q(binomial(n, l)) * b)
                          * (tables.pc_poly(n - l, k - 1).shifted(1) - tables.pc_poly(n - l, k).shifted(1));
        if (l == n) {
            last = term;
        }
        sum += term;
    }
    Polynomial rhs = ExactRational(1, n) * sum - flip(opts) * (Polynomial::x() * tables.pc_poly(n - 1, k).shifted(1));
    const Polynomial lhs = tables.pc_poly(n, k);
    GridPoint params{P("n", n), P("k", k)};
    if (!last.is_zero()) {
        return report(IdentityId::T4, std::move(params), false, lhs.to_string(),
                      rhs.to_string() + " (l = n summand is " + last.to_string() + ", expected 0)");
    }
    return compare(IdentityId::T4, std::move(params), lhs, rhs);
}

CheckReport check_T5(unsigned n, unsigned m, long k, const SuiteTables &tables, const CheckOptions &opts)
{
    require(m >= 1 && m <= n, "T5 needs 1 <= m <= n");
    ExactRational lhs;
    ExactRational rhs;
    for (unsigned l = 0; l + m <= n; ++l) {
        lhs += Q(factorial(m) * binomial(n, l + m) * stirling1(l + m, m)) * tables.pc_number(n - l - m, k);
        const ExactRational bracket = Q(static_cast<long>(m) - 1) * tables.pc_poly(n - l - m, k)(1)
                                      + tables.pc_poly(n - l - m, k - 1)(1);
        const ExactRational term = Q(factorial(m - 1) * binomial(n - 1, l + m - 1) * stirling1(l + m - 1, m - 1)) * bracket;
        rhs += l == 0 ? term * flip(opts) : term;
    }
    return compare(IdentityId::T5, {P("n", n), P("m", m), P("k", k)}, lhs, rhs);
}

CheckReport check_T5_COR(unsigned n, long k, const SuiteTables &tables, const CheckOptions &opts)
{
    require(n >= 1, "T5_COR needs n >= 1");
    const ExactRational lhs = tables.pc_poly(n - 1, k - 1)(1);
    ExactRational rhs;
    for (unsigned l = 0; l < n; ++l) {
        const ExactRational term = sign(l) * Q(factorial(l) * binomial(n, l + 1)) * tables.pc_number(n - l - 1, k);
        rhs += l == 0 ? term * flip(opts) : term;
    }
    return compare(IdentityId::T5_COR, {P("n", n), P("k", k)}, lhs, rhs);
}

CheckReport check_L6(unsigned n, long k, const SuiteTables &tables, const CheckOptions &opts)
{
    require(n >= 1, "L6 needs n >= 1");
    ExactRational rhs;
    for (unsigned l = 0; l <= n; ++l) {
        const ExactRational term = sign(n - l) * Q(factorial(n - l) * binomial(n, l))
                                   * (tables.t_number(l, 1, k - 1) - tables.t_number(l, 1, k));
        rhs += l == n ? term * flip(opts) : term;
    }
    rhs *= ExactRational(1, n);
    return compare(IdentityId::L6, {P("n", n), P("k", k)}, tables.pc_number(n, k), rhs);
}

CheckReport check_L7(unsigned n, unsigned m, long k, const SuiteTables &tables, const CheckOptions &opts)
{
    require(m >= 1 && m <= n, "L7 needs 1 <= m <= n");
    ExactRational rhs;
    const BigInt nm_fact = factorial(n - m);
    for (unsigned a = 1; a <= m; ++a) {
        for (unsigned l = 0; l <= a; ++l) {
            const BigInt st = stirling1(m, a) * stirling1(a + 1, l + 1);
            if (st == 0) {
                continue;
            }
            for (unsigned s_idx = 0; s_idx <= n - m + a; ++s_idx) {
                const unsigned idx = n - m + a - s_idx;
                ExactRational term = sign(s_idx) * Q(binomial(m + s_idx - 1, s_idx) * st) * Q(nm_fact)
                                     / Q(factorial(idx)) * tables.t_number(idx, a, k - static_cast<long>(l));
                if (a == 1 && l == 0 && s_idx == 0) {
                    term *= flip(opts);
                }
                rhs += term;
            }
        }
    }
    return compare(IdentityId::L7, {P("n", n), P("m", m), P("k", k)}, tables.pc_number(n, k), rhs);
}

CheckReport check_E58_TNUM(unsigned n, unsigned r, long k, const SuiteTables &tables, const CheckOptions &opts)
{
    const ExactRational lhs = t_number(n, r, k);
    const ExactRational rhs = tables.t_number(n, r, k) * flip(opts);
    return compare(IdentityId::E58_TNUM, {P("n", n), P("r", r), P("k", k)}, lhs, rhs);
}

CheckReport check_T8(unsigned n, unsigned r, long k, bool norlund_route, const SuiteTables &tables,
                     const CheckOptions &opts)
{
    const IdentityId id = norlund_route ? IdentityId::T8_NORLUND : IdentityId::T8;
    GridPoint params{P("n", n), P("r", r), P("k", k)};
    const auto coeffs = norlund_route ? expand_bernoulli_basis_norlund(n, k, r) : expand_bernoulli_basis(n, k, r);
    if (norlund_route) {
        const auto carlitz = expand_bernoulli_basis(n, k, r);
        if (carlitz != coeffs) {
            return report(id, std::move(params), false, render(carlitz), render(coeffs));
        }
    }
    std::vector<Polynomial> basis;
    for (unsigned m = 0; m <= n; ++m) {
        basis.push_back(tables.bernoulli_poly(m, r));
    }
    return compare(id, std::move(params), tables.pc_poly(n, k), reconstruct(coeffs, basis, opts));
}

CheckReport check_T9(unsigned n, unsigned r, long k, const ExactRational &lambda, bool alternative_route,
                     const SuiteTables &tables, const CheckOptions &opts)
{
    const IdentityId id = alternative_route ? IdentityId::T9_ALT : IdentityId::T9;
    GridPoint params{P("n", n), P("r", r), P("k", k), P("lambda", lambda)};
    const auto coeffs = alternative_route ? expand_frobenius_basis_alt(n, k, r, lambda)
                                          : expand_frobenius_basis(n, k, r, lambda);
    if (alternative_route) {
        const auto primary = expand_frobenius_basis(n, k, r, lambda);
        if (primary != coeffs) {
            return report(id, std::move(params), false, render(primary), render(coeffs));
        }
    }
    std::vector<Polynomial> basis;
    for (unsigned m = 0; m <= n; ++m) {
        basis.push_back(frobenius_euler_poly(m, r, lambda));
    }
    return compare(id, std::move(params), tables.pc_poly(n, k), reconstruct(coeffs, basis, opts));
}

CheckReport check_T10(unsigned n, long k, const SuiteTables &tables, const CheckOptions &opts)
{
    const auto coeffs = expand_rising_basis(n, k);
    std::vector<Polynomial> basis;
    for (unsigned m = 0; m <= n; ++m) {
        basis.push_back(rising_factorial_poly(m));
    }
    return compare(IdentityId::T10, {P("n", n), P("k", k)}, tables.pc_poly(n, k), reconstruct(coeffs, basis, opts));
}

CheckReport check_E39(unsigned n, long k, const ExactRational &y, const SuiteTables &tables,
                      const CheckOptions &opts)
{
    Polynomial rhs;
    for (unsigned j = 0; j <= n; ++j) {
        ExactRational w = sign(n - j) * Q(binomial(n, j)) * rising_factorial(y, n - j);
        if (j == n) {
            w *= flip(opts);
        }
        rhs += w * tables.pc_poly(j, k);
    }
    return compare(IdentityId::E39, {P("n", n), P("k", k), P("y", y)}, tables.pc_poly(n, k).shifted(y), rhs);
}

CheckReport check_E62(unsigned m, long k, unsigned order, const SuiteTables &, const CheckOptions &opts)
{
    require(m >= 1 && order >= m + 4, "E62 needs m >= 1 and order >= m + 4");
    const auto log1p = log1p_series(order);
    auto derived = pc_number_gf(k, order);
    for (unsigned i = 0; i < m; ++i) {
        derived = derivative_t(derived);
    }
    const auto one_plus_t = ScalarSeries::one(order) + ScalarSeries::variable(order);
    const auto lhs = pow_int(one_plus_t, m) * pow_int(log1p, m) * derived;

    auto rhs = ScalarSeries::zero(order);
    for (unsigned a = 1; a <= m; ++a) {
        const auto log_power = pow_int(log1p, m - a);
        for (unsigned l = 0; l <= a; ++l) {
            ExactRational c = Q(stirling1(m, a) * stirling1(a + 1, l + 1));
            if (c.is_zero()) {
                continue;
            }
            if (a == m && l == 0) {
                c *= flip(opts);
            }
            rhs += pc_number_gf(k - static_cast<long>(l), order) * log_power * c;
        }
    }
    return compare(IdentityId::E62, {P("m", m), P("k", k), P("N", order)}, lhs, rhs.truncated(order - m));
}

CheckReport check_E67(unsigned n, long k, const SuiteTables &tables, const CheckOptions &opts)
{
    require(n >= 1, "E67 needs n >= 1");
    Polynomial sum;
    for (unsigned l = 0; l < n; ++l) {
        ExactRational w = sign(l) / (Q(static_cast<long>(n - l)) * Q(factorial(l)));
        if (l == 0) {
            w *= flip(opts);
        }
        sum += w * tables.pc_poly(l, k);
    }
    const Polynomial rhs = (sign(n) * Q(factorial(n))) * sum;
    return compare(IdentityId::E67, {P("n", n), P("k", k)}, tables.pc_poly(n, k).derivative(), rhs);
}

CheckReport check_E55_LIF1(unsigned n, const SuiteTables &tables, const CheckOptions &opts)
{
    const ExactRational number = tables.pc_number(n, 1);
    const ExactRational at_zero = tables.pc_poly(n, 1)(0);
    const ExactRational cauchy_number = tables.cauchy(n) * flip(opts);
    const ExactRational lif = lif_series(1, n)[n];
    const auto t = ScalarSeries::variable(n + 1);
    const ExactRational shifted_exp = div_with_valuation(expm1_series(n + 1), t)[n];
    const bool ok = number == cauchy_number && at_zero == cauchy_number && lif == shifted_exp;
    return report(IdentityId::E55_LIF1, {P("n", n)}, ok,
                  "C_n^(1)=" + number.to_string() + ", C_n^(1)(0)=" + at_zero.to_string() + ", [t^n]Lif_1="
                      + lif.to_string(),
                  "C_n=" + cauchy_number.to_string() + ", [t^n](e^t-1)/t=" + shifted_exp.to_string());
}

CheckReport check_NORLUND_EQ_CAUCHY(unsigned l, const SuiteTables &tables, const CheckOptions &opts)
{
    const ExactRational at_one = tables.bernoulli_poly(l, l)(1);
    const ExactRational cauchy_number = tables.cauchy(l) * flip(opts);
    const ExactRational from_log = norlund(l);
    const ExactRational from_power = tables.bernoulli().higher(l, l);
    const bool ok = at_one == cauchy_number && from_log == from_power;
    return report(IdentityId::NORLUND_EQ_CAUCHY, {P("l", l)}, ok,
                  "B_l^(l)(1)=" + at_one.to_string() + ", B_l^(l) via t/((1+t)log(1+t))=" + from_log.to_string(),
                  "C_l=" + cauchy_number.to_string() + ", B_l^(l) via (t/(e^t-1))^l=" + from_power.to_string());
}

CheckReport check_ORACLE_EQ26(unsigned n, long k, const SuiteTables &tables, const CheckOptions &opts)
{
    Polynomial oracle = pc_poly_oracle(n, k);
    if (opts.inject_sign_flip) {
        const ExactRational lead = oracle.leading_coefficient();
        oracle -= Polynomial::monomial(lead + lead, n);
    }
    return compare(IdentityId::ORACLE_EQ26, {P("n", n), P("k", k)}, tables.pc_poly(n, k), oracle);
}

// ---------------------------------------------------------------------------
// Grid and runner

namespace
{

const ExactRational &param(const GridPoint &point, std::string_view name)
{
    for (const auto &p : point) {
        if (p.name == name) {
            return p.value;
        }
    }
    throw std::invalid_argument("grid point lacks parameter '" + std::string(name) + "'");
}

unsigned uparam(const GridPoint &point, std::string_view name)
{
    const auto &v = param(point, name);
    if (!v.is_integer() || v.sign() < 0) {
        throw std::invalid_argument("parameter '" + std::string(name) + "' must be a natural number");
    }
    return static_cast<unsigned>(v.numerator().get_ui());
}

long sparam(const GridPoint &point, std::string_view name)
{
    const auto &v = param(point, name);
    if (!v.is_integer()) {
        throw std::invalid_argument("parameter '" + std::string(name) + "' must be an integer");
    }
    return v.numerator().get_si();
}

constexpr long kMaxAbsK = 16;
constexpr long kMaxN = 64;
// Weak-composition sums grow like C(2n, n); beyond this they stop being
// desk-scale.
constexpr long kMaxCompositionN = 10;

const std::array<ExactRational, 3> &lambda_grid()
{
    static const std::array<ExactRational, 3> grid{ExactRational(2), ExactRational(-1), ExactRational(1, 2)};
    return grid;
}

bool less_point(const GridPoint &a, const GridPoint &b)
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](const Param &x, const Param &y) { return x.value < y.value; });
}

} // namespace

CheckReport run_check(IdentityId id, const GridPoint &p, const SuiteTables &tables, const CheckOptions &opts)
{
    switch (id) {
    case IdentityId::T1:
        return check_T1(uparam(p, "n"), sparam(p, "k"), tables, opts);
    case IdentityId::T2:
        return check_T2(uparam(p, "n"), uparam(p, "j"), sparam(p, "k"), tables, opts);
    case IdentityId::T3:
        return check_T3(uparam(p, "n"), sparam(p, "k"), tables, opts);
    case IdentityId::T4:
        return check_T4(uparam(p, "n"), sparam(p, "k"), tables, opts);
    case IdentityId::T5:
        return check_T5(uparam(p, "n"), uparam(p, "m"), sparam(p, "k"), tables, opts);
    case IdentityId::T5_COR:
        return check_T5_COR(uparam(p, "n"), sparam(p, "k"), tables, opts);
    case IdentityId::L6:
        return check_L6(uparam(p, "n"), sparam(p, "k"), tables, opts);
    case IdentityId::L7:
        return check_L7(uparam(p, "n"), uparam(p, "m"), sparam(p, "k"), tables, opts);
    case IdentityId::E58_TNUM:
        return check_E58_TNUM(uparam(p, "n"), uparam(p, "r"), sparam(p, "k"), tables, opts);
    case IdentityId::T8:
    case IdentityId::T8_NORLUND:
        return check_T8(uparam(p, "n"), uparam(p, "r"), sparam(p, "k"), id == IdentityId::T8_NORLUND, tables, opts);
    case IdentityId::T9:
    case IdentityId::T9_ALT:
        return check_T9(uparam(p, "n"), uparam(p, "r"), sparam(p, "k"), param(p, "lambda"), id == IdentityId::T9_ALT,
                        tables, opts);
    case IdentityId::T10:
        return check_T10(uparam(p, "n"), sparam(p, "k"), tables, opts);
    case IdentityId::E39:
        return check_E39(uparam(p, "n"), sparam(p, "k"), param(p, "y"), tables, opts);
    case IdentityId::E62:
        return check_E62(uparam(p, "m"), sparam(p, "k"), uparam(p, "N"), tables, opts);
    case IdentityId::E67:
        return check_E67(uparam(p, "n"), sparam(p, "k"), tables, opts);
    case IdentityId::E55_LIF1:
        return check_E55_LIF1(uparam(p, "n"), tables, opts);
    case IdentityId::NORLUND_EQ_CAUCHY:
        return check_NORLUND_EQ_CAUCHY(uparam(p, "l"), tables, opts);
    case IdentityId::ORACLE_EQ26:
        return check_ORACLE_EQ26(uparam(p, "n"), sparam(p, "k"), tables, opts);
    }
    throw std::invalid_argument("unknown identity id");
}

std::vector<GridTask> build_grid(const SuiteConfig &config)
{
    if (config.n_max && (*config.n_max < 0 || *config.n_max > kMaxN)) {
        throw std::invalid_argument("nmax must lie in [0, " + std::to_string(kMaxN) + "]");
    }
    for (const auto &k : {config.k_min, config.k_max}) {
        if (k && (*k < -kMaxAbsK || *k > kMaxAbsK)) {
            throw std::invalid_argument("k bounds must satisfy |k| <= " + std::to_string(kMaxAbsK));
        }
    }

    std::vector<IdentityId> ids = config.only;
    if (ids.empty()) {
        for (const auto &info : manifest) {
            ids.push_back(info.id);
        }
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

    std::vector<GridTask> tasks;
    for (IdentityId id : ids) {
        auto upper = [&](long fallback) { return config.n_max.value_or(fallback); };
        long k_lo = -2;
        long k_hi = 2;
        if (id == IdentityId::T10 || id == IdentityId::ORACLE_EQ26) {
            k_lo = -3;
            k_hi = 3;
        }
        k_lo = config.k_min.value_or(k_lo);
        k_hi = config.k_max.value_or(k_hi);
        const bool has_k = id != IdentityId::E55_LIF1 && id != IdentityId::NORLUND_EQ_CAUCHY;
        if (has_k && k_lo > k_hi) {
            throw std::invalid_argument("empty k range [" + std::to_string(k_lo) + ", " + std::to_string(k_hi) + "]");
        }
        auto emit = [&](GridPoint p) { tasks.push_back({id, std::move(p)}); };

        switch (id) {
        case IdentityId::T1:
        case IdentityId::T2: {
            const long hi = upper(8);
            if (hi > kMaxCompositionN) {
                throw std::invalid_argument(std::string(identity_name(id)) + " is limited to n <= "
                                            + std::to_string(kMaxCompositionN));
            }
            for (long n = 1; n <= hi; ++n) {
                for (long k = k_lo; k <= k_hi; ++k) {
                    if (id == IdentityId::T1) {
                        emit({P("n", n), P("k", k)});
                        continue;
                    }
                    for (long j = 0; j <= n; ++j) {
                        emit({P("n", n), P("j", j), P("k", k)});
                    }
                }
            }
            break;
        }
        case IdentityId::T3:
        case IdentityId::T4:
        case IdentityId::T5_COR:
        case IdentityId::L6: {
            const long lo = id == IdentityId::T3 ? 0 : 1;
            for (long n = lo; n <= upper(12); ++n) {
                for (long k = k_lo; k <= k_hi; ++k) {
                    emit({P("n", n), P("k", k)});
                }
            }
            break;
        }
        case IdentityId::T5:
            for (long n = 1; n <= upper(12); ++n) {
                for (long m = 1; m <= n; ++m) {
                    for (long k = k_lo; k <= k_hi; ++k) {
                        emit({P("n", n), P("m", m), P("k", k)});
                    }
                }
            }
            break;
        case IdentityId::L7:
            for (long n = 1; n <= upper(10); ++n) {
                for (long m = 1; m <= std::min(n, 4L); ++m) {
                    for (long k = k_lo; k <= k_hi; ++k) {
                        emit({P("n", n), P("m", m), P("k", k)});
                    }
                }
            }
            break;
        case IdentityId::E58_TNUM:
        case IdentityId::T8:
        case IdentityId::T8_NORLUND:
            for (long n = 0; n <= upper(10); ++n) {
                for (long r = 0; r <= 3; ++r) {
                    for (long k = k_lo; k <= k_hi; ++k) {
                        emit({P("n", n), P("r", r), P("k", k)});
                    }
                }
            }
            break;
        case IdentityId::T9:
        case IdentityId::T9_ALT:
            for (long n = 0; n <= upper(10); ++n) {
                for (long r = 0; r <= 3; ++r) {
                    for (long k = k_lo; k <= k_hi; ++k) {
                        for (const auto &lambda : lambda_grid()) {
                            emit({P("n", n), P("r", r), P("k", k), P("lambda", lambda)});
                        }
                    }
                }
            }
            break;
        case IdentityId::T10:
        case IdentityId::E67: {
            const long lo = id == IdentityId::E67 ? 1 : 0;
            for (long n = lo; n <= upper(15); ++n) {
                for (long k = k_lo; k <= k_hi; ++k) {
                    emit({P("n", n), P("k", k)});
                }
            }
            break;
        }
        case IdentityId::E39:
            for (long n = 0; n <= upper(12); ++n) {
                for (long k = k_lo; k <= k_hi; ++k) {
                    for (long y = 0; y <= n; ++y) {
                        emit({P("n", n), P("k", k), P("y", y)});
                    }
                }
            }
            break;
        case IdentityId::E62:
            for (long m = 1; m <= upper(5); ++m) {
                for (long k = k_lo; k <= k_hi; ++k) {
                    emit({P("m", m), P("k", k), P("N", std::max(12L, m + 4))});
                }
            }
            break;
        case IdentityId::E55_LIF1:
            for (long n = 0; n <= upper(32); ++n) {
                emit({P("n", n)});
            }
            break;
        case IdentityId::NORLUND_EQ_CAUCHY:
            for (long l = 0; l <= upper(16); ++l) {
                emit({P("l", l)});
            }
            break;
        case IdentityId::ORACLE_EQ26:
            for (long n = 0; n <= upper(20); ++n) {
                for (long k = k_lo; k <= k_hi; ++k) {
                    emit({P("n", n), P("k", k)});
                }
            }
            break;
        }
    }
    std::stable_sort(tasks.begin(), tasks.end(), [](const GridTask &a, const GridTask &b) {
        if (a.id != b.id) {
            return a.id < b.id;
        }
        return less_point(a.point, b.point);
    });
    return tasks;
}

SuiteTables::Bounds table_bounds_for(std::span<const GridTask> tasks)
{
    SuiteTables::Bounds b;
    bool any_k = false;
    long k_lo = 0;
    long k_hi = 0;
    for (const auto &task : tasks) {
        for (const auto &p : task.point) {
            if (p.name == "n" || p.name == "l" || p.name == "m") {
                b.n_max = std::max(b.n_max, static_cast<unsigned>(p.value.numerator().get_ui()) + 1);
            } else if (p.name == "k") {
                const long k = p.value.numerator().get_si();
                k_lo = any_k ? std::min(k_lo, k) : k;
                k_hi = any_k ? std::max(k_hi, k) : k;
                any_k = true;
            }
        }
        if (task.id == IdentityId::T1 || task.id == IdentityId::T2) {
            b.composition_n_max = std::max(b.composition_n_max, uparam(task.point, "n"));
        } else if (task.id == IdentityId::L6) {
            b.t_r_max = std::max(b.t_r_max, 1U);
        } else if (task.id == IdentityId::L7) {
            b.t_r_max = std::max(b.t_r_max, uparam(task.point, "m"));
        } else if (task.id == IdentityId::E58_TNUM) {
            b.t_r_max = std::max(b.t_r_max, uparam(task.point, "r"));
        }
    }
    // Checks reach down to index k - 5 (shifted polylog indices) and need
    // the k = 1 family for Cauchy anchors.
    b.k_min = std::min(k_lo - 5, 1L);
    b.k_max = std::max(k_hi, 1L);
    return b;
}

std::vector<CheckReport> run_suite(const SuiteConfig &config)
{
    const auto tasks = build_grid(config);
    if (tasks.empty()) {
        return {};
    }
    const SuiteTables tables(table_bounds_for(tasks));
    const CheckOptions opts{config.inject_sign_flip};

    std::vector<CheckReport> results(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) {
            const auto start = std::chrono::steady_clock::now();
            CheckReport r;
            try {
                r = run_check(tasks[i].id, tasks[i].point, tables, opts);
            } catch (const std::exception &e) {
                r.id = tasks[i].id;
                r.params = tasks[i].point;
                r.status = CheckStatus::fail;
                r.lhs = "exception";
                r.rhs = e.what();
            }
            r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            results[i] = std::move(r);
        }
    };
    unsigned threads = config.threads ? config.threads : std::max(1U, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(tasks.size()));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < threads; ++t) {
            pool.emplace_back(worker);
        }
        worker();
    }
    return results;
}

std::size_t count_failures(std::span<const CheckReport> reports)
{
    return static_cast<std::size_t>(std::count_if(reports.begin(), reports.end(),
                                                  [](const CheckReport &r) { return r.status == CheckStatus::fail; }));
}

nlohmann::json report_json(std::span<const CheckReport> reports, bool include_timing)
{
    auto records = nlohmann::json::array();
    for (const auto &r : reports) {
        nlohmann::json params = nlohmann::json::object();
        for (const auto &p : r.params) {
            if (p.name == "lambda" || !p.value.is_integer()) {
                params[p.name] = p.value.to_string();
            } else {
                params[p.name] = p.value.numerator().get_si();
            }
        }
        nlohmann::json rec;
        rec["id"] = std::string(identity_name(r.id));
        rec["params"] = std::move(params);
        rec["status"] = r.status == CheckStatus::pass ? "pass" : "fail";
        rec["lhs"] = r.lhs ? nlohmann::json(*r.lhs) : nlohmann::json(nullptr);
        rec["rhs"] = r.rhs ? nlohmann::json(*r.rhs) : nlohmann::json(nullptr);
        rec["ms"] = include_timing ? r.ms : 0.0;
        records.push_back(std::move(rec));
    }
    nlohmann::json out;
    out["total"] = reports.size();
    out["failed"] = count_failures(reports);
    out["records"] = std::move(records);
    return out;
}

std::string report_text(std::span<const CheckReport> reports)
{
    std::ostringstream os;
    for (const auto &r : reports) {
        os << (r.status == CheckStatus::pass ? "PASS " : "FAIL ") << identity_name(r.id);
        for (const auto &p : r.params) {
            os << ' ' << p.name << '=' << p.value;
        }
        if (r.status == CheckStatus::fail) {
            os << "\n    lhs: " << r.lhs.value_or("") << "\n    rhs: " << r.rhs.value_or("");
        }
        os << '\n';
    }
    os << "total: " << reports.size() << ", failed: " << count_failures(reports) << '\n';
    return os.str();
}

} // namespace polycauchy
