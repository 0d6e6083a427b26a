#include "pie/identities.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <future>
#include <map>
#include <stdexcept>

#include "pie/errors.hpp"
#include "pie/generating_functions.hpp"
#include "pie/involution.hpp"
#include "pie/partition.hpp"

namespace pie {

namespace {

struct Entry {
    IdentityId id;
    std::string_view tag;
    bool numeric;
};

constexpr std::array<Entry, 18> kRegistry{{
    {IdentityId::BsBasic, "BS_BASIC", false},
    {IdentityId::BsInt, "BS_INT", false},
    {IdentityId::BsOneVar, "BS_ONEVAR", true},
    {IdentityId::UchimuraTriple, "UCHIMURA_TRIPLE", false},
    {IdentityId::Entry4, "ENTRY4", false},
    {IdentityId::DilcherCm, "DILCHER_CM", false},
    {IdentityId::Eq113, "EQ_1_13", false},
    {IdentityId::Thm12, "THM_1_2", false},
    {IdentityId::Thm22Exp, "THM_2_2_EXP", false},
    {IdentityId::Thm22Bell, "THM_2_2_BELL", false},
    {IdentityId::Thm23, "THM_2_3", true},
    {IdentityId::Cor24, "COR_2_4", true},
    {IdentityId::Cor25, "COR_2_5", false},
    {IdentityId::Thm26, "THM_2_6", true},
    {IdentityId::Cor27, "COR_2_7", false},
    {IdentityId::AglPti, "AGL_PTI", false},
    {IdentityId::AglScaled, "AGL_SCALED", false},
    {IdentityId::ClassSum, "CLASS_SUM", false},
}};

constexpr std::array<IdentityId, kRegistry.size()> kIds = [] {
    std::array<IdentityId, kRegistry.size()> ids{};
    for (std::size_t i = 0; i < kRegistry.size(); ++i)
        ids[i] = kRegistry[i].id;
    return ids;
}();

const Entry& entry(IdentityId id)
{
    for (const auto& e : kRegistry)
        if (e.id == id)
            return e;
    throw std::invalid_argument("unregistered identity");
}

// ---------------------------------------------------------------------------
// Partition data shared by several identities.

struct DistinctRecord {
    int smallest;
    int largest;
    int sign;  // (-1)^{#-1}
};

std::vector<DistinctRecord> distinct_records(int n)
{
    std::vector<DistinctRecord> out;
    for (const auto& p : enumerate_distinct(n)) {
        auto s = stats(p);
        out.push_back({s.smallest, s.largest, s.num_parts % 2 ? 1 : -1});
    }
    return out;
}

// (largest part, number of distinct sizes) -> count over P(n).
using ShapeHistogram = std::map<std::pair<int, int>, std::uint64_t>;

ShapeHistogram shape_histogram(int n)
{
    ShapeHistogram h;
    for (const auto& p : enumerate_partitions(n)) {
        auto s = stats(p);
        ++h[{s.largest, s.num_distinct}];
    }
    return h;
}

mpz_class ipow(unsigned long base, unsigned e)
{
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

// Coefficient accumulator indexed by the power of c.
class CoeffAccumulator {
public:
    explicit CoeffAccumulator(int max_exponent) : coeffs_(static_cast<std::size_t>(max_exponent) + 1, 0) {}

    void add(int exponent, const mpz_class& value) { coeffs_.at(static_cast<std::size_t>(exponent)) += value; }

    [[nodiscard]] CPolynomial polynomial() const
    {
        CPolynomial p;
        for (std::size_t e = 0; e < coeffs_.size(); ++e)
            p.add_term(static_cast<unsigned>(e), mpq_class(coeffs_[e]));
        return p;
    }

private:
    std::vector<mpz_class> coeffs_;
};

Complex cpow(Complex c, int e)
{
    return std::pow(c, e);
}

// ---------------------------------------------------------------------------
// One-variable divisor identity

CPolynomial thm21_lhs(const std::vector<DistinctRecord>& d, int n, unsigned z)
{
    CoeffAccumulator acc(n);
    for (const auto& r : d)
        for (int j = 1; j <= r.smallest; ++j) {
            const int e = r.largest - r.smallest + j;
            acc.add(e, ipow(static_cast<unsigned long>(e), z) * r.sign);
        }
    return acc.polynomial();
}

NumericSides thm21_numeric(const std::vector<DistinctRecord>& d, int n, NumericWeight w)
{
    NumericSides out{};
    for (const auto& r : d)
        for (int j = 1; j <= r.smallest; ++j) {
            const int e = r.largest - r.smallest + j;
            const Complex term = static_cast<double>(r.sign) * complex_power(static_cast<std::uint64_t>(e), w.z) * cpow(w.c, e);
            out.lhs += term;
            out.magnitude += std::abs(term);
        }
    for (auto dv : divisors(static_cast<std::uint64_t>(n))) {
        const Complex term = complex_power(dv, w.z) * cpow(w.c, static_cast<int>(dv));
        out.rhs += term;
        out.magnitude += std::abs(term);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Smallest-part power identity

CPolynomial thm23_lhs(const std::vector<DistinctRecord>& d, int n, unsigned k)
{
    CoeffAccumulator acc(n);
    for (const auto& r : d)
        acc.add(r.smallest, ipow(static_cast<unsigned long>(r.smallest), k) * r.sign);
    return acc.polynomial();
}

CPolynomial thm23_rhs(const ShapeHistogram& h, int n, unsigned k)
{
    CoeffAccumulator acc(n);
    for (const auto& [shape, count] : h) {
        const auto [largest, nu] = shape;
        for (int j = 0; j <= nu; ++j) {
            const int base = largest - j;
            if (base == 0)
                continue;  // limiting value of 0^k
            mpz_class term = binomial(static_cast<unsigned>(nu), static_cast<unsigned>(j)) *
                             ipow(static_cast<unsigned long>(base), k) * mpz_class(static_cast<unsigned long>(count));
            if (j % 2)
                term = -term;
            acc.add(base, term);
        }
    }
    return acc.polynomial();
}

NumericSides thm23_numeric(const std::vector<DistinctRecord>& d, const ShapeHistogram& h, NumericWeight w)
{
    NumericSides out{};
    for (const auto& r : d) {
        const Complex term =
            static_cast<double>(r.sign) * complex_power(static_cast<std::uint64_t>(r.smallest), w.z) * cpow(w.c, r.smallest);
        out.lhs += term;
        out.magnitude += std::abs(term);
    }
    for (const auto& [shape, count] : h) {
        const auto [largest, nu] = shape;
        for (int j = 0; j <= nu; ++j) {
            const int base = largest - j;
            if (base == 0)
                continue;
            double weight = binomial(static_cast<unsigned>(nu), static_cast<unsigned>(j)).get_d() * static_cast<double>(count);
            if (j % 2)
                weight = -weight;
            const Complex term = weight * complex_power(static_cast<std::uint64_t>(base), w.z) * cpow(w.c, base);
            out.rhs += term;
            out.magnitude += std::abs(term);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Truncated power-sum identity

CPolynomial thm26_lhs(const std::vector<DistinctRecord>& d, int n, unsigned k)
{
    CoeffAccumulator acc(n);
    for (const auto& r : d)
        for (int j = 1; j <= r.smallest; ++j)
            acc.add(j, ipow(static_cast<unsigned long>(j), k) * r.sign);
    return acc.polynomial();
}

CPolynomial thm26_rhs(const ShapeHistogram& h, int n, unsigned k)
{
    CoeffAccumulator acc(n);
    for (const auto& [shape, count] : h) {
        const auto [largest, nu] = shape;
        if (nu < 2)
            continue;
        for (int j = 0; j <= nu - 1; ++j) {
            const int base = largest - j;
            mpz_class term = binomial(static_cast<unsigned>(nu - 1), static_cast<unsigned>(j)) *
                             ipow(static_cast<unsigned long>(base), k) * mpz_class(static_cast<unsigned long>(count));
            if (j % 2)
                term = -term;
            acc.add(base, term);
        }
    }
    return acc.polynomial() + sigma_zc_exact(k, static_cast<std::uint64_t>(n));
}

NumericSides thm26_numeric(const std::vector<DistinctRecord>& d, const ShapeHistogram& h, int n, NumericWeight w)
{
    NumericSides out{};
    for (const auto& r : d)
        for (int j = 1; j <= r.smallest; ++j) {
            const Complex term = static_cast<double>(r.sign) * complex_power(static_cast<std::uint64_t>(j), w.z) * cpow(w.c, j);
            out.lhs += term;
            out.magnitude += std::abs(term);
        }
    for (const auto& [shape, count] : h) {
        const auto [largest, nu] = shape;
        if (nu < 2)
            continue;
        for (int j = 0; j <= nu - 1; ++j) {
            const int base = largest - j;
            double weight =
                binomial(static_cast<unsigned>(nu - 1), static_cast<unsigned>(j)).get_d() * static_cast<double>(count);
            if (j % 2)
                weight = -weight;
            const Complex term = weight * complex_power(static_cast<std::uint64_t>(base), w.z) * cpow(w.c, base);
            out.rhs += term;
            out.magnitude += std::abs(term);
        }
    }
    for (auto dv : divisors(static_cast<std::uint64_t>(n))) {
        const Complex term = complex_power(dv, w.z) * cpow(w.c, static_cast<int>(dv));
        out.rhs += term;
        out.magnitude += std::abs(term);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Smallest-part c-weighted partition identity

Sides<CPolynomial> agl_sides(const std::vector<DistinctRecord>& d, const ShapeHistogram& h, bool scaled)
{
    Sides<CPolynomial> out;
    for (const auto& r : d) {
        if (scaled) {
            out.lhs.add_term(static_cast<unsigned>(r.smallest), r.sign);
            out.lhs.add_term(0, -r.sign);
        }
        else {
            for (int j = 0; j < r.smallest; ++j)
                out.lhs.add_term(static_cast<unsigned>(j), r.sign);
        }
    }
    const CPolynomial c_minus_one = CPolynomial::c() - CPolynomial(1);
    for (const auto& [shape, count] : h) {
        const auto [largest, nu] = shape;
        const unsigned power = static_cast<unsigned>(scaled ? nu : nu - 1);
        auto term = CPolynomial::monomial(static_cast<unsigned>(largest - nu), mpq_class(mpz_class(static_cast<unsigned long>(count)))) *
                    c_minus_one.pow(power);
        out.rhs += term;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Divisor-function tables

std::vector<mpz_class> sigma_table(unsigned z, int n_max)
{
    std::vector<mpz_class> t(static_cast<std::size_t>(n_max) + 1, 0);
    for (int n = 1; n <= n_max; ++n)
        t[n] = sigma_int(z, static_cast<std::uint64_t>(n));
    return t;
}

// Coefficients 0..n_max of the product of the given generating sequences.
std::vector<mpz_class> convolve(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b)
{
    std::vector<mpz_class> out(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; i + j < a.size(); ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

mpz_class cor25_rhs(int n, const std::vector<mpz_class>& d, const std::vector<mpz_class>& sigma)
{
    mpz_class numerator = d[n] - sigma[n];
    for (int j = 1; j < n; ++j)
        numerator += d[j] * d[n - j];
    if (mpz_odd_p(numerator.get_mpz_t()))
        throw AlgorithmFault("odd numerator " + numerator.get_str() + " in the p^(2) formula at n=" + std::to_string(n));
    return numerator / 2;
}

mpz_class cor27_rhs(const std::vector<DistinctRecord>& d)
{
    mpz_class acc = 0;
    for (const auto& r : d)
        acc -= mpz_class(r.sign) * r.smallest * (r.largest - r.smallest);
    return acc;
}

// ---------------------------------------------------------------------------
// Report helpers

std::string format_complex(Complex v)
{
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", v.real(), v.imag());
    return buf;
}

bool close_enough(const NumericSides& s, double tol)
{
    return std::abs(s.lhs - s.rhs) <= tol * std::max(1.0, std::abs(s.rhs));
}

double condition_of(const NumericSides& s)
{
    return s.magnitude / std::max(1.0, std::abs(s.rhs));
}

using MaybeFailure = std::optional<Failure>;

MaybeFailure poly_mismatch(int n, const std::string& where, const CPolynomial& lhs, const CPolynomial& rhs)
{
    if (lhs == rhs)
        return std::nullopt;
    return Failure{n, where, lhs.to_string(), rhs.to_string()};
}

MaybeFailure int_mismatch(int n, const std::string& where, const mpz_class& lhs, const mpz_class& rhs)
{
    if (lhs == rhs)
        return std::nullopt;
    return Failure{n, where, lhs.get_str(), rhs.get_str()};
}

template <class R>
MaybeFailure series_mismatch(const std::string& where, const TruncatedSeries<R>& lhs, const TruncatedSeries<R>& rhs)
{
    const int at = lhs.first_difference(rhs);
    if (at < 0)
        return std::nullopt;
    return Failure{at, where, ring_to_string(lhs[at]), ring_to_string(rhs[at])};
}

struct NumericTracker {
    double tolerance;
    double worst_condition = 0;

    MaybeFailure check(int n, const std::string& where, const NumericSides& s)
    {
        worst_condition = std::max(worst_condition, condition_of(s));
        if (close_enough(s, tolerance))
            return std::nullopt;
        return Failure{n, where, format_complex(s.lhs), format_complex(s.rhs)};
    }
};

std::string z_label(unsigned z, const char* name)
{
    return std::string(name) + "=" + std::to_string(z);
}

std::string zc_label(NumericWeight w)
{
    return "z=" + format_complex(w.z) + " c=" + format_complex(w.c);
}

// ---------------------------------------------------------------------------
// Exact-mode checkers. Each returns the first failure in (n, parameter) order.

MaybeFailure run_bs_basic(const CheckConfig& cfg)
{
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        mpz_class lhs = 0;
        for (const auto& r : distinct_records(n))
            lhs += mpz_class(r.sign) * r.smallest;
        if (auto f = int_mismatch(n, "", lhs, divisor_count(static_cast<std::uint64_t>(n))))
            return f;
    }
    return std::nullopt;
}

MaybeFailure run_bs_int(const CheckConfig& cfg)
{
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        auto d = distinct_records(n);
        for (unsigned z : cfg.exponents) {
            mpz_class lhs = 0;
            for (const auto& r : d)
                for (int j = 1; j <= r.smallest; ++j)
                    lhs += ipow(static_cast<unsigned long>(r.largest - r.smallest + j), z) * r.sign;
            if (auto f = int_mismatch(n, z_label(z, "z"), lhs, sigma_int(z, static_cast<std::uint64_t>(n))))
                return f;
        }
    }
    return std::nullopt;
}

MaybeFailure run_thm21_exact(const CheckConfig& cfg)
{
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        auto d = distinct_records(n);
        for (unsigned z : cfg.exponents)
            if (auto f = poly_mismatch(n, z_label(z, "z"), thm21_lhs(d, n, z), sigma_zc_exact(z, static_cast<std::uint64_t>(n))))
                return f;
    }
    return std::nullopt;
}

template <class Fn>
MaybeFailure run_numeric_grid(const CheckConfig& cfg, NumericTracker& tracker, bool unit_c, Fn&& evaluate)
{
    std::vector<NumericWeight> grid;
    for (auto z : cfg.z_grid) {
        if (unit_c) {
            grid.push_back({z, 1.0});
            continue;
        }
        for (auto c : cfg.c_grid)
            grid.push_back(make_numeric_weight(z, c, cfg.c_disk));
    }
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        auto eval_n = evaluate(n);
        for (const auto& w : grid)
            if (auto f = tracker.check(n, zc_label(w), eval_n(w)))
                return f;
    }
    return std::nullopt;
}

MaybeFailure run_thm23_exact(const CheckConfig& cfg)
{
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        auto d = distinct_records(n);
        auto h = shape_histogram(n);
        for (unsigned k : cfg.exponents)
            if (auto f = poly_mismatch(n, z_label(k, "k"), thm23_lhs(d, n, k), thm23_rhs(h, n, k)))
                return f;
    }
    return std::nullopt;
}

// c = 1 restriction of the smallest-part power identity, plus the k = 1 reduction to d(n) through
// -sum_{P(n)} sum_j (-1)^j binom(nu,j) j = #{nu = 1}.
MaybeFailure run_cor24_exact(const CheckConfig& cfg)
{
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        auto d = distinct_records(n);
        auto h = shape_histogram(n);
        for (unsigned k : cfg.exponents) {
            const mpz_class lhs(thm23_lhs(d, n, k).evaluate(mpq_class(1)));
            const mpz_class rhs(thm23_rhs(h, n, k).evaluate(mpq_class(1)));
            if (auto f = int_mismatch(n, z_label(k, "k"), lhs, rhs))
                return f;
        }
        const mpz_class dn = divisor_count(static_cast<std::uint64_t>(n));
        const mpz_class lhs1(thm23_lhs(d, n, 1).evaluate(mpq_class(1)));
        if (auto f = int_mismatch(n, "k=1 lhs vs d(n)", lhs1, dn))
            return f;
        mpz_class chain = 0, single_size = 0;
        for (const auto& [shape, count] : h) {
            const int nu = shape.second;
            for (int j = 0; j <= nu; ++j) {
                mpz_class t = binomial(static_cast<unsigned>(nu), static_cast<unsigned>(j)) * j * mpz_class(static_cast<unsigned long>(count));
                chain += (j % 2) ? t : mpz_class(-t);
            }
            if (nu == 1)
                single_size += static_cast<unsigned long>(count);
        }
        if (auto f = int_mismatch(n, "k=1 reduction sum vs #{nu_d=1}", chain, single_size))
            return f;
        if (auto f = int_mismatch(n, "#{nu_d=1} vs d(n)", single_size, dn))
            return f;
    }
    return std::nullopt;
}

MaybeFailure run_thm26_exact(const CheckConfig& cfg)
{
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        auto d = distinct_records(n);
        auto h = shape_histogram(n);
        for (unsigned k : cfg.exponents)
            if (auto f = poly_mismatch(n, z_label(k, "k"), thm26_lhs(d, n, k), thm26_rhs(h, n, k)))
                return f;
    }
    return std::nullopt;
}

MaybeFailure run_cor25(const CheckConfig& cfg)
{
    auto table = exact_part_size_table(cfg.n_max);
    auto d = sigma_table(0, cfg.n_max);
    auto sigma = sigma_table(1, cfg.n_max);
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        const mpz_class p2 = table.size() > 2 ? table[2][n] : mpz_class(0);
        if (auto f = int_mismatch(n, "", p2, cor25_rhs(n, d, sigma)))
            return f;
    }
    return std::nullopt;
}

MaybeFailure run_cor27(const CheckConfig& cfg)
{
    auto table = exact_part_size_table(cfg.n_max);
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        const mpz_class p2 = table.size() > 2 ? table[2][n] : mpz_class(0);
        if (auto f = int_mismatch(n, "", p2, cor27_rhs(distinct_records(n))))
            return f;
    }
    return std::nullopt;
}

MaybeFailure run_agl(const CheckConfig& cfg, bool scaled)
{
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        auto s = agl_sides(distinct_records(n), shape_histogram(n), scaled);
        if (auto f = poly_mismatch(n, scaled ? "scaled" : "", s.lhs, s.rhs))
            return f;
    }
    return std::nullopt;
}

MaybeFailure run_class_sum(const CheckConfig& cfg)
{
    for (int n = cfg.n_min; n <= cfg.n_max; ++n)
        for (int modulus = 1; modulus <= n; ++modulus) {
            const int expected = n % modulus == 0 ? 1 : 0;
            if (auto f = int_mismatch(n, "N=" + std::to_string(modulus), class_sum(n, modulus), expected))
                return f;
        }
    return std::nullopt;
}

MaybeFailure run_dilcher_cm(const CheckConfig& cfg)
{
    std::array<TruncatedSeries<mpq_class>, 4> m_series;
    for (unsigned m = 1; m <= 4; ++m)
        m_series[m - 1] = series_M(m, mpq_class(1), cfg.n_max);
    for (int n = cfg.n_min; n <= cfg.n_max; ++n)
        for (unsigned m = 1; m <= 4; ++m) {
            const auto enumerated = dilcher_cm_enumerated(m, n);
            if (auto f = int_mismatch(n, "m=" + std::to_string(m) + " enumeration vs convolution", enumerated,
                                      dilcher_cm_formula(m, n)))
                return f;
            const mpz_class coeff(m_series[m - 1][n]);
            if (auto f = int_mismatch(n, "m=" + std::to_string(m) + " enumeration vs M_m coefficient", enumerated, coeff))
                return f;
        }
    return std::nullopt;
}

MaybeFailure run_eq113(const CheckConfig& cfg)
{
    const auto c = CPolynomial::c();
    for (unsigned m : cfg.exponents) {
        auto series = series_M(m, c, cfg.n_max);
        for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
            auto d = distinct_records(n);
            if (auto f = poly_mismatch(n, z_label(m, "m"), series[n], thm23_lhs(d, n, m)))
                return f;
        }
    }
    return std::nullopt;
}

MaybeFailure run_uchimura(const CheckConfig& cfg)
{
    const mpq_class one(1);
    auto m1 = series_M(1, one, cfg.q_order);
    auto e4 = series_entry4(one, cfg.q_order);
    if (auto f = series_mismatch("M_1 vs Kluyver sum", m1, e4.lhs))
        return f;
    return series_mismatch("Kluyver sum vs Lambert sum", e4.lhs, e4.rhs);
}

MaybeFailure run_entry4(const CheckConfig& cfg)
{
    auto symbolic = series_entry4(CPolynomial::c(), cfg.q_order);
    if (auto f = series_mismatch("symbolic c", symbolic.lhs, symbolic.rhs))
        return f;
    auto kluyver = series_entry4(mpq_class(1), cfg.q_order);
    return series_mismatch("c=1", kluyver.lhs, kluyver.rhs);
}

MaybeFailure run_thm12(const CheckConfig& cfg)
{
    for (int k = 1; k <= cfg.dilcher_k_max; ++k) {
        auto t = series_dilcher_binomial<mpq_class>(k, cfg.q_order);
        const std::string label = "k=" + std::to_string(k);
        if (auto f = series_mismatch(label + " binomial vs alternating", t.binomial_sum, t.alternating_sum))
            return f;
        if (auto f = series_mismatch(label + " binomial vs nested Lambert", t.binomial_sum, t.nested_lambert))
            return f;
    }
    return std::nullopt;
}

MaybeFailure thm22_failure(unsigned m_max, int q_order, const mpq_class& c, bool exp_form, bool bell_form)
{
    auto rel = exp_relation<mpq_class>(m_max, c, q_order);
    const std::string label = "c=" + to_string(c);
    if (exp_form)
        for (int m = 0; m <= static_cast<int>(m_max); ++m)
            if (auto f = series_mismatch(label + " t^" + std::to_string(m), rel.direct[m], rel.exponential[m]))
                return f;
    if (bell_form)
        for (unsigned m = 1; m <= m_max; ++m)
            if (auto f = series_mismatch(label + " bell m=" + std::to_string(m), rel.m_series[m - 1], rel.bell_series[m - 1]))
                return f;
    return std::nullopt;
}

ReportRange range_of(IdentityId id, const CheckConfig& cfg)
{
    ReportRange r;
    const bool series_only = id == IdentityId::UchimuraTriple || id == IdentityId::Entry4 || id == IdentityId::Thm12 ||
                             id == IdentityId::Thm22Exp || id == IdentityId::Thm22Bell;
    if (!series_only) {
        r.n_min = cfg.n_min;
        r.n_max = cfg.n_max;
    }
    if (series_only)
        r.q_order = cfg.q_order;
    if (id == IdentityId::DilcherCm || id == IdentityId::Eq113)
        r.q_order = cfg.n_max;

    const bool uses_exponents = id == IdentityId::BsInt || id == IdentityId::BsOneVar || id == IdentityId::Eq113 ||
                                id == IdentityId::Thm23 || id == IdentityId::Cor24 || id == IdentityId::Thm26;
    if (cfg.mode == Mode::Numeric) {
        for (auto z : cfg.z_grid)
            r.z.push_back(format_complex(z));
        if (id == IdentityId::Cor24)
            r.c.push_back("1");
        else
            for (auto c : cfg.c_grid)
                r.c.push_back(format_complex(c));
        return r;
    }
    if (uses_exponents)
        for (auto z : cfg.exponents)
            r.z.push_back(std::to_string(z));
    if (id == IdentityId::Thm12)
        for (int k = 1; k <= cfg.dilcher_k_max; ++k)
            r.z.push_back(std::to_string(k));
    if (id == IdentityId::Thm22Exp || id == IdentityId::Thm22Bell) {
        for (unsigned m = 1; m <= cfg.m_max; ++m)
            r.z.push_back(std::to_string(m));
        for (const auto& c : cfg.c_values)
            r.c.push_back(to_string(c));
    }
    else if (id == IdentityId::BsOneVar || id == IdentityId::Thm23 || id == IdentityId::Thm26 ||
             id == IdentityId::Eq113 || id == IdentityId::AglPti || id == IdentityId::AglScaled ||
             id == IdentityId::Entry4) {
        r.c.push_back("symbolic");
    }
    else if (id == IdentityId::Cor24 || id == IdentityId::UchimuraTriple || id == IdentityId::DilcherCm) {
        r.c.push_back("1");
    }
    return r;
}

void validate(IdentityId id, const CheckConfig& cfg)
{
    if (cfg.n_min < 1 || cfg.n_max < cfg.n_min)
        throw std::invalid_argument("need 1 <= n_min <= n_max");
    if (cfg.q_order < 1)
        throw std::invalid_argument("q-order must be positive");
    if (cfg.mode == Mode::Numeric && !supports_numeric(id))
        throw std::invalid_argument(std::string(tag(id)) + " has no numeric mode");
    if (cfg.mode == Mode::Numeric && !(cfg.tolerance > 0))
        throw std::invalid_argument("tolerance must be positive");
}

}  // namespace

// ---------------------------------------------------------------------------
// Registry

std::span<const IdentityId> all_identities()
{
    return kIds;
}

std::string_view tag(IdentityId id)
{
    return entry(id).tag;
}

std::optional<IdentityId> parse_identity(std::string_view text)
{
    std::string upper(text);
    std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char ch) {
        return ch == '-' ? '_' : static_cast<char>(std::toupper(ch));
    });
    for (const auto& e : kRegistry)
        if (e.tag == upper)
            return e.id;
    return std::nullopt;
}

bool supports_numeric(IdentityId id)
{
    return entry(id).numeric;
}

std::string_view to_string(Mode mode)
{
    return mode == Mode::Exact ? "exact" : "numeric";
}

// ---------------------------------------------------------------------------
// Public side evaluators

Sides<CPolynomial> lhs_rhs_thm21(int n, ExactWeight w)
{
    return {thm21_lhs(distinct_records(n), n, w.z), sigma_zc_exact(w.z, static_cast<std::uint64_t>(n))};
}

NumericSides lhs_rhs_thm21(int n, NumericWeight w)
{
    return thm21_numeric(distinct_records(n), n, w);
}

Sides<CPolynomial> lhs_rhs_thm23(int n, ExactWeight w)
{
    return {thm23_lhs(distinct_records(n), n, w.z), thm23_rhs(shape_histogram(n), n, w.z)};
}

NumericSides lhs_rhs_thm23(int n, NumericWeight w)
{
    return thm23_numeric(distinct_records(n), shape_histogram(n), w);
}

Sides<CPolynomial> lhs_rhs_thm26(int n, ExactWeight w)
{
    return {thm26_lhs(distinct_records(n), n, w.z), thm26_rhs(shape_histogram(n), n, w.z)};
}

NumericSides lhs_rhs_thm26(int n, NumericWeight w)
{
    return thm26_numeric(distinct_records(n), shape_histogram(n), n, w);
}

Sides<mpz_class> check_cor27(int n)
{
    return {count_exact_part_sizes(n, 2), cor27_rhs(distinct_records(n))};
}

Sides<mpz_class> check_cor25(int n)
{
    return {count_exact_part_sizes(n, 2), cor25_rhs(n, sigma_table(0, n), sigma_table(1, n))};
}

Sides<CPolynomial> check_agl(int n, bool scaled)
{
    return agl_sides(distinct_records(n), shape_histogram(n), scaled);
}

mpz_class dilcher_cm_enumerated(unsigned m, int n)
{
    mpz_class acc = 0;
    for (const auto& r : distinct_records(n))
        acc += ipow(static_cast<unsigned long>(r.smallest), m) * r.sign;
    return acc;
}

mpz_class dilcher_cm_formula(unsigned m, int n)
{
    if (m < 1 || m > 4)
        throw std::out_of_range("convolution formulas exist for 1 <= m <= 4");
    if (n < 1)
        throw std::invalid_argument("n must be positive");
    // Generating sequences with a zero constant term, so products of r of them
    // give the r-fold sums over compositions into positive parts.
    const auto d = sigma_table(0, n);
    const auto s1 = sigma_table(1, n);
    const auto s2 = sigma_table(2, n);
    const auto s3 = sigma_table(3, n);
    switch (m) {
    case 1: return d[n];
    case 2: return s1[n] + convolve(d, d)[n];
    case 3: {
        const auto dd = convolve(d, d);
        return s2[n] + 3 * convolve(d, s1)[n] + convolve(dd, d)[n];
    }
    default: {
        const auto dd = convolve(d, d);
        return s3[n] + 3 * convolve(s1, s1)[n] + 4 * convolve(d, s2)[n] + 6 * convolve(dd, s1)[n] +
               convolve(dd, dd)[n];
    }
    }
}

IdentityReport check_thm22(unsigned m_max, int q_order, const mpq_class& c)
{
    const auto start = std::chrono::steady_clock::now();
    IdentityReport r;
    r.id = IdentityId::Thm22Exp;
    r.range.q_order = q_order;
    for (unsigned m = 1; m <= m_max; ++m)
        r.range.z.push_back(std::to_string(m));
    r.range.c.push_back(to_string(c));
    try {
        r.first_failure = thm22_failure(m_max, q_order, c, true, true);
    }
    catch (const ConsistencyFault& e) {
        r.first_failure = Failure{0, e.what(), "", ""};
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

IdentityReport check_identity(IdentityId id, const CheckConfig& cfg)
{
    validate(id, cfg);
    const auto start = std::chrono::steady_clock::now();
    IdentityReport report;
    report.id = id;
    report.mode = cfg.mode;
    report.range = range_of(id, cfg);

    NumericTracker tracker{cfg.tolerance};
    const bool numeric = cfg.mode == Mode::Numeric;
    try {
        switch (id) {
        case IdentityId::BsBasic: report.first_failure = run_bs_basic(cfg); break;
        case IdentityId::BsInt: report.first_failure = run_bs_int(cfg); break;
        case IdentityId::BsOneVar:
            report.first_failure = numeric ? run_numeric_grid(cfg, tracker, false,
                                                              [](int n) {
                                                                  return [n, d = distinct_records(n)](NumericWeight w) {
                                                                      return thm21_numeric(d, n, w);
                                                                  };
                                                              })
                                           : run_thm21_exact(cfg);
            break;
        case IdentityId::UchimuraTriple: report.first_failure = run_uchimura(cfg); break;
        case IdentityId::Entry4: report.first_failure = run_entry4(cfg); break;
        case IdentityId::DilcherCm: report.first_failure = run_dilcher_cm(cfg); break;
        case IdentityId::Eq113: report.first_failure = run_eq113(cfg); break;
        case IdentityId::Thm12: report.first_failure = run_thm12(cfg); break;
        case IdentityId::Thm22Exp:
        case IdentityId::Thm22Bell:
            for (const auto& c : cfg.c_values) {
                report.first_failure =
                    thm22_failure(cfg.m_max, cfg.q_order, c, id == IdentityId::Thm22Exp, id == IdentityId::Thm22Bell);
                if (report.first_failure)
                    break;
            }
            break;
        case IdentityId::Thm23:
        case IdentityId::Cor24:
            if (numeric) {
                report.first_failure = run_numeric_grid(cfg, tracker, id == IdentityId::Cor24, [](int n) {
                    return [d = distinct_records(n), h = shape_histogram(n)](NumericWeight w) {
                        return thm23_numeric(d, h, w);
                    };
                });
            }
            else {
                report.first_failure = id == IdentityId::Thm23 ? run_thm23_exact(cfg) : run_cor24_exact(cfg);
            }
            break;
        case IdentityId::Cor25: report.first_failure = run_cor25(cfg); break;
        case IdentityId::Thm26:
            report.first_failure = numeric ? run_numeric_grid(cfg, tracker, false,
                                                              [](int n) {
                                                                  return [n, d = distinct_records(n),
                                                                          h = shape_histogram(n)](NumericWeight w) {
                                                                      return thm26_numeric(d, h, n, w);
                                                                  };
                                                              })
                                           : run_thm26_exact(cfg);
            break;
        case IdentityId::Cor27: report.first_failure = run_cor27(cfg); break;
        case IdentityId::AglPti: report.first_failure = run_agl(cfg, false); break;
        case IdentityId::AglScaled: report.first_failure = run_agl(cfg, true); break;
        case IdentityId::ClassSum: report.first_failure = run_class_sum(cfg); break;
        }
    }
    catch (const AlgorithmFault& e) {
        report.first_failure = Failure{0, e.what(), "", ""};
    }
    catch (const ConsistencyFault& e) {
        report.first_failure = Failure{0, e.what(), "", ""};
    }
    if (numeric)
        report.condition = tracker.worst_condition;
    if (cfg.measure_time)
        report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::vector<IdentityReport> check_all(const CheckConfig& config)
{
    std::vector<std::future<IdentityReport>> pending;
    for (auto id : all_identities()) {
        if (config.mode == Mode::Numeric && !supports_numeric(id))
            continue;
        pending.push_back(std::async(std::launch::async, [id, &config] { return check_identity(id, config); }));
    }
    std::vector<IdentityReport> out;
    out.reserve(pending.size());
    for (auto& f : pending)
        out.push_back(f.get());
    return out;
}

}  // namespace pie
