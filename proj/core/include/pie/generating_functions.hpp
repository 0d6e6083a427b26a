#pragma once

// Truncated expansions of the q-series that carry the weighted partition
// identities. Every function is generic over the coefficient ring: pass
// CPolynomial::c() for symbolic c, or an mpq_class for a rational c.

#include <array>
#include <functional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "pie/arith.hpp"
#include "pie/errors.hpp"
#include "pie/series.hpp"

namespace pie {

inline constexpr int kDefaultSeriesOrder = 30;

namespace detail {

// sum_{n >= first} weight(n) c^n q^n (q^{n+1})_inf, with the suffix products
// (q^{n+1})_inf built downward from n = order.
template <class R, class Weight>
TruncatedSeries<R> euler_weighted_sum(const R& c, int order, int first, Weight&& weight)
{
    TruncatedSeries<R> out(order);
    auto suffix = TruncatedSeries<R>::one(order);  // (q^{order+1})_inf
    for (int n = order; n >= first; --n) {
        if (n + 1 <= order)
            suffix = multiply_by_factor(std::move(suffix), R(1), n + 1);
        mpq_class w = weight(n);
        if (w == 0)
            continue;
        R cn = ring_pow(c, static_cast<unsigned>(n)) * w;
        for (int i = 0; i + n <= order; ++i)
            out[i + n] = out[i + n] + cn * suffix[i];
    }
    return out;
}

}  // namespace detail

/// A(c, q) = (q)_inf / (cq)_inf, computed as a quotient with series_inverse
/// and as Euler's sum sum_{n>=0} c^n q^n (q^{n+1})_inf. Throws
/// ConsistencyFault if the two constructions differ.
template <class R>
TruncatedSeries<R> series_A(const R& c, int order = kDefaultSeriesOrder)
{
    if (order < 1)
        throw std::invalid_argument("series order must be at least 1");
    auto quotient = pochhammer_infinite(R(1), order) * series_inverse(pochhammer_infinite(c, order));
    auto euler = detail::euler_weighted_sum(c, order, 0, [](int) { return mpq_class(1); });
    if (int at = quotient.first_difference(euler); at >= 0)
        throw ConsistencyFault("A(c,q): quotient and Euler sum differ at q^" + std::to_string(at));
    return quotient;
}

/// M_{m,c} = sum_{n>=1} n^m c^n q^n (q^{n+1})_inf.
template <class R>
TruncatedSeries<R> series_M(unsigned m, const R& c, int order = kDefaultSeriesOrder)
{
    return detail::euler_weighted_sum(c, order, 1, [m](int n) {
        mpz_class w;
        mpz_ui_pow_ui(w.get_mpz_t(), static_cast<unsigned long>(n), m);
        return mpq_class(w);
    });
}

/// K_{m,c} = sum_n sigma_{m-1,c}(n) q^n, built from divisor sums and from the
/// Lambert series sum_j c^j j^{m-1} q^j / (1 - q^j). Throws ConsistencyFault
/// on disagreement.
template <class R>
TruncatedSeries<R> series_K(unsigned m, const R& c, int order = kDefaultSeriesOrder)
{
    if (m < 1)
        throw std::invalid_argument("K_m is defined for m >= 1");
    const unsigned power = m - 1;
    TruncatedSeries<R> by_divisors(order);
    for (int n = 1; n <= order; ++n) {
        R acc(0);
        for (auto d : divisors(static_cast<std::uint64_t>(n))) {
            mpz_class w;
            mpz_ui_pow_ui(w.get_mpz_t(), static_cast<unsigned long>(d), power);
            acc = acc + ring_pow(c, static_cast<unsigned>(d)) * mpq_class(w);
        }
        by_divisors[n] = acc;
    }
    TruncatedSeries<R> lambert(order);
    for (int j = 1; j <= order; ++j) {
        mpz_class w;
        mpz_ui_pow_ui(w.get_mpz_t(), static_cast<unsigned long>(j), power);
        auto term = TruncatedSeries<R>::monomial(order, j, ring_pow(c, static_cast<unsigned>(j)) * mpq_class(w));
        lambert += divide_by_factor(std::move(term), R(1), j);
    }
    if (int at = by_divisors.first_difference(lambert); at >= 0)
        throw ConsistencyFault("K_" + std::to_string(m) + ": divisor sum and Lambert series differ at q^" +
                               std::to_string(at));
    return by_divisors;
}

template <class R>
struct SeriesPair {
    TruncatedSeries<R> lhs;
    TruncatedSeries<R> rhs;
};

/// Both sides of
///   sum_{n>=1} (-1)^{n-1} c^n q^{n(n+1)/2} / ((1-q^n)(cq)_n) = sum_{n>=1} c^n q^n / (1-q^n).
template <class R>
SeriesPair<R> series_entry4(const R& c, int order = kDefaultSeriesOrder)
{
    if (order < 1)
        throw std::invalid_argument("series order must be at least 1");
    TruncatedSeries<R> lhs(order);
    for (int n = 1; n * (n + 1) / 2 <= order; ++n) {
        R coeff = ring_pow(c, static_cast<unsigned>(n));
        if (n % 2 == 0)
            coeff = R(0) - coeff;
        auto term = TruncatedSeries<R>::monomial(order, n * (n + 1) / 2, coeff);
        term = divide_by_factor(std::move(term), R(1), n);
        for (int k = 1; k <= n; ++k)
            term = divide_by_factor(std::move(term), c, k);
        lhs += term;
    }
    TruncatedSeries<R> rhs(order);
    for (int n = 1; n <= order; ++n)
        rhs += divide_by_factor(TruncatedSeries<R>::monomial(order, n, ring_pow(c, static_cast<unsigned>(n))), R(1), n);
    return {std::move(lhs), std::move(rhs)};
}

template <class R>
struct SeriesTriple {
    TruncatedSeries<R> binomial_sum;
    TruncatedSeries<R> alternating_sum;
    TruncatedSeries<R> nested_lambert;
};

inline constexpr int kMaxDilcherK = 6;

/// The three expressions of the k-fold binomial generalisation:
///   sum_{n>=k} binom(n,k) q^n (q^{n+1})_inf,
///   q^{-binom(k,2)} sum_{n>=1} (-1)^{n-1} q^{binom(n+k,2)} / ((1-q^n)^k (q)_n),
///   sum_{j_1>=1} L_{j_1} sum_{j_2<=j_1} L_{j_2} ... sum_{j_k<=j_{k-1}} L_{j_k},  L_j = q^j/(1-q^j).
template <class R = mpq_class>
SeriesTriple<R> series_dilcher_binomial(int k, int order = kDefaultSeriesOrder)
{
    if (k < 1 || k > kMaxDilcherK)
        throw std::out_of_range("k must lie in 1.." + std::to_string(kMaxDilcherK));
    if (order < k)
        throw std::invalid_argument("series order must be at least k");
    const unsigned uk = static_cast<unsigned>(k);

    auto first = detail::euler_weighted_sum(R(1), order, k, [uk](int n) {
        return mpq_class(binomial(static_cast<unsigned>(n), uk));
    });

    // binom(n+k,2) - binom(k,2) = n(n-1)/2 + nk, increasing in n.
    TruncatedSeries<R> second(order);
    for (int n = 1;; ++n) {
        const long long e = static_cast<long long>(n) * (n - 1) / 2 + static_cast<long long>(n) * k;
        if (e > order)
            break;
        auto term = TruncatedSeries<R>::monomial(order, static_cast<int>(e), n % 2 ? R(1) : R(-1));
        for (int r = 0; r < k; ++r)
            term = divide_by_factor(std::move(term), R(1), n);
        for (int j = 1; j <= n; ++j)
            term = divide_by_factor(std::move(term), R(1), j);
        second += term;
    }

    // Prefix accumulation: level_r(j) = sum_{i<=j} L_i * level_{r-1}(i).
    std::vector<TruncatedSeries<R>> lambert;
    lambert.reserve(static_cast<std::size_t>(order));
    for (int j = 1; j <= order; ++j)
        lambert.push_back(divide_by_factor(TruncatedSeries<R>::monomial(order, j, R(1)), R(1), j));
    std::vector<TruncatedSeries<R>> level(static_cast<std::size_t>(order), TruncatedSeries<R>::one(order));
    for (int r = 1; r <= k; ++r) {
        TruncatedSeries<R> running(order);
        for (int j = 0; j < order; ++j) {
            running += lambert[j] * level[j];
            level[j] = running;
        }
    }
    return {std::move(first), std::move(second), std::move(level.back())};
}

/// Both routes to A(c e^t, q) through t^{m_max}, plus the Bell form of each M.
template <class R>
struct ExpRelation {
    ExpSeries<R> direct;         // A(c,q) + sum_m M_{m,c} t^m/m!
    ExpSeries<R> exponential;    // A(c,q) * exp(sum_m K_{m,c} t^m/m!)
    std::vector<TruncatedSeries<R>> m_series;     // M_{1,c} .. M_{m_max,c}
    std::vector<TruncatedSeries<R>> bell_series;  // A(c,q) * Y_m(K_{1,c}, .., K_{m,c})
};

template <class R>
ExpRelation<R> exp_relation(unsigned m_max, const R& c, int order)
{
    const int t_order = static_cast<int>(m_max);
    auto a = series_A(c, order);
    std::vector<TruncatedSeries<R>> ks, ms;
    for (unsigned m = 1; m <= m_max; ++m) {
        ks.push_back(series_K(m, c, order));
        ms.push_back(series_M(m, c, order));
    }

    ExpSeries<R> direct(t_order, order), a_const(t_order, order), k_sum(t_order, order);
    direct.set(0, a);
    a_const.set(0, a);
    mpz_class factorial = 1;
    for (unsigned m = 1; m <= m_max; ++m) {
        factorial *= m;
        const mpq_class inv(mpz_class(1), factorial);
        direct.set(static_cast<int>(m), ms[m - 1] * inv);
        k_sum.set(static_cast<int>(m), ks[m - 1] * inv);
    }
    auto exponential = a_const * k_sum.exp();

    std::vector<TruncatedSeries<R>> bells;
    const auto one = TruncatedSeries<R>::one(order);
    for (unsigned m = 1; m <= m_max; ++m)
        bells.push_back(a * bell_polynomial<TruncatedSeries<R>>(m, ks, one, std::max(kDefaultBellCap, m_max)));
    return {std::move(direct), std::move(exponential), std::move(ms), std::move(bells)};
}

}  // namespace pie
