#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "pie/cpolynomial.hpp"

namespace pie {

// Coefficient rings: exact rationals or polynomials in c.

inline mpq_class ring_inverse(const mpq_class& x)
{
    if (x == 0)
        throw std::domain_error("constant term is not invertible");
    return mpq_class(1) / x;
}

inline CPolynomial ring_inverse(const CPolynomial& x)
{
    if (!x.is_constant() || x.is_zero())
        throw std::domain_error("constant term " + x.to_string() + " is not a unit of Q[c]");
    return CPolynomial(mpq_class(1) / x.coefficient(0));
}

inline std::string ring_to_string(const mpq_class& x) { return to_string(x); }
inline std::string ring_to_string(const CPolynomial& x) { return x.to_string(); }

inline bool ring_is_zero(const mpq_class& x) { return x == 0; }
inline bool ring_is_zero(const CPolynomial& x) { return x.is_zero(); }

template <class R>
R ring_pow(const R& x, unsigned e)
{
    R acc(1);
    for (unsigned i = 0; i < e; ++i)
        acc = acc * x;
    return acc;
}

/// Power series in q with coefficients for q^0 .. q^order; everything above
/// the order is discarded.
template <class R>
class TruncatedSeries {
public:
    using value_type = R;

    TruncatedSeries() = default;
    explicit TruncatedSeries(int order) : coeffs_(check_order(order) + 1, R(0)) {}

    static TruncatedSeries one(int order) { return monomial(order, 0, R(1)); }

    /// coeff * q^power, or zero if power exceeds the order.
    static TruncatedSeries monomial(int order, int power, const R& coeff)
    {
        TruncatedSeries s(order);
        if (power >= 0 && power <= order)
            s.coeffs_[power] = coeff;
        return s;
    }

    [[nodiscard]] int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] std::span<const R> coeffs() const noexcept { return coeffs_; }
    [[nodiscard]] const R& operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
    R& operator[](int i) { return coeffs_.at(static_cast<std::size_t>(i)); }

    TruncatedSeries& operator+=(const TruncatedSeries& rhs)
    {
        require_same_order(rhs);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            coeffs_[i] = coeffs_[i] + rhs.coeffs_[i];
        return *this;
    }

    TruncatedSeries& operator-=(const TruncatedSeries& rhs)
    {
        require_same_order(rhs);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            coeffs_[i] = coeffs_[i] - rhs.coeffs_[i];
        return *this;
    }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        a.require_same_order(b);
        const int q = a.order();
        TruncatedSeries out(q);
        for (int i = 0; i <= q; ++i) {
            if (ring_is_zero(a.coeffs_[i]))
                continue;
            for (int j = 0; i + j <= q; ++j) {
                if (ring_is_zero(b.coeffs_[j]))
                    continue;
                out.coeffs_[i + j] = out.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return out;
    }

    /// Multiply every coefficient by a ring element.
    [[nodiscard]] TruncatedSeries scale(const R& k) const
    {
        TruncatedSeries out(*this);
        for (auto& x : out.coeffs_)
            x = x * k;
        return out;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const mpq_class& k)
    {
        TruncatedSeries out(a);
        for (auto& x : out.coeffs_)
            x = x * k;
        return out;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.coeffs_ == b.coeffs_; }

    /// Index of the first differing coefficient, or -1.
    [[nodiscard]] int first_difference(const TruncatedSeries& other) const
    {
        require_same_order(other);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (!(coeffs_[i] == other.coeffs_[i]))
                return static_cast<int>(i);
        return -1;
    }

private:
    static std::size_t check_order(int order)
    {
        if (order < 0)
            throw std::invalid_argument("series order must be nonnegative");
        return static_cast<std::size_t>(order);
    }

    void require_same_order(const TruncatedSeries& other) const
    {
        if (order() != other.order())
            throw std::invalid_argument("series order mismatch: " + std::to_string(order()) + " vs " +
                                        std::to_string(other.order()));
    }

    std::vector<R> coeffs_;
};

/// g with f * g = 1 up to the order. Throws std::domain_error if the constant
/// term is not a unit.
template <class R>
TruncatedSeries<R> series_inverse(const TruncatedSeries<R>& f)
{
    const int q = f.order();
    const R inv0 = ring_inverse(f[0]);
    TruncatedSeries<R> g(q);
    g[0] = inv0;
    for (int n = 1; n <= q; ++n) {
        R acc(0);
        for (int k = 1; k <= n; ++k)
            acc = acc + f[k] * g[n - k];
        g[n] = R(0) - acc * inv0;
    }
    return g;
}

/// exp(f) for f with zero constant term, using n g_n = sum_k k f_k g_{n-k}.
template <class R>
TruncatedSeries<R> series_exp(const TruncatedSeries<R>& f)
{
    if (!ring_is_zero(f[0]))
        throw std::domain_error("series_exp requires a zero constant term");
    const int q = f.order();
    TruncatedSeries<R> g(q);
    g[0] = R(1);
    for (int n = 1; n <= q; ++n) {
        R acc(0);
        for (int k = 1; k <= n; ++k)
            acc = acc + f[k] * g[n - k] * mpq_class(k);
        g[n] = acc * mpq_class(1, n);
    }
    return g;
}

/// log(f) for f with constant term 1, using n g_n = n f_n - sum_{k<n} k g_k f_{n-k}.
template <class R>
TruncatedSeries<R> series_log(const TruncatedSeries<R>& f)
{
    if (!(f[0] == R(1)))
        throw std::domain_error("series_log requires constant term 1");
    const int q = f.order();
    TruncatedSeries<R> g(q);
    for (int n = 1; n <= q; ++n) {
        R acc = f[n] * mpq_class(n);
        for (int k = 1; k < n; ++k)
            acc = acc - g[k] * f[n - k] * mpq_class(k);
        g[n] = acc * mpq_class(1, n);
    }
    return g;
}

/// f / (1 - x q^k), realized as the truncated geometric series in x q^k.
template <class R>
TruncatedSeries<R> divide_by_factor(TruncatedSeries<R> f, const R& x, int k)
{
    if (k < 1)
        throw std::invalid_argument("factor exponent must be positive");
    for (int i = k; i <= f.order(); ++i)
        f[i] = f[i] + x * f[i - k];
    return f;
}

/// f * (1 - x q^k).
template <class R>
TruncatedSeries<R> multiply_by_factor(TruncatedSeries<R> f, const R& x, int k)
{
    if (k < 1)
        throw std::invalid_argument("factor exponent must be positive");
    for (int i = f.order(); i >= k; --i)
        f[i] = f[i] - x * f[i - k];
    return f;
}

/// (x q; q)_n = prod_{k=1}^{n} (1 - x q^k).
template <class R>
TruncatedSeries<R> pochhammer_finite(const R& x, int n, int order)
{
    if (n < 0)
        throw std::invalid_argument("pochhammer length must be nonnegative");
    auto f = TruncatedSeries<R>::one(order);
    for (int k = 1; k <= n && k <= order; ++k)
        f = multiply_by_factor(std::move(f), x, k);
    return f;
}

/// (x q; q)_inf, cut at k = order since later factors do not reach q^order.
template <class R>
TruncatedSeries<R> pochhammer_infinite(const R& x, int order)
{
    if (order < 1)
        throw std::invalid_argument("series order must be at least 1");
    return pochhammer_finite(x, order, order);
}

/// (q^{n+1}; q)_inf = prod_{k > n} (1 - q^k).
template <class R>
TruncatedSeries<R> pochhammer_shifted(int n, int order)
{
    auto f = TruncatedSeries<R>::one(order);
    for (int k = n + 1; k <= order; ++k)
        f = multiply_by_factor(std::move(f), R(1), k);
    return f;
}

/// Power series in t whose coefficients are q-series of a common order:
/// coefficient m holds the q-series multiplying t^m (not t^m / m!).
template <class R>
class ExpSeries {
public:
    using Series = TruncatedSeries<R>;

    ExpSeries(int t_order, int q_order) : q_order_(q_order), coeffs_(check(t_order) + 1, Series(q_order)) {}

    [[nodiscard]] int t_order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] int q_order() const noexcept { return q_order_; }
    [[nodiscard]] const Series& operator[](int m) const { return coeffs_.at(static_cast<std::size_t>(m)); }

    void set(int m, Series s)
    {
        if (s.order() != q_order_)
            throw std::invalid_argument("t-coefficient has the wrong q-order");
        coeffs_.at(static_cast<std::size_t>(m)) = std::move(s);
    }

    friend ExpSeries operator*(const ExpSeries& a, const ExpSeries& b)
    {
        a.require_compatible(b);
        ExpSeries out(a.t_order(), a.q_order_);
        for (int i = 0; i <= a.t_order(); ++i)
            for (int j = 0; i + j <= a.t_order(); ++j)
                out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return out;
    }

    friend bool operator==(const ExpSeries& a, const ExpSeries& b) { return a.coeffs_ == b.coeffs_; }

    /// exp in t; requires the t^0 coefficient to vanish.
    [[nodiscard]] ExpSeries exp() const
    {
        for (const auto& c : coeffs_[0].coeffs())
            if (!ring_is_zero(c))
                throw std::domain_error("exp in t requires a zero t^0 coefficient");
        ExpSeries g(t_order(), q_order_);
        g.coeffs_[0] = Series::one(q_order_);
        for (int n = 1; n <= t_order(); ++n) {
            Series acc(q_order_);
            for (int k = 1; k <= n; ++k)
                acc += (coeffs_[k] * g.coeffs_[n - k]) * mpq_class(k);
            g.coeffs_[n] = acc * mpq_class(1, n);
        }
        return g;
    }

private:
    static std::size_t check(int t_order)
    {
        if (t_order < 0)
            throw std::invalid_argument("t-order must be nonnegative");
        return static_cast<std::size_t>(t_order);
    }

    void require_compatible(const ExpSeries& o) const
    {
        if (o.t_order() != t_order() || o.q_order_ != q_order_)
            throw std::invalid_argument("ExpSeries shape mismatch");
    }

    int q_order_;
    std::vector<Series> coeffs_;
};

}  // namespace pie
