#include "pie/arith.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

namespace pie {

NumericWeight make_numeric_weight(Complex z, Complex c, double disk)
{
    if (std::abs(c) > disk)
        throw std::domain_error("|c| = " + std::to_string(std::abs(c)) + " lies outside the configured disk " +
                                std::to_string(disk));
    return {z, c};
}

std::vector<std::uint64_t> divisors(std::uint64_t n)
{
    if (n == 0)
        throw std::invalid_argument("divisors of 0 are not defined");
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d)
            continue;
        small.push_back(d);
        if (d != n / d)
            large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::uint64_t divisor_count(std::uint64_t n)
{
    return divisors(n).size();
}

mpz_class sigma_int(unsigned z, std::uint64_t n)
{
    mpz_class acc = 0;
    for (auto d : divisors(n)) {
        mpz_class term;
        mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(d), z);
        acc += term;
    }
    return acc;
}

CPolynomial sigma_zc_exact(unsigned z, std::uint64_t n)
{
    CPolynomial p;
    for (auto d : divisors(n)) {
        mpz_class w;
        mpz_ui_pow_ui(w.get_mpz_t(), static_cast<unsigned long>(d), z);
        p.add_term(static_cast<unsigned>(d), mpq_class(w));
    }
    return p;
}

Complex complex_power(std::uint64_t j, Complex z)
{
    if (j == 0)
        throw std::invalid_argument("complex_power needs a positive base");
    if (j == 1)
        return 1.0;
    if (z.imag() == 0.0 && z.real() >= 0.0 && z.real() <= 64.0 && std::floor(z.real()) == z.real())
        return std::pow(static_cast<double>(j), static_cast<int>(z.real()));
    return std::exp(z * std::log(static_cast<double>(j)));
}

Complex sigma_zc_numeric(Complex z, Complex c, std::uint64_t n)
{
    Complex acc = 0;
    for (auto d : divisors(n))
        acc += complex_power(d, z) * std::pow(c, static_cast<int>(d));
    return acc;
}

Complex fractional_weight(const CPolynomial& p, Complex z, Complex c)
{
    Complex acc = 0;
    for (const auto& [e, a] : p.terms()) {
        if (e == 0) {
            if (z == Complex(0.0))
                acc += a.get_d();
            continue;
        }
        acc += a.get_d() * complex_power(e, z) * std::pow(c, static_cast<int>(e));
    }
    return acc;
}

mpz_class binomial(unsigned n, unsigned k)
{
    if (k > n)
        return 0;
    static std::mutex mutex;
    static std::vector<std::vector<mpz_class>> rows{{1}};
    std::lock_guard lock(mutex);
    while (rows.size() <= n) {
        const auto& prev = rows.back();
        std::vector<mpz_class> row(prev.size() + 1);
        row.front() = 1;
        row.back() = 1;
        for (std::size_t i = 1; i + 1 < row.size(); ++i)
            row[i] = prev[i - 1] + prev[i];
        rows.push_back(std::move(row));
    }
    return rows[n][k];
}

}  // namespace pie
