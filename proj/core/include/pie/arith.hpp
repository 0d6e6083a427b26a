#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "pie/cpolynomial.hpp"

namespace pie {

using Complex = std::complex<double>;

/// Exact mode: integer exponent z >= 0, c kept symbolic.
struct ExactWeight {
    unsigned z = 0;
};

/// Numeric mode: complex z and c.
struct NumericWeight {
    Complex z;
    Complex c;
};

using WeightParams = std::variant<ExactWeight, NumericWeight>;

inline constexpr double kDefaultCDisk = 0.9;

/// Validates |c| <= disk; throws std::domain_error outside it.
NumericWeight make_numeric_weight(Complex z, Complex c, double disk = kDefaultCDisk);

/// Positive divisors of n in ascending order (trial division up to sqrt n).
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// d(n).
std::uint64_t divisor_count(std::uint64_t n);

/// sigma_z(n) = sum_{d | n} d^z.
mpz_class sigma_int(unsigned z, std::uint64_t n);

/// sigma_{z,c}(n) = sum_{d | n} d^z c^d with c symbolic.
CPolynomial sigma_zc_exact(unsigned z, std::uint64_t n);

/// sigma_{z,c}(n) for complex z and c; d^z = exp(z ln d) with ln d real.
Complex sigma_zc_numeric(Complex z, Complex c, std::uint64_t n);

/// j^z = exp(z ln j). Exactly 1 for j = 1, and the plain integer power when z
/// is a nonnegative integer.
Complex complex_power(std::uint64_t j, Complex z);

/// D^z: sum_j a_j c^j -> sum_j a_j j^z c^j, evaluated at c. The constant term
/// survives only for z = 0.
Complex fractional_weight(const CPolynomial& p, Complex z, Complex c);

/// Exact binomial coefficient from a cached Pascal triangle; 0 when k > n.
mpz_class binomial(unsigned n, unsigned k);

inline constexpr unsigned kDefaultBellCap = 10;

/// Complete Bell polynomial Y_m(u_1, ..., u_m) over any commutative ring that
/// supports +, * and scaling by mpq_class, via
///   Y_{k+1} = sum_{i=0}^{k} binom(k, i) Y_{k-i} u_{i+1},  Y_0 = one.
/// Requires u.size() >= m. Throws std::out_of_range when m > cap.
template <class Ring>
Ring bell_polynomial(unsigned m, std::span<const Ring> u, const Ring& one, unsigned cap = kDefaultBellCap)
{
    if (m > cap)
        throw std::out_of_range("Bell polynomial order " + std::to_string(m) + " exceeds cap " +
                                std::to_string(cap));
    if (u.size() < m)
        throw std::invalid_argument("Bell polynomial needs m arguments");
    std::vector<Ring> y;
    y.reserve(m + 1);
    y.push_back(one);
    for (unsigned k = 0; k < m; ++k) {
        Ring next = one * mpq_class(0);
        for (unsigned i = 0; i <= k; ++i) {
            Ring term = y[k - i] * u[i];
            term = term * mpq_class(binomial(k, i));
            next = next + term;
        }
        y.push_back(std::move(next));
    }
    return y[m];
}

}  // namespace pie
