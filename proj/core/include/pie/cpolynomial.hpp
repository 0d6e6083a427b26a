#pragma once

#include <complex>
#include <map>
#include <string>

#include <gmpxx.h>

namespace pie {

/// Polynomial in the indeterminate c with exact rational coefficients.
/// Zero coefficients are never stored, so equality is structural.
class CPolynomial {
public:
    using Terms = std::map<unsigned, mpq_class>;

    CPolynomial() = default;
    CPolynomial(int value) : CPolynomial(mpq_class(value)) {}  // NOLINT(google-explicit-constructor)
    CPolynomial(const mpz_class& value) : CPolynomial(mpq_class(value)) {}  // NOLINT
    CPolynomial(const mpq_class& value);  // NOLINT

    /// The monomial coeff * c^exponent.
    static CPolynomial monomial(unsigned exponent, const mpq_class& coeff = 1);
    /// The indeterminate c itself.
    static CPolynomial c() { return monomial(1); }

    [[nodiscard]] const Terms& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    /// -1 for the zero polynomial.
    [[nodiscard]] int degree() const noexcept;
    [[nodiscard]] mpq_class coefficient(unsigned exponent) const;
    /// True if the polynomial has no positive-degree terms.
    [[nodiscard]] bool is_constant() const noexcept;

    void add_term(unsigned exponent, const mpq_class& coeff);

    [[nodiscard]] mpq_class evaluate(const mpq_class& c) const;
    [[nodiscard]] std::complex<double> evaluate(std::complex<double> c) const;

    /// The Euler operator c d/dc applied `times` times: c^j -> j^times c^j.
    [[nodiscard]] CPolynomial theta(unsigned times = 1) const;

    [[nodiscard]] CPolynomial pow(unsigned e) const;

    /// Canonical text: ascending exponents, e.g. "c+2*c^2-1/3*c^4"; "0" when zero.
    [[nodiscard]] std::string to_string() const;

    CPolynomial& operator+=(const CPolynomial& rhs);
    CPolynomial& operator-=(const CPolynomial& rhs);
    CPolynomial& operator*=(const CPolynomial& rhs);
    CPolynomial& operator*=(const mpq_class& rhs);

    friend CPolynomial operator+(CPolynomial a, const CPolynomial& b) { return a += b; }
    friend CPolynomial operator-(CPolynomial a, const CPolynomial& b) { return a -= b; }
    friend CPolynomial operator*(const CPolynomial& a, const CPolynomial& b);
    friend CPolynomial operator*(CPolynomial a, const mpq_class& b) { return a *= b; }
    friend CPolynomial operator*(const mpq_class& a, CPolynomial b) { return b *= a; }
    friend CPolynomial operator*(CPolynomial a, int b) { return a *= mpq_class(b); }
    friend CPolynomial operator*(int a, CPolynomial b) { return b *= mpq_class(a); }
    friend CPolynomial operator-(CPolynomial a);

    friend bool operator==(const CPolynomial& a, const CPolynomial& b) { return a.terms_ == b.terms_; }

private:
    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const CPolynomial& p);

/// Canonical string for an exact rational ("3", "-2/5").
std::string to_string(const mpq_class& q);

}  // namespace pie
