#include "pie/cpolynomial.hpp"

#include <ostream>

namespace pie {

CPolynomial::CPolynomial(const mpq_class& value)
{
    add_term(0, value);
}

CPolynomial CPolynomial::monomial(unsigned exponent, const mpq_class& coeff)
{
    CPolynomial p;
    p.add_term(exponent, coeff);
    return p;
}

int CPolynomial::degree() const noexcept
{
    return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first);
}

mpq_class CPolynomial::coefficient(unsigned exponent) const
{
    auto it = terms_.find(exponent);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

bool CPolynomial::is_constant() const noexcept
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

void CPolynomial::add_term(unsigned exponent, const mpq_class& value)
{
    if (value == 0)
        return;
    mpq_class coeff(value);
    coeff.canonicalize();
    auto [it, inserted] = terms_.try_emplace(exponent, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

mpq_class CPolynomial::evaluate(const mpq_class& c) const
{
    mpq_class acc = 0;
    mpq_class power = 1;
    unsigned at = 0;
    for (const auto& [e, a] : terms_) {
        for (; at < e; ++at)
            power *= c;
        acc += a * power;
    }
    return acc;
}

std::complex<double> CPolynomial::evaluate(std::complex<double> c) const
{
    std::complex<double> acc = 0;
    for (const auto& [e, a] : terms_)
        acc += a.get_d() * std::pow(c, static_cast<int>(e));
    return acc;
}

CPolynomial CPolynomial::theta(unsigned times) const
{
    CPolynomial out;
    for (const auto& [e, a] : terms_) {
        mpz_class w;
        mpz_ui_pow_ui(w.get_mpz_t(), e, times);
        out.add_term(e, a * w);
    }
    return out;
}

CPolynomial CPolynomial::pow(unsigned e) const
{
    CPolynomial result(1);
    CPolynomial base = *this;
    while (e) {
        if (e & 1u)
            result *= base;
        e >>= 1u;
        if (e)
            base *= base;
    }
    return result;
}

std::string CPolynomial::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& [e, a] : terms_) {
        mpq_class mag = abs(a);
        bool neg = a < 0;
        if (!out.empty())
            out += neg ? '-' : '+';
        else if (neg)
            out += '-';
        if (e == 0) {
            out += pie::to_string(mag);
            continue;
        }
        if (mag != 1)
            out += pie::to_string(mag) + "*";
        out += "c";
        if (e > 1)
            out += "^" + std::to_string(e);
    }
    return out;
}

CPolynomial& CPolynomial::operator+=(const CPolynomial& rhs)
{
    for (const auto& [e, a] : rhs.terms_)
        add_term(e, a);
    return *this;
}

CPolynomial& CPolynomial::operator-=(const CPolynomial& rhs)
{
    for (const auto& [e, a] : rhs.terms_)
        add_term(e, -a);
    return *this;
}

CPolynomial operator*(const CPolynomial& a, const CPolynomial& b)
{
    CPolynomial out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            out.add_term(ea + eb, ca * cb);
    return out;
}

CPolynomial& CPolynomial::operator*=(const CPolynomial& rhs)
{
    *this = *this * rhs;
    return *this;
}

CPolynomial& CPolynomial::operator*=(const mpq_class& value)
{
    if (value == 0) {
        terms_.clear();
        return *this;
    }
    mpq_class rhs(value);
    rhs.canonicalize();
    for (auto& [e, a] : terms_)
        a *= rhs;
    return *this;
}

CPolynomial operator-(CPolynomial a)
{
    for (auto& [e, c] : a.terms_)
        c = -c;
    return a;
}

std::ostream& operator<<(std::ostream& os, const CPolynomial& p)
{
    return os << p.to_string();
}

std::string to_string(const mpq_class& q)
{
    return q.get_str();
}

}  // namespace pie
