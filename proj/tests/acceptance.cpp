// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#include "oracles.hpp"
#include "pie/errors.hpp"
#include "pie/generating_functions.hpp"
#include "pie/identities.hpp"
#include "pie/involution.hpp"

using namespace pie;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }

    void require(const IdentityReport& r)
    {
        if (r.passed() || !ok)
            return;
        ok = false;
        const auto& f = *r.first_failure;
        detail = std::string(tag(r.id)) + " n=" + std::to_string(f.n) + " [" + f.where + "] lhs=" + f.lhs +
                 " rhs=" + f.rhs;
    }
};

CheckConfig exact(int n_max, std::vector<unsigned> exponents = {0, 1, 2, 3, 4})
{
    CheckConfig cfg;
    cfg.n_max = n_max;
    cfg.exponents = std::move(exponents);
    return cfg;
}

Outcome divisor_count_identity()
{
    Outcome o;
    o.require(check_identity(IdentityId::BsBasic, exact(60)));
    for (int n = 1; n <= 60; ++n) {
        long sum = 0;
        for (const auto& p : oracle::distinct_partitions(n))
            sum += (p.size() % 2 ? 1 : -1) * p.back();
        o.require(sum == oracle::d(n), "oracle sum at n=" + std::to_string(n));
    }
    return o;
}

Outcome one_variable_exact()
{
    Outcome o;
    o.require(check_identity(IdentityId::BsOneVar, exact(60)));
    for (int n = 1; n <= 60; ++n)
        for (unsigned z = 0; z <= 4; ++z) {
            const auto rhs = sigma_zc_exact(z, static_cast<std::uint64_t>(n));
            for (const auto& [e, coeff] : oracle::sigma_c(z, n))
                o.require(rhs.coefficient(e) == coeff, "sigma_{z,c} coefficient at n=" + std::to_string(n));
            o.require(static_cast<int>(rhs.terms().size()) == oracle::d(n), "sigma_{z,c} support");
        }
    return o;
}

Outcome one_variable_numeric()
{
    Outcome o;
    CheckConfig cfg;
    cfg.mode = Mode::Numeric;
    cfg.n_max = 30;
    cfg.tolerance = 1e-9;
    cfg.z_grid = {Complex(-1), Complex(-2), Complex(1.5), Complex(0.5, 0.5)};
    cfg.c_grid = {Complex(0.4), Complex(-0.3), Complex(0.4, -0.3), Complex(0.2, 0.7)};
    o.require(cfg.z_grid.size() * cfg.c_grid.size() == 16, "grid size");
    o.require(check_identity(IdentityId::BsOneVar, cfg));
    for (auto z : cfg.z_grid)
        for (auto c : cfg.c_grid)
            for (int n : {7, 18, 30}) {
                const auto lhs = oracle::bs_onevar_lhs_extended(z, c, n);
                const auto rhs = oracle::sigma_zc_extended(z, c, n);
                o.require(std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, std::abs(rhs)), "extended-precision oracle");
                const auto s = lhs_rhs_thm21(n, NumericWeight{z, c});
                o.require(std::abs(s.rhs - rhs) <= 1e-9 * std::max(1.0, std::abs(rhs)), "double vs extended rhs");
            }
    return o;
}

Outcome class_sum_lemma()
{
    Outcome o;
    o.require(check_identity(IdentityId::ClassSum, exact(60)));
    for (int n = 1; n <= 60; ++n) {
        const auto parts = oracle::distinct_partitions(n);
        for (int modulus = 1; modulus <= n; ++modulus) {
            int sum = 0;
            for (const auto& p : parts)
                if (p.front() >= modulus && modulus > p.front() - p.back())
                    sum += p.size() % 2 ? 1 : -1;
            o.require(sum == (n % modulus == 0), "oracle class sum");
        }
    }
    return o;
}

Outcome involution_properties()
{
    Outcome o;
    for (int n = 1; n <= 40; ++n)
        for (int modulus = 1; modulus <= n; ++modulus) {
            const auto audit = audit_pairing(n, modulus);
            o.require(audit.ok(), audit.problem.value_or(""));
        }
    return o;
}

Outcome exponential_relation()
{
    Outcome o;
    CheckConfig cfg;
    cfg.m_max = 5;
    cfg.q_order = 30;
    cfg.c_values = {mpq_class(1), mpq_class(2, 3), mpq_class(-1, 2)};
    o.require(check_identity(IdentityId::Thm22Exp, cfg));
    o.require(check_identity(IdentityId::Thm22Bell, cfg));
    return o;
}

Outcome smallest_part_identities()
{
    Outcome o;
    const auto cfg = exact(50, {0, 1, 2, 3});
    for (auto id : {IdentityId::Thm23, IdentityId::Thm26, IdentityId::Cor24, IdentityId::Cor27})
        o.require(check_identity(id, cfg));
    return o;
}

Outcome two_part_sizes()
{
    Outcome o;
    CheckConfig cfg = exact(200);
    o.require(check_identity(IdentityId::Cor25, cfg));
    o.require(count_exact_part_sizes(6, 2) == 6, "p^(2)(6) = 6");
    int brute = 0;
    for (const auto& p : oracle::partitions(6))
        brute += oracle::count_sizes(p) == 2;
    o.require(brute == 6, "brute-force p^(2)(6)");
    return o;
}

Outcome q_series_identities()
{
    Outcome o;
    CheckConfig cfg;
    cfg.q_order = 25;
    cfg.dilcher_k_max = 4;
    for (auto id : {IdentityId::Entry4, IdentityId::UchimuraTriple, IdentityId::Thm12})
        o.require(check_identity(id, cfg));
    const auto k1 = series_K(1, mpq_class(1), 25);
    for (int n = 1; n <= 25; ++n)
        o.require(k1[n] == oracle::d(n), "Lambert coefficients are d(n)");
    return o;
}

Outcome convolution_formulas()
{
    Outcome o;
    o.require(check_identity(IdentityId::DilcherCm, exact(40)));
    return o;
}

Outcome double_constructions()
{
    Outcome o;
    try {
        for (auto c : {mpq_class(1), mpq_class(2, 3), mpq_class(-1, 2), mpq_class(0), mpq_class(3)}) {
            const auto a = series_A(c, 30);
            const auto want = oracle::series_mul(oracle::euler_product(1, 30), oracle::inverse_euler_product(c, 30));
            for (int i = 0; i <= 30; ++i)
                o.require(a[i] == want[static_cast<std::size_t>(i)], "A(c,q) against product oracle");
            for (unsigned m = 1; m <= 5; ++m)
                series_K(m, c, 30);
        }
        series_A(CPolynomial::c(), 12);
        for (unsigned m = 1; m <= 4; ++m)
            series_K(m, CPolynomial::c(), 12);
    }
    catch (const ConsistencyFault& e) {
        o.require(false, e.what());
    }
    std::vector<mpq_class> u;
    for (int i = 1; i <= 10; ++i)
        u.push_back(oracle::rational(oracle::uniform(-9, 9), oracle::uniform(1, 7)));
    for (unsigned m = 0; m <= 10; ++m)
        o.require(bell_polynomial<mpq_class>(m, u, mpq_class(1)) == oracle::bell_partition_sum(static_cast<int>(m), u),
                  "Bell recurrence vs partition sum at m=" + std::to_string(m));
    return o;
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"signed smallest-part sum over D(n) equals d(n), n<=60", divisor_count_identity},
        {"one-variable divisor identity, exact in c, n<=60, z in 0..4", one_variable_exact},
        {"one-variable divisor identity, 16 complex (z,c) pairs, n<=30, rel tol 1e-9", one_variable_numeric},
        {"class sum equals [N | n], n<=60", class_sum_lemma},
        {"pairing is parity-reversing, class-closed, self-inverse, n<=40", involution_properties},
        {"exponential and Bell relations, m<=5, q-order 30, c in {1,2/3,-1/2}", exponential_relation},
        {"smallest-part polynomial identities and corollaries, n<=50, k in 0..3", smallest_part_identities},
        {"p^(2)(n) closed form, n<=200", two_part_sizes},
        {"q-series identities to q-order 25, binomial form k<=4", q_series_identities},
        {"C_m(n) convolution formulas and M_m coefficients, m<=4, n<=40", convolution_formulas},
        {"internal double constructions (A, K, Bell)", double_constructions},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        }
        catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %2zu %s  %s (%.2f s)%s%s\n", i + 1, o.ok ? "PASS" : "FAIL", criteria[i].first.c_str(),
                    seconds, o.ok ? "" : ": ", o.detail.c_str());
        failures += !o.ok;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
