#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "pie/arith.hpp"
#include "pie/cpolynomial.hpp"

namespace pie {

enum class IdentityId {
    BsBasic,         // sum_{D(n)} (-1)^{#-1} s = d(n)
    BsInt,           // integer-power form, sigma_z(n)
    BsOneVar,        // one-variable form, sigma_{z,c}(n), any complex z
    UchimuraTriple,  // M_1 = Kluyver sum = sum q^n/(1-q^n)
    Entry4,          // Entry 4 series identity and its c = 1 case
    DilcherCm,       // C_m(n) convolution formulas, m <= 4
    Eq113,           // coefficient of q^n in M_{m,c} as a D(n) sum
    Thm12,           // k-fold binomial identity
    Thm22Exp,        // A(c e^t, q) expansions agree
    Thm22Bell,       // M_{m,c} = A(c,q) Y_m(K_{1,c}, ..)
    Thm23,
    Cor24,
    Cor25,
    Thm26,
    Cor27,
    AglPti,
    AglScaled,
    ClassSum,
};

/// Every registered identity, in registry order.
std::span<const IdentityId> all_identities();

/// Canonical upper-case tag, e.g. "BS_BASIC".
std::string_view tag(IdentityId id);

/// Case-insensitive lookup by tag.
std::optional<IdentityId> parse_identity(std::string_view text);

/// Whether the identity has a complex-parameter numeric check.
bool supports_numeric(IdentityId id);

enum class Mode { Exact, Numeric };

std::string_view to_string(Mode mode);

struct CheckConfig {
    Mode mode = Mode::Exact;
    int n_min = 1;
    int n_max = 60;
    /// z (or k, or m) values in exact mode.
    std::vector<unsigned> exponents{0, 1, 2, 3, 4};
    /// Numeric mode checks every (z, c) pair of the two grids.
    std::vector<Complex> z_grid{{-2.0, 0.0}, {-1.0, 0.0}, {1.5, 0.0}, {0.5, 0.5}};
    std::vector<Complex> c_grid{{0.4, 0.0}, {-0.3, 0.0}, {0.4, -0.3}, {0.2, 0.7}};
    double tolerance = 1e-9;
    double c_disk = kDefaultCDisk;
    int q_order = 30;
    unsigned m_max = 5;
    std::vector<mpq_class> c_values{mpq_class(1), mpq_class(2, 3), mpq_class(-1, 2)};
    int dilcher_k_max = 4;
    bool measure_time = true;
};

struct ReportRange {
    int n_min = 0;
    int n_max = 0;
    std::vector<std::string> z;
    std::vector<std::string> c;
    int q_order = 0;
};

struct Failure {
    int n = 0;  // n, or the q-power for series identities
    std::string where;
    std::string lhs;
    std::string rhs;
};

struct IdentityReport {
    IdentityId id = IdentityId::BsBasic;
    Mode mode = Mode::Exact;
    ReportRange range;
    std::optional<Failure> first_failure;
    double elapsed_ms = 0;
    /// Numeric mode: largest ratio sum|terms| / max(1, |rhs|) seen.
    std::optional<double> condition;

    [[nodiscard]] bool passed() const noexcept { return !first_failure; }
};

template <class V>
struct Sides {
    V lhs;
    V rhs;
};

struct NumericSides {
    Complex lhs;
    Complex rhs;
    /// sum of |terms| over both sides; a cancellation estimate.
    double magnitude = 0;
};

// One-variable divisor identity:
//   sum_{D(n)} (-1)^{#-1} sum_{j=1}^{s} (l-s+j)^z c^{l-s+j} = sigma_{z,c}(n).
Sides<CPolynomial> lhs_rhs_thm21(int n, ExactWeight w);
NumericSides lhs_rhs_thm21(int n, NumericWeight w);

// Smallest-part power identity:
//   sum_{D(n)} (-1)^{#-1} s^k c^s = sum_{P(n)} sum_{j=0}^{nu} (-1)^j binom(nu,j) (l-j)^k c^{l-j}.
// The j = l term (base zero) is taken as 0 for every k, its limiting value.
Sides<CPolynomial> lhs_rhs_thm23(int n, ExactWeight w);
NumericSides lhs_rhs_thm23(int n, NumericWeight w);

// Truncated power-sum identity:
//   sum_{D(n)} (-1)^{#-1} sum_{j=1}^{s} j^k c^j
//     = sum_{P(n), nu>=2} sum_{j=0}^{nu-1} (-1)^j binom(nu-1,j) (l-j)^k c^{l-j} + sigma_{k,c}(n).
Sides<CPolynomial> lhs_rhs_thm26(int n, ExactWeight w);
NumericSides lhs_rhs_thm26(int n, NumericWeight w);

/// p^(2)(n) against sum_{D(n)} (-1)^{#} s (l - s).
Sides<mpz_class> check_cor27(int n);

/// p^(2)(n) against (sum_{j<n} d(j)d(n-j) + d(n) - sigma(n)) / 2.
/// Throws AlgorithmFault if the numerator is odd.
Sides<mpz_class> check_cor25(int n);

/// Partition form of the smallest-part c-weighted identity; `scaled` multiplies
/// both sides by (c - 1).
Sides<CPolynomial> check_agl(int n, bool scaled);

/// C_m(n) = sum_{D(n)} (-1)^{#-1} s^m, by enumeration.
mpz_class dilcher_cm_enumerated(unsigned m, int n);

/// C_m(n) from the divisor-function convolution formulas, 1 <= m <= 4.
mpz_class dilcher_cm_formula(unsigned m, int n);

/// Exponential and Bell forms of the M_{m,c} relation at a
/// rational c. Reported as THM_2_2_EXP; a Bell mismatch is reported with
/// where = "bell m=...".
IdentityReport check_thm22(unsigned m_max, int q_order, const mpq_class& c);

/// Runs one registered identity over the configured range. Throws
/// std::invalid_argument for numeric mode on an exact-only identity.
IdentityReport check_identity(IdentityId id, const CheckConfig& config);

/// Runs every identity that supports config.mode.
std::vector<IdentityReport> check_all(const CheckConfig& config);

}  // namespace pie
