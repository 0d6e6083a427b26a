#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pie/partition.hpp"

namespace pie {

enum class PairingCase { Case1, Case2, Fixed };

std::string to_string(PairingCase c);

struct PairingStep {
    std::vector<Part> working;  // snapshot after the action, nonincreasing
    std::string action;
};

/// Record of one application of the sign-reversing pairing on D(n) and C(N).
struct PairingTrace {
    Partition input;
    int modulus = 0;   // N
    PairingCase pairing_case = PairingCase::Fixed;
    std::vector<PairingStep> steps;
    /// Case 1: the removed part j*N. Case 2: the inserted total j*N. Fixed: 0.
    int moved_part = 0;
    /// Absent for the fixed point.
    std::optional<Partition> output;

    /// One step per line, e.g. "step 1: remove 4 | 2".
    [[nodiscard]] std::string serialize() const;
};

/// Membership in C(N): l(p) >= N > l(p) - s(p). Throws std::invalid_argument
/// if p does not have distinct parts.
bool in_class(const Partition& p, int modulus);

/// Number of N >= 1 with p in C(N); equals s(p).
int membership_count(const Partition& p);

/// Pairs p with a partition of opposite parity in #(p).
///
/// Case 1 (p has a part j*N and at least two parts): remove that part, then j
/// times add N to the current smallest part. Case 2 (no part divisible by N):
/// for j = 1, 2, ... subtract N from the current largest part and stop at the
/// first j with l(w) - N < jN < s(w) + N for the working multiset w; insert
/// jN. The single part (n) with N | n is the fixed point.
///
/// Throws std::invalid_argument unless p is a distinct-parts partition in
/// C(N); throws AlgorithmFault if the loop guard j > ceil(n/N) is exceeded,
/// a working part becomes nonpositive, or the output repeats a part.
PairingTrace pair(const Partition& p, int modulus);

/// sum over D(n) and C(N) of (-1)^{#(p)-1}.
int class_sum(int n, int modulus);

struct PairingAudit {
    int members = 0;   // |D(n) and C(N)|
    int fixed = 0;
    /// First violated property, if any.
    std::optional<std::string> problem;

    [[nodiscard]] bool ok() const noexcept { return !problem; }
};

/// Applies pair() to every member of D(n) and C(N) and checks that it flips
/// the parity of #, stays in the class, is self-inverse, and fixes exactly
/// the single part (n) when N | n. AlgorithmFault is reported as a problem.
PairingAudit audit_pairing(int n, int modulus);

}  // namespace pie
