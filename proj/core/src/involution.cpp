#include "pie/involution.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "pie/errors.hpp"

namespace pie {

std::string to_string(PairingCase c)
{
    switch (c) {
    case PairingCase::Case1: return "Case1";
    case PairingCase::Case2: return "Case2";
    case PairingCase::Fixed: return "Fixed";
    }
    return "?";
}

namespace {

std::string render(const std::vector<Part>& parts)
{
    return parts.empty() ? std::string("0") : Partition(parts).to_string();
}

void resort(std::vector<Part>& w)
{
    std::sort(w.begin(), w.end(), std::greater<>());
}

void require_distinct(const Partition& p)
{
    if (p.empty() || !p.has_distinct_parts())
        throw std::invalid_argument("partition " + p.to_string() + " must have distinct parts");
}

}  // namespace

std::string PairingTrace::serialize() const
{
    std::ostringstream os;
    os << "input " << input.to_string() << " N=" << modulus << " case=" << to_string(pairing_case) << '\n';
    for (std::size_t i = 0; i < steps.size(); ++i)
        os << "step " << i + 1 << ": " << steps[i].action << " | " << render(steps[i].working) << '\n';
    os << "output " << (output ? output->to_string() : std::string("fixed")) << '\n';
    return os.str();
}

bool in_class(const Partition& p, int modulus)
{
    require_distinct(p);
    auto s = stats(p);
    return s.largest >= modulus && modulus > s.largest - s.smallest;
}

int membership_count(const Partition& p)
{
    require_distinct(p);
    int count = 0;
    for (int modulus = 1; modulus <= p.n(); ++modulus)
        if (in_class(p, modulus))
            ++count;
    return count;
}

PairingTrace pair(const Partition& p, int modulus)
{
    if (modulus < 1)
        throw std::invalid_argument("N must be positive");
    if (!in_class(p, modulus))
        throw std::invalid_argument(p.to_string() + " is not in C(" + std::to_string(modulus) + ")");

    PairingTrace trace;
    trace.input = p;
    trace.modulus = modulus;
    const int n = p.n();
    std::vector<Part> w(p.parts().begin(), p.parts().end());

    if (w.size() == 1 && n % modulus == 0) {
        trace.pairing_case = PairingCase::Fixed;
        return trace;
    }

    auto divisible = std::find_if(w.begin(), w.end(), [modulus](Part x) { return x % modulus == 0; });
    if (divisible != w.end()) {
        trace.pairing_case = PairingCase::Case1;
        const Part removed = *divisible;
        trace.moved_part = removed;
        w.erase(divisible);
        trace.steps.push_back({w, "remove " + std::to_string(removed)});
        for (int j = 0; j < removed / modulus; ++j) {
            const Part smallest = w.back();
            w.back() += modulus;
            resort(w);
            trace.steps.push_back({w, "add " + std::to_string(modulus) + " to " + std::to_string(smallest)});
        }
    }
    else {
        trace.pairing_case = PairingCase::Case2;
        const int guard = (n + modulus - 1) / modulus;
        for (int j = 1;; ++j) {
            if (j > guard)
                throw AlgorithmFault("Case 2 on " + p.to_string() + " with N=" + std::to_string(modulus) +
                                     " found no stopping point within j <= " + std::to_string(guard));
            const Part largest = w.front();
            w.front() -= modulus;
            if (w.front() <= 0)
                throw AlgorithmFault("Case 2 on " + p.to_string() + " with N=" + std::to_string(modulus) +
                                     " produced a nonpositive part at j=" + std::to_string(j));
            resort(w);
            trace.steps.push_back({w, "subtract " + std::to_string(modulus) + " from " + std::to_string(largest)});
            const int total = j * modulus;
            if (w.front() - modulus < total && total < w.back() + modulus) {
                trace.moved_part = total;
                w.push_back(total);
                resort(w);
                trace.steps.push_back({w, "insert " + std::to_string(total)});
                break;
            }
        }
    }

    if (std::adjacent_find(w.begin(), w.end()) != w.end())
        throw AlgorithmFault("pairing " + p.to_string() + " with N=" + std::to_string(modulus) +
                             " produced repeated parts " + render(w));
    Partition out(w);
    if (!in_class(out, modulus))
        throw AlgorithmFault("pairing " + p.to_string() + " with N=" + std::to_string(modulus) + " left C(N): " +
                             out.to_string());
    trace.output = std::move(out);
    return trace;
}

int class_sum(int n, int modulus)
{
    if (modulus < 1 || modulus > n)
        throw std::invalid_argument("class_sum needs 1 <= N <= n");
    int sum = 0;
    for (const auto& p : enumerate_distinct(n)) {
        if (!in_class(p, modulus))
            continue;
        sum += (p.size() % 2 == 1) ? 1 : -1;
    }
    return sum;
}

PairingAudit audit_pairing(int n, int modulus)
{
    if (modulus < 1 || modulus > n)
        throw std::invalid_argument("audit_pairing needs 1 <= N <= n");
    PairingAudit audit;
    const auto fail = [&](const std::string& msg) {
        if (!audit.problem)
            audit.problem = "n=" + std::to_string(n) + " N=" + std::to_string(modulus) + ": " + msg;
    };
    for (const auto& p : enumerate_distinct(n)) {
        if (!in_class(p, modulus))
            continue;
        ++audit.members;
        try {
            auto t = pair(p, modulus);
            const bool expect_fixed = p.size() == 1 && n % modulus == 0;
            if (!t.output) {
                ++audit.fixed;
                if (!expect_fixed)
                    fail(p.to_string() + " is fixed");
                continue;
            }
            if (expect_fixed)
                fail(p.to_string() + " should be fixed");
            const auto& q = *t.output;
            if (q.n() != n)
                fail(p.to_string() + " -> " + q.to_string() + " changes the weight");
            if (q.size() % 2 == p.size() % 2)
                fail(p.to_string() + " -> " + q.to_string() + " keeps the parity of #");
            if (!in_class(q, modulus))
                fail(p.to_string() + " -> " + q.to_string() + " leaves the class");
            auto back = pair(q, modulus);
            if (!back.output || *back.output != p)
                fail(p.to_string() + " -> " + q.to_string() + " is not undone");
        }
        catch (const AlgorithmFault& e) {
            fail(e.what());
        }
    }
    if (n % modulus == 0 && audit.fixed != 1)
        fail("expected exactly one fixed point");
    return audit;
}

}  // namespace pie
