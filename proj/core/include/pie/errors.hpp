#pragma once

#include <stdexcept>
#include <string>

namespace pie {

// Raised when a combinatorial construction leaves the region where it is
// known to terminate or to produce a valid partition (loop guard, nonpositive
// intermediate part, duplicate part in the output).
class AlgorithmFault : public std::runtime_error {
public:
    explicit AlgorithmFault(const std::string& what) : std::runtime_error("algorithm fault: " + what) {}
};

// Raised when two independent constructions of the same object disagree.
class ConsistencyFault : public std::runtime_error {
public:
    explicit ConsistencyFault(const std::string& what) : std::runtime_error("consistency fault: " + what) {}
};

}  // namespace pie
