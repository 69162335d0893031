#pragma once

#include <stdexcept>
#include <string>

namespace terracini {

// Malformed or inconsistent caller input (bad literals, duplicate points,
// off-curve points, non-prime moduli, ...).
struct InvalidInput : std::invalid_argument {
    explicit InvalidInput(const std::string& msg) : std::invalid_argument(msg) {}
};

// A rational entry could not be reduced mod p (p divides a denominator).
struct ReductionError : std::runtime_error {
    explicit ReductionError(const std::string& msg) : std::runtime_error(msg) {}
};

// The working characteristic divides the form degree, so the Euler relation
// (and with it the jet-row convention) breaks down.
struct UnsupportedCharacteristic : std::runtime_error {
    explicit UnsupportedCharacteristic(const std::string& msg) : std::runtime_error(msg) {}
};

// A bounded resampling loop ran out of redraws.
struct RetryExhausted : std::runtime_error {
    explicit RetryExhausted(const std::string& msg) : std::runtime_error(msg) {}
};

// Construction parameters fail a feasibility or parity precondition.
// CLI maps this to the "refusal" exit code.
struct Infeasible : std::runtime_error {
    explicit Infeasible(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace terracini
