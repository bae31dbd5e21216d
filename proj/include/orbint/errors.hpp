#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace orbint {

/// Raised when a lattice basis or a quadratic form is degenerate.
class SingularError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a datum violates an operation's precondition
/// (not regular semisimple, wrong side, Cayley pole, ...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The finite quotient between two bounding lattices exceeds the
/// configured enumeration threshold. Never silently truncated.
class InstanceTooLarge : public std::runtime_error {
public:
    InstanceTooLarge(long p, long log_size, std::uint64_t threshold)
        : std::runtime_error("instance too large: quotient of order " + std::to_string(p) + "^" +
                             std::to_string(log_size) + " exceeds threshold " +
                             std::to_string(threshold)),
          p_(p), log_size_(log_size), threshold_(threshold) {}

    long p() const { return p_; }
    long log_size() const { return log_size_; }
    std::uint64_t threshold() const { return threshold_; }

private:
    long p_;
    long log_size_;
    std::uint64_t threshold_;
};

class ResampleExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace orbint
