#pragma once

#include <stdexcept>
#include <string>

namespace storalloc {

// Base type for everything thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A constructor argument violates the model constraints (r > n, T < F, ...).
class InvalidParameter : public Error {
public:
    using Error::Error;
};

// A symmetric placement needs more nodes than the network has.
class DoesNotFit : public Error {
public:
    using Error::Error;
};

// Chunk size outside [1..F].
class InvalidChunk : public Error {
public:
    using Error::Error;
};

// A two-point profile with alpha_j > 1 cannot be realized.
class InfeasibleProfile : public Error {
public:
    using Error::Error;
};

// Brute-force enumeration would exceed the caller's budget. Carries the
// computed bound as a decimal string (it may not fit any integer type).
class SearchSpaceTooLarge : public Error {
public:
    SearchSpaceTooLarge(const std::string& msg, std::string bound)
        : Error(msg), bound_(std::move(bound)) {}
    const std::string& bound() const { return bound_; }

private:
    std::string bound_;
};

// An enumeration-based oracle was asked for more than it can do.
class InstanceTooLarge : public Error {
public:
    using Error::Error;
};

}  // namespace storalloc
