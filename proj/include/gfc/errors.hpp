#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace gfc {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad parameters: non-prime p, lambda outside V_n, coincident points.
class DomainError : public Error {
public:
    using Error::Error;
};

class MalformedPartition : public Error {
public:
    using Error::Error;
};

class ResourceLimit : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

// Raised when a subgroup that must act freely contains an element with fixed points.
class NotFreeError : public PreconditionError {
public:
    NotFreeError(const std::string& what, std::vector<int> witness)
        : PreconditionError(what), witness_(std::move(witness)) {}
    const std::vector<int>& witness() const { return witness_; }

private:
    std::vector<int> witness_;
};

class NotApplicable : public Error {
public:
    using Error::Error;
};

class VerificationFailure : public Error {
public:
    using Error::Error;
};

}  // namespace gfc
