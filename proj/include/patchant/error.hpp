#ifndef PATCHANT_ERROR_HPP
#define PATCHANT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace patchant {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad input: unreadable documents, invariant violations, out-of-domain arguments.
class InputError : public Error {
public:
    using Error::Error;
};

/// A well-formed request whose evaluation fails numerically.
class NumericalError : public Error {
public:
    using Error::Error;
};

class MalformedDocument : public InputError {
public:
    MalformedDocument(std::string key, const std::string& what)
        : InputError("malformed document at '" + key + "': " + what), key_(std::move(key)) {}

    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

class ValidationError : public InputError {
public:
    ValidationError(std::string field, const std::string& what)
        : InputError("invalid '" + field + "': " + what), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

class DomainError : public InputError {
public:
    using InputError::InputError;
};

class SingularityError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class InfeasibleDesign : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class NoSolution : public NumericalError {
public:
    NoSolution(const std::string& what, double bracket_low_hz, double bracket_high_hz)
        : NumericalError(what), low_(bracket_low_hz), high_(bracket_high_hz) {}

    double bracket_low_hz() const noexcept { return low_; }
    double bracket_high_hz() const noexcept { return high_; }

private:
    double low_;
    double high_;
};

class DegeneratePattern : public NumericalError {
public:
    using NumericalError::NumericalError;
};

} // namespace patchant

#endif
