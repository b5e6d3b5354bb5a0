#pragma once

#include <exception>
#include <stdexcept>
#include <string>

namespace cpt {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inadmissible input. The CLI maps these to exit code 1.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// An enumeration or expansion would exceed its configured budget (exit code 2).
class SizeError : public Error {
public:
    using Error::Error;
};

/// A proven identity failed to hold. Only an implementation bug can raise this (exit code 3).
class TheoremViolation : public Error {
public:
    using Error::Error;
};

#define CPT_VALIDATION_ERROR(Name)          \
    class Name : public ValidationError {   \
    public:                                 \
        using ValidationError::ValidationError; \
    };

CPT_VALIDATION_ERROR(PartitionError)
CPT_VALIDATION_ERROR(GraphError)
CPT_VALIDATION_ERROR(OddSizeError)
CPT_VALIDATION_ERROR(IndependenceError)
CPT_VALIDATION_ERROR(EulerianError)
CPT_VALIDATION_ERROR(SelectionError)
CPT_VALIDATION_ERROR(ChordSystemError)
CPT_VALIDATION_ERROR(SharedEndpointError)
CPT_VALIDATION_ERROR(DegenerateGridError)
CPT_VALIDATION_ERROR(ZeroCoordinateError)
CPT_VALIDATION_ERROR(ImproperColoringError)
CPT_VALIDATION_ERROR(IoError)

#undef CPT_VALIDATION_ERROR

/// Instance-file problem. Carries the offending line (0 if unknown), the JSON
/// field path, and, when validation of a parsed value failed, the original error.
class FormatError : public ValidationError {
public:
    FormatError(const std::string& message, std::size_t line, std::string field,
                std::exception_ptr cause = nullptr);

    std::size_t line() const noexcept { return line_; }
    const std::string& field() const noexcept { return field_; }
    std::exception_ptr cause() const noexcept { return cause_; }

private:
    std::size_t line_;
    std::string field_;
    std::exception_ptr cause_;
};

}  // namespace cpt
