// Error types shared across the library.
//
// Every throwing path is classified so the command line tool can map failures
// to its exit-code contract: usage errors (bad arguments, malformed input),
// claim errors (a verified statement does not hold), and resource errors
// (a horizon or memory cap would be exceeded).  Code that catches these should
// catch the category base class, not individual leaf types.

#ifndef VDWLAB_ERRORS_HPP
#define VDWLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace vdwlab {

enum class ErrorCategory { usage, claim, resource };

class Error : public std::runtime_error {
public:
    Error(ErrorCategory cat, const std::string& what_arg)
        : std::runtime_error(what_arg), category_(cat) {}
    ErrorCategory category() const noexcept { return category_; }

private:
    ErrorCategory category_;
};

class UsageError : public Error {
public:
    explicit UsageError(const std::string& w) : Error(ErrorCategory::usage, w) {}
};

class ClaimError : public Error {
public:
    explicit ClaimError(const std::string& w) : Error(ErrorCategory::claim, w) {}
};

class ResourceError : public Error {
public:
    explicit ResourceError(const std::string& w) : Error(ErrorCategory::resource, w) {}
};

// Usage-category leaves.

struct UnknownSymbolError : UsageError {
    explicit UnknownSymbolError(const std::string& w) : UsageError("unknown symbol: " + w) {}
};

struct SeedNotExtensibleError : UsageError {
    explicit SeedNotExtensibleError(const std::string& w) : UsageError("seed not extensible: " + w) {}
};

struct EmptySetError : UsageError {
    EmptySetError() : UsageError("operation requires a nonempty set") {}
};

struct WindowTooLargeError : UsageError {
    explicit WindowTooLargeError(const std::string& w) : UsageError("window too large: " + w) {}
};

struct NotAdmissibleError : UsageError {
    explicit NotAdmissibleError(const std::string& w) : UsageError("word not admissible: " + w) {}
};

struct CylinderMismatchError : UsageError {
    explicit CylinderMismatchError(const std::string& w) : UsageError("cylinder mismatch: " + w) {}
};

struct GeneratorsTooShortError : UsageError {
    explicit GeneratorsTooShortError(const std::string& w) : UsageError("generator list too short: " + w) {}
};

struct UnknownExperimentError : UsageError {
    explicit UnknownExperimentError(const std::string& w) : UsageError("unknown experiment: " + w) {}
};

struct InvalidOverrideError : UsageError {
    explicit InvalidOverrideError(const std::string& w) : UsageError("invalid override: " + w) {}
};

struct ParseError : UsageError {
    explicit ParseError(const std::string& w) : UsageError("parse error: " + w) {}
};

struct UndecodableError : UsageError {
    explicit UndecodableError(const std::string& w) : UsageError("prefix not decodable: " + w) {}
};

struct IndexOutOfRangeError : UsageError {
    explicit IndexOutOfRangeError(const std::string& w) : UsageError("index out of range: " + w) {}
};

// Claim-category leaves.

struct InvariantViolationError : ClaimError {
    explicit InvariantViolationError(const std::string& w) : ClaimError("invariant violated: " + w) {}
};

struct FNotUnboundedError : ClaimError {
    explicit FNotUnboundedError(const std::string& w) : ClaimError("budget function not unbounded: " + w) {}
};

// Resource-category leaves.

struct HorizonExceededError : ResourceError {
    explicit HorizonExceededError(const std::string& w) : ResourceError("horizon cap exceeded: " + w) {}
};

struct MemberCapExceededError : ResourceError {
    explicit MemberCapExceededError(const std::string& w) : ResourceError("member cap exceeded: " + w) {}
};

} // namespace vdwlab

#endif
