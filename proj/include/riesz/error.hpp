#ifndef RIESZ_ERROR_HPP
#define RIESZ_ERROR_HPP

#include <stdexcept>
#include <string>

namespace riesz {

enum class ErrorCode {
    InvalidArgument = 1,
    Positivity = 2,
    Continuation = 3,
    ElViolation = 4,
    Domain = 5,
    Io = 6,
    Internal = 7,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(ErrorCode::Domain, what) {}
};

struct InvalidArgument : Error {
    explicit InvalidArgument(const std::string& what) : Error(ErrorCode::InvalidArgument, what) {}
};

// Newton step could not keep the iterate positive definite.
struct LostPositivity : Error {
    LostPositivity(const std::string& what, double t) : Error(ErrorCode::Continuation, what), t_last(t) {}
    double t_last;
};

// Continuation step size fell below the floor without making progress.
struct StepUnderflow : Error {
    StepUnderflow(const std::string& what, double t) : Error(ErrorCode::Continuation, what), t_last(t) {}
    double t_last;
};

struct MaxIterations : Error {
    explicit MaxIterations(const std::string& what) : Error(ErrorCode::Continuation, what) {}
};

struct PositivityAuditFailed : Error {
    explicit PositivityAuditFailed(const std::string& what) : Error(ErrorCode::Positivity, what) {}
};

} // namespace riesz

#endif
