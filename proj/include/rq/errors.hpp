#pragma once

#include <stdexcept>
#include <string>

namespace rq {

// Base for every error raised by the library. kind() is a stable identifier
// used in JSON error records and by tests.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

#define RQ_DEFINE_ERROR(Name)                                             \
    class Name : public Error {                                           \
    public:                                                               \
        explicit Name(const std::string& what) : Error(#Name, what) {}    \
    };

RQ_DEFINE_ERROR(SyntaxError)
RQ_DEFINE_ERROR(DivisionByZero)
RQ_DEFINE_ERROR(NotASquare)
RQ_DEFINE_ERROR(ZeroDivisor)
RQ_DEFINE_ERROR(InvalidField)
RQ_DEFINE_ERROR(ConstraintViolation)
RQ_DEFINE_ERROR(InternalCheckFailed)
RQ_DEFINE_ERROR(UnsupportedFamily)
RQ_DEFINE_ERROR(UnsupportedKind)
RQ_DEFINE_ERROR(NoSuchRow)
RQ_DEFINE_ERROR(NotHomogeneous)
RQ_DEFINE_ERROR(Hyperelliptic)
RQ_DEFINE_ERROR(EliminationMismatch)
RQ_DEFINE_ERROR(EpsilonZero)
RQ_DEFINE_ERROR(SubstitutionMismatch)
RQ_DEFINE_ERROR(ZeroForm)
RQ_DEFINE_ERROR(PointNotOnCurve)
RQ_DEFINE_ERROR(NotSmoothPoint)
RQ_DEFINE_ERROR(NotSingular)
RQ_DEFINE_ERROR(DegreeMismatch)
RQ_DEFINE_ERROR(NonRationalCenter)
RQ_DEFINE_ERROR(UnknownCurve)
RQ_DEFINE_ERROR(IdentityFailed)
RQ_DEFINE_ERROR(UsageError)

#undef RQ_DEFINE_ERROR

}  // namespace rq
