#pragma once

#include <stdexcept>
#include <string>

namespace qtrin {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define QTRIN_DECLARE_ERROR(Name)            \
    class Name : public Error {              \
    public:                                  \
        using Error::Error;                  \
    }

QTRIN_DECLARE_ERROR(NonUnitConstantTerm);
QTRIN_DECLARE_ERROR(DivergentProduct);
QTRIN_DECLARE_ERROR(UnknownAlgebra);
QTRIN_DECLARE_ERROR(DimensionMismatch);
QTRIN_DECLARE_ERROR(PreconditionViolation);
QTRIN_DECLARE_ERROR(RepresentationMismatch);
QTRIN_DECLARE_ERROR(InvalidCharLabel);
QTRIN_DECLARE_ERROR(InvalidBranchLabel);
QTRIN_DECLARE_ERROR(UnknownIdentity);
QTRIN_DECLARE_ERROR(RunawayGuard);

#undef QTRIN_DECLARE_ERROR

}  // namespace qtrin
