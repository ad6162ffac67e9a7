#pragma once

#include <stdexcept>
#include <string>

namespace liestruct {

// Base for all errors thrown by the library. Input problems (bad JSON, bad
// parameters, mismatched fields) derive from InputError; failed mathematical
// certifications (an identity that was supposed to hold does not) derive from
// CertificationError, and carry a witness in the message.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct InputError : Error {
    using Error::Error;
};
struct CertificationError : Error {
    using Error::Error;
};

struct ParseError : InputError {
    using InputError::InputError;
};
struct BadParams : InputError {
    using InputError::InputError;
};
struct MixedFields : InputError {
    using InputError::InputError;
};
struct DivisionByZero : Error {
    using Error::Error;
};
struct AmbientMismatch : InputError {
    using InputError::InputError;
};
struct RowWidthMismatch : InputError {
    using InputError::InputError;
};
struct DimCapExceeded : InputError {
    using InputError::InputError;
};
struct DegreeCapExceeded : InputError {
    using InputError::InputError;
};
struct FlavorMismatch : CertificationError {
    using CertificationError::CertificationError;
};
struct NotDualPair : InputError {
    using InputError::InputError;
};
struct JacobiViolation : CertificationError {
    using CertificationError::CertificationError;
};
struct CharDividesN : InputError {
    using InputError::InputError;
};
struct NotDerivation : CertificationError {
    using CertificationError::CertificationError;
};
struct NotCyclicCocycle : CertificationError {
    using CertificationError::CertificationError;
};
struct XiNotDInvariant : CertificationError {
    using CertificationError::CertificationError;
};
struct FormNotInvariant : CertificationError {
    using CertificationError::CertificationError;
};
struct NotQuasiCharacter : CertificationError {
    using CertificationError::CertificationError;
};
struct NotARepresentation : CertificationError {
    using CertificationError::CertificationError;
};
struct SideConditionViolated : CertificationError {
    using CertificationError::CertificationError;
};

}  // namespace liestruct
