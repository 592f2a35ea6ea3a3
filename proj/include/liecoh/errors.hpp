#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace liecoh {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input text could not be parsed; `pos` is a 0-based offset into the input.
struct ParseError : Error {
    std::size_t pos;
    ParseError(std::size_t pos_, const std::string& reason)
        : Error("parse error at offset " + std::to_string(pos_) + ": " + reason), pos(pos_) {}
};

struct NonAscendingPair : ParseError {
    NonAscendingPair(std::size_t pos_, const std::string& pair)
        : ParseError(pos_, "pair '" + pair + "' must have strictly ascending digits") {}
};

struct DimensionOutOfRange : Error {
    explicit DimensionOutOfRange(int n)
        : Error("dimension " + std::to_string(n) + " outside supported range 2..9") {}
};

struct JacobiViolation : Error {
    int generator;  // 1-based index k with d(d alpha_k) != 0
    explicit JacobiViolation(int k)
        : Error("d^2(alpha_" + std::to_string(k) + ") != 0: Jacobi identity fails"), generator(k) {}
};

struct AmbientMismatch : Error {
    AmbientMismatch() : Error("operands live in different ambient dimensions") {}
};

struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(int i) : Error("basis index " + std::to_string(i) + " out of range") {}
};

struct NotNested : Error {
    explicit NotNested(const std::string& what) : Error("boundary space escapes cycle space: " + what) {}
};

struct NotChainMap : Error {
    explicit NotChainMap(const std::string& what) : Error("map is not compatible with cycles/boundaries: " + what) {}
};

struct NotSolvable : Error {
    NotSolvable() : Error("derived series stabilizes at a nonzero subspace") {}
};

struct NilpotentInput : Error {
    NilpotentInput() : Error("operation requires a non-nilpotent algebra") {}
};

struct InternalVerificationFailure : Error {
    explicit InternalVerificationFailure(const std::string& what)
        : Error("internal post-verification failed: " + what) {}
};

struct OddDimension : Error {
    OddDimension() : Error("symplectic structures require even dimension") {}
};

struct WrongGrade : Error {
    explicit WrongGrade(const std::string& what) : Error(what) {}
};

struct NotSymplectic : Error {
    explicit NotSymplectic(const std::string& what) : Error("form is not symplectic: " + what) {}
};

struct CalibrationFailure : Error {
    CalibrationFailure() : Error("sign calibration of the symplectic operators failed") {}
};

struct CrossCheckMismatch : Error {
    explicit CrossCheckMismatch(const std::string& what) : Error("operator cross-check mismatch: " + what) {}
};

struct WellDefinednessFailure : Error {
    explicit WellDefinednessFailure(const std::string& what)
        : Error("cohomology quotient ill-defined: " + what) {}
};

struct CriteriaDisagreement : Error {
    explicit CriteriaDisagreement(const std::string& what)
        : Error("equivalent Hard Lefschetz criteria disagree: " + what) {}
};

struct UnknownName : Error {
    explicit UnknownName(const std::string& name) : Error("unknown catalog entry '" + name + "'") {}
};

struct ArityMismatch : Error {
    explicit ArityMismatch(const std::string& what) : Error(what) {}
};

struct ConstraintViolation : Error {
    std::string constraint;
    explicit ConstraintViolation(const std::string& c)
        : Error("parameter constraint violated: " + c), constraint(c) {}
};

}  // namespace liecoh
