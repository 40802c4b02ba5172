#pragma once

#include <stdexcept>
#include <string>

namespace bv {

enum class ErrorKind {
    MixedRings,
    ZeroDenominator,
    DlogOfZero,
    NonUnitDeterminant,
    IndexOutOfRange,
    PatternMismatch,
    NotReduced,
    LengthIncreases,
    EliminationFailed,
    NonUnitDiagonal,
    InvalidLabels,
    BudgetExceeded,
    NotTwoStrand,
    NotPolynomial,
    ParseError,
};

const char* kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace bv
