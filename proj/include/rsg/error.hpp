#ifndef RSG_ERROR_HPP
#define RSG_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace rsg {

enum class ErrorCode {
    IdenticallyZero,
    SchemaError,
    ChainError,
    DegenerateFlat,
    UndecidableAtTolerance,
    TangentialDegeneracy,
    EventAngle,
    NegativeGenus,
    GenericityFailure,
    ClassificationMismatch,
    ParityViolation,
    GapViolation,
    PeakExceedsBound,
    InvalidSequence,
    NonGenericLevel,
    ParityError,
    InvalidGraphic,
    UnknownExample,
    Io,
};

std::string_view to_string(ErrorCode code);

// Single exception type for the engine; callers branch on code().
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace rsg

#endif
