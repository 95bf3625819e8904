#include "rsg/error.hpp"

namespace rsg {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::IdenticallyZero: return "IdenticallyZero";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::ChainError: return "ChainError";
    case ErrorCode::DegenerateFlat: return "DegenerateFlat";
    case ErrorCode::UndecidableAtTolerance: return "UndecidableAtTolerance";
    case ErrorCode::TangentialDegeneracy: return "TangentialDegeneracy";
    case ErrorCode::EventAngle: return "EventAngle";
    case ErrorCode::NegativeGenus: return "NegativeGenus";
    case ErrorCode::GenericityFailure: return "GenericityFailure";
    case ErrorCode::ClassificationMismatch: return "ClassificationMismatch";
    case ErrorCode::ParityViolation: return "ParityViolation";
    case ErrorCode::GapViolation: return "GapViolation";
    case ErrorCode::PeakExceedsBound: return "PeakExceedsBound";
    case ErrorCode::InvalidSequence: return "InvalidSequence";
    case ErrorCode::NonGenericLevel: return "NonGenericLevel";
    case ErrorCode::ParityError: return "ParityError";
    case ErrorCode::InvalidGraphic: return "InvalidGraphic";
    case ErrorCode::UnknownExample: return "UnknownExample";
    case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

} // namespace rsg
