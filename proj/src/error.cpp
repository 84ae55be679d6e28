#include "wm/error.hpp"

namespace wm {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::Parse: return "Parse";
    case Errc::InvalidCayleyTable: return "InvalidCayleyTable";
    case Errc::NotAssociative: return "NotAssociative";
    case Errc::UnsupportedCharacteristic: return "UnsupportedCharacteristic";
    case Errc::TooLarge: return "TooLarge";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::Precondition: return "Precondition";
    case Errc::NotTwoSided: return "NotTwoSided";
    case Errc::NotAnIdeal: return "NotAnIdeal";
    case Errc::NotIdempotent: return "NotIdempotent";
    case Errc::NotSemisimple: return "NotSemisimple";
    case Errc::NotSquareZero: return "NotSquareZero";
    case Errc::NotStable: return "NotStable";
    case Errc::BadSeed: return "BadSeed";
    case Errc::NonTermination: return "NonTermination";
    case Errc::NoSolution: return "NoSolution";
    case Errc::SingularPhi: return "SingularPhi";
    case Errc::ProjectionMismatch: return "ProjectionMismatch";
    case Errc::CertificationFailure: return "CertificationFailure";
    case Errc::NoWitness: return "NoWitness";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace wm
