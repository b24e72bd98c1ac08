#include "torhom/errors.hpp"

namespace torhom {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::NonTraceless: return "NonTraceless";
    case ErrorKind::WrongSignature: return "WrongSignature";
    case ErrorKind::BadBlock: return "BadBlock";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::BoundaryMismatch: return "BoundaryMismatch";
    case ErrorKind::ResolutionTooCoarse: return "ResolutionTooCoarse";
    case ErrorKind::IrregularValue: return "IrregularValue";
    case ErrorKind::OffCircle: return "OffCircle";
    case ErrorKind::StepTooLarge: return "StepTooLarge";
    case ErrorKind::NotEquivariant: return "NotEquivariant";
    case ErrorKind::Incompatible: return "Incompatible";
    case ErrorKind::NotRealizable: return "NotRealizable";
    case ErrorKind::PoleHit: return "PoleHit";
    case ErrorKind::NormalizationUndefined: return "NormalizationUndefined";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace torhom
