#pragma once

#include <stdexcept>
#include <string>

namespace torhom {

enum class ErrorKind {
  SingularMatrix,
  NonTraceless,
  WrongSignature,
  BadBlock,
  NotHermitian,
  BoundaryMismatch,
  ResolutionTooCoarse,
  IrregularValue,
  OffCircle,
  StepTooLarge,
  NotEquivariant,
  Incompatible,
  NotRealizable,
  PoleHit,
  NormalizationUndefined,
  InvalidArgument,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace torhom
