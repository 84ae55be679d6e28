#pragma once

#include <stdexcept>
#include <string>

namespace wm {

// Every failure mode of the library, one code per condition.  Codes in the
// Input group describe bad or unsupported user input; the rest signal either
// violated preconditions or internal defects caught by certification.
enum class Errc {
  // input / format
  Parse,
  InvalidCayleyTable,
  NotAssociative,
  UnsupportedCharacteristic,
  TooLarge,
  // precondition violations
  FieldMismatch,
  DimensionMismatch,
  Precondition,
  NotTwoSided,
  NotAnIdeal,
  NotIdempotent,
  NotSemisimple,
  NotSquareZero,
  NotStable,
  BadSeed,
  NonTermination,
  // internal defects (postcondition/certification failures)
  NoSolution,
  SingularPhi,
  ProjectionMismatch,
  CertificationFailure,
  NoWitness,
  Internal,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

inline void require(bool cond, Errc code, const std::string& message) {
  if (!cond) fail(code, message);
}

}  // namespace wm
