#pragma once

#include <stdexcept>
#include <string>

namespace liecert {

enum class ErrorCode {
  EmptyGenerators,
  NotInSpan,
  DegenerateForm,
  NotSublattice,
  UnsupportedRank,
  NotARoot,
  OrbitCapExceeded,
  TransversalIncomplete,
  PairingTooLarge,
  ZeroCocharacter,
  DecompositionNotFound,
  Inapplicable,
  NoReversor,
  EmptyRepresentation,
  PreconditionViolated,
  NotProper,
  UsageError,
  Internal,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

}  // namespace liecert
