#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hbt {

enum class ErrorCode {
  CrossingChords,
  NotInvolution,
  ArcNotInDiagram,
  DisallowedClosedComponent,
  DegreeViolation,
  BadIdentification,
  EmptyIntersection,
  UntightBoundary,
  BadCertificate,
  ResourceLimit,
  BadSlope,
  SyntaxError,
  SemanticError,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

// Every failure in the library is reported through this type. `cause` differs
// from `code` only for SemanticError, where it names the validation failure
// that was found while loading a document. `locator` is a line number or an
// element path ("disk 1", "outer arc 3"), empty when not applicable.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string locator = {});
  Error(ErrorCode code, ErrorCode cause, const std::string& message,
        std::string locator = {});

  ErrorCode code() const noexcept { return code_; }
  ErrorCode cause() const noexcept { return cause_; }
  const std::string& locator() const noexcept { return locator_; }

 private:
  ErrorCode code_;
  ErrorCode cause_;
  std::string locator_;
};

}  // namespace hbt
