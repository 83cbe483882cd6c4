#include "hbt/error.hpp"

namespace hbt {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::CrossingChords: return "CrossingChords";
    case ErrorCode::NotInvolution: return "NotInvolution";
    case ErrorCode::ArcNotInDiagram: return "ArcNotInDiagram";
    case ErrorCode::DisallowedClosedComponent: return "DisallowedClosedComponent";
    case ErrorCode::DegreeViolation: return "DegreeViolation";
    case ErrorCode::BadIdentification: return "BadIdentification";
    case ErrorCode::EmptyIntersection: return "EmptyIntersection";
    case ErrorCode::UntightBoundary: return "UntightBoundary";
    case ErrorCode::BadCertificate: return "BadCertificate";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::BadSlope: return "BadSlope";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::SemanticError: return "SemanticError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

std::string compose(ErrorCode code, ErrorCode cause, const std::string& message,
                    const std::string& locator) {
  std::string out(to_string(code));
  if (cause != code) {
    out += " (";
    out += to_string(cause);
    out += ")";
  }
  if (!locator.empty()) out += " at " + locator;
  out += ": " + message;
  return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message, std::string locator)
    : Error(code, code, message, std::move(locator)) {}

Error::Error(ErrorCode code, ErrorCode cause, const std::string& message, std::string locator)
    : std::runtime_error(compose(code, cause, message, locator)),
      code_(code),
      cause_(cause),
      locator_(std::move(locator)) {}

}  // namespace hbt
