#include "coxrank/error.hpp"

namespace coxrank {

  std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
      case ErrorCode::EMPTY_GRAPH:
        return "EMPTY_GRAPH";
      case ErrorCode::DUPLICATE_VERTEX:
        return "DUPLICATE_VERTEX";
      case ErrorCode::UNKNOWN_ENDPOINT:
        return "UNKNOWN_ENDPOINT";
      case ErrorCode::SELF_LOOP:
        return "SELF_LOOP";
      case ErrorCode::SYNTAX_ERROR:
        return "SYNTAX_ERROR";
      case ErrorCode::INVALID_LABEL:
        return "INVALID_LABEL";
      case ErrorCode::TOO_MANY_VERTICES:
        return "TOO_MANY_VERTICES";
      case ErrorCode::NOT_A_FACTOR:
        return "NOT_A_FACTOR";
      case ErrorCode::UNKNOWN_GENERATOR:
        return "UNKNOWN_GENERATOR";
      case ErrorCode::RADIUS_EXCEEDS_CAP:
        return "RADIUS_EXCEEDS_CAP";
      case ErrorCode::NOT_REDUCED:
        return "NOT_REDUCED";
      case ErrorCode::GENERATOR_ABSENT:
        return "GENERATOR_ABSENT";
      case ErrorCode::MISSING_GENERATORS:
        return "MISSING_GENERATORS";
      case ErrorCode::NO_BLOCKER:
        return "NO_BLOCKER";
      case ErrorCode::EXPONENT_TOO_SMALL:
        return "EXPONENT_TOO_SMALL";
      case ErrorCode::CONTRACT_VIOLATION:
        return "CONTRACT_VIOLATION";
      case ErrorCode::NOT_IN_SUBGROUP:
        return "NOT_IN_SUBGROUP";
      case ErrorCode::DIMENSION_MISMATCH:
        return "DIMENSION_MISMATCH";
      case ErrorCode::INDEX_OVERFLOW:
        return "INDEX_OVERFLOW";
      case ErrorCode::PRECONDITION_CLASS:
        return "PRECONDITION_CLASS";
    }
    return "UNKNOWN_ERROR";
  }

  Error::Error(ErrorCode code, std::string const& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        _code(code),
        _detail(detail) {}

  void raise(ErrorCode code, std::string const& detail) {
    throw Error(code, detail);
  }

}  // namespace coxrank
