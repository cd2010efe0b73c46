// Error reporting for the coxrank library.
//
// Every failure raised by the library is a coxrank::Error carrying one of the
// codes below; the message names the offending input (line number, label,
// generator, ...).

#ifndef COXRANK_ERROR_HPP_
#define COXRANK_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace coxrank {

  enum class ErrorCode {
    // graph-core
    EMPTY_GRAPH,
    DUPLICATE_VERTEX,
    UNKNOWN_ENDPOINT,
    SELF_LOOP,
    SYNTAX_ERROR,
    INVALID_LABEL,
    TOO_MANY_VERTICES,
    NOT_A_FACTOR,
    // word-engine
    UNKNOWN_GENERATOR,
    RADIUS_EXCEEDS_CAP,
    // essential-certificates
    NOT_REDUCED,
    GENERATOR_ABSENT,
    MISSING_GENERATORS,
    // cancellator
    NO_BLOCKER,
    EXPONENT_TOO_SMALL,
    CONTRACT_VIOLATION,
    NOT_IN_SUBGROUP,
    // subgroup
    DIMENSION_MISMATCH,
    INDEX_OVERFLOW,
    // verifier
    PRECONDITION_CLASS,
  };

  std::string_view to_string(ErrorCode code) noexcept;

  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& detail);

    ErrorCode code() const noexcept {
      return _code;
    }

    // The message without the leading code, as passed to the constructor.
    std::string const& detail() const noexcept {
      return _detail;
    }

   private:
    ErrorCode   _code;
    std::string _detail;
  };

  [[noreturn]] void raise(ErrorCode code, std::string const& detail);

}  // namespace coxrank

#endif  // COXRANK_ERROR_HPP_
