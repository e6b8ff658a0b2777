#pragma once

#include <stdexcept>
#include <string>

namespace jackleaf {

// Error codes shared across the library. The CLI maps domain errors to
// exit code 1 and usage-level errors (UnknownSuite) to exit code 2.
enum class Errc {
  DivisionByZero,
  InexactDivision,
  UndefinedGcd,
  ParseError,
  NotAPartition,
  BoxOutOfDiagram,
  NotContained,
  NotTwoRow,
  NotAdjacent,
  EmptySkew,
  InvalidOverlap,
  TooManyParts,
  ScaleLimit,
  DegenerateEigenvalue,
  InternalInconsistency,
  UnknownSuite,
  IoError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace jackleaf
