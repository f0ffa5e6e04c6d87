#pragma once

/* Error codes used across the library. Each code names the violated
 * hypothesis or the stage that failed. Codes flagged as input errors
 * describe problems with user-supplied data; the command line tool maps
 * those to exit code 2 and everything else to exit code 1. */

#include <stdexcept>
#include <string>

namespace adet {

enum class Errc {
  BadInput,
  WrongRank,
  NotOnAffineHyperplane,
  NotSaturated,
  NotSpanning,
  ZeroColumn,
  IndexOutOfRange,
  NotGood,
  NotVeryGood,
  NotOpposite,
  NotSingleIntersection,
  PreconditionFailed,
  AlreadyTerminal,
  MergePlanInconsistent,
  CleanFailed,
  IterationLimitExceeded,
  NonSquare,
  NotSquare,
  DegreeZero,
  UnsupportedDegree,
  TooLarge,
  CheckFailed,
  Internal,
};

const char* errc_name(Errc c);
bool errc_is_input_error(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& detail) {
  throw Error(code, detail);
}

}  // namespace adet
