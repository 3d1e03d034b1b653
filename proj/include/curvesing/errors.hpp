#pragma once

#include <stdexcept>
#include <string>

namespace curvesing {

enum class Errc {
  EmptyInput,
  GcdNotOne,
  NotMember,
  MultiplicityTooSmall,
  GenusTooSmall,
  BadParameters,
  BelowConductor,
  BadRange,
  BadShape,
  BadDegree,
  RankDeficient,
  ZeroGaleColumn,
  DuplicatePoint,
  DegenerateConfig,
  TooLargeForExhaustive,
  RetryExhausted,
  HypothesisViolated,
  ParseError,
  Internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& msg);
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& msg);

// Internal consistency check; violations indicate a bug, not bad input.
void check_internal(bool ok, const char* what);

}  // namespace curvesing
