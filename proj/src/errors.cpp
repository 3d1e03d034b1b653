#include "curvesing/errors.hpp"

namespace curvesing {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::GcdNotOne: return "GcdNotOne";
    case Errc::NotMember: return "NotMember";
    case Errc::MultiplicityTooSmall: return "MultiplicityTooSmall";
    case Errc::GenusTooSmall: return "GenusTooSmall";
    case Errc::BadParameters: return "BadParameters";
    case Errc::BelowConductor: return "BelowConductor";
    case Errc::BadRange: return "BadRange";
    case Errc::BadShape: return "BadShape";
    case Errc::BadDegree: return "BadDegree";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::ZeroGaleColumn: return "ZeroGaleColumn";
    case Errc::DuplicatePoint: return "DuplicatePoint";
    case Errc::DegenerateConfig: return "DegenerateConfig";
    case Errc::TooLargeForExhaustive: return "TooLargeForExhaustive";
    case Errc::RetryExhausted: return "RetryExhausted";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::ParseError: return "ParseError";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& msg)
    : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

void check_internal(bool ok, const char* what) {
  if (!ok) throw Error(Errc::Internal, what);
}

}  // namespace curvesing
