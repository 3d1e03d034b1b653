#pragma once

#include <map>
#include <string>

namespace curvesing {

enum class Outcome {
  SmoothableGeneric,
  NonSmoothable,
  NonSmoothableGeneric,
  NonSmoothableGenericEquisingular,
  Obstructed,
  Unknown,
};

const char* outcome_name(Outcome o);

// Classification result with its justification. `provenance` names the
// criterion or computation that fired; `witnesses` carries the numbers it
// was checked against, rendered exactly (integers or "p/q").
struct Verdict {
  Outcome outcome = Outcome::Unknown;
  std::string provenance;
  std::map<std::string, std::string> witnesses;

  static Verdict unknown(std::string note = "");
};

}  // namespace curvesing
