#include "curvesing/verdict.hpp"

namespace curvesing {

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::SmoothableGeneric: return "SMOOTHABLE_GENERIC";
    case Outcome::NonSmoothable: return "NON_SMOOTHABLE";
    case Outcome::NonSmoothableGeneric: return "NON_SMOOTHABLE_GENERIC";
    case Outcome::NonSmoothableGenericEquisingular:
      return "NON_SMOOTHABLE_GENERIC_EQUISINGULAR";
    case Outcome::Obstructed: return "OBSTRUCTED";
    case Outcome::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

Verdict Verdict::unknown(std::string note) {
  Verdict v;
  v.outcome = Outcome::Unknown;
  v.provenance = std::move(note);
  return v;
}

}  // namespace curvesing
