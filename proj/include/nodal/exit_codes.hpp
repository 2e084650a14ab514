#pragma once

#include "nodal/error.hpp"

namespace nodal {

enum ExitCode { kExitOk = 0, kExitOther = 1, kExitParse = 2, kExitHypothesis = 3, kExitSampling = 4, kExitDisagreement = 5 };

inline int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SyntaxError:
    case ErrorKind::UnknownVariable:
      return kExitParse;
    case ErrorKind::HypothesisViolation:
    case ErrorKind::LikelyNonNodalSingularities:
      return kExitHypothesis;
    case ErrorKind::CombinationSamplingFailed:
      return kExitSampling;
    case ErrorKind::MethodDisagreement:
      return kExitDisagreement;
    default:
      return kExitOther;
  }
}

}  // namespace nodal
