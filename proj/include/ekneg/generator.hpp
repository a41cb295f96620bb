#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ekneg/planner.hpp"

namespace ekneg {

struct RealizedSentence {
  std::string text;                 // full sentence, ends with a period
  std::string predicate;            // rendered predicate part
  std::vector<std::string> trace;   // one entry per applied plan component
};

// Applies `plan` to the frame and emits the Korean sentence.  A missing plan
// realizes the frame affirmatively, unchanged.
RealizedSentence realize(const KoreanFrame& frame,
                         const std::optional<TransformPlan>& plan,
                         const ConjugationTable& table);

}  // namespace ekneg
