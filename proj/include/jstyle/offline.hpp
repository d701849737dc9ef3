// Deterministic semantic analysis of the nine targeted guidelines.
#pragma once

#include <vector>

#include "jstyle/extractor.hpp"
#include "jstyle/finding.hpp"
#include "jstyle/naming.hpp"

namespace jstyle {

/// Emits findings in the same schema as the parsed model response:
/// hidden multi-word identifiers, inner-word capitalization defects,
/// constant/non-constant case swaps, implementation comments that should be
/// Javadoc, one-character identifier warnings, and digit groups in constant
/// names lacking underscores.
std::vector<Finding> analyzeOffline(const SourceModel& model,
                                    const SegmentationLexicon& lexicon);

}  // namespace jstyle
