// Byte-stable prompt assembly for the model-backed check.
#pragma once

#include <array>
#include <string>
#include <string_view>

namespace jstyle {

/// The nine guideline sections the model is asked about.
const std::array<std::string, 9>& targetSections();
bool isTargetSection(std::string_view section);

/// The fixed instruction template. Identical bytes on every call.
std::string_view promptTemplate();

/// Content hash of the template (lowercase hex), used for cache keying.
const std::string& promptVersion();

struct PromptBundle {
    std::string text;           // template + "\n" + source code
    std::string promptVersion;  // hash of the template portion
    std::array<std::string, 9> targetSections;
};

PromptBundle buildPrompt(std::string_view source);

}  // namespace jstyle
