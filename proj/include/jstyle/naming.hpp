// Camel-case naming guide: prose-to-identifier conversion, case-style
// classification, lexicon-based identifier segmentation, and fix suggestion.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace jstyle {

/// Prose form of a name: ordered words after ASCII folding and splitting.
struct ProseName {
    std::vector<std::string> words;

    /// Folds to ASCII, removes apostrophes, and splits on spaces, hyphens
    /// and punctuation. Dots between digits survive inside a word so that
    /// version-like words keep their grouping.
    static ProseName fromPhrase(std::string_view phrase);
};

enum class CaseStyle {
    UpperCamelCase,
    LowerCamelCase,
    UpperSnakeCase,
    TypeVarSingle,  // single capital letter plus optional single digit
    TypeVarClassT,  // class-style name ending in capital T
    None,
};

const char* toString(CaseStyle style);

enum class CamelForm { Upper, Lower };

/// Folds Latin-1 letters to ASCII (ü -> ue, é -> e, ß -> ss, ...).
/// Unmapped non-ASCII codepoints are dropped.
std::string foldToAscii(std::string_view utf8);

/// Renders a prose name as a camel-case identifier. Digit-only groups
/// inside a word are joined with underscores. Throws std::invalid_argument
/// when the name has no renderable words.
std::string toCamelCase(const ProseName& name, CamelForm form);

/// Non-exclusive predicate: does the identifier satisfy the given style?
/// Camel styles tolerate abbreviation runs of up to maxAdjacentCaps
/// consecutive capitals.
bool matchesStyle(std::string_view identifier, CaseStyle style, int maxAdjacentCaps = 2);

/// First matching style by precedence TypeVarSingle > TypeVarClassT >
/// UPPER_SNAKE_CASE > UpperCamelCase > lowerCamelCase > None.
CaseStyle classifyCase(std::string_view identifier, int maxAdjacentCaps = 2);

class SegmentationLexicon {
public:
    static const SegmentationLexicon& builtin();
    static SegmentationLexicon fromText(std::string_view text);
    static SegmentationLexicon fromFile(const std::string& path);

    void add(std::string word);  // lowercased; entries shorter than 2 chars are ignored
    bool contains(std::string_view word) const;
    std::size_t size() const { return words_.size(); }
    std::size_t maxWordLen() const { return maxWordLen_; }

private:
    std::unordered_set<std::string> words_;
    std::size_t maxWordLen_ = 0;
};

/// Splits an identifier into words. Case, underscore and digit boundaries
/// split first; all-lowercase runs not in the lexicon are decomposed by
/// fewest-words (then longest-first) dynamic programming over the lexicon.
/// Returns nullopt when any run admits no full decomposition.
std::optional<std::vector<std::string>> segmentIdentifier(std::string_view identifier,
                                                          const SegmentationLexicon& lexicon);

/// Re-renders an identifier in the expected style. Returns nullopt when the
/// identifier cannot be segmented or the rendered form does not classify as
/// the requested style.
std::optional<std::string> suggestFix(std::string_view identifier, CaseStyle expected,
                                      const SegmentationLexicon& lexicon);

}  // namespace jstyle
