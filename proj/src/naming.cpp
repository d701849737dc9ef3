#include "jstyle/naming.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "lexicon_data.inc"

namespace jstyle {

namespace {

bool isAsciiUpper(char c) { return c >= 'A' && c <= 'Z'; }
bool isAsciiLower(char c) { return c >= 'a' && c <= 'z'; }
bool isAsciiDigit(char c) { return c >= '0' && c <= '9'; }
bool isAsciiAlpha(char c) { return isAsciiUpper(c) || isAsciiLower(c); }
bool isAsciiAlnum(char c) { return isAsciiAlpha(c) || isAsciiDigit(c); }

char toLowerAscii(char c) { return isAsciiUpper(c) ? static_cast<char>(c - 'A' + 'a') : c; }
char toUpperAscii(char c) { return isAsciiLower(c) ? static_cast<char>(c - 'a' + 'A') : c; }

std::string lowerCopy(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), toLowerAscii);
    return out;
}

// Longest run of consecutive uppercase letters, ignoring the first character
// so that the leading capital of UpperCamelCase does not count against an
// abbreviation at position 0.
int maxUppercaseRun(std::string_view id) {
    int best = 0;
    int run = 0;
    for (std::size_t i = 1; i < id.size(); ++i) {
        if (isAsciiUpper(id[i])) {
            ++run;
            best = std::max(best, run);
        } else {
            run = 0;
        }
    }
    return best;
}

bool allAsciiAlnum(std::string_view id) {
    return std::all_of(id.begin(), id.end(), isAsciiAlnum);
}

bool isCamel(std::string_view id, bool upperFirst, int maxAdjacentCaps) {
    if (id.empty() || !allAsciiAlnum(id)) return false;
    if (upperFirst ? !isAsciiUpper(id[0]) : !isAsciiLower(id[0])) return false;
    return maxUppercaseRun(id) <= maxAdjacentCaps;
}

bool isUpperSnake(std::string_view id) {
    if (id.empty()) return false;
    bool prevUnderscore = true;  // forbids a leading underscore
    for (char c : id) {
        if (c == '_') {
            if (prevUnderscore) return false;
            prevUnderscore = true;
        } else if (isAsciiUpper(c) || isAsciiDigit(c)) {
            prevUnderscore = false;
        } else {
            return false;
        }
    }
    return !prevUnderscore;  // forbids a trailing underscore
}

bool isTypeVarSingle(std::string_view id) {
    if (id.size() == 1) return isAsciiUpper(id[0]);
    return id.size() == 2 && isAsciiUpper(id[0]) && isAsciiDigit(id[1]);
}

bool isTypeVarClassT(std::string_view id, int maxAdjacentCaps) {
    return id.size() > 1 && id.back() == 'T' && isCamel(id, true, maxAdjacentCaps);
}

// Splits one prose word on non-alphanumeric characters. A word made purely
// of two or more digit groups (a version such as "33.4.6") keeps its groups
// joined by underscores; anything else is concatenated.
std::string normalizeWord(std::string_view word) {
    std::vector<std::string> groups;
    std::string current;
    for (char c : word) {
        if (isAsciiAlnum(c)) {
            current.push_back(c);
        } else if (!current.empty()) {
            groups.push_back(current);
            current.clear();
        }
    }
    if (!current.empty()) groups.push_back(current);
    if (groups.empty()) return "";
    bool allDigits = std::all_of(groups.begin(), groups.end(), [](const std::string& g) {
        return std::all_of(g.begin(), g.end(), isAsciiDigit);
    });
    std::string out;
    for (std::size_t i = 0; i < groups.size(); ++i) {
        if (i > 0 && allDigits && groups.size() >= 2) out.push_back('_');
        out += groups[i];
    }
    return out;
}

}  // namespace

std::string foldToAscii(std::string_view utf8) {
    std::string out;
    out.reserve(utf8.size());
    std::size_t i = 0;
    auto emit = [&out](const char* s) { out += s; };
    while (i < utf8.size()) {
        unsigned char c = static_cast<unsigned char>(utf8[i]);
        if (c < 0x80) {
            out.push_back(static_cast<char>(c));
            ++i;
            continue;
        }
        // Decode one UTF-8 codepoint; malformed bytes are skipped.
        unsigned int cp = 0;
        std::size_t len = 1;
        if ((c & 0xE0) == 0xC0 && i + 1 < utf8.size()) {
            cp = (c & 0x1Fu) << 6 | (static_cast<unsigned char>(utf8[i + 1]) & 0x3Fu);
            len = 2;
        } else if ((c & 0xF0) == 0xE0 && i + 2 < utf8.size()) {
            cp = (c & 0x0Fu) << 12 | (static_cast<unsigned char>(utf8[i + 1]) & 0x3Fu) << 6 |
                 (static_cast<unsigned char>(utf8[i + 2]) & 0x3Fu);
            len = 3;
        } else if ((c & 0xF8) == 0xF0 && i + 3 < utf8.size()) {
            len = 4;  // outside the folding table
        }
        i += len;
        switch (cp) {
            case 0x00C4: emit("Ae"); break;  // Ä
            case 0x00D6: emit("Oe"); break;  // Ö
            case 0x00DC: emit("Ue"); break;  // Ü
            case 0x00E4: emit("ae"); break;  // ä
            case 0x00F6: emit("oe"); break;  // ö
            case 0x00FC: emit("ue"); break;  // ü
            case 0x00DF: emit("ss"); break;  // ß
            case 0x00C6: emit("Ae"); break;  // Æ
            case 0x00E6: emit("ae"); break;  // æ
            case 0x00D0: emit("D"); break;   // Ð
            case 0x00F0: emit("d"); break;   // ð
            case 0x00DE: emit("Th"); break;  // Þ
            case 0x00FE: emit("th"); break;  // þ
            case 0x2019: break;              // right single quote: treated as apostrophe
            default:
                if (cp >= 0x00C0 && cp <= 0x00C5) out.push_back('A');
                else if (cp == 0x00C7) out.push_back('C');
                else if (cp >= 0x00C8 && cp <= 0x00CB) out.push_back('E');
                else if (cp >= 0x00CC && cp <= 0x00CF) out.push_back('I');
                else if (cp == 0x00D1) out.push_back('N');
                else if ((cp >= 0x00D2 && cp <= 0x00D5) || cp == 0x00D8) out.push_back('O');
                else if (cp >= 0x00D9 && cp <= 0x00DB) out.push_back('U');
                else if (cp == 0x00DD) out.push_back('Y');
                else if (cp >= 0x00E0 && cp <= 0x00E5) out.push_back('a');
                else if (cp == 0x00E7) out.push_back('c');
                else if (cp >= 0x00E8 && cp <= 0x00EB) out.push_back('e');
                else if (cp >= 0x00EC && cp <= 0x00EF) out.push_back('i');
                else if (cp == 0x00F1) out.push_back('n');
                else if ((cp >= 0x00F2 && cp <= 0x00F5) || cp == 0x00F8) out.push_back('o');
                else if (cp >= 0x00F9 && cp <= 0x00FB) out.push_back('u');
                else if (cp == 0x00FD || cp == 0x00FF) out.push_back('y');
                // everything else is dropped
                break;
        }
    }
    return out;
}

ProseName ProseName::fromPhrase(std::string_view phrase) {
    std::string folded = foldToAscii(phrase);
    // Apostrophes vanish before word splitting ("Muller's" -> "Mullers").
    folded.erase(std::remove(folded.begin(), folded.end(), '\''), folded.end());

    ProseName name;
    std::string current;
    auto flush = [&]() {
        if (!current.empty()) {
            name.words.push_back(current);
            current.clear();
        }
    };
    for (std::size_t i = 0; i < folded.size(); ++i) {
        char c = folded[i];
        if (isAsciiAlnum(c)) {
            current.push_back(c);
        } else if (c == '.' && i > 0 && i + 1 < folded.size() && isAsciiDigit(folded[i - 1]) &&
                   isAsciiDigit(folded[i + 1])) {
            current.push_back(c);  // keep digit.digit groupings intact
        } else {
            flush();
        }
    }
    flush();
    return name;
}

const char* toString(CaseStyle style) {
    switch (style) {
        case CaseStyle::UpperCamelCase: return "UpperCamelCase";
        case CaseStyle::LowerCamelCase: return "lowerCamelCase";
        case CaseStyle::UpperSnakeCase: return "UPPER_SNAKE_CASE";
        case CaseStyle::TypeVarSingle: return "TypeVarSingle";
        case CaseStyle::TypeVarClassT: return "TypeVarClassT";
        case CaseStyle::None: return "None";
    }
    return "None";
}

std::string toCamelCase(const ProseName& name, CamelForm form) {
    if (name.words.empty()) throw std::invalid_argument("empty prose name");
    std::string out;
    bool first = true;
    for (const std::string& word : name.words) {
        std::string piece = lowerCopy(normalizeWord(word));
        if (piece.empty()) continue;
        if ((form == CamelForm::Upper || !first) && isAsciiAlpha(piece[0])) {
            piece[0] = toUpperAscii(piece[0]);
        }
        out += piece;
        first = false;
    }
    if (out.empty()) throw std::invalid_argument("prose name has no renderable words");
    return out;
}

bool matchesStyle(std::string_view identifier, CaseStyle style, int maxAdjacentCaps) {
    switch (style) {
        case CaseStyle::UpperCamelCase: return isCamel(identifier, true, maxAdjacentCaps);
        case CaseStyle::LowerCamelCase: return isCamel(identifier, false, maxAdjacentCaps);
        case CaseStyle::UpperSnakeCase: return isUpperSnake(identifier);
        case CaseStyle::TypeVarSingle: return isTypeVarSingle(identifier);
        case CaseStyle::TypeVarClassT: return isTypeVarClassT(identifier, maxAdjacentCaps);
        case CaseStyle::None: return false;
    }
    return false;
}

CaseStyle classifyCase(std::string_view identifier, int maxAdjacentCaps) {
    if (isTypeVarSingle(identifier)) return CaseStyle::TypeVarSingle;
    if (isTypeVarClassT(identifier, maxAdjacentCaps)) return CaseStyle::TypeVarClassT;
    if (isUpperSnake(identifier)) return CaseStyle::UpperSnakeCase;
    if (isCamel(identifier, true, maxAdjacentCaps)) return CaseStyle::UpperCamelCase;
    if (isCamel(identifier, false, maxAdjacentCaps)) return CaseStyle::LowerCamelCase;
    return CaseStyle::None;
}

const SegmentationLexicon& SegmentationLexicon::builtin() {
    static const SegmentationLexicon instance = fromText(kBuiltinLexiconRaw);
    return instance;
}

SegmentationLexicon SegmentationLexicon::fromText(std::string_view text) {
    SegmentationLexicon lexicon;
    std::string line;
    std::istringstream in{std::string(text)};
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#') continue;
        auto end = line.find_last_not_of(" \t");
        lexicon.add(line.substr(start, end - start + 1));
    }
    if (lexicon.size() == 0) throw std::invalid_argument("segmentation lexicon is empty");
    return lexicon;
}

SegmentationLexicon SegmentationLexicon::fromFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open lexicon file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return fromText(buffer.str());
}

void SegmentationLexicon::add(std::string word) {
    std::transform(word.begin(), word.end(), word.begin(), toLowerAscii);
    if (word.size() < 2) return;
    if (!std::all_of(word.begin(), word.end(), isAsciiLower)) return;
    maxWordLen_ = std::max(maxWordLen_, word.size());
    words_.insert(std::move(word));
}

bool SegmentationLexicon::contains(std::string_view word) const {
    return words_.count(std::string(word)) > 0;
}

namespace {

// Splits an identifier on underscores, dollars, case transitions, and
// letter/digit boundaries. "XMLParser" becomes "XML" + "Parser".
std::vector<std::string> splitRuns(std::string_view id) {
    std::vector<std::string> runs;
    std::string current;
    auto flush = [&]() {
        if (!current.empty()) {
            runs.push_back(current);
            current.clear();
        }
    };
    for (std::size_t i = 0; i < id.size(); ++i) {
        char c = id[i];
        if (c == '_' || c == '$' || !isAsciiAlnum(c)) {
            flush();
            continue;
        }
        if (!current.empty()) {
            char prev = current.back();
            bool boundary = false;
            if (isAsciiDigit(c) != isAsciiDigit(prev)) {
                boundary = true;
            } else if (isAsciiLower(prev) && isAsciiUpper(c)) {
                boundary = true;
            } else if (isAsciiUpper(prev) && isAsciiUpper(c) && i + 1 < id.size() &&
                       isAsciiLower(id[i + 1])) {
                boundary = true;  // end of an all-caps run feeding a camel word
            }
            if (boundary) flush();
        }
        current.push_back(c);
    }
    flush();
    return runs;
}

// Fewest-words decomposition with a longest-first tie break; nullopt when
// the run cannot be covered by lexicon words.
std::optional<std::vector<std::string>> decomposeRun(const std::string& run,
                                                     const SegmentationLexicon& lexicon) {
    const std::size_t n = run.size();
    constexpr int kInf = 1 << 29;
    std::vector<int> count(n + 1, kInf);
    std::vector<std::size_t> pick(n + 1, 0);
    count[n] = 0;
    for (std::size_t i = n; i-- > 0;) {
        std::size_t longest = std::min(lexicon.maxWordLen(), n - i);
        for (std::size_t len = longest; len >= 2; --len) {
            if (count[i + len] == kInf) continue;
            if (!lexicon.contains(std::string_view(run).substr(i, len))) continue;
            if (1 + count[i + len] < count[i]) {
                count[i] = 1 + count[i + len];
                pick[i] = len;  // descending scan keeps the longest word per tier
            }
        }
    }
    if (count[0] == kInf) return std::nullopt;
    std::vector<std::string> words;
    for (std::size_t i = 0; i < n; i += pick[i]) {
        words.push_back(run.substr(i, pick[i]));
    }
    return words;
}

bool isAllUpperRun(const std::string& run) {
    return run.size() >= 2 && std::all_of(run.begin(), run.end(), isAsciiUpper);
}

bool isDigitRun(const std::string& run) {
    return std::all_of(run.begin(), run.end(), isAsciiDigit);
}

}  // namespace

std::optional<std::vector<std::string>> segmentIdentifier(std::string_view identifier,
                                                          const SegmentationLexicon& lexicon) {
    if (identifier.empty()) return std::nullopt;
    std::vector<std::string> words;
    for (const std::string& run : splitRuns(identifier)) {
        if (run.size() <= 1 || isDigitRun(run) || isAllUpperRun(run)) {
            words.push_back(run);  // single letters, numbers, and abbreviations stay whole
            continue;
        }
        std::string folded = lowerCopy(run);
        if (lexicon.contains(folded)) {
            words.push_back(run);
            continue;
        }
        auto parts = decomposeRun(folded, lexicon);
        if (!parts) return std::nullopt;
        for (auto& part : *parts) words.push_back(std::move(part));
    }
    if (words.empty()) return std::nullopt;
    return words;
}

std::optional<std::string> suggestFix(std::string_view identifier, CaseStyle expected,
                                      const SegmentationLexicon& lexicon) {
    auto words = segmentIdentifier(identifier, lexicon);
    if (!words) return std::nullopt;
    ProseName prose{*words};
    std::string rendered;
    try {
        switch (expected) {
            case CaseStyle::UpperCamelCase:
                rendered = toCamelCase(prose, CamelForm::Upper);
                break;
            case CaseStyle::LowerCamelCase:
                rendered = toCamelCase(prose, CamelForm::Lower);
                break;
            case CaseStyle::UpperSnakeCase: {
                for (const std::string& word : prose.words) {
                    std::string piece = normalizeWord(word);
                    if (piece.empty()) continue;
                    std::transform(piece.begin(), piece.end(), piece.begin(), toUpperAscii);
                    if (!rendered.empty()) rendered.push_back('_');
                    rendered += piece;
                }
                break;
            }
            case CaseStyle::TypeVarSingle: {
                if (identifier.size() > 2) return std::nullopt;
                rendered = std::string(identifier);
                rendered[0] = toUpperAscii(rendered[0]);
                break;
            }
            case CaseStyle::TypeVarClassT: {
                rendered = toCamelCase(prose, CamelForm::Upper);
                if (rendered.back() != 'T') rendered.push_back('T');
                break;
            }
            case CaseStyle::None:
                return std::nullopt;
        }
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
    if (rendered.empty() || classifyCase(rendered) != expected) return std::nullopt;
    return rendered;
}

}  // namespace jstyle
