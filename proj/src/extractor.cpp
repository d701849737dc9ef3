#include "jstyle/extractor.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_set>

#include "immutable_types_data.inc"

namespace jstyle {

namespace {

const std::unordered_set<std::string>& javaKeywords() {
    static const std::unordered_set<std::string> kw = {
        "abstract", "assert", "boolean", "break", "byte", "case", "catch", "char",
        "class", "const", "continue", "default", "do", "double", "else", "enum",
        "extends", "final", "finally", "float", "for", "goto", "if", "implements",
        "import", "instanceof", "int", "interface", "long", "native", "new",
        "package", "private", "protected", "public", "return", "short", "static",
        "strictfp", "super", "switch", "synchronized", "this", "throw", "throws",
        "transient", "try", "void", "volatile", "while",
    };
    return kw;
}

bool isIdentStart(unsigned char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c == '$' || c >= 0x80;
}

bool isIdentPart(unsigned char c) {
    return isIdentStart(c) || (c >= '0' && c <= '9');
}

bool isDigit(unsigned char c) { return c >= '0' && c <= '9'; }

}  // namespace

bool Declaration::hasModifier(std::string_view m) const {
    return std::find(modifiers.begin(), modifiers.end(), m) != modifiers.end();
}

// ---------------------------------------------------------------------------
// Tokenizer
// ---------------------------------------------------------------------------

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    int line = 1;
    int column = 1;

    auto makeToken = [&](TokenKind kind, std::size_t begin, std::size_t end) {
        Token t;
        t.kind = kind;
        t.text.assign(src.substr(begin, end - begin));
        t.line = line;
        t.column = column;
        for (char c : t.text) {
            if (c == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        tokens.push_back(std::move(t));
    };

    while (i < src.size()) {
        unsigned char c = static_cast<unsigned char>(src[i]);
        std::size_t begin = i;

        if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v') {
            while (i < src.size()) {
                unsigned char w = static_cast<unsigned char>(src[i]);
                if (w == ' ' || w == '\t' || w == '\n' || w == '\r' || w == '\f' || w == '\v') {
                    ++i;
                } else {
                    break;
                }
            }
            makeToken(TokenKind::Whitespace, begin, i);
            continue;
        }

        if (c == '/' && i + 1 < src.size() && src[i + 1] == '/') {
            i += 2;
            while (i < src.size() && src[i] != '\n') ++i;
            makeToken(TokenKind::CommentLine, begin, i);
            continue;
        }

        if (c == '/' && i + 1 < src.size() && src[i + 1] == '*') {
            bool javadoc = i + 2 < src.size() && src[i + 2] == '*';
            i += 2;
            while (i < src.size()) {
                if (src[i] == '*' && i + 1 < src.size() && src[i + 1] == '/') {
                    i += 2;
                    break;
                }
                ++i;
            }
            makeToken(javadoc ? TokenKind::CommentJavadoc : TokenKind::CommentBlock, begin, i);
            continue;
        }

        if (c == '"') {
            if (i + 2 < src.size() && src[i + 1] == '"' && src[i + 2] == '"') {
                // text block
                i += 3;
                while (i < src.size()) {
                    if (src[i] == '\\') {
                        i += 2;
                        continue;
                    }
                    if (src[i] == '"' && i + 2 < src.size() && src[i + 1] == '"' &&
                        src[i + 2] == '"') {
                        i += 3;
                        break;
                    }
                    ++i;
                }
            } else {
                ++i;
                while (i < src.size() && src[i] != '\n') {
                    if (src[i] == '\\' && i + 1 < src.size()) {
                        i += 2;
                        continue;
                    }
                    if (src[i] == '"') {
                        ++i;
                        break;
                    }
                    ++i;
                }
            }
            makeToken(TokenKind::Literal, begin, i);
            continue;
        }

        if (c == '\'') {
            ++i;
            while (i < src.size() && src[i] != '\n') {
                if (src[i] == '\\' && i + 1 < src.size()) {
                    i += 2;
                    continue;
                }
                if (src[i] == '\'') {
                    ++i;
                    break;
                }
                ++i;
            }
            makeToken(TokenKind::Literal, begin, i);
            continue;
        }

        if (isDigit(c) || (c == '.' && i + 1 < src.size() && isDigit(src[i + 1]))) {
            ++i;
            while (i < src.size()) {
                unsigned char d = static_cast<unsigned char>(src[i]);
                if (isIdentPart(d) || d == '.') {
                    ++i;
                } else if ((d == '+' || d == '-') && i > begin) {
                    unsigned char prev = static_cast<unsigned char>(src[i - 1]);
                    if (prev == 'e' || prev == 'E' || prev == 'p' || prev == 'P') {
                        ++i;
                    } else {
                        break;
                    }
                } else {
                    break;
                }
            }
            makeToken(TokenKind::Literal, begin, i);
            continue;
        }

        if (isIdentStart(c)) {
            ++i;
            while (i < src.size() && isIdentPart(static_cast<unsigned char>(src[i]))) ++i;
            std::string word(src.substr(begin, i - begin));
            makeToken(javaKeywords().count(word) ? TokenKind::Keyword : TokenKind::Identifier,
                      begin, i);
            continue;
        }

        if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
            i += 2;
            makeToken(TokenKind::Punctuation, begin, i);
            continue;
        }

        ++i;
        makeToken(TokenKind::Punctuation, begin, i);
    }
    return tokens;
}

// ---------------------------------------------------------------------------
// Declaration extraction
// ---------------------------------------------------------------------------

namespace {

const std::unordered_set<std::string>& modifierWords() {
    static const std::unordered_set<std::string> words = {
        "public", "private", "protected", "static", "final", "abstract", "native",
        "synchronized", "transient", "volatile", "strictfp", "default",
    };
    return words;
}

const std::unordered_set<std::string>& primitiveWords() {
    static const std::unordered_set<std::string> words = {
        "boolean", "byte", "char", "short", "int", "long", "float", "double", "void",
    };
    return words;
}

class DeclScanner {
public:
    DeclScanner(const std::vector<Token>& tokens) : toks_(tokens) {
        for (std::size_t idx = 0; idx < toks_.size(); ++idx) {
            TokenKind k = toks_[idx].kind;
            if (k != TokenKind::Whitespace && k != TokenKind::CommentLine &&
                k != TokenKind::CommentBlock && k != TokenKind::CommentJavadoc) {
                sig_.push_back(idx);
            }
        }
    }

    ExtractionResult run() {
        while (!atEnd()) {
            if (is("}")) {
                result_.malformed = true;  // unmatched close at file level
                advance();
                continue;
            }
            parseTypeLevel("");
        }
        return std::move(result_);
    }

private:
    const std::vector<Token>& toks_;
    std::vector<std::size_t> sig_;
    std::size_t pos_ = 0;
    ExtractionResult result_;

    // --- token access -----------------------------------------------------
    bool atEnd() const { return pos_ >= sig_.size(); }
    const Token& tok(std::size_t k = 0) const { return toks_[sig_[pos_ + k]]; }
    bool has(std::size_t k = 0) const { return pos_ + k < sig_.size(); }
    const std::string& text(std::size_t k = 0) const { return tok(k).text; }
    bool is(std::string_view s, std::size_t k = 0) const { return has(k) && text(k) == s; }
    bool isKind(TokenKind kind, std::size_t k = 0) const { return has(k) && tok(k).kind == kind; }
    bool isIdent(std::size_t k = 0) const { return isKind(TokenKind::Identifier, k); }
    bool isKeyword(std::string_view s, std::size_t k = 0) const {
        return has(k) && tok(k).kind == TokenKind::Keyword && text(k) == s;
    }
    void advance(std::size_t n = 1) { pos_ += n; }

    void emit(DeclKind kind, const Token& nameTok, std::vector<std::string> mods,
              std::string type, std::string owner, std::string init = "",
              bool ctor = false) {
        Declaration d;
        d.kind = kind;
        d.name = nameTok.text;
        d.line = nameTok.line;
        d.column = nameTok.column;
        d.modifiers = std::move(mods);
        d.declaredType = std::move(type);
        d.ownerName = std::move(owner);
        d.initializer = std::move(init);
        d.isConstructor = ctor;
        result_.declarations.push_back(std::move(d));
    }

    // --- small parsers ----------------------------------------------------

    void skipAnnotation() {
        // at '@': @Name(.Name)* with optional balanced argument list
        advance();
        if (isKeyword("interface")) return;  // caller handles @interface
        while (isIdent()) {
            advance();
            if (is(".") && isIdent(1)) {
                advance();
                continue;
            }
            break;
        }
        if (is("(")) skipBalanced("(", ")");
    }

    void skipBalanced(std::string_view open, std::string_view close) {
        int depth = 0;
        while (!atEnd()) {
            if (text() == open) ++depth;
            else if (text() == close) {
                --depth;
                if (depth == 0) {
                    advance();
                    return;
                }
            }
            advance();
        }
        result_.malformed = true;
    }

    std::vector<std::string> parseModifiers() {
        std::vector<std::string> mods;
        while (!atEnd()) {
            if (is("@") && !isKeyword("interface", 1)) {
                skipAnnotation();
                continue;
            }
            if (tok().kind == TokenKind::Keyword && modifierWords().count(text())) {
                mods.push_back(text());
                advance();
                continue;
            }
            break;
        }
        return mods;
    }

    // Generic parameter list: emits a TypeVariable for each depth-1 name.
    void parseTypeParams(const std::string& owner) {
        int depth = 1;
        advance();  // past '<'
        bool expectName = true;
        while (!atEnd() && depth > 0) {
            if (is("<")) {
                ++depth;
            } else if (is(">")) {
                --depth;
            } else if (depth == 1 && expectName && isIdent()) {
                emit(DeclKind::TypeVariable, tok(), {}, "", owner);
                expectName = false;
            } else if (depth == 1 && is(",")) {
                expectName = true;
            }
            advance();
        }
    }

    // Type reference: primitive | qualified name, optional generics and
    // array brackets. Returns nullopt (without consuming) when the cursor
    // does not start a plausible type.
    std::optional<std::string> parseType() {
        std::size_t save = pos_;
        std::string out;
        if (has() && tok().kind == TokenKind::Keyword && primitiveWords().count(text())) {
            out = text();
            advance();
        } else if (isIdent()) {
            out = text();
            advance();
            while (is(".") && isIdent(1)) {
                out += "." + text(1);
                advance(2);
            }
        } else {
            return std::nullopt;
        }

        if (is("<")) {
            // Accept only type-ish content; otherwise this is a comparison.
            std::size_t angleStart = pos_;
            std::string generics = "<";
            int depth = 1;
            advance();
            bool ok = true;
            while (!atEnd() && depth > 0) {
                const std::string& t = text();
                if (t == "<") ++depth;
                else if (t == ">") --depth;
                else if (!(isIdent() || t == "," || t == "." || t == "?" || t == "&" ||
                           t == "[" || t == "]" ||
                           isKeyword("extends") || isKeyword("super") ||
                           (tok().kind == TokenKind::Keyword && primitiveWords().count(t)))) {
                    ok = false;
                    break;
                }
                generics += t;
                advance();
            }
            if (ok && depth == 0) {
                out += generics;
            } else {
                pos_ = angleStart;  // not generics; leave '<' for the caller
                return out;
            }
        }

        while (is("[") && is("]", 1)) {
            out += "[]";
            advance(2);
        }
        if (is(".") && is(".", 1) && is(".", 2)) {
            out += "...";
            advance(3);
        }
        if (out.empty()) {
            pos_ = save;
            return std::nullopt;
        }
        return out;
    }

    // --- type / member level ------------------------------------------------

    void parseTypeLevel(const std::string& owner) {
        if (isKeyword("package") || isKeyword("import")) {
            while (!atEnd() && !is(";")) advance();
            if (!atEnd()) advance();
            return;
        }
        if (is(";")) {
            advance();
            return;
        }
        parseMember(owner, /*isInterface=*/false);
    }

    void parseTypeDecl(std::vector<std::string> mods, const std::string& owner) {
        bool isEnum = isKeyword("enum");
        bool isInterface = isKeyword("interface");
        advance();  // class/interface/enum
        if (!isIdent()) {
            recoverMember(owner);
            return;
        }
        const Token& nameTok = tok();
        std::string name = nameTok.text;
        emit(DeclKind::Class, nameTok, std::move(mods), "", owner);
        if (isEnum) result_.enumTypes.push_back(name);
        advance();
        if (is("<")) parseTypeParams(name);
        // extends / implements lists up to the body
        while (!atEnd() && !is("{") && !is(";")) {
            if (is("<")) {
                int depth = 0;
                while (!atEnd()) {
                    if (is("<")) ++depth;
                    else if (is(">")) {
                        --depth;
                        if (depth == 0) {
                            advance();
                            break;
                        }
                    }
                    advance();
                }
                continue;
            }
            advance();
        }
        if (is("{")) {
            advance();
            parseTypeBody(name, isEnum, isInterface);
        } else if (!atEnd()) {
            advance();  // ';'
        }
    }

    void skipEnumConstants() {
        // constant list runs to the first ';' at body depth or the body '}'
        int depth = 0;
        while (!atEnd()) {
            if (is("{") || is("(") || is("[")) ++depth;
            else if (is(")") || is("]")) --depth;
            else if (is("}")) {
                if (depth == 0) return;  // body close; caller consumes
                --depth;
            } else if (is(";") && depth == 0) {
                advance();
                return;
            }
            advance();
        }
        result_.malformed = true;
    }

    void parseTypeBody(const std::string& name, bool isEnum, bool isInterface) {
        if (isEnum) skipEnumConstants();
        while (!atEnd() && !is("}")) {
            parseMember(name, isInterface);
        }
        if (is("}")) advance();
        else result_.malformed = true;
    }

    void recoverMember(const std::string& owner) {
        while (!atEnd()) {
            if (is(";")) {
                advance();
                return;
            }
            if (is("{")) {
                advance();
                parseBlock(owner);
                return;
            }
            if (is("}")) return;
            advance();
        }
    }

    void parseMember(const std::string& owner, bool isInterface) {
        if (is("@") && isKeyword("interface", 1)) {
            advance();  // '@'; parseTypeDecl sees 'interface'
            parseTypeDecl({}, owner);
            return;
        }
        std::vector<std::string> mods = parseModifiers();
        if (is("@") && isKeyword("interface", 1)) {
            advance();
            parseTypeDecl(std::move(mods), owner);
            return;
        }
        if (isKeyword("class") || isKeyword("interface") || isKeyword("enum")) {
            parseTypeDecl(std::move(mods), owner);
            return;
        }
        if (is(";")) {
            advance();
            return;
        }
        if (is("{")) {
            advance();
            parseBlock(owner);
            return;
        }
        if (is("<")) parseTypeParams(owner);

        // record header: components are extracted like parameters
        if (isIdent() && text() == "record" && isIdent(1) && (is("(", 2) || is("<", 2))) {
            advance();
            const Token& nameTok = tok();
            emit(DeclKind::Class, nameTok, std::move(mods), "", owner);
            advance();
            if (is("<")) parseTypeParams(nameTok.text);
            if (is("(")) parseParams(nameTok.text);
            while (!atEnd() && !is("{") && !is(";")) advance();
            if (is("{")) {
                advance();
                parseTypeBody(nameTok.text, false, false);
            } else if (is(";")) {
                advance();
            }
            return;
        }

        // constructor: identifier directly followed by '('
        if (isIdent() && is("(", 1)) {
            const Token& nameTok = tok();
            advance();
            parseMethodRest(nameTok, "", std::move(mods), owner, /*ctor=*/true);
            return;
        }

        auto type = parseType();
        if (!type || !isIdent()) {
            recoverMember(owner);
            return;
        }
        const Token& nameTok = tok();
        advance();
        if (is("(")) {
            parseMethodRest(nameTok, *type, std::move(mods), owner, /*ctor=*/false);
            return;
        }
        parseFieldDeclarators(nameTok, *type, std::move(mods), owner, isInterface);
    }

    void parseFieldDeclarators(const Token& firstName, const std::string& baseType,
                               std::vector<std::string> mods, const std::string& owner,
                               bool isInterface) {
        if (isInterface) {
            // interface fields are implicitly public static final
            auto ensure = [&mods](const char* m) {
                if (std::find(mods.begin(), mods.end(), m) == mods.end()) mods.emplace_back(m);
            };
            ensure("static");
            ensure("final");
        }
        const Token* nameTok = &firstName;
        while (true) {
            std::string declType = baseType;
            while (is("[") && is("]", 1)) {
                declType += "[]";
                advance(2);
            }
            std::string init;
            if (is("=")) {
                advance();
                init = captureExpression(owner, {",", ";"});
            }
            // provisional kind; classifyConstant runs once enum names are known
            emit(DeclKind::NonConstantField, *nameTok, mods, declType, owner, init);
            if (is(",") && isIdent(1)) {
                advance();
                nameTok = &tok();
                advance();
                continue;
            }
            if (is(";")) {
                advance();
                return;
            }
            recoverMember(owner);
            return;
        }
    }

    std::string captureExpression(const std::string& owner,
                                  const std::vector<std::string>& stops) {
        std::size_t before = pos_;
        skipExpression(owner, stops);
        std::string out;
        for (std::size_t k = before; k < pos_; ++k) {
            if (!out.empty()) out.push_back(' ');
            out += toks_[sig_[k]].text;
        }
        return out;
    }

    void parseMethodRest(const Token& nameTok, std::string type,
                         std::vector<std::string> mods, const std::string& owner, bool ctor) {
        emit(DeclKind::Method, nameTok, std::move(mods), std::move(type), owner, "", ctor);
        parseParams(nameTok.text);
        // throws list, annotation defaults, etc., up to body or ';'
        while (!atEnd() && !is("{") && !is(";") && !is("}")) advance();
        if (is("{")) {
            advance();
            parseBlock(nameTok.text);
        } else if (is(";")) {
            advance();
        }
    }

    void parseParams(const std::string& methodName) {
        if (!is("(")) return;
        advance();
        int depth = 1;
        bool expectParam = true;
        while (!atEnd() && depth > 0) {
            if (is(")")) {
                --depth;
                advance();
                continue;
            }
            if (is("(")) {
                ++depth;
                advance();
                continue;
            }
            if (depth == 1 && expectParam) {
                while (is("@")) skipAnnotation();
                while (isKeyword("final")) advance();
                auto type = parseType();
                if (type && isIdent()) {
                    const Token& nameTok = tok();
                    advance();
                    while (is("[") && is("]", 1)) advance(2);
                    emit(DeclKind::Parameter, nameTok, {}, *type, methodName);
                }
                expectParam = false;
                continue;
            }
            if (depth == 1 && is(",")) expectParam = true;
            advance();
        }
    }

    // --- statement level ----------------------------------------------------

    void parseBlock(const std::string& owner) {
        while (!atEnd() && !is("}")) {
            parseStatement(owner);
        }
        if (is("}")) advance();
        else result_.malformed = true;
    }

    void parseStatement(const std::string& owner) {
        if (is("{")) {
            advance();
            parseBlock(owner);
            return;
        }
        if (is(";") || is(":")) {
            advance();
            return;
        }
        // label
        if (isIdent() && is(":", 1) && !is(":", 2)) {
            advance(2);
            return;
        }
        if (isKeyword("for")) {
            advance();
            if (is("(")) {
                advance();
                tryLocalDecl(owner, Mode::For);
                skipExpression(owner, {")"}, /*initialParenDepth=*/1);
                if (is(")")) advance();
            }
            return;
        }
        if (isKeyword("try")) {
            advance();
            if (is("(")) {
                advance();
                while (!atEnd() && !is(")")) {
                    if (!tryLocalDecl(owner, Mode::Try)) break;
                    if (is(";")) advance();
                }
                skipExpression(owner, {")"}, 1);
                if (is(")")) advance();
            }
            return;
        }
        if (isKeyword("catch")) {
            advance();
            if (is("(")) {
                advance();
                while (is("@")) skipAnnotation();
                while (isKeyword("final")) advance();
                auto type = parseType();
                while (type && is("|")) {  // multi-catch
                    advance();
                    auto more = parseType();
                    if (!more) break;
                    *type += "|" + *more;
                }
                if (type && isIdent()) {
                    emit(DeclKind::Parameter, tok(), {}, *type, owner);
                    advance();
                }
                skipExpression(owner, {")"}, 1);
                if (is(")")) advance();
            }
            return;
        }
        if (isKeyword("if") || isKeyword("while") || isKeyword("switch") ||
            isKeyword("synchronized")) {
            advance();
            if (is("(")) {
                advance();
                skipExpression(owner, {")"}, 1);
                if (is(")")) advance();
            }
            return;
        }
        if (isKeyword("return") || isKeyword("throw") || isKeyword("assert")) {
            advance();
            skipExpression(owner, {";"});
            if (is(";")) advance();
            return;
        }
        if (isKeyword("case")) {
            advance();
            while (!atEnd() && !is(":") && !is("->") && !is(";") && !is("}")) advance();
            if (is(":") || is("->")) advance();
            return;
        }
        if (isKeyword("do") || isKeyword("else") || isKeyword("finally") ||
            isKeyword("default") || isKeyword("break") || isKeyword("continue")) {
            advance();
            return;
        }
        if (isKeyword("class") || isKeyword("interface") || isKeyword("enum")) {
            parseTypeDecl({}, owner);  // local class
            return;
        }
        if (tryLocalDecl(owner, Mode::Statement)) return;
        std::size_t before = pos_;
        skipExpression(owner, {";"});
        if (is(";")) advance();
        if (pos_ == before && !atEnd()) advance();  // guarantees progress on stray tokens
    }

    enum class Mode { Statement, For, Try };

    bool tryLocalDecl(const std::string& owner, Mode mode) {
        std::size_t save = pos_;
        std::size_t declsBefore = result_.declarations.size();
        while (is("@")) skipAnnotation();
        std::vector<std::string> mods;
        while (isKeyword("final")) {
            mods.push_back("final");
            advance();
        }
        auto type = parseType();
        if (!type || !isIdent()) {
            pos_ = save;
            result_.declarations.resize(declsBefore);
            return false;
        }
        const Token* nameTok = &tok();
        advance();
        while (is("[") && is("]", 1)) advance(2);

        bool valid = is("=") || is(";") || is(",") || (mode == Mode::For && is(":")) ||
                     (mode == Mode::Try && is("=")) ;
        if (mode == Mode::Try) valid = is("=");
        if (!valid) {
            pos_ = save;
            result_.declarations.resize(declsBefore);
            return false;
        }

        // declarator list
        while (true) {
            emit(DeclKind::LocalVariable, *nameTok, mods, *type, owner);
            if (is(":")) {  // enhanced for; expression up to ')' handled by caller
                advance();
                return true;
            }
            if (is("=")) {
                advance();
                skipExpression(owner, {",", ";", mode == Mode::For ? ")" : ";"});
            }
            if (is(",") && isIdent(1)) {
                advance();
                nameTok = &tok();
                advance();
                while (is("[") && is("]", 1)) advance(2);
                continue;
            }
            if (is(";")) {
                if (mode == Mode::Statement) advance();
                return true;
            }
            return true;  // ')' in try/for headers, or recovery
        }
    }

    // Scans expression tokens up to any stop token at depth zero, extracting
    // declarations from lambda bodies and anonymous class bodies on the way.
    void skipExpression(const std::string& owner,
                        const std::vector<std::string>& stops, int initialParenDepth = 0) {
        int paren = initialParenDepth;
        int bracket = 0;
        enum class NewState { None, Type, Args, MaybeBody };
        NewState newState = NewState::None;
        int newArgsDepth = 0;
        std::string prev;

        while (!atEnd()) {
            const std::string& t = text();
            if (paren == initialParenDepth && bracket == 0) {
                for (const auto& s : stops) {
                    if (t == s) return;
                }
                if (t == "}") return;  // statement recovery: missing ';'
            }
            if (t == "(") {
                ++paren;
                if (newState == NewState::Type) {
                    newState = NewState::Args;
                    newArgsDepth = paren;
                }
            } else if (t == ")") {
                if (paren == 0) return;
                --paren;
                if (newState == NewState::Args && paren == newArgsDepth - 1) {
                    newState = NewState::MaybeBody;
                    prev = t;
                    advance();
                    continue;
                }
            } else if (t == "[") {
                ++bracket;
                if (newState == NewState::Type) newState = NewState::None;  // array creation
            } else if (t == "]") {
                if (bracket > 0) --bracket;
            } else if (t == "{") {
                if (prev == "->") {
                    advance();
                    parseBlock(owner);  // lambda body
                    prev = "}";
                    newState = NewState::None;
                    continue;
                }
                if (newState == NewState::MaybeBody) {
                    advance();
                    parseTypeBody("", false, false);  // anonymous class body
                    prev = "}";
                    newState = NewState::None;
                    continue;
                }
                advance();
                skipBracedGroup(owner);  // array or switch-expression group
                prev = "}";
                newState = NewState::None;
                continue;
            } else if (isKeyword("new")) {
                newState = NewState::Type;
            } else if (newState == NewState::Type &&
                       !(isIdent() || t == "." || t == "<" || t == ">" || t == ",")) {
                newState = NewState::None;
            } else if (newState == NewState::MaybeBody) {
                newState = NewState::None;
            }
            prev = t;
            advance();
        }
    }

    // Balanced brace group inside an expression; lambdas nested within are
    // still scanned.
    void skipBracedGroup(const std::string& owner) {
        std::string prev;
        while (!atEnd()) {
            const std::string& t = text();
            if (t == "}") {
                advance();
                return;
            }
            if (t == "{") {
                advance();
                if (prev == "->") parseBlock(owner);
                else skipBracedGroup(owner);
                prev = "}";
                continue;
            }
            prev = t;
            advance();
        }
        result_.malformed = true;
    }
};

}  // namespace

ExtractionResult extractDeclarations(const std::vector<Token>& tokens) {
    return DeclScanner(tokens).run();
}

// ---------------------------------------------------------------------------
// Constant classification
// ---------------------------------------------------------------------------

const ImmutableTypes& ImmutableTypes::builtin() {
    static const ImmutableTypes instance = fromText(kBuiltinImmutableTypesRaw);
    return instance;
}

ImmutableTypes ImmutableTypes::fromText(std::string_view text) {
    ImmutableTypes types;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#') continue;
        auto end = line.find_last_not_of(" \t");
        types.add(line.substr(start, end - start + 1));
    }
    return types;
}

ImmutableTypes ImmutableTypes::fromFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open immutable-types file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return fromText(buffer.str());
}

void ImmutableTypes::add(std::string name) { names_.push_back(std::move(name)); }

bool ImmutableTypes::contains(std::string_view simpleName) const {
    return std::find(names_.begin(), names_.end(), simpleName) != names_.end();
}

namespace {

std::string_view trimView(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

bool typeIsImmutable(std::string_view type, const std::vector<std::string>& enumTypes,
                     const ImmutableTypes& allowlist);

bool typeArgsImmutable(std::string_view args, const std::vector<std::string>& enumTypes,
                       const ImmutableTypes& allowlist) {
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= args.size(); ++i) {
        if (i == args.size() || (args[i] == ',' && depth == 0)) {
            std::string_view arg = trimView(args.substr(start, i - start));
            if (arg.starts_with("?")) {
                arg = trimView(arg.substr(1));
                if (arg.starts_with("extends")) arg = trimView(arg.substr(7));
                else if (arg.starts_with("super")) arg = trimView(arg.substr(5));
                if (arg.empty()) continue;  // bare wildcard
            }
            if (!arg.empty() && !typeIsImmutable(arg, enumTypes, allowlist)) return false;
            start = i + 1;
        } else if (args[i] == '<') {
            ++depth;
        } else if (args[i] == '>') {
            --depth;
        }
    }
    return true;
}

bool typeIsImmutable(std::string_view type, const std::vector<std::string>& enumTypes,
                     const ImmutableTypes& allowlist) {
    type = trimView(type);
    if (type.empty()) return false;
    if (type.ends_with("[]")) return true;  // the initializer rule decides for arrays
    static const std::unordered_set<std::string> primitives = {
        "boolean", "byte", "char", "short", "int", "long", "float", "double",
    };
    std::string_view base = type;
    std::string_view args;
    if (auto open = type.find('<'); open != std::string_view::npos) {
        base = type.substr(0, open);
        auto close = type.rfind('>');
        if (close != std::string_view::npos && close > open) {
            args = type.substr(open + 1, close - open - 1);
        }
    }
    if (auto dot = base.rfind('.'); dot != std::string_view::npos) {
        base = base.substr(dot + 1);
    }
    std::string simple(trimView(base));
    bool baseOk = primitives.count(simple) > 0 || allowlist.contains(simple) ||
                  simple.starts_with("Immutable") ||
                  std::find(enumTypes.begin(), enumTypes.end(), simple) != enumTypes.end();
    if (!baseOk) return false;
    if (!args.empty() && !typeArgsImmutable(args, enumTypes, allowlist)) return false;
    return true;
}

bool initializerObviouslyMutable(std::string_view init) {
    static const std::array<std::string_view, 15> mutableCtors = {
        "HashSet",       "ArrayList",  "HashMap",    "TreeMap",       "TreeSet",
        "LinkedList",    "ArrayDeque", "Hashtable",  "StringBuilder", "StringBuffer",
        "Vector",        "Stack",      "PriorityQueue", "LinkedHashMap", "LinkedHashSet",
    };
    if (auto brace = init.find('{'); brace != std::string_view::npos) {
        auto close = init.find('}', brace + 1);
        if (close != std::string_view::npos) {
            std::string_view inside = trimView(init.substr(brace + 1, close - brace - 1));
            return !inside.empty();  // array literal with elements
        }
        return true;
    }
    auto pos = init.find("new ");
    if (pos != std::string_view::npos) {
        std::string_view rest = trimView(init.substr(pos + 4));
        for (std::string_view ctor : mutableCtors) {
            if (rest.starts_with(ctor)) return true;
        }
        // raw array allocation leaves mutable slots
        for (std::size_t i = 0; i < rest.size(); ++i) {
            if (rest[i] == '[') return true;
            if (rest[i] == '(' || rest[i] == '<') break;
        }
    }
    return false;
}

}  // namespace

DeclKind classifyConstant(const std::vector<std::string>& modifiers,
                          std::string_view declaredType, std::string_view initializer,
                          const std::vector<std::string>& enumTypes,
                          const ImmutableTypes& allowlist) {
    bool isStatic = std::find(modifiers.begin(), modifiers.end(), "static") != modifiers.end();
    bool isFinal = std::find(modifiers.begin(), modifiers.end(), "final") != modifiers.end();
    if (!isStatic || !isFinal) return DeclKind::NonConstantField;
    if (!typeIsImmutable(declaredType, enumTypes, allowlist)) return DeclKind::NonConstantField;
    if (initializerObviouslyMutable(initializer)) return DeclKind::NonConstantField;
    return DeclKind::ConstantField;
}

// ---------------------------------------------------------------------------
// Comment extraction
// ---------------------------------------------------------------------------

std::vector<CommentBlock> extractComments(const std::vector<Token>& tokens,
                                          const std::vector<Declaration>& declarations) {
    std::vector<CommentBlock> blocks;

    // per-line index of the first non-whitespace token
    std::map<int, std::size_t> firstOnLine;
    int lastLine = 0;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const Token& t = tokens[i];
        if (t.kind != TokenKind::Whitespace && !firstOnLine.count(t.line)) {
            firstOnLine[t.line] = i;
        }
        int endLine = t.line + static_cast<int>(std::count(t.text.begin(), t.text.end(), '\n'));
        lastLine = std::max(lastLine, endLine);
    }

    auto declAtLine = [&](int line) -> std::optional<std::size_t> {
        for (std::size_t d = 0; d < declarations.size(); ++d) {
            if (declarations[d].line == line) return d;
        }
        return std::nullopt;
    };

    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const Token& t = tokens[i];
        CommentKind kind;
        if (t.kind == TokenKind::CommentLine) kind = CommentKind::Line;
        else if (t.kind == TokenKind::CommentBlock) kind = CommentKind::Block;
        else if (t.kind == TokenKind::CommentJavadoc) kind = CommentKind::Javadoc;
        else continue;

        CommentBlock block;
        block.kind = kind;
        block.text = t.text;
        block.startLine = t.line;
        block.endLine = t.line + static_cast<int>(std::count(t.text.begin(), t.text.end(), '\n'));
        block.column = t.column;
        auto first = firstOnLine.find(t.line);
        block.ownLine = first != firstOnLine.end() && first->second == i;

        for (int line = block.endLine + 1; line <= lastLine; ++line) {
            auto it = firstOnLine.find(line);
            if (it == firstOnLine.end()) continue;  // blank line
            if (tokens[it->second].text == "@") continue;  // annotation line
            block.attachedDeclaration = declAtLine(line);
            break;
        }
        blocks.push_back(std::move(block));
    }
    return blocks;
}

SourceModel buildSourceModel(std::string path, std::string source,
                             const ImmutableTypes& allowlist) {
    SourceModel model;
    model.path = std::move(path);
    model.source = std::move(source);
    model.tokens = tokenize(model.source);
    ExtractionResult extraction = extractDeclarations(model.tokens);
    model.enumTypes = std::move(extraction.enumTypes);
    model.malformed = extraction.malformed;

    // field kinds depend on the enum table, so classification happens here
    for (Declaration& d : extraction.declarations) {
        if (d.kind == DeclKind::ConstantField || d.kind == DeclKind::NonConstantField) {
            d.kind = classifyConstant(d.modifiers, d.declaredType, d.initializer,
                                      model.enumTypes, allowlist);
        }
    }
    model.declarations = std::move(extraction.declarations);
    model.comments = extractComments(model.tokens, model.declarations);
    return model;
}

}  // namespace jstyle
