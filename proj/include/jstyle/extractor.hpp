// Java source model extraction: tokens, declarations, and comment blocks.
//
// Recognition is token and nesting based rather than a full grammar; it
// recovers the declaration names and comment positions the style checks
// judge, and nothing more.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace jstyle {

enum class TokenKind {
    Identifier,
    Keyword,
    Literal,
    Punctuation,
    CommentLine,
    CommentBlock,
    CommentJavadoc,
    Whitespace,
};

struct Token {
    TokenKind kind = TokenKind::Punctuation;
    std::string text;
    int line = 1;    // 1-based
    int column = 1;  // 1-based, counted in bytes
};

enum class DeclKind {
    Class,
    Method,
    ConstantField,
    NonConstantField,
    Parameter,
    LocalVariable,
    TypeVariable,
};

struct Declaration {
    DeclKind kind = DeclKind::LocalVariable;
    std::string name;
    int line = 0;
    int column = 0;
    std::vector<std::string> modifiers;
    std::string declaredType;     // may be empty (constructors, type variables)
    std::string ownerName;        // enclosing class or method, may be empty
    std::string initializer;      // raw initializer text for fields, else empty
    bool isConstructor = false;

    bool hasModifier(std::string_view m) const;
};

enum class CommentKind { Line, Block, Javadoc };

struct CommentBlock {
    CommentKind kind = CommentKind::Line;
    std::string text;  // raw comment including delimiters
    int startLine = 0;
    int endLine = 0;
    int column = 0;
    bool ownLine = true;  // no code precedes the comment on its first line
    std::optional<std::size_t> attachedDeclaration;  // index into declarations
};

struct SourceModel {
    std::string path;
    std::string source;
    std::vector<Token> tokens;
    std::vector<Declaration> declarations;
    std::vector<CommentBlock> comments;
    std::vector<std::string> enumTypes;  // enum type names declared in this file
    bool malformed = false;  // brace/paren nesting could not be fully resolved
};

/// Splits source text into tokens. Concatenating the token texts in order
/// reproduces the input byte for byte.
std::vector<Token> tokenize(std::string_view source);

struct ExtractionResult {
    std::vector<Declaration> declarations;
    std::vector<std::string> enumTypes;
    bool malformed = false;
};

ExtractionResult extractDeclarations(const std::vector<Token>& tokens);

/// Allowlist of deeply immutable type names used by constant classification.
class ImmutableTypes {
public:
    static const ImmutableTypes& builtin();
    static ImmutableTypes fromText(std::string_view text);
    static ImmutableTypes fromFile(const std::string& path);

    bool contains(std::string_view simpleName) const;
    void add(std::string name);

private:
    std::vector<std::string> names_;
};

/// Decides ConstantField vs NonConstantField for a static/final field.
DeclKind classifyConstant(const std::vector<std::string>& modifiers,
                          std::string_view declaredType,
                          std::string_view initializer,
                          const std::vector<std::string>& enumTypes,
                          const ImmutableTypes& allowlist = ImmutableTypes::builtin());

std::vector<CommentBlock> extractComments(const std::vector<Token>& tokens,
                                          const std::vector<Declaration>& declarations);

SourceModel buildSourceModel(std::string path, std::string source,
                             const ImmutableTypes& allowlist = ImmutableTypes::builtin());

}  // namespace jstyle
