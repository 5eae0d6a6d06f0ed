// Copyright 2026 The Mutagate Project Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mutagate/lexer.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <unordered_set>

namespace mutagate {

namespace {

bool is_space_char(char c)
{
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
}

bool is_digit(char c)
{
    return c >= '0' && c <= '9';
}

bool is_ident_start(char c)
{
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c == '$';
}

bool is_ident_body(char c)
{
    return is_ident_start(c) || is_digit(c);
}

// Union of the common C, C++, Java and JavaScript keyword sets. Keywords are
// lexed apart from identifiers because the sign-context rule treats them
// differently: `return -1` is a unary minus, `total -1` is binary.
const std::unordered_set<std::string_view>& keyword_set()
{
    static const std::unordered_set<std::string_view> kw = {
        "alignas", "alignof", "asm", "auto", "bool", "break", "case", "catch", "char",
        "class", "const", "constexpr", "consteval", "constinit", "const_cast",
        "continue", "decltype", "default", "delete", "do", "double", "dynamic_cast",
        "else", "enum", "explicit", "export", "extern", "false", "final", "float",
        "for", "friend", "goto", "if", "inline", "int", "long", "mutable",
        "namespace", "new", "noexcept", "nullptr", "operator", "override", "private",
        "protected", "public", "register", "reinterpret_cast", "requires", "return",
        "short", "signed", "sizeof", "static", "static_assert", "static_cast",
        "struct", "switch", "template", "this", "thread_local", "throw", "true",
        "try", "typedef", "typeid", "typename", "union", "unsigned", "using",
        "virtual", "void", "volatile", "wchar_t", "while",
        // Java
        "abstract", "assert", "boolean", "byte", "extends", "finally", "implements",
        "import", "instanceof", "interface", "native", "package", "strictfp",
        "super", "synchronized", "throws", "transient",
        // JavaScript
        "async", "await", "function", "in", "let", "null", "of", "typeof",
        "undefined", "var", "yield",
    };
    return kw;
}

// Symbol tokens, longest first so a straight scan gives maximal munch.
// `->`, `=>` and `::` are lexed as compound punctuation (never mutated) so
// their components do not surface as bogus `-`, `>` or `=` operator tokens.
constexpr std::array<std::string_view, 49> kSymbolTable = {
    ">>>=",
    ">>>", "<<=", ">>=",
    "->", "=>", "::", "++", "--", "<<", ">>", "<=", ">=", "==", "!=", "&&", "||",
    "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=",
    "+", "-", "*", "/", "%", "&", "|", "^", "<", ">", "!", "=", "?", ":", "~", ".",
    "(", ")", "[", "]", "{", "}", ",", ";",
};

bool is_punctuation_symbol(std::string_view s)
{
    return s == "(" || s == ")" || s == "[" || s == "]" || s == "{" || s == "}" ||
           s == "," || s == ";" || s == "." || s == "->" || s == "=>" || s == "::";
}

struct Cursor {
    std::string_view src;
    std::size_t pos = 0;
    std::size_t line = 1;
    bool line_has_token = false;  // a non-whitespace token was seen on this line

    char peek(std::size_t ahead = 0) const
    {
        return pos + ahead < src.size() ? src[pos + ahead] : '\0';
    }
    bool done() const { return pos >= src.size(); }
};

std::size_t count_newlines(std::string_view s)
{
    return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

}  // namespace

std::string_view token_kind_name(TokenKind kind)
{
    switch (kind) {
    case TokenKind::Identifier: return "identifier";
    case TokenKind::Keyword: return "keyword";
    case TokenKind::IntegerLiteral: return "integer-literal";
    case TokenKind::FloatLiteral: return "float-literal";
    case TokenKind::StringLiteral: return "string-literal";
    case TokenKind::CharLiteral: return "char-literal";
    case TokenKind::LineComment: return "line-comment";
    case TokenKind::BlockComment: return "block-comment";
    case TokenKind::Operator: return "operator";
    case TokenKind::Punctuation: return "punctuation";
    case TokenKind::Whitespace: return "whitespace";
    }
    return "unknown";
}

std::string_view sign_context_name(SignContext ctx)
{
    switch (ctx) {
    case SignContext::Unary: return "unary";
    case SignContext::Binary: return "binary";
    case SignContext::Prefix: return "prefix";
    case SignContext::Postfix: return "postfix";
    }
    return "unknown";
}

std::vector<Token> tokenize(std::string_view source)
{
    std::vector<Token> tokens;
    Cursor cur{source};

    auto emit = [&](TokenKind kind, std::size_t begin, std::size_t end, bool unterminated = false) {
        Token tok;
        tok.kind = kind;
        tok.text.assign(source.substr(begin, end - begin));
        tok.begin = begin;
        tok.end = end;
        tok.line = cur.line;
        tok.index = tokens.size();
        tok.unterminated = unterminated;
        cur.line += count_newlines(tok.text);
        cur.pos = end;
        if (kind != TokenKind::Whitespace)
            cur.line_has_token = true;
        tokens.push_back(std::move(tok));
    };

    while (!cur.done()) {
        const std::size_t start = cur.pos;
        const char c = cur.peek();

        if (is_space_char(c)) {
            std::size_t end = start;
            bool saw_newline = false;
            while (end < source.size() && is_space_char(source[end])) {
                if (source[end] == '\n')
                    saw_newline = true;
                ++end;
            }
            emit(TokenKind::Whitespace, start, end);
            if (saw_newline)
                cur.line_has_token = false;
            continue;
        }

        // Preprocessor line: `#` as the first token on a line swallows the
        // whole (possibly backslash-continued) line as one opaque token.
        if (c == '#' && !cur.line_has_token) {
            std::size_t end = start;
            while (end < source.size() && source[end] != '\n') {
                if (source[end] == '\\' && end + 1 < source.size() && source[end + 1] == '\n')
                    ++end;  // continuation: keep going past the newline
                ++end;
            }
            emit(TokenKind::Punctuation, start, end);
            continue;
        }

        if (c == '/' && cur.peek(1) == '/') {
            std::size_t end = start;
            while (end < source.size() && source[end] != '\n')
                ++end;
            emit(TokenKind::LineComment, start, end);
            continue;
        }

        if (c == '/' && cur.peek(1) == '*') {
            std::size_t end = start + 2;
            bool closed = false;
            while (end < source.size()) {
                if (source[end] == '*' && end + 1 < source.size() && source[end + 1] == '/') {
                    end += 2;
                    closed = true;
                    break;
                }
                ++end;
            }
            emit(TokenKind::BlockComment, start, end, !closed);
            continue;
        }

        if (c == '"' || c == '\'') {
            const char quote = c;
            std::size_t end = start + 1;
            bool closed = false;
            while (end < source.size()) {
                if (source[end] == '\\' && end + 1 < source.size()) {
                    end += 2;
                    continue;
                }
                if (source[end] == quote) {
                    ++end;
                    closed = true;
                    break;
                }
                ++end;
            }
            emit(quote == '"' ? TokenKind::StringLiteral : TokenKind::CharLiteral,
                 start, end, !closed);
            continue;
        }

        if (is_digit(c) || (c == '.' && is_digit(cur.peek(1)))) {
            const bool hex = c == '0' && (cur.peek(1) == 'x' || cur.peek(1) == 'X');
            std::size_t end = start;
            bool is_float = false;
            while (end < source.size()) {
                const char b = source[end];
                if (b == '.') {
                    is_float = true;
                    ++end;
                    continue;
                }
                const bool exp_char = hex ? (b == 'p' || b == 'P')
                                          : (b == 'e' || b == 'E');
                if (exp_char && end + 1 < source.size() &&
                    (source[end + 1] == '+' || source[end + 1] == '-')) {
                    is_float = true;
                    end += 2;
                    continue;
                }
                if (!hex && (b == 'e' || b == 'E') && end + 1 < source.size() &&
                    is_digit(source[end + 1]) && end > start) {
                    is_float = true;
                    end += 2;
                    continue;
                }
                if (is_ident_body(b)) {
                    ++end;
                    continue;
                }
                break;
            }
            emit(is_float ? TokenKind::FloatLiteral : TokenKind::IntegerLiteral, start, end);
            continue;
        }

        if (is_ident_start(c)) {
            std::size_t end = start;
            while (end < source.size() && is_ident_body(source[end]))
                ++end;
            const std::string_view word = source.substr(start, end - start);
            emit(keyword_set().count(word) ? TokenKind::Keyword : TokenKind::Identifier,
                 start, end);
            continue;
        }

        // Symbols: longest match wins.
        bool matched = false;
        for (std::string_view sym : kSymbolTable) {
            if (source.substr(start, sym.size()) == sym) {
                emit(is_punctuation_symbol(sym) ? TokenKind::Punctuation : TokenKind::Operator,
                     start, start + sym.size());
                matched = true;
                break;
            }
        }
        if (matched)
            continue;

        // Anything else (@, `, stray bytes, UTF-8 continuation bytes) passes
        // through one byte at a time and is never a mutation candidate.
        emit(TokenKind::Punctuation, start, start + 1);
    }

    return tokens;
}

namespace {

bool token_is_sign_eligible(const Token& tok)
{
    return tok.kind == TokenKind::Operator &&
           (tok.text == "+" || tok.text == "-" || tok.text == "++" || tok.text == "--");
}

bool follows_value_position(const std::vector<Token>& tokens, std::size_t index);

// True when tokens[j] can end a value expression: identifier, literal,
// closing `)`/`]`, or a postfix `++`/`--` (recursing for chains).
bool is_value_end(const std::vector<Token>& tokens, std::size_t j)
{
    const Token& t = tokens[j];
    if (t.kind == TokenKind::Identifier || is_literal(t.kind))
        return true;
    if (t.kind == TokenKind::Punctuation && (t.text == ")" || t.text == "]"))
        return true;
    if (t.kind == TokenKind::Operator && (t.text == "++" || t.text == "--"))
        return follows_value_position(tokens, j);
    return false;
}

bool follows_value_position(const std::vector<Token>& tokens, std::size_t index)
{
    for (std::size_t j = index; j-- > 0;) {
        if (!is_significant(tokens[j].kind))
            continue;
        return is_value_end(tokens, j);
    }
    return false;
}

}  // namespace

SignContext classify_sign_context(const std::vector<Token>& tokens, std::size_t index)
{
    if (index >= tokens.size())
        throw std::out_of_range("classify_sign_context: token index out of range");
    const Token& tok = tokens[index];
    if (!token_is_sign_eligible(tok))
        throw std::invalid_argument("classify_sign_context: token '" + tok.text +
                                    "' is not one of + - ++ --");

    const bool after_value = follows_value_position(tokens, index);
    if (tok.text == "+" || tok.text == "-")
        return after_value ? SignContext::Binary : SignContext::Unary;
    return after_value ? SignContext::Postfix : SignContext::Prefix;
}

}  // namespace mutagate
