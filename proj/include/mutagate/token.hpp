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

#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace mutagate {

enum class TokenKind {
    Identifier,
    Keyword,
    IntegerLiteral,
    FloatLiteral,
    StringLiteral,
    CharLiteral,
    LineComment,
    BlockComment,
    Operator,
    Punctuation,
    Whitespace,
};

std::string_view token_kind_name(TokenKind kind);

/// One lexical unit of a C-family source file. Concatenating the `text` of
/// all tokens in `index` order reproduces the input byte for byte.
struct Token {
    TokenKind kind = TokenKind::Punctuation;
    std::string text;
    std::size_t begin = 0;  ///< byte offset, inclusive
    std::size_t end = 0;    ///< byte offset, exclusive
    std::size_t line = 1;   ///< 1-based line of the first byte
    std::size_t index = 0;  ///< ordinal position in the token stream
    bool unterminated = false;

    bool operator==(const Token&) const = default;
};

inline bool is_significant(TokenKind kind)
{
    return kind != TokenKind::Whitespace && kind != TokenKind::LineComment &&
           kind != TokenKind::BlockComment;
}

inline bool is_literal(TokenKind kind)
{
    return kind == TokenKind::IntegerLiteral || kind == TokenKind::FloatLiteral ||
           kind == TokenKind::StringLiteral || kind == TokenKind::CharLiteral;
}

}  // namespace mutagate
