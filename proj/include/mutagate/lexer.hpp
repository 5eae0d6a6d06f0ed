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

#include <string_view>
#include <vector>

#include "mutagate/token.hpp"

namespace mutagate {

/// Tokenize C-family source text. Never fails: malformed regions (unterminated
/// literals or block comments) become tokens flagged `unterminated` that run to
/// end of input. Preprocessor lines (`#` first on a line, honoring trailing
/// backslash continuations) become single opaque punctuation tokens so nothing
/// inside them is ever treated as a mutable operator.
std::vector<Token> tokenize(std::string_view source);

enum class SignContext { Unary, Binary, Prefix, Postfix };

std::string_view sign_context_name(SignContext ctx);

/// Decide whether the `+`/`-`/`++`/`--` token at `index` is used in unary,
/// binary, prefix or postfix position. `+`/`-` is binary (and `++`/`--`
/// postfix) iff the nearest preceding token that is not whitespace or a
/// comment is an identifier, a literal, a closing `)` or `]`, or a postfix
/// `++`/`--`. Throws std::out_of_range / std::invalid_argument on a bad index
/// or an ineligible token.
SignContext classify_sign_context(const std::vector<Token>& tokens, std::size_t index);

}  // namespace mutagate
