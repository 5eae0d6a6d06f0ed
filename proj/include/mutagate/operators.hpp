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

#include <array>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "mutagate/lexer.hpp"

namespace mutagate {

/// The nine mutation operators (the minimal set).
enum class OperatorCode {
    AorB,  ///< binary arithmetic: + <-> -, * <-> /, % -> *
    AorS,  ///< shortcut arithmetic: ++ <-> -- (prefix and postfix)
    AorU,  ///< unary arithmetic: - <-> +
    Lor,   ///< logical: & <-> |, ^ -> &
    Sor,   ///< shift: << <-> >>, >>> -> <<
    Ror,   ///< relational (negation): < <-> >=, <= <-> >, == <-> !=
    Cor,   ///< binary conditional: && <-> ||
    Cod,   ///< unary conditional: delete !
    Saor,  ///< shortcut assignment: += <-> -=, *= <-> /=, %= -> *=, &= <-> |=,
           ///< ^= -> &=, <<= <-> >>=, >>>= -> <<=
};

inline constexpr std::array<OperatorCode, 9> kAllOperators = {
    OperatorCode::AorB, OperatorCode::AorS, OperatorCode::AorU,
    OperatorCode::Lor,  OperatorCode::Sor,  OperatorCode::Ror,
    OperatorCode::Cor,  OperatorCode::Cod,  OperatorCode::Saor,
};

std::string_view operator_code_name(OperatorCode code);         // "AOR-B", ...
std::string_view operator_description(OperatorCode code);
std::optional<OperatorCode> parse_operator_code(std::string_view name);

using OperatorSet = std::set<OperatorCode>;

OperatorSet all_operators();

/// Parse a comma-separated list of operator codes ("AOR-B,ROR").
/// Throws std::invalid_argument on an unknown code.
OperatorSet parse_operator_set(std::string_view list);

std::string operator_set_to_string(const OperatorSet& ops);

struct TokenReplacement {
    OperatorCode op;
    std::string_view text;  ///< empty means delete the token (COD)
};

/// The total replacement mapping over eligible tokens. `ctx` only matters for
/// `+` and `-` (binary -> AOR-B, unary -> AOR-U). Returns nothing when the
/// token is not in any operator's domain.
std::optional<TokenReplacement> replacement_for(std::string_view token_text, SignContext ctx);

}  // namespace mutagate
