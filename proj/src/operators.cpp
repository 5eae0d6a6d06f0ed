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

#include "mutagate/operators.hpp"

#include <stdexcept>

namespace mutagate {

std::string_view operator_code_name(OperatorCode code)
{
    switch (code) {
    case OperatorCode::AorB: return "AOR-B";
    case OperatorCode::AorS: return "AOR-S";
    case OperatorCode::AorU: return "AOR-U";
    case OperatorCode::Lor: return "LOR";
    case OperatorCode::Sor: return "SOR";
    case OperatorCode::Ror: return "ROR";
    case OperatorCode::Cor: return "COR";
    case OperatorCode::Cod: return "COD";
    case OperatorCode::Saor: return "SAOR";
    }
    return "?";
}

std::string_view operator_description(OperatorCode code)
{
    switch (code) {
    case OperatorCode::AorB: return "Replaces a binary arithmetic operator";
    case OperatorCode::AorS: return "Replaces a shortcut arithmetic operator";
    case OperatorCode::AorU: return "Replaces a unary arithmetic operator";
    case OperatorCode::Lor: return "Replaces a logical operator";
    case OperatorCode::Sor: return "Replaces a shift operator";
    case OperatorCode::Ror: return "Replaces a relational operator";
    case OperatorCode::Cor: return "Replaces a binary conditional operator";
    case OperatorCode::Cod: return "Removes a unary conditional operator";
    case OperatorCode::Saor: return "Replaces a shortcut assignment operator";
    }
    return "?";
}

std::optional<OperatorCode> parse_operator_code(std::string_view name)
{
    for (OperatorCode code : kAllOperators)
        if (name == operator_code_name(code))
            return code;
    return std::nullopt;
}

OperatorSet all_operators()
{
    return OperatorSet(kAllOperators.begin(), kAllOperators.end());
}

OperatorSet parse_operator_set(std::string_view list)
{
    OperatorSet set;
    std::size_t pos = 0;
    while (pos <= list.size()) {
        std::size_t comma = list.find(',', pos);
        if (comma == std::string_view::npos)
            comma = list.size();
        std::string_view item = list.substr(pos, comma - pos);
        while (!item.empty() && (item.front() == ' ' || item.front() == '\t'))
            item.remove_prefix(1);
        while (!item.empty() && (item.back() == ' ' || item.back() == '\t'))
            item.remove_suffix(1);
        if (!item.empty()) {
            auto code = parse_operator_code(item);
            if (!code)
                throw std::invalid_argument("unknown mutation operator: " + std::string(item));
            set.insert(*code);
        }
        pos = comma + 1;
    }
    return set;
}

std::string operator_set_to_string(const OperatorSet& ops)
{
    std::string out;
    for (OperatorCode code : kAllOperators) {
        if (!ops.count(code))
            continue;
        if (!out.empty())
            out += ',';
        out += operator_code_name(code);
    }
    return out;
}

std::optional<TokenReplacement> replacement_for(std::string_view token_text, SignContext ctx)
{
    using R = TokenReplacement;
    // Sign-sensitive rows.
    if (token_text == "+")
        return ctx == SignContext::Binary ? R{OperatorCode::AorB, "-"} : R{OperatorCode::AorU, "-"};
    if (token_text == "-")
        return ctx == SignContext::Binary ? R{OperatorCode::AorB, "+"} : R{OperatorCode::AorU, "+"};
    if (token_text == "++")
        return R{OperatorCode::AorS, "--"};
    if (token_text == "--")
        return R{OperatorCode::AorS, "++"};

    if (token_text == "*") return R{OperatorCode::AorB, "/"};
    if (token_text == "/") return R{OperatorCode::AorB, "*"};
    if (token_text == "%") return R{OperatorCode::AorB, "*"};

    if (token_text == "&") return R{OperatorCode::Lor, "|"};
    if (token_text == "|") return R{OperatorCode::Lor, "&"};
    if (token_text == "^") return R{OperatorCode::Lor, "&"};

    if (token_text == "<<") return R{OperatorCode::Sor, ">>"};
    if (token_text == ">>") return R{OperatorCode::Sor, "<<"};
    if (token_text == ">>>") return R{OperatorCode::Sor, "<<"};

    if (token_text == "<") return R{OperatorCode::Ror, ">="};
    if (token_text == ">=") return R{OperatorCode::Ror, "<"};
    if (token_text == "<=") return R{OperatorCode::Ror, ">"};
    if (token_text == ">") return R{OperatorCode::Ror, "<="};
    if (token_text == "==") return R{OperatorCode::Ror, "!="};
    if (token_text == "!=") return R{OperatorCode::Ror, "=="};

    if (token_text == "&&") return R{OperatorCode::Cor, "||"};
    if (token_text == "||") return R{OperatorCode::Cor, "&&"};

    if (token_text == "!") return R{OperatorCode::Cod, ""};

    if (token_text == "+=") return R{OperatorCode::Saor, "-="};
    if (token_text == "-=") return R{OperatorCode::Saor, "+="};
    if (token_text == "*=") return R{OperatorCode::Saor, "/="};
    if (token_text == "/=") return R{OperatorCode::Saor, "*="};
    if (token_text == "%=") return R{OperatorCode::Saor, "*="};
    if (token_text == "&=") return R{OperatorCode::Saor, "|="};
    if (token_text == "|=") return R{OperatorCode::Saor, "&="};
    if (token_text == "^=") return R{OperatorCode::Saor, "&="};
    if (token_text == "<<=") return R{OperatorCode::Saor, ">>="};
    if (token_text == ">>=") return R{OperatorCode::Saor, "<<="};
    if (token_text == ">>>=") return R{OperatorCode::Saor, "<<="};

    return std::nullopt;
}

}  // namespace mutagate
