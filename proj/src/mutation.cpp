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

#include "mutagate/mutation.hpp"

#include <algorithm>

#include "mutagate/digest.hpp"
#include "mutagate/errors.hpp"
#include "mutagate/lexer.hpp"

namespace mutagate {

namespace {

std::vector<const Token*> significant_tokens(const std::vector<Token>& tokens)
{
    std::vector<const Token*> out;
    out.reserve(tokens.size());
    for (const Token& t : tokens)
        if (t.kind != TokenKind::Whitespace)
            out.push_back(&t);
    return out;
}

// A splice is sound when re-lexing the mutated text yields the original token
// stream with exactly the one token replaced (or deleted), ignoring whitespace
// runs that may coalesce around a deletion. Anything else (say, `*` -> `/` in
// `a**b` forming a comment opener) is rejected.
bool splice_preserves_token_stream(std::string_view source, const std::vector<Token>& tokens,
                                   std::size_t token_index, std::string_view replacement)
{
    std::string mutated(source.substr(0, tokens[token_index].begin));
    mutated += replacement;
    mutated += source.substr(tokens[token_index].end);

    const std::vector<Token> mutated_tokens = tokenize(mutated);
    const std::vector<const Token*> before = significant_tokens(tokens);
    const std::vector<const Token*> after = significant_tokens(mutated_tokens);

    std::size_t target = 0;
    while (target < before.size() && before[target]->index != token_index)
        ++target;
    if (target == before.size())
        return false;

    const bool deletion = replacement.empty();
    if (after.size() != before.size() - (deletion ? 1 : 0))
        return false;

    for (std::size_t i = 0, j = 0; i < before.size(); ++i) {
        if (i == target) {
            if (deletion)
                continue;
            if (after[j]->text != replacement || after[j]->kind != TokenKind::Operator)
                return false;
            ++j;
            continue;
        }
        if (after[j]->text != before[i]->text || after[j]->kind != before[i]->kind)
            return false;
        ++j;
    }
    return true;
}

}  // namespace

std::vector<MutationPoint> enumerate_points(const std::string& file, std::string_view source,
                                            const OperatorSet& enabled_operators)
{
    std::vector<MutationPoint> points;
    const std::vector<Token> tokens = tokenize(source);

    for (const Token& tok : tokens) {
        if (tok.kind != TokenKind::Operator)
            continue;

        SignContext ctx = SignContext::Binary;
        if (tok.text == "+" || tok.text == "-" || tok.text == "++" || tok.text == "--")
            ctx = classify_sign_context(tokens, tok.index);

        const auto repl = replacement_for(tok.text, ctx);
        if (!repl || !enabled_operators.count(repl->op))
            continue;
        if (!splice_preserves_token_stream(source, tokens, tok.index, repl->text))
            continue;

        MutationPoint point;
        point.file = file;
        point.token_index = tok.index;
        point.span_begin = tok.begin;
        point.span_end = tok.end;
        point.line = tok.line;
        point.original = tok.text;
        point.op = repl->op;
        point.replacement = std::string(repl->text);
        points.push_back(std::move(point));
    }
    return points;  // token order == span order
}

std::string apply_point(const MutationPoint& point, std::string_view source)
{
    if (point.span_end < point.span_begin || point.span_end > source.size() ||
        source.substr(point.span_begin, point.span_end - point.span_begin) != point.original) {
        throw StalePointError("stale mutation point: " + point.file + " bytes [" +
                              std::to_string(point.span_begin) + "," +
                              std::to_string(point.span_end) + ") no longer holds '" +
                              point.original + "'");
    }
    std::string mutated(source.substr(0, point.span_begin));
    mutated += point.replacement;
    mutated += source.substr(point.span_end);
    return mutated;
}

std::string mutant_id(const MutationPoint& point)
{
    Sha256 h;
    h.frame(point.file);
    h.frame(operator_code_name(point.op));
    h.frame(std::to_string(point.span_begin));
    h.frame(point.original);
    h.frame(point.replacement);
    return h.hex_digest();
}

std::vector<Mutant> generate_mutants(const std::vector<MutationPoint>& points,
                                     std::string_view source)
{
    std::vector<Mutant> mutants;
    mutants.reserve(points.size());
    for (const MutationPoint& point : points) {
        Mutant m;
        m.id = mutant_id(point);
        m.point = point;
        m.mutated_source = apply_point(point, source);
        mutants.push_back(std::move(m));
    }
    return mutants;
}

}  // namespace mutagate
