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

#include <random>
#include <string>

#include "doctest.h"

using namespace mutagate;

namespace {

std::string joined(const std::vector<Token>& tokens)
{
    std::string out;
    for (const Token& tok : tokens)
        out += tok.text;
    return out;
}

std::vector<Token> significant(const std::vector<Token>& tokens)
{
    std::vector<Token> out;
    for (const Token& tok : tokens)
        if (is_significant(tok.kind))
            out.push_back(tok);
    return out;
}

std::size_t count_operators(const std::vector<Token>& tokens)
{
    std::size_t n = 0;
    for (const Token& tok : tokens)
        n += tok.kind == TokenKind::Operator;
    return n;
}

}  // namespace

TEST_CASE("smallest binary expression")
{
    const auto tokens = tokenize("a + b");
    REQUIRE(tokens.size() == 5);
    CHECK(tokens[0].kind == TokenKind::Identifier);
    CHECK(tokens[0].text == "a");
    CHECK(tokens[1].kind == TokenKind::Whitespace);
    CHECK(tokens[2].kind == TokenKind::Operator);
    CHECK(tokens[2].text == "+");
    CHECK(tokens[3].kind == TokenKind::Whitespace);
    CHECK(tokens[4].kind == TokenKind::Identifier);
    CHECK(tokens[4].text == "b");
}

TEST_CASE("maximal munch keeps >= one token")
{
    const auto tokens = significant(tokenize("a >= b"));
    REQUIRE(tokens.size() == 3);
    CHECK(tokens[1].kind == TokenKind::Operator);
    CHECK(tokens[1].text == ">=");
}

TEST_CASE("every table operator lexes as exactly one token")
{
    for (const char* op : {"+", "-", "*", "/", "%", "++", "--", "&", "|", "^", "<<", ">>",
                           ">>>", "<", "<=", ">", ">=", "==", "!=", "&&", "||", "!", "+=",
                           "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>=", ">>>=",
                           "="}) {
        const auto tokens = tokenize(op);
        REQUIRE_MESSAGE(tokens.size() == 1, op);
        CHECK(tokens[0].kind == TokenKind::Operator);
        CHECK(tokens[0].text == op);
    }
}

TEST_CASE("operators inside literals and comments are opaque")
{
    const auto tokens = tokenize("s = \"a+b\"; // x<y");
    std::size_t operators = 0;
    for (const Token& tok : tokens) {
        if (tok.kind == TokenKind::Operator) {
            ++operators;
            CHECK(tok.text == "=");
        }
    }
    CHECK(operators == 1);

    bool saw_string = false, saw_comment = false;
    for (const Token& tok : tokens) {
        saw_string |= tok.kind == TokenKind::StringLiteral && tok.text == "\"a+b\"";
        saw_comment |= tok.kind == TokenKind::LineComment && tok.text == "// x<y";
    }
    CHECK(saw_string);
    CHECK(saw_comment);
}

TEST_CASE("string escapes do not close the literal")
{
    const auto tokens = significant(tokenize(R"(x = "a\"+\"b")"));
    REQUIRE(tokens.size() == 3);
    CHECK(tokens[2].kind == TokenKind::StringLiteral);
    CHECK(tokens[2].text == R"("a\"+\"b")");
}

TEST_CASE("unterminated regions run to end of input and are flagged")
{
    SUBCASE("string")
    {
        const auto tokens = tokenize("a = \"oops");
        CHECK(tokens.back().kind == TokenKind::StringLiteral);
        CHECK(tokens.back().unterminated);
        CHECK(tokens.back().text == "\"oops");
    }
    SUBCASE("block comment")
    {
        const auto tokens = tokenize("a /* oops");
        CHECK(tokens.back().kind == TokenKind::BlockComment);
        CHECK(tokens.back().unterminated);
    }
    SUBCASE("char")
    {
        const auto tokens = tokenize("c = 'x");
        CHECK(tokens.back().kind == TokenKind::CharLiteral);
        CHECK(tokens.back().unterminated);
    }
}

TEST_CASE("preprocessor lines are one opaque token")
{
    const auto tokens = significant(tokenize("#include <stdio.h>\nint a;"));
    REQUIRE(tokens.size() >= 3);
    CHECK(tokens[0].kind == TokenKind::Punctuation);
    CHECK(tokens[0].text == "#include <stdio.h>");
    CHECK(count_operators(tokenize("#include <stdio.h>\n")) == 0);

    SUBCASE("backslash continuation")
    {
        const auto pp = significant(tokenize("#define ADD(x) \\\n  ((x) + 1)\nint a;"));
        CHECK(pp[0].text == "#define ADD(x) \\\n  ((x) + 1)");
        CHECK(count_operators(tokenize("#define ADD(x) \\\n  ((x) + 1)\n")) == 0);
    }
}

TEST_CASE("numbers, floats and exponent signs")
{
    CHECK(tokenize("123")[0].kind == TokenKind::IntegerLiteral);
    CHECK(tokenize("0x1F")[0].kind == TokenKind::IntegerLiteral);
    CHECK(tokenize("1.5")[0].kind == TokenKind::FloatLiteral);
    CHECK(tokenize(".5")[0].kind == TokenKind::FloatLiteral);

    // The + of an exponent belongs to the literal, not the operator stream.
    const auto tokens = tokenize("1.5e+3");
    REQUIRE(tokens.size() == 1);
    CHECK(tokens[0].kind == TokenKind::FloatLiteral);
    CHECK(tokens[0].text == "1.5e+3");
}

TEST_CASE("compound punctuation hides component operators")
{
    CHECK(count_operators(tokenize("p->x")) == 0);
    CHECK(count_operators(tokenize("std::max")) == 0);
    CHECK(count_operators(tokenize("(a) => a")) == 0);
}

TEST_CASE("line numbers are 1-based and track newlines")
{
    const auto tokens = tokenize("a\nb\n\nc");
    REQUIRE(tokens.size() == 6);
    CHECK(tokens[0].line == 1);
    CHECK(tokens[2].line == 2);  // b
    CHECK(tokens[5].line == 4);  // c after blank line
}

TEST_CASE("spans are half-open, non-overlapping, increasing")
{
    const std::string source = "int c = a + b; // done";
    const auto tokens = tokenize(source);
    std::size_t expected_begin = 0;
    for (const Token& tok : tokens) {
        CHECK(tok.begin == expected_begin);
        CHECK(tok.end > tok.begin);
        CHECK(source.substr(tok.begin, tok.end - tok.begin) == tok.text);
        expected_begin = tok.end;
    }
    CHECK(expected_begin == source.size());
}

TEST_CASE("sign context: spec examples")
{
    SUBCASE("-a at start is unary")
    {
        const auto tokens = tokenize("-a");
        CHECK(classify_sign_context(tokens, 0) == SignContext::Unary);
    }
    SUBCASE("a - b is binary")
    {
        const auto tokens = tokenize("a - b");
        CHECK(classify_sign_context(tokens, 2) == SignContext::Binary);
    }
    SUBCASE("f(-x) * (-1): both minus tokens unary")
    {
        // Hand-walk of the preceding-token rule: each '-' follows '('.
        const auto tokens = tokenize("f(-x) * (-1)");
        std::vector<std::size_t> minus_indices;
        for (const Token& tok : tokens)
            if (tok.text == "-" && tok.kind == TokenKind::Operator)
                minus_indices.push_back(tok.index);
        REQUIRE(minus_indices.size() == 2);
        CHECK(classify_sign_context(tokens, minus_indices[0]) == SignContext::Unary);
        CHECK(classify_sign_context(tokens, minus_indices[1]) == SignContext::Unary);
    }
}

TEST_CASE("sign context: prefix and postfix")
{
    auto context_of = [](std::string_view source, std::string_view text, int nth = 0) {
        const auto tokens = tokenize(source);
        int seen = 0;
        for (const Token& tok : tokens)
            if (tok.text == text && tok.kind == TokenKind::Operator && seen++ == nth)
                return classify_sign_context(tokens, tok.index);
        throw std::logic_error("token not found");
    };

    CHECK(context_of("++a", "++") == SignContext::Prefix);
    CHECK(context_of("a++", "++") == SignContext::Postfix);
    CHECK(context_of("a[i]--", "--") == SignContext::Postfix);
    CHECK(context_of("x = --a", "--") == SignContext::Prefix);
    CHECK(context_of("return -1", "-") == SignContext::Unary);   // keyword before
    CHECK(context_of("total - 1", "-") == SignContext::Binary);  // identifier before
    CHECK(context_of("1.5 + x", "+") == SignContext::Binary);    // literal before
    CHECK(context_of("f() - 1", "-") == SignContext::Binary);    // ')' before

    // Chained: a++ - b has a postfix ++ in front of a binary -.
    CHECK(context_of("a++ - b", "-") == SignContext::Binary);
    // a + +b: second + follows an operator, so unary.
    CHECK(context_of("a + +b", "+", 1) == SignContext::Unary);
}

TEST_CASE("sign context: errors")
{
    const auto tokens = tokenize("a * b");
    CHECK_THROWS_AS(classify_sign_context(tokens, 99), std::out_of_range);
    CHECK_THROWS_AS(classify_sign_context(tokens, 2), std::invalid_argument);  // '*'
}

TEST_CASE("property: round-trip over fuzzed inputs")
{
    std::mt19937 rng(20260810);
    const std::string charset =
        "abcxyz_ABC0123456789 \t\n+-*/%<>=!&|^~?:;,.(){}[]'\"\\#@$";
    std::uniform_int_distribution<std::size_t> len_dist(0, 120);
    std::uniform_int_distribution<std::size_t> char_dist(0, charset.size() - 1);

    for (int round = 0; round < 2000; ++round) {
        std::string source;
        const std::size_t len = len_dist(rng);
        for (std::size_t i = 0; i < len; ++i)
            source += charset[char_dist(rng)];
        const auto tokens = tokenize(source);
        REQUIRE(joined(tokens) == source);
    }
}

TEST_CASE("property: operator soup round-trips and munches maximally")
{
    std::mt19937 rng(7);
    const std::string ops = "+-*/%<>=!&|^~";
    std::uniform_int_distribution<std::size_t> len_dist(1, 30);
    std::uniform_int_distribution<std::size_t> char_dist(0, ops.size() - 1);

    for (int round = 0; round < 2000; ++round) {
        std::string source;
        const std::size_t len = len_dist(rng);
        for (std::size_t i = 0; i < len; ++i)
            source += ops[char_dist(rng)];
        const auto tokens = tokenize(source);
        CHECK(joined(tokens) == source);
        // Maximal munch: no token may be extendable by its successor's first
        // character into a longer token from the same table.
        for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
            if (tokens[i].kind != TokenKind::Operator)
                continue;
            const std::string extended = tokens[i].text + tokens[i + 1].text[0];
            const auto relexed = tokenize(extended);
            CHECK(relexed.size() >= 2);
        }
    }
}

TEST_CASE("property: injecting operators into literals never changes outside count")
{
    std::mt19937 rng(99);
    const std::string ops = "+-*/%<>=!&|^";
    std::uniform_int_distribution<std::size_t> char_dist(0, ops.size() - 1);
    std::uniform_int_distribution<int> count_dist(1, 6);

    // head, tail, characters that may not be injected (would close the region)
    struct Template {
        std::string head, tail, forbidden;
    };
    const std::vector<Template> templates = {
        {"a = \"", "\"; b < c", ""},    // string literal
        {"a = '", "'; b < c", ""},      // char literal
        {"a + b // ", "\nc << d", ""},  // line comment
        {"a + b /* ", " */ c", "/"},    // block comment: '/' could form */
    };

    for (int round = 0; round < 4000; ++round) {
        const Template& t = templates[static_cast<std::size_t>(round) % templates.size()];
        const std::size_t baseline = count_operators(tokenize(t.head + t.tail));
        std::string injected;
        const int n = count_dist(rng);
        for (int i = 0; i < n; ++i) {
            const char c = ops[char_dist(rng)];
            if (t.forbidden.find(c) == std::string::npos)
                injected += c;
        }
        const std::size_t with_injection = count_operators(tokenize(t.head + injected + t.tail));
        REQUIRE(with_injection == baseline);
    }
}
