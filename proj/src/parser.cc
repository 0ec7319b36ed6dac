// {{{ MIT License
//
// Copyright 2026 The facetnav authors
//
// Permission is hereby granted, free of charge, to any person obtaining a copy
// of this software and associated documentation files (the "Software"), to
// deal in the Software without restriction, including without limitation the
// rights to use, copy, modify, merge, publish, distribute, sublicense, and/or
// sell copies of the Software, and to permit persons to whom the Software is
// furnished to do so, subject to the following conditions:
//
// The above copyright notice and this permission notice shall be included in
// all copies or substantial portions of the Software.
//
// THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
// IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
// FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
// AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
// LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
// FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS
// IN THE SOFTWARE.
//
// }}}


#include "facetnav/error.hh"
#include "facetnav/program.hh"

#include <cctype>
#include <charconv>
#include <optional>

namespace facetnav {

namespace {

enum class TokenKind { identifier, variable, integer, lparen, rparen, comma, bar, dot, if_, end };

struct Token {
    TokenKind kind;
    std::string_view text;
    std::size_t line;
    std::size_t column;
    bool spaced; // whitespace or a comment precedes the token
};

auto is_ident_char(char c) -> bool { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

class Lexer {
  public:
    explicit Lexer(std::string_view text) : text_{text} {}

    auto next() -> Token {
        bool spaced = skip_blank();
        if (pos_ >= text_.size()) {
            return {TokenKind::end, {}, line_, column_, spaced};
        }
        std::size_t line = line_;
        std::size_t column = column_;
        std::size_t start = pos_;
        char c = text_[pos_];
        auto single = [&](TokenKind kind) {
            advance(1);
            return Token{kind, text_.substr(start, 1), line, column, spaced};
        };
        if (std::islower(static_cast<unsigned char>(c)) != 0) {
            return word(TokenKind::identifier, start, line, column, spaced);
        }
        if (std::isupper(static_cast<unsigned char>(c)) != 0 || c == '_') {
            return word(TokenKind::variable, start, line, column, spaced);
        }
        if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) {
                advance(1);
            }
            if (pos_ < text_.size() && is_ident_char(text_[pos_])) {
                throw ParseError{ErrorCode::parse_error, "malformed number", line, column};
            }
            return {TokenKind::integer, text_.substr(start, pos_ - start), line, column, spaced};
        }
        switch (c) {
            case '(': {
                return single(TokenKind::lparen);
            }
            case ')': {
                return single(TokenKind::rparen);
            }
            case ',': {
                return single(TokenKind::comma);
            }
            case '|': {
                return single(TokenKind::bar);
            }
            case '.': {
                return single(TokenKind::dot);
            }
            case ':': {
                if (peek(1) == '-') {
                    advance(2);
                    return {TokenKind::if_, text_.substr(start, 2), line, column, spaced};
                }
                if (peek(1) == '~') {
                    throw ParseError{ErrorCode::unsupported_syntax, "weak constraints are not supported", line,
                                     column};
                }
                break;
            }
            case '-': {
                throw ParseError{ErrorCode::unsupported_syntax, "classical negation is not supported", line, column};
            }
            case '#': {
                throw ParseError{ErrorCode::unsupported_syntax,
                                 "directives, aggregates and optimization statements are not supported", line,
                                 column};
            }
            case '{':
            case '}': {
                throw ParseError{ErrorCode::unsupported_syntax, "choice rules are not supported", line, column};
            }
            case ';': {
                throw ParseError{ErrorCode::unsupported_syntax, "use '|' for disjunction and ',' in bodies", line,
                                 column};
            }
            default: {
                break;
            }
        }
        throw ParseError{ErrorCode::parse_error, std::string{"unexpected character '"} + c + "'", line, column};
    }

  private:
    auto peek(std::size_t offset) const -> char {
        return pos_ + offset < text_.size() ? text_[pos_ + offset] : '\0';
    }

    void advance(std::size_t n) {
        for (std::size_t i = 0; i < n; ++i) {
            if (text_[pos_] == '\n') {
                ++line_;
                column_ = 1;
            } else {
                ++column_;
            }
            ++pos_;
        }
    }

    auto skip_blank() -> bool {
        bool skipped = false;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isspace(static_cast<unsigned char>(c)) != 0) {
                advance(1);
            } else if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') {
                    advance(1);
                }
            } else {
                break;
            }
            skipped = true;
        }
        return skipped;
    }

    auto word(TokenKind kind, std::size_t start, std::size_t line, std::size_t column, bool spaced) -> Token {
        while (pos_ < text_.size() && is_ident_char(text_[pos_])) {
            advance(1);
        }
        return {kind, text_.substr(start, pos_ - start), line, column, spaced};
    }

    std::string_view text_;
    std::size_t pos_{0};
    std::size_t line_{1};
    std::size_t column_{1};
};

class Parser {
  public:
    explicit Parser(std::string_view text) : lexer_{text} {
        current_ = lexer_.next();
        lookahead_ = lexer_.next();
    }

    auto program() -> GroundProgram {
        GroundProgram result;
        while (current_.kind != TokenKind::end) {
            result.add_rule(rule());
        }
        return result;
    }

    auto single_atom() -> Atom {
        Atom result = atom();
        if (current_.kind != TokenKind::end) {
            fail("unexpected input after atom");
        }
        return result;
    }

  private:
    auto rule() -> Rule {
        std::vector<Atom> head;
        std::vector<Atom> positive;
        std::vector<Atom> negative;
        if (current_.kind == TokenKind::dot) {
            fail("empty rule");
        }
        if (current_.kind != TokenKind::if_) {
            head.push_back(atom());
            while (current_.kind == TokenKind::bar) {
                shift();
                head.push_back(atom());
            }
        }
        if (current_.kind == TokenKind::if_) {
            shift();
            literal(positive, negative);
            while (current_.kind == TokenKind::comma) {
                shift();
                literal(positive, negative);
            }
        }
        expect(TokenKind::dot, "expected '.'");
        return make_rule(std::move(head), std::move(positive), std::move(negative));
    }

    void literal(std::vector<Atom> &positive, std::vector<Atom> &negative) {
        if (current_.kind == TokenKind::identifier && current_.text == "not" &&
            (lookahead_.kind == TokenKind::identifier || lookahead_.kind == TokenKind::variable) &&
            lookahead_.spaced) {
            shift();
            negative.push_back(atom());
            return;
        }
        positive.push_back(atom());
    }

    auto atom() -> Atom {
        if (current_.kind == TokenKind::variable) {
            fail_non_ground();
        }
        if (current_.kind != TokenKind::identifier) {
            fail("expected atom");
        }
        Atom result{std::string{current_.text}, {}};
        shift();
        if (current_.kind == TokenKind::lparen) {
            shift();
            result.terms.push_back(constant());
            while (current_.kind == TokenKind::comma) {
                shift();
                result.terms.push_back(constant());
            }
            expect(TokenKind::rparen, "expected ')'");
        }
        return result;
    }

    auto constant() -> Term {
        switch (current_.kind) {
            case TokenKind::identifier: {
                Term term{std::string{current_.text}};
                shift();
                if (current_.kind == TokenKind::lparen) {
                    fail("function terms are not supported");
                }
                return term;
            }
            case TokenKind::integer: {
                std::int64_t value{};
                auto [ptr, ec] =
                    std::from_chars(current_.text.data(), current_.text.data() + current_.text.size(), value);
                if (ec != std::errc{}) {
                    fail("integer out of range");
                }
                shift();
                return Term{value};
            }
            case TokenKind::variable: {
                fail_non_ground();
            }
            default: {
                fail("expected constant");
            }
        }
    }

    void expect(TokenKind kind, char const *message) {
        if (current_.kind != kind) {
            fail(message);
        }
        shift();
    }

    void shift() {
        current_ = lookahead_;
        if (current_.kind != TokenKind::end) {
            lookahead_ = lexer_.next();
        }
    }

    [[noreturn]] void fail(std::string const &message) const {
        throw ParseError{ErrorCode::parse_error, message, current_.line, current_.column};
    }

    [[noreturn]] void fail_non_ground() const {
        throw ParseError{ErrorCode::non_ground,
                         "variable '" + std::string{current_.text} + "' in ground program (input must be ground)",
                         current_.line, current_.column};
    }

    Lexer lexer_;
    Token current_{};
    Token lookahead_{};
};

} // namespace

auto parse_program(std::string_view text) -> GroundProgram { return Parser{text}.program(); }

auto parse_atom(std::string_view text) -> Atom { return Parser{text}.single_atom(); }

} // namespace facetnav
