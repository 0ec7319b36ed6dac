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


#include "catch_amalgamated.hpp"

#include "facetnav/error.hh"
#include "facetnav/program.hh"
#include "facetnav/semantics.hh"

#include "oracle.hh"
#include "random_programs.hh"

using namespace facetnav;

namespace {

auto parse_failure(std::string_view text) -> ParseError {
    try {
        static_cast<void>(parse_program(text));
    } catch (ParseError const &error) {
        return error;
    }
    FAIL("expected a parse error for: " << text);
    throw std::logic_error{"unreachable"};
}

} // namespace

TEST_CASE("parse ground programs", "[program]") {
    SECTION("disjunctive rules") {
        auto program = parse_program("a | b.\nc | d :- b.\ne.");
        REQUIRE(program.size() == 3);
        REQUIRE(program.atoms().size() == 5);
        REQUIRE(program.rules()[1] == make_rule({parse_atom("c"), parse_atom("d")}, {parse_atom("b")}));
        REQUIRE(program.head_atoms().size() == 5);
    }
    SECTION("default negation, constraints and comments") {
        auto program = parse_program("% comment\na.\nb :- a, not c. % trailing\n:- b, not a.\nnotx :- not   y.");
        REQUIRE(program.size() == 4);
        REQUIRE(program.rules()[1].negative_body == std::vector<Atom>{parse_atom("c")});
        REQUIRE(program.rules()[2].is_constraint());
        // `notx` is an atom, not a negation
        REQUIRE(program.contains(parse_atom("notx")));
        REQUIRE(program.rules()[3].negative_body == std::vector<Atom>{parse_atom("y")});
    }
    SECTION("terms") {
        auto program = parse_program("outfit(jacket,blue). q :- outfit(jacket, blue), p(1,2).");
        REQUIRE(program.contains(Atom{"outfit", {std::string{"jacket"}, std::string{"blue"}}}));
        REQUIRE(program.contains(Atom{"p", {std::int64_t{1}, std::int64_t{2}}}));
        REQUIRE(to_string(Atom{"p", {std::int64_t{1}, std::int64_t{2}}}) == "p(1,2)");
    }
    SECTION("duplicates are dropped") {
        auto program = parse_program("a | b. b | a. a | a | b.");
        REQUIRE(program.size() == 1);
    }
    SECTION("empty text") {
        REQUIRE(parse_program("").empty());
        REQUIRE(parse_program("% nothing\n\n").empty());
    }
}

TEST_CASE("parse diagnostics", "[program]") {
    SECTION("positions") {
        auto error = parse_failure("a.\nb :- .");
        REQUIRE(error.code() == ErrorCode::parse_error);
        REQUIRE(error.line() == 2);
        REQUIRE(error.column() == 6);
        REQUIRE(std::string{error.what()} == "2:6: expected atom");
    }
    SECTION("missing period") {
        auto error = parse_failure("a.\n  b c.");
        REQUIRE(error.code() == ErrorCode::parse_error);
        REQUIRE(error.line() == 2);
        REQUIRE(error.column() == 5);
    }
    SECTION("variables") {
        auto error = parse_failure("a :- X.");
        REQUIRE(error.code() == ErrorCode::non_ground);
        REQUIRE(error.column() == 6);
    }
    SECTION("unsupported constructs") {
        for (auto text : {"-a.", "{a}.", "a :~ b.", "#show a.", "a :- b; c."}) {
            INFO(text);
            REQUIRE(parse_failure(text).code() == ErrorCode::unsupported_syntax);
        }
    }
    SECTION("malformed input") {
        for (auto text : {".", "a", "a(f(x)).", "a :- b,.", "a | ."}) {
            INFO(text);
            REQUIRE(parse_failure(text).code() == ErrorCode::parse_error);
        }
    }
}

TEST_CASE("printing round-trips", "[program]") {
    std::mt19937_64 rng{7};
    for (int i = 0; i < 100; ++i) {
        auto program = testing::random_program(rng);
        REQUIRE(parse_program(to_string(program)) == program);
    }
    REQUIRE(to_string(parse_program("b :- a, not c.")) == "b :- a, not c.\n");
    REQUIRE(to_string(make_interpretation({"e", "a"})) == "{a, e}");
    REQUIRE(to_string(Interpretation{}) == "{}");
}

TEST_CASE("reduct and models", "[program]") {
    auto pi3 = parse_program("a.\nb :- a, not c.\nc :- not b, not d.\nd :- d.");
    SECTION("reduct") {
        REQUIRE(glp_reduct(pi3, make_interpretation({"a", "b"})) == parse_program("a. b :- a. d :- d."));
        REQUIRE(glp_reduct(pi3, make_interpretation({"a", "c"})) == parse_program("a. c. d :- d."));
    }
    SECTION("agrees with the oracle") {
        std::mt19937_64 rng{11};
        for (int i = 0; i < 50; ++i) {
            auto program = testing::random_program(rng, {6, 8, false});
            for (auto const &x : oracle::supported_models(program)) {
                REQUIRE(glp_reduct(program, x) == oracle::reduct(program, x));
                REQUIRE(is_model(program, x));
            }
        }
    }
    SECTION("models") {
        REQUIRE(is_model(pi3, make_interpretation({"a", "b"})));
        REQUIRE_FALSE(is_model(pi3, make_interpretation({"a"})));
    }
}
