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
#include "facetnav/semantics.hh"

#include "oracle.hh"
#include "random_programs.hh"

#include <set>

using namespace facetnav;

namespace {

auto pi1() -> GroundProgram { return parse_program("a | b. c | d :- b. e."); }
auto pi2() -> GroundProgram { return parse_program("a | b | c. d | e :- b. f :- c."); }
auto pi3() -> GroundProgram { return parse_program("a. b :- a, not c. c :- not b, not d. d :- d."); }

auto atoms(std::initializer_list<std::string_view> names) -> std::set<Atom> {
    std::set<Atom> result;
    for (auto name : names) {
        result.insert(parse_atom(name));
    }
    return result;
}

} // namespace

TEST_CASE("answer sets of the example programs", "[semantics]") {
    REQUIRE(answer_sets(pi1()) == std::vector<Interpretation>{make_interpretation({"a", "e"}),
                                                             make_interpretation({"b", "c", "e"}),
                                                             make_interpretation({"b", "d", "e"})});
    REQUIRE(answer_sets(pi2()) == std::vector<Interpretation>{make_interpretation({"a"}),
                                                             make_interpretation({"b", "d"}),
                                                             make_interpretation({"b", "e"}),
                                                             make_interpretation({"c", "f"})});
    REQUIRE(answer_sets(pi3()) ==
            std::vector<Interpretation>{make_interpretation({"a", "b"}), make_interpretation({"a", "c"})});
    SECTION("edge cases") {
        REQUIRE(answer_sets(GroundProgram{}) == std::vector<Interpretation>{Interpretation{}});
        REQUIRE(answer_sets(parse_program("a. :- a.")).empty());
        REQUIRE(answer_sets(parse_program("a :- not a.")).empty());
        REQUIRE(answer_sets(parse_program("a :- b. b :- a.")) == std::vector<Interpretation>{Interpretation{}});
        // minimality: {a, b} is a model of the reduct but not minimal
        REQUIRE(answer_sets(parse_program("a | b. a :- b. b :- a.")) ==
                std::vector<Interpretation>{make_interpretation({"a", "b"})});
    }
}

TEST_CASE("supported models", "[semantics]") {
    REQUIRE(supported_models(pi3()) == std::vector<Interpretation>{make_interpretation({"a", "b"}),
                                                                  make_interpretation({"a", "b", "d"}),
                                                                  make_interpretation({"a", "c"})});
    REQUIRE(count_supported_models(pi3()) == 3);
    REQUIRE(supported_models(pi1()) == answer_sets(pi1()));
    // disjunctive support needs a unique true head atom
    REQUIRE(supported_models(parse_program("a | b.")) ==
            std::vector<Interpretation>{make_interpretation({"a"}), make_interpretation({"b"})});
    REQUIRE(supported_models(parse_program("a | b. a :- b. b :- a.")) ==
            std::vector<Interpretation>{make_interpretation({"a", "b"})});
}

TEST_CASE("consequences", "[semantics]") {
    auto c1 = consequences(pi1());
    REQUIRE(c1.satisfiable);
    REQUIRE(c1.brave == atoms({"a", "b", "c", "d", "e"}));
    REQUIRE(c1.cautious == atoms({"e"}));
    auto c2 = consequences(pi2());
    REQUIRE(c2.brave == atoms({"a", "b", "c", "d", "e", "f"}));
    REQUIRE(c2.cautious.empty());
    auto unsat = consequences(parse_program("a | b. :- a. :- b."));
    REQUIRE_FALSE(unsat.satisfiable);
    REQUIRE(unsat.brave.empty());
    REQUIRE(unsat.cautious == atoms({"a", "b"}));
    auto summary = summarize(pi2());
    REQUIRE(summary.answer_count == 4);
}

TEST_CASE("tightness", "[semantics]") {
    REQUIRE(is_tight(pi1()));
    REQUIRE(is_tight(pi2()));
    REQUIRE_FALSE(is_tight(pi3()));
    REQUIRE_FALSE(is_tight(parse_program("a :- b. b :- c. c :- a.")));
    REQUIRE(is_tight(parse_program("a :- not a.")));
    std::mt19937_64 rng{3};
    for (int i = 0; i < 300; ++i) {
        auto program = testing::random_program(rng);
        INFO(to_string(program));
        REQUIRE(is_tight(program) == !oracle::has_positive_cycle(program));
    }
}

TEST_CASE("enumeration agrees with brute force", "[semantics]") {
    std::mt19937_64 rng{2024};
    for (int i = 0; i < 150; ++i) {
        auto program = testing::random_program(rng);
        INFO(to_string(program));
        REQUIRE(answer_sets(program) == oracle::answer_sets(program));
        REQUIRE(supported_models(program) == oracle::supported_models(program));
    }
}

TEST_CASE("enumeration control", "[semantics]") {
    SECTION("visitor stops early") {
        std::size_t seen = 0;
        for_each_answer_set(
            testing::independent_choices(5), [&seen](Interpretation const &) { return ++seen < 3; });
        REQUIRE(seen == 3);
    }
    SECTION("head atom cap") {
        Limits limits;
        limits.max_head_atoms = 4;
        REQUIRE_NOTHROW(count_answer_sets(testing::independent_choices(2), limits));
        try {
            static_cast<void>(count_answer_sets(testing::independent_choices(3), limits));
            FAIL("expected a resource limit");
        } catch (Error const &error) {
            REQUIRE(error.code() == ErrorCode::resource_limit);
        }
    }
    SECTION("independent choices") {
        REQUIRE(count_answer_sets(testing::independent_choices(10)) == 1024);
        REQUIRE(is_satisfiable(testing::independent_choices(10)));
    }
}
