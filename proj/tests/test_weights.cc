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
#include "facetnav/weights.hh"

#include "oracle.hh"
#include "random_programs.hh"

#include <map>

using namespace facetnav;

namespace {

auto pi1() -> GroundProgram { return parse_program("a | b. c | d :- b. e."); }
auto pi2() -> GroundProgram { return parse_program("a | b | c. d | e :- b. f :- c."); }
auto pi3() -> GroundProgram { return parse_program("a. b :- a, not c. c :- not b, not d. d :- d."); }

auto r(std::string_view text) -> Route { return parse_route(text); }
auto f(std::string_view text) -> Facet { return parse_facet(text); }

auto weight_map(WeightKind kind, GroundProgram const &program, Route const &route = {})
    -> std::map<std::string, std::int64_t> {
    RouteSpace space{program};
    std::map<std::string, std::int64_t> result;
    for (auto const &wf : weighted_facets(kind, space, route)) {
        result[to_string(wf.facet)] = wf.weight;
    }
    return result;
}

auto strings(std::vector<Facet> const &facets) -> std::vector<std::string> {
    std::vector<std::string> result;
    for (auto const &x : facets) {
        result.push_back(to_string(x));
    }
    return result;
}

template <class F> auto error_code(F &&call) -> ErrorCode {
    try {
        call();
    } catch (Error const &error) {
        return error.code();
    }
    FAIL("expected an error");
    throw std::logic_error{"unreachable"};
}

} // namespace

TEST_CASE("counts", "[weights]") {
    REQUIRE(count(WeightKind::absolute, pi1()) == 3);
    REQUIRE(count(WeightKind::facet_counting, pi1()) == 8);
    REQUIRE(count(WeightKind::supported, pi3()) == 3);
    REQUIRE(count(WeightKind::supported, pi1()) == 3);
    REQUIRE(parse_weight_kind("abs") == WeightKind::absolute);
    REQUIRE(parse_weight_kind("facet_counting") == WeightKind::facet_counting);
    REQUIRE(std::string{to_string(WeightKind::supported)} == "supp");
    REQUIRE(error_code([] { static_cast<void>(parse_weight_kind("size")); }) == ErrorCode::invalid_argument);
}

TEST_CASE("absolute weights", "[weights]") {
    auto program = pi1();
    // sliding: the conflict resolves to a route of the same size
    REQUIRE(facet_weight(WeightKind::absolute, f("a"), program, r("<~a, c>"), r("<a>")).value == 0);
    // zooming out by one answer set
    REQUIRE(facet_weight(WeightKind::absolute, f("b"), program, r("<a>"), r("<b>")).value == -1);
    REQUIRE(facet_weight(WeightKind::absolute, f("b"), program, r("<~c>")).value == 1);
    // a redirection only counts if it is one of the offered routes
    REQUIRE(error_code([&] {
                static_cast<void>(facet_weight(WeightKind::absolute, f("b"), program, r("<~c>"), r("<~a>")));
            }) == ErrorCode::invalid_redirection);
    // without a redirection the weight of an unsafe step is the full count
    REQUIRE(facet_weight(WeightKind::absolute, f("b"), program, r("<a>")).value == 1);
    REQUIRE(weight_map(WeightKind::absolute, program) == std::map<std::string, std::int64_t>{
                                                             {"a", 2}, {"b", 1}, {"c", 2}, {"d", 2},
                                                             {"~a", 1}, {"~b", 2}, {"~c", 1}, {"~d", 1}});
    REQUIRE(error_code([&] { static_cast<void>(facet_weight(WeightKind::absolute, f("q"), program, {})); }) ==
            ErrorCode::unknown_atom);
}

TEST_CASE("facet-counting weights", "[weights]") {
    REQUIRE(facet_weight(WeightKind::facet_counting, f("~a"), pi1(), {}).value == 4);
    REQUIRE(facet_weight(WeightKind::facet_counting, f("~c"), pi1(), {}).value == 2);
    REQUIRE(weight_map(WeightKind::facet_counting, pi2()) ==
            std::map<std::string, std::int64_t>{{"a", 12}, {"b", 8}, {"c", 12}, {"d", 12}, {"e", 12}, {"f", 12},
                                                {"~a", 2}, {"~b", 6}, {"~c", 4}, {"~d", 2}, {"~e", 2}, {"~f", 4}});
}

TEST_CASE("supported-model weights", "[weights]") {
    auto weights = weight_map(WeightKind::supported, pi3());
    REQUIRE(weights == std::map<std::string, std::int64_t>{{"b", 1}, {"c", 2}, {"~b", 2}, {"~c", 1}});
}

TEST_CASE("pace", "[weights]") {
    auto program = pi1();
    REQUIRE(pace(WeightKind::absolute, program, r("<~c>")) == make_pace(1, 3));
    REQUIRE(pace(WeightKind::facet_counting, program, r("<~c>")) == make_pace(1, 4));
    REQUIRE(pace(WeightKind::facet_counting, program, r("<a>")) == make_pace(1, 1));
    REQUIRE(pace(WeightKind::absolute, program, r("<a>")) == make_pace(2, 3));
    REQUIRE(pace(WeightKind::absolute, program, {}) == make_pace(0, 1));
    REQUIRE(make_pace(2, 8) == Pace{1, 4});
    REQUIRE(make_pace(1, 4).fraction() == "1/4");
    REQUIRE(make_pace(1, 4).percent() == "25%");
    REQUIRE(make_pace(1, 3).percent() == "33.33%");
    REQUIRE(make_pace(1, 1).percent() == "100%");
    REQUIRE(error_code([&] { static_cast<void>(pace(WeightKind::absolute, program, r("<a, b>"))); }) ==
            ErrorCode::unsafe_route);
    REQUIRE(error_code([] { static_cast<void>(pace(WeightKind::absolute, parse_program("a."), {})); }) ==
            ErrorCode::pace_undefined);
}

TEST_CASE("extremal facets", "[weights]") {
    auto abs = extremal_facets(WeightKind::absolute, pi2(), {});
    REQUIRE(strings(abs.max) == std::vector<std::string>{"a", "c", "d", "e", "f"});
    REQUIRE(strings(abs.min) == std::vector<std::string>{"~a", "~c", "~d", "~e", "~f"});
    auto fc = extremal_facets(WeightKind::facet_counting, pi2(), {});
    REQUIRE(strings(fc.max) == std::vector<std::string>{"a", "c", "d", "e", "f"});
    REQUIRE(strings(fc.min) == std::vector<std::string>{"~a", "~d", "~e"});
    REQUIRE(fc.max_weight == 12);
    REQUIRE(fc.min_weight == 2);
    auto done = extremal_facets(WeightKind::absolute, pi1(), r("<a>"));
    REQUIRE(done.max.empty());
    REQUIRE(done.min.empty());
}

TEST_CASE("weight properties on the example programs", "[weights]") {
    auto abs = verify_weight_properties(WeightKind::absolute, pi1(), 4);
    REQUIRE(abs.safe_zooming.holds);
    REQUIRE(abs.splitting.holds);
    REQUIRE(abs.reliable.holds);
    REQUIRE(abs.min_inline.holds);
    REQUIRE(abs.max_inline.holds);
    REQUIRE(abs.routes_checked > 1);

    auto fc = verify_weight_properties(WeightKind::facet_counting, pi2(), 1);
    REQUIRE_FALSE(fc.min_inline.holds);
    REQUIRE(fc.min_inline.witness);
    REQUIRE(fc.min_inline.witness->route.empty());
    REQUIRE(fc.min_inline.witness->facet == f("~a"));
    REQUIRE(fc.min_inline.witness->other == f("~c"));

    auto fc1 = verify_weight_properties(WeightKind::facet_counting, pi1(), 1);
    REQUIRE_FALSE(fc1.reliable.holds);
    // the facet-counting weight of c on <~a> is the full count, yet the step is safe
    RouteSpace space{pi1()};
    REQUIRE(facet_weight(WeightKind::facet_counting, f("c"), space, r("<~a>")).value ==
            static_cast<std::int64_t>(count(WeightKind::facet_counting, space, r("<~a>"))));
    REQUIRE(space.is_safe(r("<~a, c>")));

    auto supp = verify_weight_properties(WeightKind::supported, pi3(), 1);
    REQUIRE_FALSE(supp.min_inline.holds);
    REQUIRE_FALSE(supp.max_inline.holds);
    REQUIRE(supp.min_inline.witness);
    REQUIRE(supp.max_inline.witness);

    Limits limits;
    limits.max_property_facets = 6;
    REQUIRE(error_code([&] {
                static_cast<void>(verify_weight_properties(WeightKind::absolute, pi1(), 2, limits));
            }) == ErrorCode::cap_exceeded);
}

TEST_CASE("weights agree with brute force", "[weights]") {
    std::mt19937_64 rng{99};
    for (int i = 0; i < 40; ++i) {
        auto program = testing::random_program(rng, {6, 9, false});
        RouteSpace space{program};
        auto all = facets(program).all();
        if (all.empty()) {
            continue;
        }
        Route route{all[std::uniform_int_distribution<std::size_t>{0, all.size() - 1}(rng)]};
        INFO(to_string(program) << to_string(route));
        for (auto kind : all_weight_kinds) {
            REQUIRE(count(kind, space, route) == oracle::count(kind, program, route));
            for (auto const &facet : all) {
                REQUIRE(facet_weight(kind, facet, space, route).value == oracle::weight(kind, facet, program, route));
                auto extended = route.with(facet);
                if (!space.is_safe(extended)) {
                    for (auto const &option : space.redirections(extended, facet)) {
                        REQUIRE(facet_weight(kind, facet, space, route, option).value ==
                                oracle::weight(kind, facet, program, route, option));
                    }
                }
            }
        }
    }
}
