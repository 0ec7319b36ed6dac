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


#pragma once

#include "facetnav/facet.hh"
#include "facetnav/program.hh"
#include "facetnav/route_space.hh"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace facetnav {

//! The counted objects behind a weight.
enum class WeightKind {
    absolute,       //!< answer sets
    facet_counting, //!< facets
    supported,      //!< supported models
};

inline constexpr WeightKind all_weight_kinds[] = {WeightKind::absolute, WeightKind::facet_counting,
                                                  WeightKind::supported};

//! Short names `abs`, `fc` and `supp`.
[[nodiscard]] auto to_string(WeightKind kind) -> char const *;
//! Accepts the short names as well as `absolute`, `facet_counting` and `supported`.
[[nodiscard]] auto parse_weight_kind(std::string_view text) -> WeightKind;

//! Exact weight of a facet; negative values mean zooming out.
struct WeightValue {
    std::int64_t value{0};
    std::size_t basis_count{0}; //!< the count of the program on the current route

    friend auto operator==(WeightValue const &, WeightValue const &) -> bool = default;
};

//! Exact rational in lowest terms with 0 <= numerator <= denominator.
struct Pace {
    std::size_t numerator{0};
    std::size_t denominator{1};

    //! `1/4`
    [[nodiscard]] auto fraction() const -> std::string;
    //! `25%`, `33.33%`
    [[nodiscard]] auto percent() const -> std::string;
    [[nodiscard]] auto to_double() const -> double {
        return static_cast<double>(numerator) / static_cast<double>(denominator);
    }

    friend auto operator==(Pace const &, Pace const &) -> bool = default;
};

[[nodiscard]] auto make_pace(std::size_t numerator, std::size_t denominator) -> Pace;

//! The count of the program on `route` for the given kind.
[[nodiscard]] auto count(WeightKind kind, RouteSpace const &space, Route const &route = {}) -> std::size_t;
[[nodiscard]] auto count(WeightKind kind, GroundProgram const &program, Limits const &limits = {}) -> std::size_t;

//! Weight of activating `facet` on `route`.
//!
//! If the extended route is unsafe and a non-empty `redirection` is given,
//! the weight compares against the redirected route; otherwise against the
//! extended route. A non-empty redirection must be one of
//! `space.redirections(route.with(facet), facet)`, else Error{invalid_redirection}.
[[nodiscard]] auto facet_weight(WeightKind kind, Facet const &facet, RouteSpace const &space, Route const &route,
                                Route const &redirection = {}) -> WeightValue;
[[nodiscard]] auto facet_weight(WeightKind kind, Facet const &facet, GroundProgram const &program,
                                Route const &route, Route const &redirection = {}, Limits const &limits = {})
    -> WeightValue;

//! Fraction of the initial count pruned by `route`.
//!
//! Throws Error{pace_undefined} if the program has fewer than two answer
//! sets, Error{unsafe_route} if the route is unsafe.
[[nodiscard]] auto pace(WeightKind kind, RouteSpace const &space, Route const &route) -> Pace;
[[nodiscard]] auto pace(WeightKind kind, GroundProgram const &program, Route const &route, Limits const &limits = {})
    -> Pace;

//! Facets of the current route with their weights (empty redirection).
struct WeightedFacet {
    Facet facet;
    std::int64_t weight{0};
};

//! Weights of all facets of the program on a safe route, canonical order.
[[nodiscard]] auto weighted_facets(WeightKind kind, RouteSpace const &space, Route const &route)
    -> std::vector<WeightedFacet>;

//! Minimal and maximal weighted facets, ties included.
struct ExtremalFacets {
    std::vector<Facet> min;
    std::vector<Facet> max;
    std::int64_t min_weight{0};
    std::int64_t max_weight{0};
};

[[nodiscard]] auto extremal_facets(WeightKind kind, RouteSpace const &space, Route const &route)
    -> ExtremalFacets;
[[nodiscard]] auto extremal_facets(WeightKind kind, GroundProgram const &program, Route const &route,
                                   Limits const &limits = {}) -> ExtremalFacets;

//! A concrete counterexample to a weight property.
struct Witness {
    Route route;
    Facet facet;
    std::optional<Facet> other; //!< the facet it was compared against, if any
    std::string detail;
};

//! Outcome of checking one property on one program instance.
//!
//! `holds` only states that no counterexample exists among the routes that
//! were explored; it is no proof for other programs.
struct PropertyCheck {
    bool holds{true};
    std::optional<Witness> witness;
};

struct PropertyReport {
    PropertyCheck safe_zooming;
    PropertyCheck splitting;
    PropertyCheck reliable;
    PropertyCheck min_inline;
    PropertyCheck max_inline;
    std::size_t routes_checked{0};
};

//! Checks the five weight properties on every safe route built from at most
//! `max_depth` facets of the program.
//!
//! Throws Error{cap_exceeded} if the program has more facets than
//! Limits::max_property_facets.
[[nodiscard]] auto verify_weight_properties(WeightKind kind, RouteSpace const &space, std::size_t max_depth = 6)
    -> PropertyReport;
[[nodiscard]] auto verify_weight_properties(WeightKind kind, GroundProgram const &program,
                                            std::size_t max_depth = 6, Limits const &limits = {})
    -> PropertyReport;

} // namespace facetnav
