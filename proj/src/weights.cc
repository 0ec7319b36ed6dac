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


#include "facetnav/weights.hh"

#include "facetnav/error.hh"

#include <algorithm>
#include <cstdio>
#include <numeric>

namespace facetnav {

namespace {

auto signed_count(WeightKind kind, RouteSpace const &space, Route const &route) -> std::int64_t {
    return static_cast<std::int64_t>(count(kind, space, route));
}

void record(PropertyCheck &check, Route const &route, Facet const &facet, std::optional<Facet> other,
            std::string detail) {
    if (check.holds) {
        check.holds = false;
        check.witness = Witness{route, facet, std::move(other), std::move(detail)};
    }
}

} // namespace

auto to_string(WeightKind kind) -> char const * {
    switch (kind) {
        case WeightKind::absolute: {
            return "abs";
        }
        case WeightKind::facet_counting: {
            return "fc";
        }
        case WeightKind::supported: {
            return "supp";
        }
    }
    return "";
}

auto parse_weight_kind(std::string_view text) -> WeightKind {
    if (text == "abs" || text == "absolute") {
        return WeightKind::absolute;
    }
    if (text == "fc" || text == "facet_counting" || text == "facet-counting") {
        return WeightKind::facet_counting;
    }
    if (text == "supp" || text == "supported") {
        return WeightKind::supported;
    }
    throw Error{ErrorCode::invalid_argument, "unknown weight kind '" + std::string{text} + "' (use abs, fc or supp)"};
}

auto Pace::fraction() const -> std::string { return std::to_string(numerator) + "/" + std::to_string(denominator); }

auto Pace::percent() const -> std::string {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.2f", 100.0 * to_double());
    std::string text{buffer};
    while (text.back() == '0') {
        text.pop_back();
    }
    if (text.back() == '.') {
        text.pop_back();
    }
    return text + "%";
}

auto make_pace(std::size_t numerator, std::size_t denominator) -> Pace {
    if (denominator == 0 || numerator > denominator) {
        throw Error{ErrorCode::invalid_argument, "pace must be a fraction in [0, 1]"};
    }
    auto g = std::gcd(numerator, denominator);
    return numerator == 0 ? Pace{0, 1} : Pace{numerator / g, denominator / g};
}

auto count(WeightKind kind, RouteSpace const &space, Route const &route) -> std::size_t {
    switch (kind) {
        case WeightKind::absolute: {
            return space.answer_count(route);
        }
        case WeightKind::facet_counting: {
            return space.facets(route).count;
        }
        case WeightKind::supported: {
            return space.supported_count(route);
        }
    }
    return 0;
}

auto count(WeightKind kind, GroundProgram const &program, Limits const &limits) -> std::size_t {
    RouteSpace space{program, limits};
    return count(kind, space, {});
}

auto facet_weight(WeightKind kind, Facet const &facet, RouteSpace const &space, Route const &route,
                  Route const &redirection) -> WeightValue {
    space.require_known(facet);
    auto extended = route.with(facet);
    if (!redirection.empty()) {
        auto options = space.redirections(extended, facet);
        bool offered = std::any_of(options.begin(), options.end(),
                                   [&redirection](Route const &option) { return same_facets(option, redirection); });
        if (!offered) {
            throw Error{ErrorCode::invalid_redirection, to_string(redirection) + " is not a redirection of " +
                                                            to_string(extended) + " with respect to " +
                                                            to_string(facet)};
        }
    }
    auto basis = signed_count(kind, space, route);
    bool redirect = !redirection.empty() && !space.is_safe(extended);
    auto target = redirect ? signed_count(kind, space, redirection) : signed_count(kind, space, extended);
    return WeightValue{basis - target, static_cast<std::size_t>(basis)};
}

auto facet_weight(WeightKind kind, Facet const &facet, GroundProgram const &program, Route const &route,
                  Route const &redirection, Limits const &limits) -> WeightValue {
    RouteSpace space{program, limits};
    return facet_weight(kind, facet, space, route, redirection);
}

auto pace(WeightKind kind, RouteSpace const &space, Route const &route) -> Pace {
    if (space.answer_count({}) < 2) {
        throw Error{ErrorCode::pace_undefined, "pace needs a program with at least two answer sets"};
    }
    if (!space.is_safe(route)) {
        throw Error{ErrorCode::unsafe_route, "pace is only defined on safe routes, " + to_string(route) + " is unsafe"};
    }
    auto initial = count(kind, space, {});
    auto current = count(kind, space, route);
    if (current > initial) {
        throw Error{ErrorCode::invalid_argument, "count grew along a safe route"};
    }
    return make_pace(initial - current, initial);
}

auto pace(WeightKind kind, GroundProgram const &program, Route const &route, Limits const &limits) -> Pace {
    RouteSpace space{program, limits};
    return pace(kind, space, route);
}

auto weighted_facets(WeightKind kind, RouteSpace const &space, Route const &route) -> std::vector<WeightedFacet> {
    std::vector<WeightedFacet> result;
    auto basis = signed_count(kind, space, route);
    for (auto const &facet : space.facets(route).all()) {
        result.push_back({facet, basis - signed_count(kind, space, route.with(facet))});
    }
    return result;
}

auto extremal_facets(WeightKind kind, RouteSpace const &space, Route const &route) -> ExtremalFacets {
    if (!space.is_safe(route)) {
        throw Error{ErrorCode::unsafe_route, "extremal facets need a safe route, " + to_string(route) + " is unsafe"};
    }
    ExtremalFacets result;
    auto weighted = weighted_facets(kind, space, route);
    if (weighted.empty()) {
        return result;
    }
    auto [lo, hi] = std::minmax_element(weighted.begin(), weighted.end(),
                                        [](auto const &a, auto const &b) { return a.weight < b.weight; });
    result.min_weight = lo->weight;
    result.max_weight = hi->weight;
    for (auto const &wf : weighted) {
        if (wf.weight == result.min_weight) {
            result.min.push_back(wf.facet);
        }
        if (wf.weight == result.max_weight) {
            result.max.push_back(wf.facet);
        }
    }
    return result;
}

auto extremal_facets(WeightKind kind, GroundProgram const &program, Route const &route, Limits const &limits)
    -> ExtremalFacets {
    RouteSpace space{program, limits};
    return extremal_facets(kind, space, route);
}

auto verify_weight_properties(WeightKind kind, RouteSpace const &space, std::size_t max_depth) -> PropertyReport {
    auto all = space.facets({}).all();
    if (all.size() > space.limits().max_property_facets) {
        throw Error{ErrorCode::cap_exceeded, "property verification is capped at " +
                                                 std::to_string(space.limits().max_property_facets) +
                                                 " facets, program has " + std::to_string(all.size())};
    }
    PropertyReport report;

    // safe facet sets of the program, level by level, as increasing index lists
    std::vector<std::vector<std::size_t>> level;
    if (space.is_safe({})) {
        level.emplace_back();
    }
    for (std::size_t depth = 0; !level.empty(); ++depth) {
        std::vector<std::vector<std::size_t>> next;
        for (auto const &indices : level) {
            Route route;
            for (auto i : indices) {
                route.push(all[i]);
            }
            ++report.routes_checked;
            auto basis = signed_count(kind, space, route);
            auto here = space.facets(route).all();
            std::vector<std::int64_t> weights;
            for (auto const &f : here) {
                weights.push_back(basis - signed_count(kind, space, route.with(f)));
            }

            for (std::size_t i = 0; i < here.size(); ++i) {
                if (weights[i] <= 0) {
                    record(report.safe_zooming, route, here[i], std::nullopt,
                           "weight " + std::to_string(weights[i]) + " is not positive");
                }
                if (here[i].polarity == Polarity::inclusive) {
                    auto j = static_cast<std::size_t>(std::find(here.begin(), here.end(), here[i].inverse()) -
                                                      here.begin());
                    if (weights[i] + weights[j] != basis) {
                        record(report.splitting, route, here[i], here[j],
                               "weights " + std::to_string(weights[i]) + " + " + std::to_string(weights[j]) +
                                   " differ from count " + std::to_string(basis));
                    }
                }
            }

            for (auto const &f : all) {
                auto weight = basis - signed_count(kind, space, route.with(f));
                bool unsafe = !space.is_safe(route.with(f));
                if ((weight == basis) != unsafe) {
                    record(report.reliable, route, f, std::nullopt,
                           "weight " + std::to_string(weight) + (weight == basis ? " equals" : " differs from") +
                               " count " + std::to_string(basis) + " but " + to_string(route.with(f)) + " is " +
                               (unsafe ? "unsafe" : "safe"));
                }
            }

            if (!here.empty()) {
                auto lo = *std::min_element(weights.begin(), weights.end());
                auto hi = *std::max_element(weights.begin(), weights.end());
                std::vector<std::size_t> answers;
                for (auto const &f : here) {
                    answers.push_back(space.answer_count(route.with(f)));
                }
                // f is extremal iff activating it beats every non-extremal facet
                auto inline_check = [&](PropertyCheck &check, std::int64_t extreme, bool larger, char const *name) {
                    for (std::size_t i = 0; i < here.size(); ++i) {
                        bool extremal = weights[i] == extreme;
                        std::optional<std::size_t> breaker;
                        for (std::size_t j = 0; j < here.size() && !breaker; ++j) {
                            if (weights[j] == extreme) {
                                continue;
                            }
                            bool beats = larger ? answers[i] > answers[j] : answers[i] < answers[j];
                            if (!beats) {
                                breaker = j;
                            }
                        }
                        bool dominates = !breaker.has_value();
                        if (extremal == dominates) {
                            continue;
                        }
                        std::optional<Facet> other;
                        std::string detail;
                        if (breaker) {
                            other = here[*breaker];
                            detail = std::string{name} + " weighted facet leads to " + std::to_string(answers[i]) +
                                     " answer sets, " + to_string(here[*breaker]) + " to " +
                                     std::to_string(answers[*breaker]);
                        } else {
                            detail = std::string{"facet is not "} + name +
                                     " weighted yet its answer-set count beats every facet that is not";
                        }
                        record(check, route, here[i], other, std::move(detail));
                    }
                };
                inline_check(report.min_inline, lo, true, "minimal");
                inline_check(report.max_inline, hi, false, "maximal");
            }

            if (depth < max_depth) {
                auto start = indices.empty() ? 0 : indices.back() + 1;
                for (auto i = start; i < all.size(); ++i) {
                    if (space.is_safe(route.with(all[i]))) {
                        auto extended = indices;
                        extended.push_back(i);
                        next.push_back(std::move(extended));
                    }
                }
            }
        }
        level = std::move(next);
    }
    return report;
}

auto verify_weight_properties(WeightKind kind, GroundProgram const &program, std::size_t max_depth,
                              Limits const &limits) -> PropertyReport {
    RouteSpace space{program, limits};
    return verify_weight_properties(kind, space, max_depth);
}

} // namespace facetnav
