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


#include "facetnav/json_codec.hh"

#include <algorithm>

namespace facetnav::json {

auto facet(Facet const &facet) -> Json { return to_string(facet); }

auto route(Route const &route) -> Json {
    auto result = Json::array();
    for (auto const &f : route.steps()) {
        result.push_back(to_string(f));
    }
    return result;
}

auto routes(std::vector<Route> const &routes) -> Json {
    auto result = Json::array();
    for (auto const &r : routes) {
        result.push_back(route(r));
    }
    return result;
}

auto interpretation(Interpretation const &interpretation) -> Json {
    auto result = Json::array();
    for (auto const &atom : interpretation.atoms()) {
        result.push_back(to_string(atom));
    }
    return result;
}

auto counts(KindCounts const &counts) -> Json {
    auto result = Json::object();
    for (auto const &[kind, value] : counts) {
        result[to_string(kind)] = value;
    }
    return result;
}

auto facet_report(FacetReport const &report) -> Json {
    auto atoms = [](std::vector<Atom> const &list) {
        auto result = Json::array();
        for (auto const &atom : list) {
            result.push_back(to_string(atom));
        }
        return result;
    };
    auto all = Json::array();
    for (auto const &f : report.all()) {
        all.push_back(to_string(f));
    }
    return Json{{"inclusive", atoms(report.inclusive)},
                {"exclusive", atoms(report.exclusive)},
                {"all", std::move(all)},
                {"count", report.count}};
}

auto weighted_facets(std::vector<WeightedFacet> const &facets) -> Json {
    auto result = Json::array();
    for (auto const &wf : facets) {
        result.push_back(Json{{"facet", to_string(wf.facet)}, {"weight", wf.weight}});
    }
    return result;
}

auto pace(std::optional<Pace> const &pace) -> Json {
    if (!pace) {
        return nullptr;
    }
    return Json{{"numerator", pace->numerator},
                {"denominator", pace->denominator},
                {"fraction", pace->fraction()},
                {"percent", pace->percent()}};
}

auto mode(Mode const &mode) -> Json {
    auto result = Json{{"name", to_string(mode)}, {"strategy", to_string(mode.strategy)}};
    result["weight_kind"] = mode.is_weighted() ? Json(to_string(mode.weight_kind)) : Json(nullptr);
    return result;
}

auto pending(std::optional<PendingRedirection> const &pending) -> Json {
    if (!pending) {
        return nullptr;
    }
    return Json{{"facet", to_string(pending->facet)},
                {"route", route(pending->conflicting_route)},
                {"options", routes(pending->options)}};
}

auto step_outcome(StepOutcome const &outcome) -> Json {
    auto result = Json{{"status", to_string(outcome.status)}};
    result["reason"] = outcome.reason.empty() ? Json(nullptr) : Json(outcome.reason);
    result["route"] = route(outcome.route);
    result["counts_before"] = counts(outcome.counts_before);
    result["counts_after"] = counts(outcome.counts_after);
    result["options"] = routes(outcome.redirection_options);
    return result;
}

auto walk_trace(WalkTrace const &trace, bool with_timing) -> Json {
    auto steps = Json::array();
    for (auto const &step : trace.steps) {
        auto candidates = Json::array();
        for (auto const &f : step.candidates) {
            candidates.push_back(to_string(f));
        }
        auto item = Json{{"chosen", to_string(step.chosen)},
                         {"candidates", std::move(candidates)},
                         {"answer_count", step.answer_count},
                         {"facet_count", step.facet_count}};
        if (with_timing) {
            item["filter_ms"] = step.filter_ms;
            item["activation_ms"] = step.activation_ms;
            item["startup_ms"] = step.startup_ms;
            item["measured_ms"] = step.measured_ms;
        }
        steps.push_back(std::move(item));
    }
    return Json{{"seed", trace.seed},
                {"mode", to_string(trace.mode)},
                {"terminal", to_string(trace.terminal)},
                {"final_route", route(trace.final_route)},
                {"steps", std::move(steps)}};
}

namespace {

auto property_check(PropertyCheck const &check) -> Json {
    auto result = Json{{"holds", check.holds}};
    if (check.witness) {
        auto const &w = *check.witness;
        auto witness = Json{{"route", route(w.route)}, {"facet", to_string(w.facet)}};
        witness["other"] = w.other ? Json(to_string(*w.other)) : Json(nullptr);
        witness["detail"] = w.detail;
        result["witness"] = std::move(witness);
    } else {
        result["witness"] = nullptr;
    }
    return result;
}

} // namespace

auto property_report(PropertyReport const &report) -> Json {
    return Json{{"safe_zooming", property_check(report.safe_zooming)},
                {"splitting", property_check(report.splitting)},
                {"reliable", property_check(report.reliable)},
                {"min_inline", property_check(report.min_inline)},
                {"max_inline", property_check(report.max_inline)},
                {"routes_checked", report.routes_checked}};
}

auto error(Error const &error) -> Json {
    auto result = Json{{"code", to_string(error.code())}, {"message", error.what()}};
    if (auto const *parse = dynamic_cast<ParseError const *>(&error)) {
        result["detail"] = Json{{"line", parse->line()}, {"column", parse->column()}, {"reason", parse->reason()}};
    }
    return result;
}

auto try_pace(WeightKind kind, RouteSpace const &space, Route const &route) -> std::optional<Pace> {
    if (space.answer_count({}) < 2 || !space.is_safe(route)) {
        return std::nullopt;
    }
    return facetnav::pace(kind, space, route);
}

auto session_state(Session const &session, std::vector<WeightKind> const &kinds) -> Json {
    auto const &space = session.space();
    auto const &current = session.route();
    bool with_supported = std::find(kinds.begin(), kinds.end(), WeightKind::supported) != kinds.end();
    bool safe = space.is_safe(current);

    auto result = Json::object();
    result["route"] = route(current);
    result["mode"] = mode(session.mode());
    result["counts"] = counts(session.counts(with_supported));
    result["satisfiable"] = space.is_safe({});
    result["safe"] = safe;
    result["maximal_safe"] = safe && session.is_maximal_safe();
    result["facets"] = facet_report(session.facets());
    auto weights = Json::object();
    auto paces = Json::object();
    for (auto kind : kinds) {
        weights[to_string(kind)] = safe ? weighted_facets(facetnav::weighted_facets(kind, space, current)) : Json(nullptr);
        paces[to_string(kind)] = pace(try_pace(kind, space, current));
    }
    result["weights"] = std::move(weights);
    result["pace"] = std::move(paces);
    result["pending"] = pending(session.pending());
    return result;
}

} // namespace facetnav::json
