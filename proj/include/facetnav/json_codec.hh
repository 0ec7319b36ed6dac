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

#include "facetnav/error.hh"
#include "facetnav/facet.hh"
#include "facetnav/navigation.hh"
#include "facetnav/weights.hh"

#include <json.hpp>

#include <optional>
#include <vector>

namespace facetnav {

using Json = nlohmann::ordered_json;

//! JSON renderings shared by the command line tool and the HTTP service.
namespace json {

[[nodiscard]] auto facet(Facet const &facet) -> Json;
//! A route is an array of facet strings.
[[nodiscard]] auto route(Route const &route) -> Json;
[[nodiscard]] auto routes(std::vector<Route> const &routes) -> Json;
//! An interpretation is a sorted array of atom strings.
[[nodiscard]] auto interpretation(Interpretation const &interpretation) -> Json;
//! `{"abs": 3, "fc": 8}`
[[nodiscard]] auto counts(KindCounts const &counts) -> Json;
//! `{"inclusive": [...], "exclusive": [...], "all": [...], "count": 8}`
[[nodiscard]] auto facet_report(FacetReport const &report) -> Json;
[[nodiscard]] auto weighted_facets(std::vector<WeightedFacet> const &facets) -> Json;
//! Null if undefined.
[[nodiscard]] auto pace(std::optional<Pace> const &pace) -> Json;
[[nodiscard]] auto mode(Mode const &mode) -> Json;
[[nodiscard]] auto pending(std::optional<PendingRedirection> const &pending) -> Json;
[[nodiscard]] auto step_outcome(StepOutcome const &outcome) -> Json;
//! Timing fields are only included on request, so traces of equal seeds
//! serialize identically without them.
[[nodiscard]] auto walk_trace(WalkTrace const &trace, bool with_timing) -> Json;
[[nodiscard]] auto property_report(PropertyReport const &report) -> Json;
//! `{"code": ..., "message": ..., "detail": ...}`; parse errors carry
//! their position as detail.
[[nodiscard]] auto error(Error const &error) -> Json;

//! Pace of the route, or nothing if it is undefined.
[[nodiscard]] auto try_pace(WeightKind kind, RouteSpace const &space, Route const &route) -> std::optional<Pace>;

//! Full session state: route, mode, counts, facets, per-kind weights and
//! paces, maximal-safe flag and pending redirection. Weights and paces are
//! computed for the requested kinds only.
[[nodiscard]] auto session_state(Session const &session, std::vector<WeightKind> const &kinds) -> Json;

} // namespace json

} // namespace facetnav
