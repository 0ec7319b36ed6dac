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


#include "facetnav/route_space.hh"

#include "facetnav/error.hh"

#include <algorithm>

namespace facetnav {

RouteSpace::RouteSpace(GroundProgram program, Limits limits) : program_{std::move(program)}, limits_{limits} {}

template <class Get, class Compute> auto RouteSpace::cached(Route const &route, Get get, Compute compute) const {
    auto key = route.facet_set();
    {
        std::lock_guard<std::mutex> lock{mutex_};
        auto it = cache_.find(key);
        if (it != cache_.end()) {
            auto &slot = get(it->second);
            if (slot.has_value()) {
                return *slot;
            }
        }
    }
    auto value = compute();
    std::lock_guard<std::mutex> lock{mutex_};
    auto &slot = get(cache_[key]);
    if (!slot.has_value()) {
        slot = value;
    }
    return *slot;
}

auto RouteSpace::summary(Route const &route) const -> SpaceSummary {
    return cached(
        route, [](Entry &entry) -> auto & { return entry.summary; },
        [this, &route] { return facetnav::summarize(apply_route(program_, route), limits_); });
}

auto RouteSpace::answer_count(Route const &route) const -> std::size_t { return summary(route).answer_count; }

auto RouteSpace::facets(Route const &route) const -> FacetReport {
    return cached(
        route, [](Entry &entry) -> auto & { return entry.facets; },
        [this, &route] { return make_facet_report(summary(route).consequences); });
}

auto RouteSpace::supported_count(Route const &route) const -> std::size_t {
    return cached(
        route, [](Entry &entry) -> auto & { return entry.supported; },
        [this, &route] { return count_supported_models(apply_route(program_, route), limits_); });
}

auto RouteSpace::is_safe(Route const &route) const -> bool { return answer_count(route) > 0; }

auto RouteSpace::is_maximal_safe(Route const &route) const -> bool {
    return is_safe(route) && facets(route).count == 0;
}

auto RouteSpace::answer_sets(Route const &route) const -> std::vector<Interpretation> {
    return facetnav::answer_sets(apply_route(program_, route), limits_);
}

auto RouteSpace::redirections(Route const &route, Facet const &facet) const -> std::vector<Route> {
    if (route.size() > limits_.max_redirection_length) {
        throw Error{ErrorCode::cap_exceeded, "redirection search is capped at routes of length " +
                                                 std::to_string(limits_.max_redirection_length)};
    }
    std::vector<Route> result;
    if (route.contains(facet)) {
        std::vector<Facet> others;
        for (auto const &f : route.steps()) {
            if (f != facet) {
                others.push_back(f);
            }
        }
        auto subsets = std::size_t{1} << others.size();
        for (std::size_t mask = 0; mask < subsets; ++mask) {
            Route candidate;
            for (auto const &f : route.steps()) {
                auto pos = std::find(others.begin(), others.end(), f) - others.begin();
                if (f == facet || ((mask >> pos) & 1U) != 0) {
                    candidate.push(f);
                }
            }
            if (is_safe(candidate)) {
                result.push_back(std::move(candidate));
            }
        }
        std::sort(result.begin(), result.end(), [](Route const &a, Route const &b) {
            if (a.size() != b.size()) {
                return a.size() < b.size();
            }
            return a.facet_set() < b.facet_set();
        });
    }
    result.emplace_back();
    return result;
}

void RouteSpace::require_known(Facet const &facet) const {
    if (!program_.contains(facet.atom)) {
        throw Error{ErrorCode::unknown_atom, "atom '" + to_string(facet.atom) + "' does not occur in the program"};
    }
}

void RouteSpace::clear_cache() {
    std::lock_guard<std::mutex> lock{mutex_};
    cache_.clear();
}

auto RouteSpace::cache_size() const -> std::size_t {
    std::lock_guard<std::mutex> lock{mutex_};
    return cache_.size();
}

} // namespace facetnav
