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


#include "facetnav/facet.hh"

#include "facetnav/error.hh"
#include "facetnav/route_space.hh"

#include <algorithm>
#include <ostream>
#include <set>
#include <sstream>

namespace facetnav {

namespace {

auto trim(std::string_view text) -> std::string_view {
    auto const *blank = " \t\r\n";
    auto begin = text.find_first_not_of(blank);
    if (begin == std::string_view::npos) {
        return {};
    }
    auto end = text.find_last_not_of(blank);
    return text.substr(begin, end - begin + 1);
}

} // namespace

auto inclusive(Atom atom) -> Facet { return Facet{std::move(atom), Polarity::inclusive}; }

auto exclusive(Atom atom) -> Facet { return Facet{std::move(atom), Polarity::exclusive}; }

auto to_string(Facet const &facet) -> std::string {
    std::ostringstream oss;
    oss << facet;
    return oss.str();
}

auto operator<<(std::ostream &out, Facet const &facet) -> std::ostream & {
    if (facet.polarity == Polarity::exclusive) {
        out << "~";
    }
    return out << facet.atom;
}

auto parse_facet(std::string_view text) -> Facet {
    text = trim(text);
    if (!text.empty() && text.front() == '~') {
        return exclusive(parse_atom(text.substr(1)));
    }
    return inclusive(parse_atom(text));
}

Route::Route(std::initializer_list<Facet> facets) {
    for (auto const &facet : facets) {
        push(facet);
    }
}

Route::Route(std::vector<Facet> facets) {
    for (auto const &facet : facets) {
        push(facet);
    }
}

auto Route::push(Facet const &facet) -> bool {
    if (contains(facet)) {
        return false;
    }
    steps_.push_back(facet);
    return true;
}

void Route::pop() {
    if (steps_.empty()) {
        throw Error{ErrorCode::empty_route, "cannot retract from the empty route"};
    }
    steps_.pop_back();
}

auto Route::remove(Facet const &facet) -> bool {
    auto it = std::find(steps_.begin(), steps_.end(), facet);
    if (it == steps_.end()) {
        return false;
    }
    steps_.erase(it);
    return true;
}

auto Route::contains(Facet const &facet) const -> bool {
    return std::find(steps_.begin(), steps_.end(), facet) != steps_.end();
}

auto Route::facet_set() const -> std::vector<Facet> {
    auto result = steps_;
    std::sort(result.begin(), result.end());
    return result;
}

auto Route::with(Facet const &facet) const -> Route {
    Route result = *this;
    result.push(facet);
    return result;
}

auto Route::is_subroute_of(Route const &other) const -> bool {
    return std::all_of(steps_.begin(), steps_.end(), [&other](Facet const &f) { return other.contains(f); });
}

auto same_facets(Route const &a, Route const &b) -> bool { return a.facet_set() == b.facet_set(); }

auto to_string(Route const &route) -> std::string {
    std::ostringstream oss;
    oss << route;
    return oss.str();
}

auto operator<<(std::ostream &out, Route const &route) -> std::ostream & {
    out << "<";
    bool first = true;
    for (auto const &facet : route.steps()) {
        if (!first) {
            out << ", ";
        }
        first = false;
        out << facet;
    }
    return out << ">";
}

auto parse_route(std::string_view text) -> Route {
    text = trim(text);
    if (text.size() < 2 || text.front() != '<' || text.back() != '>') {
        throw Error{ErrorCode::invalid_argument, "route must be written as <f1, ..., fn>"};
    }
    auto inner = trim(text.substr(1, text.size() - 2));
    Route route;
    if (inner.empty()) {
        return route;
    }
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= inner.size(); ++i) {
        if (i == inner.size() || (inner[i] == ',' && depth == 0)) {
            route.push(parse_facet(inner.substr(start, i - start)));
            start = i + 1;
        } else if (inner[i] == '(') {
            ++depth;
        } else if (inner[i] == ')') {
            --depth;
        }
    }
    return route;
}

auto FacetReport::all() const -> std::vector<Facet> {
    std::vector<Facet> result;
    result.reserve(count);
    for (auto const &atom : inclusive) {
        result.push_back(facetnav::inclusive(atom));
    }
    for (auto const &atom : exclusive) {
        result.push_back(facetnav::exclusive(atom));
    }
    return result;
}

auto FacetReport::contains(Facet const &facet) const -> bool {
    auto const &atoms = facet.polarity == Polarity::inclusive ? inclusive : exclusive;
    return std::binary_search(atoms.begin(), atoms.end(), facet.atom);
}

auto make_facet_report(Consequences const &consequences) -> FacetReport {
    FacetReport report;
    if (consequences.satisfiable) {
        std::set_difference(consequences.brave.begin(), consequences.brave.end(), consequences.cautious.begin(),
                            consequences.cautious.end(), std::back_inserter(report.inclusive));
    }
    report.exclusive = report.inclusive;
    report.count = report.inclusive.size() + report.exclusive.size();
    return report;
}

auto facets(GroundProgram const &program, Limits const &limits) -> FacetReport {
    return make_facet_report(consequences(program, limits));
}

auto ic(Facet const &facet) -> Rule {
    if (facet.polarity == Polarity::inclusive) {
        return make_rule({}, {}, {facet.atom});
    }
    return make_rule({}, {facet.atom}, {});
}

auto apply_route(GroundProgram const &program, Route const &route) -> GroundProgram {
    GroundProgram result = program;
    for (auto const &facet : route.steps()) {
        result.add_rule(ic(facet));
    }
    return result;
}

auto is_safe(GroundProgram const &program, Route const &route, Limits const &limits) -> bool {
    return is_satisfiable(apply_route(program, route), limits);
}

auto redirections(GroundProgram const &program, Route const &route, Facet const &facet, Limits const &limits)
    -> std::vector<Route> {
    RouteSpace space{program, limits};
    return space.redirections(route, facet);
}

auto is_maximal_safe(GroundProgram const &program, Route const &route, Limits const &limits) -> bool {
    auto summary = facetnav::summarize(apply_route(program, route), limits);
    return summary.answer_count > 0 && make_facet_report(summary.consequences).count == 0;
}

auto delimitations(GroundProgram const &program, Limits const &limits) -> std::vector<std::vector<Facet>> {
    RouteSpace space{program, limits};
    auto all = space.facets({}).all();
    if (all.size() > limits.max_delimitation_facets) {
        throw Error{ErrorCode::cap_exceeded, "delimitation search is capped at " +
                                                 std::to_string(limits.max_delimitation_facets) + " facets, program has " +
                                                 std::to_string(all.size())};
    }
    std::set<std::vector<Facet>> visited;
    std::vector<std::vector<Facet>> result;

    // Adds every facet of the program that all remaining answer sets satisfy;
    // such facets keep the answer sets unchanged.
    auto close = [&](std::vector<Facet> facets) {
        auto summary = space.summary(Route{facets});
        auto const &cons = summary.consequences;
        for (auto const &f : all) {
            bool implied = f.polarity == Polarity::inclusive ? cons.cautious.contains(f.atom)
                                                             : !cons.brave.contains(f.atom);
            if (implied && std::find(facets.begin(), facets.end(), f) == facets.end()) {
                facets.push_back(f);
            }
        }
        std::sort(facets.begin(), facets.end());
        return facets;
    };

    std::vector<std::vector<Facet>> stack;
    if (space.is_safe({})) {
        stack.push_back(close({}));
    }
    while (!stack.empty()) {
        auto current = std::move(stack.back());
        stack.pop_back();
        if (!visited.insert(current).second) {
            continue;
        }
        Route route{current};
        auto open = space.facets(route).all();
        if (open.empty()) {
            bool delimiting = std::all_of(all.begin(), all.end(), [&](Facet const &f) {
                return route.contains(f) || !space.is_safe(route.with(f));
            });
            if (delimiting) {
                result.push_back(current);
            }
            continue;
        }
        for (auto it = open.rbegin(); it != open.rend(); ++it) {
            auto next = current;
            next.push_back(*it);
            stack.push_back(close(std::move(next)));
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

auto routes_equivalent(GroundProgram const &program, Route const &first, Route const &second, Limits const &limits)
    -> bool {
    return answer_sets(apply_route(program, first), limits) == answer_sets(apply_route(program, second), limits);
}

} // namespace facetnav
