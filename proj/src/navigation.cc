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


#include "facetnav/navigation.hh"

#include "facetnav/error.hh"

#include <algorithm>
#include <chrono>
#include <random>

namespace facetnav {

namespace {

using Clock = std::chrono::steady_clock;

auto elapsed_ms(Clock::time_point start) -> double {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

auto contains(std::vector<Facet> const &facets, Facet const &facet) -> bool {
    return std::find(facets.begin(), facets.end(), facet) != facets.end();
}

} // namespace

auto to_string(Strategy strategy) -> char const * {
    switch (strategy) {
        case Strategy::goal_oriented: {
            return "go";
        }
        case Strategy::strictly_goal_oriented: {
            return "sgo";
        }
        case Strategy::explore: {
            return "expl";
        }
        case Strategy::free: {
            return "free";
        }
    }
    return "";
}

auto parse_strategy(std::string_view text) -> Strategy {
    if (text == "go" || text == "goal_oriented") {
        return Strategy::goal_oriented;
    }
    if (text == "sgo" || text == "strictly_goal_oriented") {
        return Strategy::strictly_goal_oriented;
    }
    if (text == "expl" || text == "explore") {
        return Strategy::explore;
    }
    if (text == "free") {
        return Strategy::free;
    }
    throw Error{ErrorCode::invalid_argument, "unknown mode '" + std::string{text} + "' (use go, sgo, expl or free)"};
}

auto to_string(Mode const &mode) -> std::string {
    std::string result = to_string(mode.strategy);
    if (mode.is_weighted()) {
        result += "-";
        result += to_string(mode.weight_kind);
    }
    return result;
}

auto to_string(StepStatus status) -> char const * {
    switch (status) {
        case StepStatus::applied: {
            return "applied";
        }
        case StepStatus::ignored: {
            return "ignored";
        }
        case StepStatus::needs_redirection: {
            return "needs_redirection";
        }
    }
    return "";
}

auto to_string(WalkTerminal terminal) -> char const * {
    switch (terminal) {
        case WalkTerminal::unique_solution: {
            return "unique_solution";
        }
        case WalkTerminal::step_budget_exhausted: {
            return "step_budget_exhausted";
        }
        case WalkTerminal::no_solution: {
            return "no_solution";
        }
    }
    return "";
}

Session::Session(GroundProgram program, Mode mode, Limits limits)
    : Session{std::make_shared<RouteSpace const>(std::move(program), limits), mode} {}

Session::Session(std::shared_ptr<RouteSpace const> space, Mode mode) : space_{std::move(space)}, mode_{mode} {}

void Session::set_mode(Mode mode) {
    require_not_pending("change the mode");
    mode_ = mode;
}

auto Session::counts(bool with_supported) const -> KindCounts {
    KindCounts result;
    result[WeightKind::absolute] = space_->answer_count(route_);
    result[WeightKind::facet_counting] = space_->facets(route_).count;
    if (with_supported || (mode_.is_weighted() && mode_.weight_kind == WeightKind::supported)) {
        result[WeightKind::supported] = space_->supported_count(route_);
    }
    return result;
}

auto Session::facets() const -> FacetReport { return space_->facets(route_); }

auto Session::answer_sets() const -> std::vector<Interpretation> {
    require_not_pending("list answer sets");
    return space_->answer_sets(route_);
}

auto Session::is_maximal_safe() const -> bool { return space_->is_maximal_safe(route_); }

void Session::require_not_pending(char const *what) const {
    if (pending_) {
        throw Error{ErrorCode::pending_redirection,
                    std::string{"cannot "} + what + " while a redirection is pending for " +
                        to_string(pending_->conflicting_route)};
    }
}

auto Session::finish(StepStatus status, std::string reason, KindCounts before) -> StepOutcome {
    StepOutcome outcome;
    outcome.status = status;
    outcome.reason = std::move(reason);
    outcome.route = route_;
    outcome.counts_before = std::move(before);
    outcome.counts_after = counts();
    if (pending_) {
        outcome.redirection_options = pending_->options;
    }
    return outcome;
}

auto Session::step(Facet const &facet) -> StepOutcome {
    space_->require_known(facet);
    require_not_pending("activate a facet");
    auto before = counts();
    auto current = facets();
    auto apply = [&] {
        history_.push_back({"activate " + to_string(facet), route_});
        route_.push(facet);
        return finish(StepStatus::applied, {}, before);
    };
    auto ignore = [&](std::string reason) { return finish(StepStatus::ignored, std::move(reason), before); };

    switch (mode_.strategy) {
        case Strategy::goal_oriented: {
            if (current.contains(facet)) {
                return apply();
            }
            return ignore("not a facet of the current route");
        }
        case Strategy::strictly_goal_oriented:
        case Strategy::explore: {
            if (!current.contains(facet)) {
                return ignore("not a facet of the current route");
            }
            auto extremal = extremal_facets(mode_.weight_kind, *space_, route_);
            bool sgo = mode_.strategy == Strategy::strictly_goal_oriented;
            if (contains(sgo ? extremal.max : extremal.min, facet)) {
                return apply();
            }
            auto weight = facet_weight(mode_.weight_kind, facet, *space_, route_).value;
            return ignore(sgo ? "not maximal weighted (" + std::to_string(weight) + " < " +
                                    std::to_string(extremal.max_weight) + ")"
                              : "not minimal weighted (" + std::to_string(weight) + " > " +
                                    std::to_string(extremal.min_weight) + ")");
        }
        case Strategy::free: {
            auto extended = route_.with(facet);
            if (space_->is_safe(extended)) {
                return apply();
            }
            history_.push_back({"activate " + to_string(facet), route_});
            pending_ = PendingRedirection{facet, extended, space_->redirections(extended, facet)};
            route_ = extended;
            return finish(StepStatus::needs_redirection, to_string(extended) + " has no answer sets", before);
        }
    }
    return ignore("unknown mode");
}

auto Session::choose_redirection(Route const &option) -> StepOutcome {
    if (!pending_) {
        throw Error{ErrorCode::no_pending_redirection, "no redirection is pending"};
    }
    auto const &options = pending_->options;
    auto it = std::find_if(options.begin(), options.end(),
                           [&option](Route const &offered) { return same_facets(offered, option); });
    if (it == options.end()) {
        throw Error{ErrorCode::option_not_offered, to_string(option) + " is not an offered redirection"};
    }
    auto before = counts();
    history_.push_back({"redirect " + to_string(*it), route_});
    route_ = *it;
    pending_.reset();
    return finish(StepStatus::applied, {}, before);
}

auto Session::choose_redirection(std::size_t index) -> StepOutcome {
    if (!pending_) {
        throw Error{ErrorCode::no_pending_redirection, "no redirection is pending"};
    }
    if (index >= pending_->options.size()) {
        throw Error{ErrorCode::option_not_offered, "redirection option " + std::to_string(index) +
                                                       " does not exist, " + std::to_string(pending_->options.size()) +
                                                       " offered"};
    }
    return choose_redirection(Route{pending_->options[index]});
}

auto Session::reset_to(Route route, std::string action) -> StepOutcome {
    auto before = counts();
    history_.push_back({std::move(action), route_});
    route_ = std::move(route);
    if (pending_) {
        if (space_->is_safe(route_) || !route_.contains(pending_->facet)) {
            pending_.reset();
        } else {
            pending_->conflicting_route = route_;
            pending_->options = space_->redirections(route_, pending_->facet);
        }
    }
    auto status = pending_ ? StepStatus::needs_redirection : StepStatus::applied;
    return finish(status, {}, before);
}

auto Session::retract_last() -> StepOutcome {
    if (route_.empty()) {
        throw Error{ErrorCode::empty_route, "cannot retract from the empty route"};
    }
    auto route = route_;
    route.pop();
    return reset_to(std::move(route), "retract " + to_string(route_.steps().back()));
}

auto Session::retract(Facet const &facet) -> StepOutcome {
    auto route = route_;
    if (!route.remove(facet)) {
        throw Error{ErrorCode::invalid_argument, to_string(facet) + " is not on the route " + to_string(route_)};
    }
    return reset_to(std::move(route), "retract " + to_string(facet));
}

auto Session::retract_all() -> StepOutcome { return reset_to(Route{}, "retract all"); }

auto candidate_facets(Session const &session) -> std::vector<Facet> {
    if (session.pending()) {
        return {};
    }
    auto const &mode = session.mode();
    switch (mode.strategy) {
        case Strategy::goal_oriented:
        case Strategy::free: {
            return session.facets().all();
        }
        case Strategy::strictly_goal_oriented: {
            return extremal_facets(mode.weight_kind, session.space(), session.route()).max;
        }
        case Strategy::explore: {
            return extremal_facets(mode.weight_kind, session.space(), session.route()).min;
        }
    }
    return {};
}

namespace {

auto walk(Session &session, std::uint64_t seed, std::optional<std::size_t> budget) -> WalkTrace {
    if (session.pending()) {
        throw Error{ErrorCode::pending_redirection, "resolve the pending redirection before walking"};
    }
    WalkTrace trace;
    trace.seed = seed;
    trace.mode = session.mode();
    std::mt19937_64 rng{seed};

    auto start = Clock::now();
    auto current = session.facets();
    double startup = elapsed_ms(start);

    for (std::size_t i = 0; !budget || i < *budget; ++i) {
        if (!session.space().is_safe(session.route())) {
            trace.terminal = WalkTerminal::no_solution;
            break;
        }
        if (current.count == 0) {
            trace.terminal = WalkTerminal::unique_solution;
            break;
        }
        WalkStep step;
        start = Clock::now();
        step.candidates = candidate_facets(session);
        step.filter_ms = elapsed_ms(start);
        std::uniform_int_distribution<std::size_t> pick{0, step.candidates.size() - 1};
        step.chosen = step.candidates[pick(rng)];

        start = Clock::now();
        auto outcome = session.step(step.chosen);
        current = session.facets();
        step.activation_ms = elapsed_ms(start);
        if (outcome.status != StepStatus::applied) {
            throw Error{ErrorCode::invalid_mode, "walk step " + to_string(step.chosen) + " was not applied"};
        }
        if (trace.steps.empty()) {
            step.startup_ms = startup;
        }
        bool go = session.mode().strategy == Strategy::goal_oriented;
        step.measured_ms = (go ? step.activation_ms : step.filter_ms) + step.startup_ms;
        step.answer_count = outcome.counts_after.at(WeightKind::absolute);
        step.facet_count = current.count;
        trace.steps.push_back(std::move(step));
    }
    if (budget) {
        trace.terminal = WalkTerminal::step_budget_exhausted;
    } else if (trace.terminal != WalkTerminal::no_solution) {
        trace.terminal = WalkTerminal::unique_solution;
    }
    trace.final_route = session.route();
    return trace;
}

} // namespace

auto random_safe_walk(Session &session, std::uint64_t seed) -> WalkTrace {
    auto strategy = session.mode().strategy;
    if (strategy != Strategy::goal_oriented && strategy != Strategy::strictly_goal_oriented) {
        throw Error{ErrorCode::invalid_mode, "random-safe-walk needs go or sgo mode"};
    }
    return walk(session, seed, std::nullopt);
}

auto random_safe_steps(Session &session, std::size_t steps, std::uint64_t seed) -> WalkTrace {
    auto strategy = session.mode().strategy;
    if (strategy != Strategy::goal_oriented && strategy != Strategy::explore) {
        throw Error{ErrorCode::invalid_mode, "random-safe-steps needs expl or go mode"};
    }
    return walk(session, seed, steps);
}

} // namespace facetnav
