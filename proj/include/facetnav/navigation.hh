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
#include "facetnav/route_space.hh"
#include "facetnav/weights.hh"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace facetnav {

enum class Strategy {
    goal_oriented,          //!< any facet of the current route
    strictly_goal_oriented, //!< only maximal weighted facets
    explore,                //!< only minimal weighted facets
    free,                   //!< anything; conflicts ask for a redirection
};

//! `go`, `sgo`, `expl`, `free`
[[nodiscard]] auto to_string(Strategy strategy) -> char const *;
[[nodiscard]] auto parse_strategy(std::string_view text) -> Strategy;

struct Mode {
    Strategy strategy{Strategy::goal_oriented};
    //! Used by the weighted strategies only.
    WeightKind weight_kind{WeightKind::facet_counting};

    [[nodiscard]] auto is_weighted() const -> bool {
        return strategy == Strategy::strictly_goal_oriented || strategy == Strategy::explore;
    }

    friend auto operator==(Mode const &, Mode const &) -> bool = default;
};

//! `go`, `sgo-fc`, `expl-abs`, `free`
[[nodiscard]] auto to_string(Mode const &mode) -> std::string;

enum class StepStatus { applied, ignored, needs_redirection };

[[nodiscard]] auto to_string(StepStatus status) -> char const *;

using KindCounts = std::map<WeightKind, std::size_t>;

struct StepOutcome {
    StepStatus status{StepStatus::applied};
    //! Why a step was ignored or needs a redirection.
    std::string reason;
    Route route; //!< the route after the step
    KindCounts counts_before;
    KindCounts counts_after;
    //! Present iff status is needs_redirection; the empty route is always last.
    std::vector<Route> redirection_options;
};

//! A conflict in free mode waiting for the user to pick a redirection.
struct PendingRedirection {
    Facet facet;
    Route conflicting_route;
    std::vector<Route> options;
};

struct HistoryEntry {
    std::string action;
    Route route_before;
};

//! A single-writer navigation session over one program.
//!
//! In every mode but free the route is always safe. In free mode an unsafe
//! activation leaves the session waiting for a redirection choice; until
//! then, only retraction and redirection are allowed.
class Session {
  public:
    Session(GroundProgram program, Mode mode = {}, Limits limits = {});
    Session(std::shared_ptr<RouteSpace const> space, Mode mode = {});

    [[nodiscard]] auto space() const -> RouteSpace const & { return *space_; }
    [[nodiscard]] auto program() const -> GroundProgram const & { return space_->program(); }
    [[nodiscard]] auto route() const -> Route const & { return route_; }
    [[nodiscard]] auto mode() const -> Mode const & { return mode_; }
    [[nodiscard]] auto history() const -> std::vector<HistoryEntry> const & { return history_; }
    [[nodiscard]] auto pending() const -> std::optional<PendingRedirection> const & { return pending_; }

    //! Switches the mode; rejected while a redirection is pending.
    void set_mode(Mode mode);

    //! Counts of the current route. The supported-model count is only
    //! included on request or if the mode weighs by it.
    [[nodiscard]] auto counts(bool with_supported = false) const -> KindCounts;
    [[nodiscard]] auto facets() const -> FacetReport;
    [[nodiscard]] auto answer_sets() const -> std::vector<Interpretation>;
    [[nodiscard]] auto is_maximal_safe() const -> bool;

    //! Activates a facet according to the mode.
    auto step(Facet const &facet) -> StepOutcome;
    //! Resolves a pending conflict with one of the offered routes.
    auto choose_redirection(Route const &option) -> StepOutcome;
    auto choose_redirection(std::size_t index) -> StepOutcome;
    //! Removes the most recent facet.
    auto retract_last() -> StepOutcome;
    //! Removes a given facet wherever it is on the route.
    auto retract(Facet const &facet) -> StepOutcome;
    //! Returns to the empty route.
    auto retract_all() -> StepOutcome;

  private:
    void require_not_pending(char const *what) const;
    auto finish(StepStatus status, std::string reason, KindCounts before) -> StepOutcome;
    auto reset_to(Route route, std::string action) -> StepOutcome;

    std::shared_ptr<RouteSpace const> space_;
    Mode mode_;
    Route route_;
    std::optional<PendingRedirection> pending_;
    std::vector<HistoryEntry> history_;
};

//! The candidate facets a mode offers on the current route: all facets for
//! go and free, maximal weighted for sgo, minimal weighted for expl.
[[nodiscard]] auto candidate_facets(Session const &session) -> std::vector<Facet>;

enum class WalkTerminal { unique_solution, step_budget_exhausted, no_solution };

[[nodiscard]] auto to_string(WalkTerminal terminal) -> char const *;

struct WalkStep {
    Facet chosen;
    std::vector<Facet> candidates;
    double filter_ms{0};     //!< time to compute the candidate facets
    double activation_ms{0}; //!< time to activate the chosen facet and recompute facets
    double startup_ms{0};    //!< initial facet computation, first step only
    //! Elapsed time as measured for the mode: activation for go, filtering
    //! otherwise, plus startup on the first step.
    double measured_ms{0};
    std::size_t answer_count{0}; //!< after the step
    std::size_t facet_count{0};  //!< after the step
};

struct WalkTrace {
    std::uint64_t seed{0};
    Mode mode;
    std::vector<WalkStep> steps;
    WalkTerminal terminal{WalkTerminal::step_budget_exhausted};
    Route final_route;
};

//! Random steps until the route is maximal safe. Requires go or sgo mode.
[[nodiscard]] auto random_safe_walk(Session &session, std::uint64_t seed) -> WalkTrace;

//! Up to `steps` random steps; stops early when no facet is left. Requires
//! expl or go mode.
[[nodiscard]] auto random_safe_steps(Session &session, std::size_t steps, std::uint64_t seed) -> WalkTrace;

} // namespace facetnav
