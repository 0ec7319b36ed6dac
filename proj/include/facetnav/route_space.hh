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
#include "facetnav/semantics.hh"

#include <map>
#include <mutex>
#include <optional>
#include <vector>

namespace facetnav {

//! A program together with memoized facts about its navigated variants.
//!
//! Every query takes a route and answers for the program extended by that
//! route. Results are cached per facet set, so permutations of a route share
//! one entry. The cache never changes results and may be cleared at any time.
//! All members are safe to call concurrently.
class RouteSpace {
  public:
    explicit RouteSpace(GroundProgram program, Limits limits = {});

    RouteSpace(RouteSpace const &) = delete;
    auto operator=(RouteSpace const &) -> RouteSpace & = delete;

    [[nodiscard]] auto program() const -> GroundProgram const & { return program_; }
    [[nodiscard]] auto limits() const -> Limits const & { return limits_; }

    [[nodiscard]] auto summary(Route const &route) const -> SpaceSummary;
    [[nodiscard]] auto answer_count(Route const &route) const -> std::size_t;
    [[nodiscard]] auto facets(Route const &route) const -> FacetReport;
    [[nodiscard]] auto supported_count(Route const &route) const -> std::size_t;
    [[nodiscard]] auto is_safe(Route const &route) const -> bool;
    [[nodiscard]] auto is_maximal_safe(Route const &route) const -> bool;
    [[nodiscard]] auto answer_sets(Route const &route) const -> std::vector<Interpretation>;
    [[nodiscard]] auto redirections(Route const &route, Facet const &facet) const -> std::vector<Route>;

    //! Throws Error{unknown_atom} unless the facet's atom occurs in the program.
    void require_known(Facet const &facet) const;

    void clear_cache();
    [[nodiscard]] auto cache_size() const -> std::size_t;

  private:
    struct Entry {
        std::optional<SpaceSummary> summary;
        std::optional<FacetReport> facets;
        std::optional<std::size_t> supported;
    };

    template <class Get, class Compute> auto cached(Route const &route, Get get, Compute compute) const;

    GroundProgram program_;
    Limits limits_;
    mutable std::mutex mutex_;
    mutable std::map<std::vector<Facet>, Entry> cache_;
};

} // namespace facetnav
