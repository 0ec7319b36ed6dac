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

#include "facetnav/program.hh"
#include "facetnav/semantics.hh"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace facetnav {

enum class Polarity { inclusive, exclusive };

//! A signed atom: `a` forces the atom in, `~a` forces it out.
struct Facet {
    Atom atom;
    Polarity polarity{Polarity::inclusive};

    [[nodiscard]] auto inverse() const -> Facet {
        return {atom, polarity == Polarity::inclusive ? Polarity::exclusive : Polarity::inclusive};
    }
    //! Whether an interpretation satisfies the facet.
    [[nodiscard]] auto satisfied_by(Interpretation const &x) const -> bool {
        return x.contains(atom) == (polarity == Polarity::inclusive);
    }

    friend auto operator==(Facet const &a, Facet const &b) -> bool = default;
    //! Canonical order: inclusive facets first, then by atom.
    friend auto operator<(Facet const &a, Facet const &b) -> bool {
        if (a.polarity != b.polarity) {
            return a.polarity == Polarity::inclusive;
        }
        return a.atom < b.atom;
    }
};

[[nodiscard]] auto inclusive(Atom atom) -> Facet;
[[nodiscard]] auto exclusive(Atom atom) -> Facet;

//! `a` or `~a`.
[[nodiscard]] auto to_string(Facet const &facet) -> std::string;
auto operator<<(std::ostream &out, Facet const &facet) -> std::ostream &;
[[nodiscard]] auto parse_facet(std::string_view text) -> Facet;

//! A sequence of facets.
//!
//! Pushing a facet that is already on the route is a no-op; the order of
//! first activation is kept for display while the semantics only depends on
//! the facet set.
class Route {
  public:
    Route() = default;
    Route(std::initializer_list<Facet> facets);
    explicit Route(std::vector<Facet> facets);

    //! Appends `facet` unless present; returns whether the route changed.
    auto push(Facet const &facet) -> bool;
    //! Removes the last facet.
    void pop();
    //! Removes `facet`; returns whether it was present.
    auto remove(Facet const &facet) -> bool;

    [[nodiscard]] auto steps() const -> std::vector<Facet> const & { return steps_; }
    [[nodiscard]] auto contains(Facet const &facet) const -> bool;
    [[nodiscard]] auto empty() const -> bool { return steps_.empty(); }
    [[nodiscard]] auto size() const -> std::size_t { return steps_.size(); }
    //! The facet set in canonical order.
    [[nodiscard]] auto facet_set() const -> std::vector<Facet>;
    //! Route extended by one facet.
    [[nodiscard]] auto with(Facet const &facet) const -> Route;
    //! Whether every facet of this route is on `other`.
    [[nodiscard]] auto is_subroute_of(Route const &other) const -> bool;

    //! Order-sensitive equality.
    friend auto operator==(Route const &a, Route const &b) -> bool = default;

  private:
    std::vector<Facet> steps_;
};

//! Order-insensitive comparison of routes.
[[nodiscard]] auto same_facets(Route const &a, Route const &b) -> bool;

//! `<a, ~c>`; the empty route is `<>`.
[[nodiscard]] auto to_string(Route const &route) -> std::string;
auto operator<<(std::ostream &out, Route const &route) -> std::ostream &;
[[nodiscard]] auto parse_route(std::string_view text) -> Route;

//! Inclusive and exclusive facets of a program.
struct FacetReport {
    std::vector<Atom> inclusive;
    std::vector<Atom> exclusive;
    std::size_t count{0};

    //! All facets in canonical order.
    [[nodiscard]] auto all() const -> std::vector<Facet>;
    [[nodiscard]] auto contains(Facet const &facet) const -> bool;
};

//! Facets from known consequences.
[[nodiscard]] auto make_facet_report(Consequences const &consequences) -> FacetReport;

[[nodiscard]] auto facets(GroundProgram const &program, Limits const &limits = {}) -> FacetReport;

//! The integrity constraint enforcing a facet.
[[nodiscard]] auto ic(Facet const &facet) -> Rule;

//! The program extended by the integrity constraints of the route.
[[nodiscard]] auto apply_route(GroundProgram const &program, Route const &route) -> GroundProgram;

//! Whether the route leads to at least one answer set.
[[nodiscard]] auto is_safe(GroundProgram const &program, Route const &route, Limits const &limits = {}) -> bool;

//! Safe subroutes of `route` containing `facet`, followed by the empty route.
//!
//! Routes are ordered by length and then canonically; the empty route is
//! always last. Throws Error{cap_exceeded} for routes longer than
//! Limits::max_redirection_length.
[[nodiscard]] auto redirections(GroundProgram const &program, Route const &route, Facet const &facet,
                                Limits const &limits = {}) -> std::vector<Route>;

//! Whether the route is safe and leaves no facet to navigate.
[[nodiscard]] auto is_maximal_safe(GroundProgram const &program, Route const &route, Limits const &limits = {})
    -> bool;

//! All delimiting facet sets, each in canonical order.
//!
//! Throws Error{cap_exceeded} if the program has more facets than
//! Limits::max_delimitation_facets.
[[nodiscard]] auto delimitations(GroundProgram const &program, Limits const &limits = {})
    -> std::vector<std::vector<Facet>>;

//! Whether both routes lead to the same answer sets.
[[nodiscard]] auto routes_equivalent(GroundProgram const &program, Route const &first, Route const &second,
                                     Limits const &limits = {}) -> bool;

} // namespace facetnav
