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
#include "facetnav/weights.hh"

#include <vector>

//! Exhaustive reference implementations, written straight from the
//! definitions and deliberately independent of the engine's search code.
namespace facetnav::oracle {

//! Whether `x` satisfies every rule of `program` read as a clause.
[[nodiscard]] auto satisfies(GroundProgram const &program, Interpretation const &x) -> bool;

//! The reduct: rules whose negative body is disjoint from `x`, without
//! their negative bodies.
[[nodiscard]] auto reduct(GroundProgram const &program, Interpretation const &x) -> GroundProgram;

//! Every subset of the atoms that is a subset-minimal model of its reduct.
[[nodiscard]] auto answer_sets(GroundProgram const &program) -> std::vector<Interpretation>;

//! Every subset of the atoms that is a model and in which each true atom
//! is the only true head atom of some rule with a true body.
[[nodiscard]] auto supported_models(GroundProgram const &program) -> std::vector<Interpretation>;

//! The program plus one integrity constraint per facet of the route.
[[nodiscard]] auto with_route(GroundProgram const &program, Route const &route) -> GroundProgram;

//! Facets from the union and intersection of the answer sets.
[[nodiscard]] auto facets(GroundProgram const &program, Route const &route = {}) -> std::vector<Facet>;

[[nodiscard]] auto count(WeightKind kind, GroundProgram const &program, Route const &route = {}) -> std::size_t;

[[nodiscard]] auto weight(WeightKind kind, Facet const &facet, GroundProgram const &program, Route const &route,
                          Route const &redirection = {}) -> std::int64_t;

//! Safe subroutes of `route` containing `facet`, ordered by length and
//! then canonically, followed by the empty route.
[[nodiscard]] auto redirections(GroundProgram const &program, Route const &route, Facet const &facet)
    -> std::vector<Route>;

//! Whether the positive dependency graph has a cycle, by transitive closure.
[[nodiscard]] auto has_positive_cycle(GroundProgram const &program) -> bool;

} // namespace facetnav::oracle
