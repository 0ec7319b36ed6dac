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

#include <cstddef>
#include <functional>
#include <set>
#include <vector>

namespace facetnav {

//! Resource caps for exhaustive computations.
struct Limits {
    //! Maximal number of distinct head atoms for exact enumeration.
    std::size_t max_head_atoms{30};
    //! Maximal number of facets for delimitation search.
    std::size_t max_delimitation_facets{20};
    //! Maximal route length for redirection enumeration.
    std::size_t max_redirection_length{24};
    //! Maximal number of facets for property verification.
    std::size_t max_property_facets{16};
};

//! Callback receiving each model; return false to stop the enumeration.
using ModelVisitor = std::function<bool(Interpretation const &)>;

//! Enumerates the answer sets of `program` in no particular order.
//!
//! Throws Error{resource_limit} if the program has more head atoms than
//! allowed by `limits`.
void for_each_answer_set(GroundProgram const &program, ModelVisitor const &visit, Limits const &limits = {});

//! Enumerates the supported models of `program` in no particular order.
void for_each_supported_model(GroundProgram const &program, ModelVisitor const &visit, Limits const &limits = {});

//! All answer sets in canonical (sorted) order.
[[nodiscard]] auto answer_sets(GroundProgram const &program, Limits const &limits = {})
    -> std::vector<Interpretation>;

//! All supported models in canonical (sorted) order.
[[nodiscard]] auto supported_models(GroundProgram const &program, Limits const &limits = {})
    -> std::vector<Interpretation>;

[[nodiscard]] auto count_answer_sets(GroundProgram const &program, Limits const &limits = {}) -> std::size_t;
[[nodiscard]] auto count_supported_models(GroundProgram const &program, Limits const &limits = {}) -> std::size_t;

//! Whether the program has at least one answer set.
[[nodiscard]] auto is_satisfiable(GroundProgram const &program, Limits const &limits = {}) -> bool;

//! Brave and cautious consequences.
//!
//! For an unsatisfiable program, brave is empty, cautious is the whole atom
//! universe and `satisfiable` is false.
struct Consequences {
    std::set<Atom> brave;
    std::set<Atom> cautious;
    bool satisfiable{false};
};

[[nodiscard]] auto consequences(GroundProgram const &program, Limits const &limits = {}) -> Consequences;

//! Answer-set count together with the consequences, from one enumeration.
struct SpaceSummary {
    std::size_t answer_count{0};
    Consequences consequences;
};

[[nodiscard]] auto summarize(GroundProgram const &program, Limits const &limits = {}) -> SpaceSummary;

//! Whether the positive dependency graph is acyclic.
[[nodiscard]] auto is_tight(GroundProgram const &program) -> bool;

} // namespace facetnav
