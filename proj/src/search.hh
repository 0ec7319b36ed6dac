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

#include <cstdint>
#include <functional>
#include <vector>

namespace facetnav::detail {

//! Index-based form of a ground program used by the enumerator.
struct CompiledProgram {
    struct CompiledRule {
        std::vector<int> head;
        std::vector<int> positive;
        std::vector<int> negative;
    };

    std::vector<Atom> atoms; // sorted, index = variable
    std::vector<bool> in_head;
    std::vector<CompiledRule> rules;
    std::vector<std::vector<int>> supporters; // rules having the atom in their head
    std::vector<std::vector<int>> occurrences; // rules mentioning the atom anywhere
};

//! Throws Error{resource_limit} if the head-atom count exceeds the limit.
[[nodiscard]] auto compile(GroundProgram const &program, Limits const &limits) -> CompiledProgram;

using Assignment = std::vector<std::int8_t>;

//! Called with a total assignment (1 = true); return false to stop.
using AssignmentVisitor = std::function<bool(Assignment const &)>;

//! Enumerates supported models by backtracking with clause and support
//! propagation. Atoms outside every head are fixed to false.
void enumerate_supported(CompiledProgram const &program, AssignmentVisitor const &visit);

//! Whether the model `x` of the program is a subset-minimal model of its
//! Gelfond-Lifschitz reduct.
[[nodiscard]] auto is_reduct_minimal(CompiledProgram const &program, Assignment const &x) -> bool;

//! Enumerates answer sets (supported models passing the minimality check).
void enumerate_answer_sets(CompiledProgram const &program, AssignmentVisitor const &visit);

[[nodiscard]] auto to_interpretation(CompiledProgram const &program, Assignment const &x) -> Interpretation;

} // namespace facetnav::detail
