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


#include "random_programs.hh"

#include <algorithm>
#include <string>

namespace facetnav::testing {

auto random_program(std::mt19937_64 &rng, RandomProgramOptions const &options) -> GroundProgram {
    auto pick = [&rng](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>{lo, hi}(rng); };
    auto atom = [](std::size_t i) { return Atom{std::string(1, static_cast<char>('a' + i)), {}}; };
    auto n = options.atoms;

    GroundProgram program;
    auto rules = pick(1, options.max_rules);
    for (std::size_t r = 0; r < rules; ++r) {
        // Mostly proper rules, some integrity constraints, a few facts.
        auto head_size = pick(0, 9) == 0 ? 0 : pick(1, 3);
        std::vector<std::size_t> head;
        for (std::size_t i = 0; i < head_size; ++i) {
            head.push_back(pick(0, n - 1));
        }
        std::vector<Atom> head_atoms;
        std::vector<Atom> positive;
        std::vector<Atom> negative;
        for (auto h : head) {
            head_atoms.push_back(atom(h));
        }
        auto low = head.empty() ? n : *std::min_element(head.begin(), head.end());
        auto positive_size = pick(0, 2);
        for (std::size_t i = 0; i < positive_size; ++i) {
            if (options.tight) {
                if (low == 0) {
                    break;
                }
                positive.push_back(atom(pick(0, low - 1)));
            } else {
                positive.push_back(atom(pick(0, n - 1)));
            }
        }
        auto negative_size = pick(0, 2);
        for (std::size_t i = 0; i < negative_size; ++i) {
            negative.push_back(atom(pick(0, n - 1)));
        }
        if (head_atoms.empty() && positive.empty() && negative.empty()) {
            continue;
        }
        program.add_rule(make_rule(std::move(head_atoms), std::move(positive), std::move(negative)));
    }
    return program;
}

auto independent_choices(std::size_t n) -> GroundProgram {
    GroundProgram program;
    for (std::size_t i = 1; i <= n; ++i) {
        auto index = static_cast<std::int64_t>(i);
        program.add_rule(make_rule({Atom{"x", {index}}, Atom{"y", {index}}}));
    }
    return program;
}

} // namespace facetnav::testing
