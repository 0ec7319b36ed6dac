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


#include "facetnav/semantics.hh"

#include "search.hh"

#include <algorithm>
#include <map>

namespace facetnav {

void for_each_answer_set(GroundProgram const &program, ModelVisitor const &visit, Limits const &limits) {
    auto compiled = detail::compile(program, limits);
    detail::enumerate_answer_sets(compiled, [&](detail::Assignment const &x) {
        return visit(detail::to_interpretation(compiled, x));
    });
}

void for_each_supported_model(GroundProgram const &program, ModelVisitor const &visit, Limits const &limits) {
    auto compiled = detail::compile(program, limits);
    detail::enumerate_supported(compiled, [&](detail::Assignment const &x) {
        return visit(detail::to_interpretation(compiled, x));
    });
}

auto answer_sets(GroundProgram const &program, Limits const &limits) -> std::vector<Interpretation> {
    std::vector<Interpretation> result;
    for_each_answer_set(
        program,
        [&result](Interpretation const &x) {
            result.push_back(x);
            return true;
        },
        limits);
    std::sort(result.begin(), result.end());
    return result;
}

auto supported_models(GroundProgram const &program, Limits const &limits) -> std::vector<Interpretation> {
    std::vector<Interpretation> result;
    for_each_supported_model(
        program,
        [&result](Interpretation const &x) {
            result.push_back(x);
            return true;
        },
        limits);
    std::sort(result.begin(), result.end());
    return result;
}

auto count_answer_sets(GroundProgram const &program, Limits const &limits) -> std::size_t {
    auto compiled = detail::compile(program, limits);
    std::size_t count = 0;
    detail::enumerate_answer_sets(compiled, [&count](detail::Assignment const &) {
        ++count;
        return true;
    });
    return count;
}

auto count_supported_models(GroundProgram const &program, Limits const &limits) -> std::size_t {
    auto compiled = detail::compile(program, limits);
    std::size_t count = 0;
    detail::enumerate_supported(compiled, [&count](detail::Assignment const &) {
        ++count;
        return true;
    });
    return count;
}

auto is_satisfiable(GroundProgram const &program, Limits const &limits) -> bool {
    auto compiled = detail::compile(program, limits);
    bool found = false;
    detail::enumerate_answer_sets(compiled, [&found](detail::Assignment const &) {
        found = true;
        return false;
    });
    return found;
}

auto summarize(GroundProgram const &program, Limits const &limits) -> SpaceSummary {
    auto compiled = detail::compile(program, limits);
    auto n = compiled.atoms.size();
    std::vector<bool> brave(n, false);
    std::vector<bool> cautious(n, true);
    SpaceSummary result;
    detail::enumerate_answer_sets(compiled, [&](detail::Assignment const &x) {
        ++result.answer_count;
        for (std::size_t v = 0; v < n; ++v) {
            brave[v] = brave[v] || x[v] == 1;
            cautious[v] = cautious[v] && x[v] == 1;
        }
        return true;
    });
    auto &cons = result.consequences;
    cons.satisfiable = result.answer_count > 0;
    for (std::size_t v = 0; v < n; ++v) {
        if (brave[v]) {
            cons.brave.insert(compiled.atoms[v]);
        }
        // an empty intersection is taken over the atom universe
        if (cautious[v]) {
            cons.cautious.insert(compiled.atoms[v]);
        }
    }
    return result;
}

auto consequences(GroundProgram const &program, Limits const &limits) -> Consequences {
    return summarize(program, limits).consequences;
}

auto is_tight(GroundProgram const &program) -> bool {
    std::map<Atom, std::vector<Atom>> edges;
    for (auto const &rule : program.rules()) {
        for (auto const &from : rule.positive_body) {
            auto &out = edges[from];
            out.insert(out.end(), rule.head.begin(), rule.head.end());
        }
    }
    enum class Mark { fresh, active, done };
    std::map<Atom, Mark> marks;
    // iterative DFS; a back edge to an active node closes a cycle
    for (auto const &[root, unused] : edges) {
        if (marks[root] != Mark::fresh) {
            continue;
        }
        std::vector<std::pair<Atom, std::size_t>> stack{{root, 0}};
        marks[root] = Mark::active;
        while (!stack.empty()) {
            auto &[node, next] = stack.back();
            auto it = edges.find(node);
            if (it == edges.end() || next >= it->second.size()) {
                marks[node] = Mark::done;
                stack.pop_back();
                continue;
            }
            Atom succ = it->second[next++];
            auto &mark = marks[succ];
            if (mark == Mark::active) {
                return false;
            }
            if (mark == Mark::fresh) {
                mark = Mark::active;
                stack.emplace_back(std::move(succ), 0);
            }
        }
    }
    return true;
}

} // namespace facetnav
