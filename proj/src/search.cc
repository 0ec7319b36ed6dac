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


#include "search.hh"

#include "facetnav/error.hh"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace facetnav::detail {

namespace {

constexpr std::int8_t unassigned = -1;

class SupportedSearch {
  public:
    SupportedSearch(CompiledProgram const &program, AssignmentVisitor const &visit)
        : program_{program}, visit_{visit}, values_(program.atoms.size(), unassigned) {}

    void run() {
        for (std::size_t v = 0; v < program_.atoms.size(); ++v) {
            if (!program_.in_head[v]) {
                assign(static_cast<int>(v), 0);
            }
        }
        bool ok = true;
        for (std::size_t r = 0; ok && r < program_.rules.size(); ++r) {
            ok = check_rule(static_cast<int>(r));
        }
        for (std::size_t v = 0; ok && v < program_.atoms.size(); ++v) {
            ok = check_support(static_cast<int>(v));
        }
        if (ok) {
            search();
        }
    }

  private:
    void assign(int var, std::int8_t value) {
        values_[var] = value;
        trail_.push_back(var);
        queue_.push_back(var);
    }

    void undo(std::size_t size) {
        while (trail_.size() > size) {
            values_[trail_.back()] = unassigned;
            trail_.pop_back();
        }
    }

    [[nodiscard]] auto body_false(CompiledProgram::CompiledRule const &rule) const -> bool {
        return std::any_of(rule.positive.begin(), rule.positive.end(), [this](int v) { return values_[v] == 0; }) ||
               std::any_of(rule.negative.begin(), rule.negative.end(), [this](int v) { return values_[v] == 1; });
    }

    // Clause reading of a rule: some head atom true, or the body false.
    auto check_rule(int index) -> bool {
        auto const &rule = program_.rules[index];
        if (body_false(rule)) {
            return true;
        }
        int open = 0;
        int last = -1;
        std::int8_t forced = 0;
        for (int h : rule.head) {
            if (values_[h] == 1) {
                return true;
            }
            if (values_[h] == unassigned) {
                ++open;
                last = h;
                forced = 1;
            }
        }
        for (int p : rule.positive) {
            if (values_[p] == unassigned) {
                ++open;
                last = p;
                forced = 0;
            }
        }
        for (int n : rule.negative) {
            if (values_[n] == unassigned) {
                ++open;
                last = n;
                forced = 1;
            }
        }
        if (open == 0) {
            return false;
        }
        if (open == 1) {
            assign(last, forced);
        }
        return true;
    }

    // A true atom needs a rule with true body whose only true head atom it is.
    auto check_support(int var) -> bool {
        if (values_[var] == 0) {
            return true;
        }
        int candidates = 0;
        int candidate = -1;
        for (int r : program_.supporters[var]) {
            auto const &rule = program_.rules[r];
            if (body_false(rule)) {
                continue;
            }
            if (std::any_of(rule.head.begin(), rule.head.end(),
                            [this, var](int h) { return h != var && values_[h] == 1; })) {
                continue;
            }
            ++candidates;
            candidate = r;
            if (candidates > 1) {
                return true;
            }
        }
        if (candidates == 0) {
            if (values_[var] == 1) {
                return false;
            }
            assign(var, 0);
            return true;
        }
        if (values_[var] == 1) {
            auto const &rule = program_.rules[candidate];
            for (int p : rule.positive) {
                if (values_[p] == unassigned) {
                    assign(p, 1);
                }
            }
            for (int n : rule.negative) {
                if (values_[n] == unassigned) {
                    assign(n, 0);
                }
            }
            for (int h : rule.head) {
                if (h != var && values_[h] == unassigned) {
                    assign(h, 0);
                }
            }
        }
        return true;
    }

    auto propagate() -> bool {
        while (!queue_.empty()) {
            int var = queue_.back();
            queue_.pop_back();
            if (!check_support(var)) {
                queue_.clear();
                return false;
            }
            for (int r : program_.occurrences[var]) {
                if (!check_rule(r)) {
                    queue_.clear();
                    return false;
                }
                for (int h : program_.rules[r].head) {
                    if (!check_support(h)) {
                        queue_.clear();
                        return false;
                    }
                }
            }
        }
        return true;
    }

    // Returns false once the visitor asked to stop.
    auto search() -> bool {
        if (!propagate()) {
            return true;
        }
        auto it = std::find(values_.begin(), values_.end(), unassigned);
        if (it == values_.end()) {
            return visit_(values_);
        }
        int var = static_cast<int>(it - values_.begin());
        for (std::int8_t value : {std::int8_t{1}, std::int8_t{0}}) {
            std::size_t mark = trail_.size();
            assign(var, value);
            bool more = search();
            undo(mark);
            if (!more) {
                return false;
            }
        }
        return true;
    }

    CompiledProgram const &program_;
    AssignmentVisitor const &visit_;
    Assignment values_;
    std::vector<int> trail_;
    std::vector<int> queue_;
};

// Plain DPLL over clauses given as signed 1-based literals.
class TinySat {
  public:
    TinySat(int vars, std::vector<std::vector<int>> clauses)
        : values_(static_cast<std::size_t>(vars) + 1, unassigned), clauses_{std::move(clauses)} {}

    auto solve() -> bool { return dpll(); }

  private:
    auto value(int lit) const -> std::int8_t {
        auto v = values_[static_cast<std::size_t>(std::abs(lit))];
        if (v == unassigned) {
            return unassigned;
        }
        return lit > 0 ? v : static_cast<std::int8_t>(1 - v);
    }

    auto unit_propagate(std::vector<int> &trail) -> bool {
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto const &clause : clauses_) {
                int open = 0;
                int last = 0;
                bool sat = false;
                for (int lit : clause) {
                    auto v = value(lit);
                    if (v == 1) {
                        sat = true;
                        break;
                    }
                    if (v == unassigned) {
                        ++open;
                        last = lit;
                    }
                }
                if (sat) {
                    continue;
                }
                if (open == 0) {
                    return false;
                }
                if (open == 1) {
                    values_[static_cast<std::size_t>(std::abs(last))] = last > 0 ? 1 : 0;
                    trail.push_back(std::abs(last));
                    changed = true;
                }
            }
        }
        return true;
    }

    auto dpll() -> bool {
        std::vector<int> trail;
        auto restore = [&] {
            for (int v : trail) {
                values_[static_cast<std::size_t>(v)] = unassigned;
            }
        };
        if (!unit_propagate(trail)) {
            restore();
            return false;
        }
        auto it = std::find(values_.begin() + 1, values_.end(), unassigned);
        if (it == values_.end()) {
            return true;
        }
        auto var = static_cast<std::size_t>(it - values_.begin());
        for (std::int8_t value : {std::int8_t{0}, std::int8_t{1}}) {
            values_[var] = value;
            if (dpll()) {
                return true;
            }
        }
        values_[var] = unassigned;
        restore();
        return false;
    }

    Assignment values_;
    std::vector<std::vector<int>> clauses_;
};

} // namespace

auto compile(GroundProgram const &program, Limits const &limits) -> CompiledProgram {
    CompiledProgram result;
    std::map<Atom, int> index;
    for (auto const &atom : program.atoms()) {
        index.emplace(atom, static_cast<int>(result.atoms.size()));
        result.atoms.push_back(atom);
    }
    auto n = result.atoms.size();
    result.in_head.assign(n, false);
    result.supporters.resize(n);
    result.occurrences.resize(n);
    auto ids = [&index](std::vector<Atom> const &atoms) {
        std::vector<int> out;
        out.reserve(atoms.size());
        for (auto const &atom : atoms) {
            out.push_back(index.at(atom));
        }
        return out;
    };
    for (auto const &rule : program.rules()) {
        CompiledProgram::CompiledRule compiled{ids(rule.head), ids(rule.positive_body), ids(rule.negative_body)};
        auto r = static_cast<int>(result.rules.size());
        for (int h : compiled.head) {
            result.in_head[h] = true;
            result.supporters[h].push_back(r);
        }
        for (auto const *part : {&compiled.head, &compiled.positive, &compiled.negative}) {
            for (int v : *part) {
                result.occurrences[v].push_back(r);
            }
        }
        result.rules.push_back(std::move(compiled));
    }
    for (auto &occ : result.occurrences) {
        occ.erase(std::unique(occ.begin(), occ.end()), occ.end());
    }
    auto heads = static_cast<std::size_t>(std::count(result.in_head.begin(), result.in_head.end(), true));
    if (heads > limits.max_head_atoms) {
        throw Error{ErrorCode::resource_limit, "program has " + std::to_string(heads) +
                                                   " head atoms, exact enumeration is capped at " +
                                                   std::to_string(limits.max_head_atoms)};
    }
    return result;
}

void enumerate_supported(CompiledProgram const &program, AssignmentVisitor const &visit) {
    SupportedSearch{program, visit}.run();
}

auto is_reduct_minimal(CompiledProgram const &program, Assignment const &x) -> bool {
    // Search for a model Y of the reduct with Y a strict subset of x.
    std::vector<int> local(x.size(), 0);
    int vars = 0;
    for (std::size_t v = 0; v < x.size(); ++v) {
        if (x[v] == 1) {
            local[v] = ++vars;
        }
    }
    if (vars == 0) {
        return true;
    }
    std::vector<std::vector<int>> clauses;
    for (auto const &rule : program.rules) {
        if (std::any_of(rule.negative.begin(), rule.negative.end(), [&x](int v) { return x[v] == 1; })) {
            continue;
        }
        if (std::any_of(rule.positive.begin(), rule.positive.end(), [&x](int v) { return x[v] != 1; })) {
            continue;
        }
        std::vector<int> clause;
        for (int h : rule.head) {
            if (x[h] == 1) {
                clause.push_back(local[h]);
            }
        }
        for (int p : rule.positive) {
            clause.push_back(-local[p]);
        }
        clauses.push_back(std::move(clause));
    }
    std::vector<int> shrink;
    for (int v = 1; v <= vars; ++v) {
        shrink.push_back(-v);
    }
    clauses.push_back(std::move(shrink));
    return !TinySat{vars, std::move(clauses)}.solve();
}

void enumerate_answer_sets(CompiledProgram const &program, AssignmentVisitor const &visit) {
    enumerate_supported(program, [&](Assignment const &x) {
        if (!is_reduct_minimal(program, x)) {
            return true;
        }
        return visit(x);
    });
}

auto to_interpretation(CompiledProgram const &program, Assignment const &x) -> Interpretation {
    std::vector<Atom> atoms;
    for (std::size_t v = 0; v < x.size(); ++v) {
        if (x[v] == 1) {
            atoms.push_back(program.atoms[v]);
        }
    }
    return Interpretation{std::move(atoms)};
}

} // namespace facetnav::detail
