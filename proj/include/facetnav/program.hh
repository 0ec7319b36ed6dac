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

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace facetnav {

//! A ground term: an integer or a lowercase constant.
using Term = std::variant<std::int64_t, std::string>;

//! A ground atom `p(t1,...,tn)`.
//!
//! Atoms order by predicate and then lexicographically by their terms;
//! integers sort before symbolic constants.
struct Atom {
    std::string predicate;
    std::vector<Term> terms;

    friend auto operator==(Atom const &a, Atom const &b) -> bool = default;
    friend auto operator<(Atom const &a, Atom const &b) -> bool {
        if (a.predicate != b.predicate) {
            return a.predicate < b.predicate;
        }
        return a.terms < b.terms;
    }
};

[[nodiscard]] auto to_string(Atom const &atom) -> std::string;
auto operator<<(std::ostream &out, Atom const &atom) -> std::ostream &;

//! Parses a single ground atom, e.g. `outfit(jacket,blue)`.
[[nodiscard]] auto parse_atom(std::string_view text) -> Atom;

//! A ground rule `h1 | ... | hk :- b1, ..., bm, not c1, ..., not cn.`
//!
//! All three parts are kept sorted and free of duplicates. An empty head
//! makes the rule an integrity constraint.
struct Rule {
    std::vector<Atom> head;
    std::vector<Atom> positive_body;
    std::vector<Atom> negative_body;

    [[nodiscard]] auto is_constraint() const -> bool { return head.empty(); }

    friend auto operator==(Rule const &a, Rule const &b) -> bool = default;
    friend auto operator<(Rule const &a, Rule const &b) -> bool;
};

//! Builds a rule with set semantics for each part.
[[nodiscard]] auto make_rule(std::vector<Atom> head, std::vector<Atom> positive_body = {},
                             std::vector<Atom> negative_body = {}) -> Rule;

[[nodiscard]] auto to_string(Rule const &rule) -> std::string;
auto operator<<(std::ostream &out, Rule const &rule) -> std::ostream &;

//! A finite set of ground rules.
//!
//! Rules keep their insertion order for printing; duplicates are dropped on
//! insertion. Equality compares rule sets.
class GroundProgram {
  public:
    GroundProgram() = default;
    explicit GroundProgram(std::vector<Rule> rules);

    //! Adds a rule; returns false if an equal rule was already present.
    auto add_rule(Rule rule) -> bool;

    [[nodiscard]] auto rules() const -> std::vector<Rule> const & { return rules_; }
    //! All atoms occurring anywhere in the program.
    [[nodiscard]] auto atoms() const -> std::set<Atom> const & { return atoms_; }
    //! Atoms occurring in some rule head.
    [[nodiscard]] auto head_atoms() const -> std::set<Atom>;
    [[nodiscard]] auto contains(Atom const &atom) const -> bool { return atoms_.contains(atom); }
    [[nodiscard]] auto empty() const -> bool { return rules_.empty(); }
    [[nodiscard]] auto size() const -> std::size_t { return rules_.size(); }

    friend auto operator==(GroundProgram const &a, GroundProgram const &b) -> bool {
        return a.rule_set_ == b.rule_set_;
    }

  private:
    std::vector<Rule> rules_;
    std::set<Rule> rule_set_;
    std::set<Atom> atoms_;
};

//! Program text, one rule per line, in insertion order.
[[nodiscard]] auto to_string(GroundProgram const &program) -> std::string;
auto operator<<(std::ostream &out, GroundProgram const &program) -> std::ostream &;

//! Parses ground program text; throws ParseError with line and column.
[[nodiscard]] auto parse_program(std::string_view text) -> GroundProgram;

//! A set of true atoms, kept sorted.
class Interpretation {
  public:
    Interpretation() = default;
    explicit Interpretation(std::vector<Atom> atoms);
    Interpretation(std::initializer_list<Atom> atoms);

    [[nodiscard]] auto atoms() const -> std::vector<Atom> const & { return atoms_; }
    [[nodiscard]] auto contains(Atom const &atom) const -> bool;
    [[nodiscard]] auto size() const -> std::size_t { return atoms_.size(); }
    [[nodiscard]] auto empty() const -> bool { return atoms_.empty(); }

    friend auto operator==(Interpretation const &a, Interpretation const &b) -> bool = default;
    friend auto operator<(Interpretation const &a, Interpretation const &b) -> bool { return a.atoms_ < b.atoms_; }

  private:
    std::vector<Atom> atoms_;
};

//! `{a, e}` style rendering.
[[nodiscard]] auto to_string(Interpretation const &interpretation) -> std::string;
auto operator<<(std::ostream &out, Interpretation const &interpretation) -> std::ostream &;

//! Convenience for tests and examples: `make_interpretation({"a", "e"})`.
[[nodiscard]] auto make_interpretation(std::initializer_list<std::string_view> atoms) -> Interpretation;

//! Whether `x` satisfies every rule of `program`.
[[nodiscard]] auto is_model(GroundProgram const &program, Interpretation const &x) -> bool;

//! The Gelfond-Lifschitz reduct: rules whose negative body misses `x`, with
//! negative bodies removed.
[[nodiscard]] auto glp_reduct(GroundProgram const &program, Interpretation const &x) -> GroundProgram;

} // namespace facetnav
