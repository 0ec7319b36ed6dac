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


#include "facetnav/program.hh"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <tuple>

namespace facetnav {

namespace {

void normalize(std::vector<Atom> &atoms) {
    std::sort(atoms.begin(), atoms.end());
    atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
}

auto contains_sorted(std::vector<Atom> const &atoms, Atom const &atom) -> bool {
    return std::binary_search(atoms.begin(), atoms.end(), atom);
}

template <class Range> void join(std::ostream &out, Range const &range, char const *sep, char const *prefix = "") {
    bool first = true;
    for (auto const &x : range) {
        if (!first) {
            out << sep;
        }
        first = false;
        out << prefix << x;
    }
}

} // namespace

auto to_string(Atom const &atom) -> std::string {
    std::ostringstream oss;
    oss << atom;
    return oss.str();
}

auto operator<<(std::ostream &out, Atom const &atom) -> std::ostream & {
    out << atom.predicate;
    if (!atom.terms.empty()) {
        out << "(";
        bool first = true;
        for (auto const &term : atom.terms) {
            if (!first) {
                out << ",";
            }
            first = false;
            std::visit([&out](auto const &value) { out << value; }, term);
        }
        out << ")";
    }
    return out;
}

auto operator<(Rule const &a, Rule const &b) -> bool {
    return std::tie(a.head, a.positive_body, a.negative_body) < std::tie(b.head, b.positive_body, b.negative_body);
}

auto make_rule(std::vector<Atom> head, std::vector<Atom> positive_body, std::vector<Atom> negative_body) -> Rule {
    normalize(head);
    normalize(positive_body);
    normalize(negative_body);
    return Rule{std::move(head), std::move(positive_body), std::move(negative_body)};
}

auto to_string(Rule const &rule) -> std::string {
    std::ostringstream oss;
    oss << rule;
    return oss.str();
}

auto operator<<(std::ostream &out, Rule const &rule) -> std::ostream & {
    join(out, rule.head, " | ");
    if (!rule.positive_body.empty() || !rule.negative_body.empty()) {
        out << (rule.head.empty() ? ":- " : " :- ");
        join(out, rule.positive_body, ", ");
        if (!rule.positive_body.empty() && !rule.negative_body.empty()) {
            out << ", ";
        }
        join(out, rule.negative_body, ", ", "not ");
    }
    return out << ".";
}

GroundProgram::GroundProgram(std::vector<Rule> rules) {
    for (auto &rule : rules) {
        add_rule(std::move(rule));
    }
}

auto GroundProgram::add_rule(Rule rule) -> bool {
    normalize(rule.head);
    normalize(rule.positive_body);
    normalize(rule.negative_body);
    if (!rule_set_.insert(rule).second) {
        return false;
    }
    for (auto const *part : {&rule.head, &rule.positive_body, &rule.negative_body}) {
        atoms_.insert(part->begin(), part->end());
    }
    rules_.push_back(std::move(rule));
    return true;
}

auto GroundProgram::head_atoms() const -> std::set<Atom> {
    std::set<Atom> result;
    for (auto const &rule : rules_) {
        result.insert(rule.head.begin(), rule.head.end());
    }
    return result;
}

auto to_string(GroundProgram const &program) -> std::string {
    std::ostringstream oss;
    oss << program;
    return oss.str();
}

auto operator<<(std::ostream &out, GroundProgram const &program) -> std::ostream & {
    for (auto const &rule : program.rules()) {
        out << rule << "\n";
    }
    return out;
}

Interpretation::Interpretation(std::vector<Atom> atoms) : atoms_{std::move(atoms)} { normalize(atoms_); }

Interpretation::Interpretation(std::initializer_list<Atom> atoms) : atoms_{atoms} { normalize(atoms_); }

auto Interpretation::contains(Atom const &atom) const -> bool { return contains_sorted(atoms_, atom); }

auto to_string(Interpretation const &interpretation) -> std::string {
    std::ostringstream oss;
    oss << interpretation;
    return oss.str();
}

auto operator<<(std::ostream &out, Interpretation const &interpretation) -> std::ostream & {
    out << "{";
    join(out, interpretation.atoms(), ", ");
    return out << "}";
}

auto make_interpretation(std::initializer_list<std::string_view> atoms) -> Interpretation {
    std::vector<Atom> parsed;
    parsed.reserve(atoms.size());
    for (auto text : atoms) {
        parsed.push_back(parse_atom(text));
    }
    return Interpretation{std::move(parsed)};
}

auto is_model(GroundProgram const &program, Interpretation const &x) -> bool {
    return std::all_of(program.rules().begin(), program.rules().end(), [&x](Rule const &rule) {
        bool body = std::all_of(rule.positive_body.begin(), rule.positive_body.end(),
                                [&x](Atom const &a) { return x.contains(a); }) &&
                    std::none_of(rule.negative_body.begin(), rule.negative_body.end(),
                                 [&x](Atom const &a) { return x.contains(a); });
        return !body || std::any_of(rule.head.begin(), rule.head.end(), [&x](Atom const &a) { return x.contains(a); });
    });
}

auto glp_reduct(GroundProgram const &program, Interpretation const &x) -> GroundProgram {
    GroundProgram reduct;
    for (auto const &rule : program.rules()) {
        if (std::none_of(rule.negative_body.begin(), rule.negative_body.end(),
                         [&x](Atom const &a) { return x.contains(a); })) {
            reduct.add_rule(Rule{rule.head, rule.positive_body, {}});
        }
    }
    return reduct;
}

} // namespace facetnav
