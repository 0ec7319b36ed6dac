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


#include "facetnav/shell.hh"

#include "facetnav/error.hh"
#include "facetnav/json_codec.hh"

#include <charconv>
#include <chrono>
#include <fstream>
#include <istream>
#include <map>
#include <set>
#include <sstream>

namespace facetnav {

namespace {

//! Malformed command; exit code 2.
class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

//! A failed `expect` command; exit code 1.
class ExpectationFailed : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct Arguments {
    std::vector<std::string> positional;
    std::map<std::string, std::string> values;
    std::set<std::string> flags;

    [[nodiscard]] auto value(std::string const &name) const -> std::optional<std::string> {
        auto it = values.find(name);
        if (it == values.end()) {
            return std::nullopt;
        }
        return it->second;
    }
    [[nodiscard]] auto flag(std::string const &name) const -> bool { return flags.contains(name); }
};

auto parse_arguments(std::vector<std::string> const &words, std::set<std::string> const &value_options,
                     std::set<std::string> const &flag_options = {}) -> Arguments {
    Arguments args;
    for (std::size_t i = 1; i < words.size(); ++i) {
        auto const &word = words[i];
        if (word.size() > 2 && word.starts_with("--")) {
            if (value_options.contains(word)) {
                if (i + 1 >= words.size()) {
                    throw UsageError{"option " + word + " needs a value"};
                }
                args.values[word] = words[++i];
            } else if (flag_options.contains(word)) {
                args.flags.insert(word);
            } else {
                throw UsageError{"unknown option " + word + " for " + words.front()};
            }
        } else {
            args.positional.push_back(word);
        }
    }
    return args;
}

void expect_positional(Arguments const &args, std::size_t min, std::size_t max, char const *usage) {
    if (args.positional.size() < min || args.positional.size() > max) {
        throw UsageError{std::string{"usage: "} + usage};
    }
}

template <class T> auto parse_number(std::string const &text, char const *what) -> T {
    T value{};
    auto const *end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw UsageError{std::string{what} + " must be a non-negative integer, got '" + text + "'"};
    }
    return value;
}

auto parse_kind_argument(std::string const &text) -> WeightKind {
    try {
        return parse_weight_kind(text);
    } catch (Error const &) {
        throw UsageError{"unknown weight kind '" + text + "' (use abs, fc or supp)"};
    }
}

auto yes_no(bool value) -> char const * { return value ? "yes" : "no"; }

constexpr char const *help_text = R"(commands:
  load FILE                         start a session on a program file
  facets [--weight abs|fc|supp]     facets of the current route
  weights KIND FACET [--redirection ROUTE]
                                    weight of one facet
  activate FACET...                 activate facets according to the mode
  retract [FACET|--last|--all]      remove facets from the route
  route                             show the current route
  answer-sets [--limit N]           answer sets of the current route
  count [--kind abs|fc|supp]        counts of the current route
  pace [--kind abs|fc|supp]         pace of the current route
  mode [go|sgo|expl|free] [--kind abs|fc|supp]
                                    show or change the navigation mode
  redirect N                        pick a redirection option
  random-safe-walk [--seed N]       random steps until one answer set is left
  random-safe-steps N [--seed N]    up to N random steps
  verify-properties KIND [--depth D]
                                    check the weight properties
  expect count N [--kind K] | facets N | route ROUTE | maximal-safe yes|no
         | pace FRACTION [--kind K] | status applied|ignored|needs_redirection
                                    fail unless the session matches
  help                              show this text
  quit                              leave)";

} // namespace

struct Shell::Output {
    std::string text;
    Json json = Json::object();

    void line(std::string const &content) {
        text += content;
        text += '\n';
    }
};

auto parse_mode(std::string_view text, WeightKind default_kind) -> Mode {
    Mode mode;
    mode.weight_kind = default_kind;
    auto dash = text.find('-');
    mode.strategy = parse_strategy(text.substr(0, dash));
    if (dash != std::string_view::npos) {
        if (!mode.is_weighted()) {
            throw Error{ErrorCode::invalid_argument, "mode " + std::string{text.substr(0, dash)} + " takes no weight kind"};
        }
        mode.weight_kind = parse_weight_kind(text.substr(dash + 1));
    }
    return mode;
}

auto split_command(std::string_view line) -> std::vector<std::string> {
    std::vector<std::string> words;
    std::string current;
    bool in_word = false;
    bool quoted = false;
    int depth = 0;
    for (char c : line) {
        if (quoted) {
            if (c == '"') {
                quoted = false;
            } else {
                current += c;
            }
            continue;
        }
        if (c == '"') {
            quoted = true;
            in_word = true;
            continue;
        }
        if (depth == 0 && (c == ' ' || c == '\t' || c == '\r' || c == '\n')) {
            if (in_word) {
                words.push_back(std::move(current));
                current.clear();
                in_word = false;
            }
            continue;
        }
        if (c == '(' || c == '<') {
            ++depth;
        } else if ((c == ')' || c == '>') && depth > 0) {
            --depth;
        }
        current += c;
        in_word = true;
    }
    if (quoted) {
        throw UsageError{"unterminated quote"};
    }
    if (in_word) {
        words.push_back(std::move(current));
    }
    return words;
}

Shell::Shell(ShellOptions options) : options_{std::move(options)} {}

void Shell::load_text(std::string_view text) {
    auto program = parse_program(text);
    auto space = std::make_shared<RouteSpace const>(std::move(program), options_.limits);
    // Fail early if the program exceeds the caps.
    static_cast<void>(space->facets({}));
    session_ = std::make_unique<Session>(std::move(space), options_.mode);
    last_status_.reset();
}

void Shell::load_file(std::filesystem::path const &path) {
    auto resolved = path;
    if (path.is_relative() && std::filesystem::exists(options_.base_directory / path)) {
        resolved = options_.base_directory / path;
    }
    std::ifstream in{resolved};
    if (!in) {
        throw Error{ErrorCode::invalid_argument, "cannot read " + path.string()};
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    load_text(buffer.str());
}

auto Shell::session() const -> Session const & {
    if (!session_) {
        throw UsageError{"no program loaded (use load FILE)"};
    }
    return *session_;
}

auto Shell::require_session() -> Session & {
    if (!session_) {
        throw UsageError{"no program loaded (use load FILE)"};
    }
    return *session_;
}

namespace {

void describe_route(Session const &session, Json &json, std::string &text) {
    auto const &space = session.space();
    auto const &route = session.route();
    bool safe = space.is_safe(route);
    auto counts = session.counts();
    text += "route: " + to_string(route) + "\n";
    text += "answer sets: " + std::to_string(counts.at(WeightKind::absolute)) + "\n";
    text += "facets: " + std::to_string(counts.at(WeightKind::facet_counting)) + "\n";
    if (safe && session.is_maximal_safe()) {
        text += "maximal safe: yes\n";
    }
    json["state"] = json::session_state(session, {});
}

void describe_outcome(std::string const &action, StepOutcome const &outcome, std::string &text) {
    text += action + ": " + to_string(outcome.status);
    if (!outcome.reason.empty()) {
        text += " (" + outcome.reason + ")";
    }
    text += "\n";
    for (std::size_t i = 0; i < outcome.redirection_options.size(); ++i) {
        text += "  [" + std::to_string(i) + "] " + to_string(outcome.redirection_options[i]) + "\n";
    }
}

auto format_ms(double ms) -> std::string { return std::to_string(static_cast<long long>(ms + 0.5)) + "ms"; }

void describe_walk(WalkTrace const &trace, Json &json, std::string &text) {
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        auto const &step = trace.steps[i];
        text += "step " + std::to_string(i + 1) + ": " + to_string(step.chosen) + " of " +
                std::to_string(step.candidates.size()) + " candidates, answer sets " +
                std::to_string(step.answer_count) + ", facets " + std::to_string(step.facet_count) + ", " +
                format_ms(step.measured_ms) + "\n";
    }
    text += "terminal: " + std::string{to_string(trace.terminal)} + "\n";
    json["trace"] = json::walk_trace(trace, true);
}

void describe_check(char const *name, PropertyCheck const &check, std::string &text) {
    text += name;
    if (check.holds) {
        text += ": holds\n";
        return;
    }
    text += ": fails";
    if (check.witness) {
        auto const &w = *check.witness;
        text += " at " + to_string(w.route) + " for " + to_string(w.facet);
        if (w.other) {
            text += " vs " + to_string(*w.other);
        }
        if (!w.detail.empty()) {
            text += " (" + w.detail + ")";
        }
    }
    text += "\n";
}

} // namespace

auto Shell::dispatch(std::vector<std::string> const &words, Output &out) -> bool {
    auto const &verb = words.front();

    if (verb == "quit" || verb == "exit") {
        parse_arguments(words, {});
        return true;
    }
    if (verb == "help") {
        out.line(help_text);
        return false;
    }
    if (verb == "load") {
        auto args = parse_arguments(words, {});
        expect_positional(args, 1, 1, "load FILE");
        load_file(args.positional.front());
        auto const &program = session_->program();
        out.line("loaded " + args.positional.front() + ": " + std::to_string(program.size()) + " rules, " +
                 std::to_string(program.atoms().size()) + " atoms");
        out.json["rules"] = program.size();
        out.json["atoms"] = program.atoms().size();
        describe_route(*session_, out.json, out.text);
        return false;
    }
    if (verb == "mode") {
        auto args = parse_arguments(words, {"--kind"});
        expect_positional(args, 0, 1, "mode [go|sgo|expl|free] [--kind abs|fc|supp]");
        if (!args.positional.empty() || args.value("--kind")) {
            auto kind = args.value("--kind") ? parse_kind_argument(*args.value("--kind")) : options_.mode.weight_kind;
            Mode mode;
            try {
                mode = args.positional.empty() ? Mode{options_.mode.strategy, kind}
                                               : parse_mode(args.positional.front(), kind);
            } catch (Error const &error) {
                throw UsageError{error.what()};
            }
            if (session_) {
                session_->set_mode(mode);
            }
            options_.mode = mode;
        }
        out.line("mode: " + to_string(options_.mode));
        out.json["mode"] = json::mode(options_.mode);
        return false;
    }

    auto &session = require_session();
    auto const &space = session.space();

    if (verb == "route") {
        parse_arguments(words, {});
        describe_route(session, out.json, out.text);
    } else if (verb == "facets") {
        auto args = parse_arguments(words, {"--weight"});
        expect_positional(args, 0, 0, "facets [--weight abs|fc|supp]");
        if (auto kind = args.value("--weight")) {
            auto weighted = weighted_facets(parse_kind_argument(*kind), space, session.route());
            for (auto const &wf : weighted) {
                out.line(to_string(wf.facet) + ": " + std::to_string(wf.weight));
            }
            out.json["weights"] = json::weighted_facets(weighted);
        } else {
            for (auto const &f : session.facets().all()) {
                out.line(to_string(f));
            }
        }
        auto report = session.facets();
        out.line("facets: " + std::to_string(report.count));
        out.json["facets"] = json::facet_report(report);
    } else if (verb == "weights") {
        auto args = parse_arguments(words, {"--redirection"});
        expect_positional(args, 2, 2, "weights KIND FACET [--redirection ROUTE]");
        auto kind = parse_kind_argument(args.positional[0]);
        auto facet = parse_facet(args.positional[1]);
        Route redirection;
        if (auto text = args.value("--redirection")) {
            redirection = parse_route(*text);
        }
        auto weight = facet_weight(kind, facet, space, session.route(), redirection);
        out.line(std::string{to_string(kind)} + " " + to_string(facet) + ": " + std::to_string(weight.value));
        out.json = Json{{"kind", to_string(kind)},
                        {"facet", to_string(facet)},
                        {"route", json::route(session.route())},
                        {"redirection", json::route(redirection)},
                        {"weight", weight.value}};
    } else if (verb == "activate") {
        auto args = parse_arguments(words, {});
        expect_positional(args, 1, SIZE_MAX, "activate FACET...");
        std::vector<Facet> facets;
        for (auto const &text : args.positional) {
            facets.push_back(parse_facet(text));
        }
        auto steps = Json::array();
        for (auto const &facet : facets) {
            auto outcome = session.step(facet);
            last_status_ = outcome.status;
            describe_outcome("activate " + to_string(facet), outcome, out.text);
            steps.push_back(json::step_outcome(outcome));
            if (outcome.status == StepStatus::needs_redirection) {
                break;
            }
        }
        out.json["steps"] = std::move(steps);
        describe_route(session, out.json, out.text);
    } else if (verb == "retract") {
        auto args = parse_arguments(words, {}, {"--last", "--all"});
        expect_positional(args, 0, 1, "retract [FACET|--last|--all]");
        if (static_cast<int>(args.flag("--last")) + static_cast<int>(args.flag("--all")) +
                static_cast<int>(!args.positional.empty()) > 1) {
            throw UsageError{"usage: retract [FACET|--last|--all]"};
        }
        StepOutcome outcome;
        if (args.flag("--all")) {
            outcome = session.retract_all();
        } else if (!args.positional.empty()) {
            outcome = session.retract(parse_facet(args.positional.front()));
        } else {
            outcome = session.retract_last();
        }
        out.json["outcome"] = json::step_outcome(outcome);
        describe_route(session, out.json, out.text);
    } else if (verb == "answer-sets") {
        auto args = parse_arguments(words, {"--limit"});
        expect_positional(args, 0, 0, "answer-sets [--limit N]");
        auto all = session.answer_sets();
        auto limit = all.size();
        if (auto text = args.value("--limit")) {
            limit = std::min(limit, parse_number<std::size_t>(*text, "limit"));
        }
        auto items = Json::array();
        for (std::size_t i = 0; i < limit; ++i) {
            out.line(to_string(all[i]));
            items.push_back(json::interpretation(all[i]));
        }
        out.line("answer sets: " + std::to_string(all.size()));
        out.json["answer_sets"] = std::move(items);
        out.json["total"] = all.size();
    } else if (verb == "count") {
        auto args = parse_arguments(words, {"--kind"});
        expect_positional(args, 0, 0, "count [--kind abs|fc|supp]");
        std::vector<WeightKind> kinds{std::begin(all_weight_kinds), std::end(all_weight_kinds)};
        if (auto text = args.value("--kind")) {
            kinds = {parse_kind_argument(*text)};
        }
        KindCounts counts;
        for (auto kind : kinds) {
            counts[kind] = count(kind, space, session.route());
            out.line(std::string{to_string(kind)} + ": " + std::to_string(counts[kind]));
        }
        out.json["counts"] = json::counts(counts);
    } else if (verb == "pace") {
        auto args = parse_arguments(words, {"--kind"});
        expect_positional(args, 0, 0, "pace [--kind abs|fc|supp]");
        auto kind = args.value("--kind") ? parse_kind_argument(*args.value("--kind")) : session.mode().weight_kind;
        auto value = pace(kind, space, session.route());
        out.line("pace " + std::string{to_string(kind)} + ": " + value.fraction() + " (" + value.percent() + ")");
        out.json["kind"] = to_string(kind);
        out.json["pace"] = json::pace(value);
    } else if (verb == "redirect") {
        auto args = parse_arguments(words, {});
        expect_positional(args, 1, 1, "redirect OPTION-INDEX");
        auto index = parse_number<std::size_t>(args.positional.front(), "option index");
        auto outcome = session.choose_redirection(index);
        last_status_ = outcome.status;
        describe_outcome("redirect " + std::to_string(index), outcome, out.text);
        out.json["outcome"] = json::step_outcome(outcome);
        describe_route(session, out.json, out.text);
    } else if (verb == "random-safe-walk") {
        auto args = parse_arguments(words, {"--seed"});
        expect_positional(args, 0, 0, "random-safe-walk [--seed N]");
        auto seed = args.value("--seed") ? parse_number<std::uint64_t>(*args.value("--seed"), "seed") : options_.seed;
        auto trace = random_safe_walk(session, seed);
        describe_walk(trace, out.json, out.text);
        describe_route(session, out.json, out.text);
    } else if (verb == "random-safe-steps") {
        auto args = parse_arguments(words, {"--seed"});
        expect_positional(args, 1, 1, "random-safe-steps N [--seed N]");
        auto steps = parse_number<std::size_t>(args.positional.front(), "step count");
        auto seed = args.value("--seed") ? parse_number<std::uint64_t>(*args.value("--seed"), "seed") : options_.seed;
        auto trace = random_safe_steps(session, steps, seed);
        describe_walk(trace, out.json, out.text);
        describe_route(session, out.json, out.text);
    } else if (verb == "verify-properties") {
        auto args = parse_arguments(words, {"--depth"});
        expect_positional(args, 1, 1, "verify-properties KIND [--depth D]");
        auto kind = parse_kind_argument(args.positional.front());
        std::size_t depth = 6;
        if (auto text = args.value("--depth")) {
            depth = parse_number<std::size_t>(*text, "depth");
        }
        auto report = verify_weight_properties(kind, space, depth);
        describe_check("safe_zooming", report.safe_zooming, out.text);
        describe_check("splitting", report.splitting, out.text);
        describe_check("reliable", report.reliable, out.text);
        describe_check("min_inline", report.min_inline, out.text);
        describe_check("max_inline", report.max_inline, out.text);
        out.line("routes checked: " + std::to_string(report.routes_checked));
        out.json["kind"] = to_string(kind);
        out.json["properties"] = json::property_report(report);
    } else if (verb == "expect") {
        auto args = parse_arguments(words, {"--kind"});
        char const *usage = "expect count N [--kind K] | facets N | route ROUTE | maximal-safe yes|no | "
                            "pace FRACTION [--kind K] | status STATUS";
        expect_positional(args, 2, 2, usage);
        auto const &what = args.positional[0];
        auto const &wanted = args.positional[1];
        std::string actual;
        bool ok = false;
        if (what == "count") {
            auto kind = args.value("--kind") ? parse_kind_argument(*args.value("--kind")) : WeightKind::absolute;
            auto value = count(kind, space, session.route());
            actual = std::to_string(value);
            ok = value == parse_number<std::size_t>(wanted, "count");
        } else if (what == "facets") {
            auto value = session.facets().count;
            actual = std::to_string(value);
            ok = value == parse_number<std::size_t>(wanted, "facet count");
        } else if (what == "route") {
            actual = to_string(session.route());
            ok = same_facets(session.route(), parse_route(wanted));
        } else if (what == "maximal-safe") {
            if (wanted != "yes" && wanted != "no") {
                throw UsageError{std::string{"usage: "} + usage};
            }
            bool value = space.is_safe(session.route()) && session.is_maximal_safe();
            actual = yes_no(value);
            ok = actual == wanted;
        } else if (what == "pace") {
            auto kind = args.value("--kind") ? parse_kind_argument(*args.value("--kind")) : session.mode().weight_kind;
            actual = pace(kind, space, session.route()).fraction();
            ok = actual == wanted;
        } else if (what == "status") {
            actual = last_status_ ? to_string(*last_status_) : "none";
            ok = actual == wanted;
        } else {
            throw UsageError{std::string{"usage: "} + usage};
        }
        if (!ok) {
            throw ExpectationFailed{"expected " + what + " " + wanted + ", got " + actual};
        }
        out.line("ok: " + what + " " + actual);
        out.json["expect"] = what;
        out.json["actual"] = actual;
    } else {
        throw UsageError{"unknown command '" + verb + "' (try help)"};
    }
    return false;
}

auto Shell::execute(std::string_view line) -> CommandResult {
    auto start = std::chrono::steady_clock::now();
    CommandResult result;
    Output out;
    Json error;
    std::vector<std::string> words;
    try {
        words = split_command(line);
        if (words.empty() || words.front().starts_with("#")) {
            return result;
        }
        result.quit = dispatch(words, out);
    } catch (UsageError const &e) {
        result.exit_code = ExitCode::usage_error;
        out.text = std::string{"usage error: "} + e.what() + "\n";
        error = Json{{"code", "usage_error"}, {"message", e.what()}};
    } catch (ExpectationFailed const &e) {
        result.exit_code = ExitCode::engine_error;
        out.text = std::string{"error[expectation_failed]: "} + e.what() + "\n";
        error = Json{{"code", "expectation_failed"}, {"message", e.what()}};
    } catch (Error const &e) {
        result.exit_code = ExitCode::engine_error;
        out.text = std::string{"error["} + to_string(e.code()) + "]: " + e.what() + "\n";
        error = json::error(e);
    }
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (options_.json) {
        auto record = Json{{"command", words.empty() ? Json(nullptr) : Json(words.front())},
                           {"ok", result.exit_code == ExitCode::ok}};
        if (result.exit_code == ExitCode::ok) {
            record["result"] = std::move(out.json);
        } else {
            record["error"] = std::move(error);
        }
        record["time_ms"] = static_cast<long long>(ms + 0.5);
        result.output = record.dump() + "\n";
    } else {
        result.output = out.text + "time: " + format_ms(ms) + "\n";
    }
    return result;
}

auto run_script(Shell &shell, std::istream &in, bool keep_going) -> ScriptResult {
    ScriptResult script;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        auto result = shell.execute(line);
        if (result.output.empty()) {
            continue;
        }
        if (!shell.options().json) {
            script.transcript += "> " + line + "\n";
        }
        if (result.exit_code != ExitCode::ok) {
            script.transcript += "line " + std::to_string(number) + ": ";
        }
        script.transcript += result.output;
        if (result.exit_code != ExitCode::ok && !script.failed_line) {
            script.exit_code = result.exit_code;
            script.failed_line = number;
            if (!keep_going) {
                break;
            }
        }
        if (result.quit) {
            break;
        }
    }
    return script;
}

} // namespace facetnav
