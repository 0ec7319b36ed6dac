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

#include "facetnav/navigation.hh"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace facetnav {

//! Process exit codes of the command line tool.
enum class ExitCode : int { ok = 0, engine_error = 1, usage_error = 2 };

struct ShellOptions {
    Mode mode;
    std::uint64_t seed{0};
    //! Print one JSON object per command instead of text.
    bool json{false};
    Limits limits;
    //! Relative paths given to `load` are looked up here first.
    std::filesystem::path base_directory{"."};
};

struct CommandResult {
    ExitCode exit_code{ExitCode::ok};
    //! The rendered output, ending with a newline unless empty.
    std::string output;
    bool quit{false};
};

//! Parses `go`, `sgo`, `expl`, `free` and the weighted forms `sgo-fc`,
//! `expl-abs`; a kind in the text overrides `default_kind`.
[[nodiscard]] auto parse_mode(std::string_view text, WeightKind default_kind = WeightKind::facet_counting) -> Mode;

//! Splits a command line into words. Whitespace inside parentheses, angle
//! brackets and double quotes does not split; quotes are removed.
[[nodiscard]] auto split_command(std::string_view line) -> std::vector<std::string>;

//! Command interpreter around one navigation session.
//!
//! Every command prints its result followed by a `time: Nms` line; errors
//! are single lines of the form `error[code]: message`.
class Shell {
  public:
    explicit Shell(ShellOptions options = {});

    //! Starts a session on program text.
    void load_text(std::string_view text);
    //! Starts a session on a program file.
    void load_file(std::filesystem::path const &path);

    //! Runs one command line; blank lines and `#` comments produce no output.
    auto execute(std::string_view line) -> CommandResult;

    [[nodiscard]] auto has_session() const -> bool { return session_ != nullptr; }
    [[nodiscard]] auto session() const -> Session const &;
    [[nodiscard]] auto options() const -> ShellOptions const & { return options_; }

  private:
    struct Output;

    auto dispatch(std::vector<std::string> const &words, Output &out) -> bool;
    auto require_session() -> Session &;

    ShellOptions options_;
    std::unique_ptr<Session> session_;
    //! Status of the most recent activation or redirection, for `expect`.
    std::optional<StepStatus> last_status_;
};

struct ScriptResult {
    ExitCode exit_code{ExitCode::ok};
    std::string transcript;
    //! 1-based line of the first failing command.
    std::optional<std::size_t> failed_line;
};

//! Runs one command per line. Stops at the first failing command unless
//! `keep_going` is set; the exit code is that of the first failure.
auto run_script(Shell &shell, std::istream &in, bool keep_going = false) -> ScriptResult;

} // namespace facetnav
