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


#include "facetnav/error.hh"
#include "facetnav/json_codec.hh"
#include "facetnav/shell.hh"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <unistd.h>

auto main(int argc, char **argv) -> int {
    using namespace facetnav;

    CLI::App app{"facetnav - weighted faceted navigation of answer-set spaces"};
    std::string program_file;
    std::string mode_text = "go";
    std::string kind_text = "fc";
    std::uint64_t seed = 0;
    std::string script_file;
    bool json_output = false;
    bool keep_going = false;
    std::size_t max_head_atoms = Limits{}.max_head_atoms;
    app.add_option("program", program_file, "ground program to load")->check(CLI::ExistingFile);
    app.add_option("--mode", mode_text, "navigation mode: go, sgo, expl, free (or e.g. sgo-abs)")
        ->capture_default_str();
    app.add_option("--weight-kind", kind_text, "weight kind for sgo and expl: abs, fc, supp")->capture_default_str();
    app.add_option("--seed", seed, "default seed for random walks")->capture_default_str();
    app.add_option("--script", script_file, "run commands from a file")->check(CLI::ExistingFile);
    app.add_flag("--json", json_output, "print one JSON object per command");
    app.add_flag("--keep-going", keep_going, "continue a script after a failing command");
    app.add_option("--max-head-atoms", max_head_atoms, "cap for exact enumeration")->capture_default_str();
    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const &error) {
        auto code = app.exit(error);
        return code == 0 ? 0 : static_cast<int>(ExitCode::usage_error);
    }

    ShellOptions options;
    try {
        options.mode = parse_mode(mode_text, parse_weight_kind(kind_text));
    } catch (Error const &error) {
        std::cerr << "usage error: " << error.what() << "\n";
        return static_cast<int>(ExitCode::usage_error);
    }
    options.seed = seed;
    options.json = json_output;
    options.limits.max_head_atoms = max_head_atoms;
    if (!script_file.empty()) {
        options.base_directory = std::filesystem::path{script_file}.parent_path();
    }
    Shell shell{options};

    if (!program_file.empty()) {
        try {
            shell.load_file(program_file);
        } catch (Error const &error) {
            if (json_output) {
                std::cout << json::error(error).dump() << "\n";
            } else {
                std::cerr << "error[" << to_string(error.code()) << "]: " << error.what() << "\n";
            }
            return static_cast<int>(ExitCode::engine_error);
        }
    }

    if (!script_file.empty()) {
        std::ifstream in{script_file};
        auto result = run_script(shell, in, keep_going);
        std::cout << result.transcript;
        if (result.failed_line) {
            std::cerr << script_file << ":" << *result.failed_line << ": command failed\n";
        }
        return static_cast<int>(result.exit_code);
    }

    bool interactive = isatty(STDIN_FILENO) != 0;
    auto status = ExitCode::ok;
    std::string line;
    while (true) {
        if (interactive) {
            std::cout << "facetnav> " << std::flush;
        }
        if (!std::getline(std::cin, line)) {
            break;
        }
        auto result = shell.execute(line);
        std::cout << result.output << std::flush;
        if (result.exit_code != ExitCode::ok && status == ExitCode::ok && !interactive) {
            status = result.exit_code;
        }
        if (result.quit) {
            break;
        }
    }
    return static_cast<int>(status);
}
