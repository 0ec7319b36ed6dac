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


#include "facetnav/service.hh"

#include <CLI11.hpp>

#include <iostream>

auto main(int argc, char **argv) -> int {
    using namespace facetnav;

    CLI::App app{"facetnav-server - HTTP API for weighted faceted navigation"};
    std::string host = "127.0.0.1";
    int port = 8080;
    int ttl_minutes = 30;
    ServiceOptions options;
    app.add_option("--host", host, "bind address")->envname("FACETNAV_HOST")->capture_default_str();
    app.add_option("--port", port, "port")->envname("FACETNAV_PORT")->capture_default_str();
    app.add_option("--ttl-minutes", ttl_minutes, "idle session lifetime")
        ->envname("FACETNAV_TTL_MINUTES")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--max-head-atoms", options.limits.max_head_atoms, "cap for exact enumeration")
        ->envname("FACETNAV_MAX_HEAD_ATOMS")
        ->capture_default_str();
    app.add_option("--max-program-bytes", options.max_program_bytes, "cap for program text size")
        ->envname("FACETNAV_MAX_PROGRAM_BYTES")
        ->capture_default_str();
    CLI11_PARSE(app, argc, argv);

    options.ttl = std::chrono::minutes{ttl_minutes};
    Api api{options};
    std::cerr << "listening on http://" << host << ":" << port << "\n";
    if (!serve(api, host, port)) {
        std::cerr << "cannot listen on " << host << ":" << port << "\n";
        return 1;
    }
    return 0;
}
