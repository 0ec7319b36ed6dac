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

namespace facetnav {

auto to_string(ErrorCode code) -> char const * {
    switch (code) {
        case ErrorCode::parse_error: {
            return "parse_error";
        }
        case ErrorCode::non_ground: {
            return "non_ground";
        }
        case ErrorCode::unsupported_syntax: {
            return "unsupported_syntax";
        }
        case ErrorCode::resource_limit: {
            return "resource_limit";
        }
        case ErrorCode::cap_exceeded: {
            return "cap_exceeded";
        }
        case ErrorCode::invalid_redirection: {
            return "invalid_redirection";
        }
        case ErrorCode::pace_undefined: {
            return "pace_undefined";
        }
        case ErrorCode::unsafe_route: {
            return "unsafe_route";
        }
        case ErrorCode::unknown_atom: {
            return "unknown_atom";
        }
        case ErrorCode::empty_route: {
            return "empty_route";
        }
        case ErrorCode::option_not_offered: {
            return "option_not_offered";
        }
        case ErrorCode::pending_redirection: {
            return "pending_redirection";
        }
        case ErrorCode::no_pending_redirection: {
            return "no_pending_redirection";
        }
        case ErrorCode::invalid_mode: {
            return "invalid_mode";
        }
        case ErrorCode::invalid_argument: {
            return "invalid_argument";
        }
    }
    return "unknown";
}

ParseError::ParseError(ErrorCode code, std::string const &message, std::size_t line, std::size_t column)
    : Error{code, std::to_string(line) + ":" + std::to_string(column) + ": " + message}, reason_{message}, line_{line},
      column_{column} {}

} // namespace facetnav
