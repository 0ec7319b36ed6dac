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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace facetnav {

//! Stable error codes; the textual form is part of the CLI and HTTP surface.
enum class ErrorCode {
    parse_error,
    non_ground,
    unsupported_syntax,
    resource_limit,
    cap_exceeded,
    invalid_redirection,
    pace_undefined,
    unsafe_route,
    unknown_atom,
    empty_route,
    option_not_offered,
    pending_redirection,
    no_pending_redirection,
    invalid_mode,
    invalid_argument,
};

[[nodiscard]] auto to_string(ErrorCode code) -> char const *;

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, std::string const &message) : std::runtime_error{message}, code_{code} {}

    [[nodiscard]] auto code() const -> ErrorCode { return code_; }

  private:
    ErrorCode code_;
};

//! Parse diagnostic with 1-based source position.
class ParseError : public Error {
  public:
    ParseError(ErrorCode code, std::string const &message, std::size_t line, std::size_t column);

    [[nodiscard]] auto line() const -> std::size_t { return line_; }
    [[nodiscard]] auto column() const -> std::size_t { return column_; }
    //! The message without the position prefix.
    [[nodiscard]] auto reason() const -> std::string const & { return reason_; }

  private:
    std::string reason_;
    std::size_t line_;
    std::size_t column_;
};

} // namespace facetnav
