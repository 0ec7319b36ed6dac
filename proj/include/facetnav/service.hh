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

#include "facetnav/json_codec.hh"
#include "facetnav/navigation.hh"

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <string_view>

namespace facetnav {

using ServiceClock = std::chrono::steady_clock;

struct ServiceOptions {
    Limits limits;
    //! Sessions idle for longer are evicted.
    std::chrono::seconds ttl{std::chrono::minutes{30}};
    //! Larger program texts are rejected with 413.
    std::size_t max_program_bytes{1U << 20U};
    //! Time source for eviction; replaceable in tests.
    std::function<ServiceClock::time_point()> clock{[] { return ServiceClock::now(); }};
};

//! 64-bit FNV-1a hash as 16 lowercase hex digits.
[[nodiscard]] auto fnv1a_digest(std::string_view text) -> std::string;

//! A session together with its handle data and its lock.
struct StoredSession {
    StoredSession(std::string id, std::string created_at, std::string digest, Session session)
        : id{std::move(id)}, created_at{std::move(created_at)}, program_digest{std::move(digest)},
          session{std::move(session)} {}

    std::string id;
    std::string created_at; //!< ISO 8601, UTC
    std::string program_digest;
    //! Serializes all requests to this session.
    std::mutex mutex;
    Session session;
};

//! In-memory sessions with idle eviction.
class SessionStore {
  public:
    explicit SessionStore(ServiceOptions const &options);

    auto create(Session session, std::string const &program_text) -> std::shared_ptr<StoredSession>;
    //! Returns null for unknown or evicted ids; refreshes the idle timer.
    auto find(std::string const &id) -> std::shared_ptr<StoredSession>;
    //! Returns whether the session existed.
    auto erase(std::string const &id) -> bool;
    //! Drops idle sessions; returns how many were dropped.
    auto evict_expired() -> std::size_t;
    [[nodiscard]] auto size() const -> std::size_t;

  private:
    struct Slot {
        std::shared_ptr<StoredSession> session;
        ServiceClock::time_point last_used;
    };

    auto evict_locked(ServiceClock::time_point now) -> std::size_t;

    std::chrono::seconds ttl_;
    std::function<ServiceClock::time_point()> clock_;
    mutable std::mutex mutex_;
    std::map<std::string, Slot> sessions_;
    std::uint64_t issued_{0};
    std::mt19937_64 random_;
};

struct HttpResponse {
    int status{200};
    Json body;
};

using QueryParameters = std::map<std::string, std::string>;

//! The HTTP endpoints as a plain function of the request, so they can be
//! exercised without sockets.
//!
//! Errors answer with `{"code", "message", "detail"?}` and status 400 for
//! malformed input, 404 for unknown sessions, 409 for state conflicts, 413
//! for exceeded caps and 422 for unknown atoms or options.
class Api {
  public:
    explicit Api(ServiceOptions options = {});

    auto handle(std::string_view method, std::string_view path, QueryParameters const &query,
                std::string_view body) -> HttpResponse;

    [[nodiscard]] auto store() -> SessionStore & { return store_; }
    [[nodiscard]] auto options() const -> ServiceOptions const & { return options_; }

  private:
    auto create_session(std::string_view body) -> HttpResponse;
    auto session_request(StoredSession &stored, std::string_view method, std::string_view action,
                         QueryParameters const &query, std::string_view body) -> HttpResponse;

    ServiceOptions options_;
    SessionStore store_;
};

//! HTTP status for an engine error code.
[[nodiscard]] auto http_status(ErrorCode code) -> int;

//! Serves the API until the process is stopped; returns false if binding
//! failed.
auto serve(Api &api, std::string const &host, int port) -> bool;

} // namespace facetnav
