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

#include "facetnav/error.hh"

#include <httplib.h>

#include <charconv>
#include <ctime>
#include <sstream>

namespace facetnav {

namespace {

//! Request-level failure with a given status.
class HttpError : public std::runtime_error {
  public:
    HttpError(int status, std::string code, std::string const &message)
        : std::runtime_error{message}, status_{status}, code_{std::move(code)} {}

    [[nodiscard]] auto status() const -> int { return status_; }
    [[nodiscard]] auto code() const -> std::string const & { return code_; }

  private:
    int status_;
    std::string code_;
};

auto bad_request(std::string const &message) -> HttpError { return HttpError{400, "invalid_request", message}; }

auto utc_now() -> std::string {
    auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buffer[32];
    std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buffer;
}

auto split_path(std::string_view path) -> std::vector<std::string> {
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (pos <= path.size()) {
        auto next = path.find('/', pos);
        if (next == std::string_view::npos) {
            next = path.size();
        }
        if (next > pos) {
            parts.emplace_back(path.substr(pos, next - pos));
        }
        pos = next + 1;
    }
    return parts;
}

auto parse_body(std::string_view body) -> Json {
    if (body.find_first_not_of(" \t\r\n") == std::string_view::npos) {
        return Json::object();
    }
    auto parsed = Json::parse(body, nullptr, false);
    if (parsed.is_discarded() || !parsed.is_object()) {
        throw bad_request("request body must be a JSON object");
    }
    return parsed;
}

auto string_field(Json const &body, char const *name) -> std::optional<std::string> {
    auto it = body.find(name);
    if (it == body.end() || it->is_null()) {
        return std::nullopt;
    }
    if (!it->is_string()) {
        throw bad_request(std::string{"field '"} + name + "' must be a string");
    }
    return it->get<std::string>();
}

auto parse_kinds(std::string const &text) -> std::vector<WeightKind> {
    std::vector<WeightKind> kinds;
    std::stringstream in{text};
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) {
            continue;
        }
        auto kind = parse_weight_kind(item);
        if (std::find(kinds.begin(), kinds.end(), kind) == kinds.end()) {
            kinds.push_back(kind);
        }
    }
    return kinds;
}

auto parse_count(QueryParameters const &query, char const *name, std::size_t fallback) -> std::size_t {
    auto it = query.find(name);
    if (it == query.end()) {
        return fallback;
    }
    std::size_t value = 0;
    auto const &text = it->second;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw bad_request(std::string{"query parameter '"} + name + "' must be a non-negative integer");
    }
    return value;
}

auto mode_from(Json const &body, Mode fallback) -> Mode {
    auto strategy = string_field(body, "mode");
    auto kind = string_field(body, "weight_kind");
    Mode mode = fallback;
    if (kind) {
        mode.weight_kind = parse_weight_kind(*kind);
    }
    if (strategy) {
        auto dash = strategy->find('-');
        mode.strategy = parse_strategy(std::string_view{*strategy}.substr(0, dash));
        if (dash != std::string::npos) {
            mode.weight_kind = parse_weight_kind(std::string_view{*strategy}.substr(dash + 1));
        }
    }
    return mode;
}

auto handle_json(StoredSession const &stored) -> Json {
    return Json{{"id", stored.id}, {"created_at", stored.created_at}, {"program_digest", stored.program_digest}};
}

} // namespace

auto fnv1a_digest(std::string_view text) -> std::string {
    std::uint64_t hash = 14695981039346656037ULL;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 1099511628211ULL;
    }
    char buffer[17];
    std::snprintf(buffer, sizeof(buffer), "%016llx", static_cast<unsigned long long>(hash));
    return buffer;
}

auto http_status(ErrorCode code) -> int {
    switch (code) {
        case ErrorCode::parse_error:
        case ErrorCode::non_ground:
        case ErrorCode::unsupported_syntax:
        case ErrorCode::invalid_mode:
        case ErrorCode::invalid_argument: {
            return 400;
        }
        case ErrorCode::resource_limit:
        case ErrorCode::cap_exceeded: {
            return 413;
        }
        case ErrorCode::unknown_atom:
        case ErrorCode::option_not_offered:
        case ErrorCode::invalid_redirection: {
            return 422;
        }
        case ErrorCode::pending_redirection:
        case ErrorCode::no_pending_redirection:
        case ErrorCode::empty_route:
        case ErrorCode::pace_undefined:
        case ErrorCode::unsafe_route: {
            return 409;
        }
    }
    return 500;
}

SessionStore::SessionStore(ServiceOptions const &options)
    : ttl_{options.ttl}, clock_{options.clock}, random_{std::random_device{}()} {}

auto SessionStore::create(Session session, std::string const &program_text) -> std::shared_ptr<StoredSession> {
    std::lock_guard lock{mutex_};
    auto now = clock_();
    evict_locked(now);
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%llx-%016llx", static_cast<unsigned long long>(++issued_),
                  static_cast<unsigned long long>(random_()));
    auto stored = std::make_shared<StoredSession>(buffer, utc_now(), fnv1a_digest(program_text), std::move(session));
    sessions_[stored->id] = Slot{stored, now};
    return stored;
}

auto SessionStore::find(std::string const &id) -> std::shared_ptr<StoredSession> {
    std::lock_guard lock{mutex_};
    auto now = clock_();
    evict_locked(now);
    auto it = sessions_.find(id);
    if (it == sessions_.end()) {
        return nullptr;
    }
    it->second.last_used = now;
    return it->second.session;
}

auto SessionStore::erase(std::string const &id) -> bool {
    std::lock_guard lock{mutex_};
    return sessions_.erase(id) > 0;
}

auto SessionStore::evict_expired() -> std::size_t {
    std::lock_guard lock{mutex_};
    return evict_locked(clock_());
}

auto SessionStore::evict_locked(ServiceClock::time_point now) -> std::size_t {
    return std::erase_if(sessions_, [&](auto const &item) { return now - item.second.last_used > ttl_; });
}

auto SessionStore::size() const -> std::size_t {
    std::lock_guard lock{mutex_};
    return sessions_.size();
}

Api::Api(ServiceOptions options) : options_{std::move(options)}, store_{options_} {}

auto Api::handle(std::string_view method, std::string_view path, QueryParameters const &query, std::string_view body)
    -> HttpResponse {
    try {
        auto parts = split_path(path);
        if (parts.empty() || parts.front() != "sessions" || parts.size() > 3) {
            throw HttpError{404, "not_found", "no such endpoint " + std::string{path}};
        }
        if (parts.size() == 1) {
            if (method != "POST") {
                throw HttpError{405, "method_not_allowed", "use POST /sessions"};
            }
            return create_session(body);
        }
        auto stored = store_.find(parts[1]);
        if (!stored) {
            throw HttpError{404, "unknown_session", "no session " + parts[1]};
        }
        if (parts.size() == 2 && method == "DELETE") {
            std::lock_guard lock{stored->mutex};
            store_.erase(stored->id);
            return {200, Json{{"deleted", stored->id}}};
        }
        std::lock_guard lock{stored->mutex};
        return session_request(*stored, method, parts.size() == 3 ? parts[2] : "", query, body);
    } catch (HttpError const &error) {
        return {error.status(), Json{{"code", error.code()}, {"message", error.what()}}};
    } catch (Error const &error) {
        return {http_status(error.code()), json::error(error)};
    }
}

auto Api::create_session(std::string_view body) -> HttpResponse {
    // Either a JSON object with the program text and an optional mode, or
    // the raw program text.
    std::string text;
    Mode mode;
    auto parsed = Json::parse(body, nullptr, false);
    if (!parsed.is_discarded() && parsed.is_object()) {
        auto program = string_field(parsed, "program");
        if (!program) {
            throw bad_request("field 'program' is required");
        }
        text = std::move(*program);
        mode = mode_from(parsed, mode);
    } else {
        text = std::string{body};
    }
    if (text.size() > options_.max_program_bytes) {
        throw HttpError{413, to_string(ErrorCode::resource_limit),
                        "program text exceeds " + std::to_string(options_.max_program_bytes) + " bytes"};
    }
    auto space = std::make_shared<RouteSpace const>(parse_program(text), options_.limits);
    static_cast<void>(space->facets({}));
    auto stored = store_.create(Session{std::move(space), mode}, text);
    std::lock_guard lock{stored->mutex};
    auto result = handle_json(*stored);
    result["state"] = json::session_state(stored->session, {});
    result["unsat"] = !stored->session.space().is_safe({});
    result["supported_deferred"] = true;
    return {201, std::move(result)};
}

auto Api::session_request(StoredSession &stored, std::string_view method, std::string_view action,
                          QueryParameters const &query, std::string_view body) -> HttpResponse {
    auto &session = stored.session;
    auto const &space = session.space();
    auto require = [&](char const *expected) {
        if (method != expected) {
            throw HttpError{405, "method_not_allowed",
                            "use " + std::string{expected} + " for /" + std::string{action}};
        }
    };
    auto kinds_from_query = [&](char const *name, std::vector<WeightKind> fallback) {
        auto it = query.find(name);
        return it == query.end() ? fallback : parse_kinds(it->second);
    };

    if (action.empty()) {
        require("GET");
        auto result = handle_json(stored);
        result["state"] = json::session_state(
            session, kinds_from_query("weights", {WeightKind::absolute, WeightKind::facet_counting}));
        return {200, std::move(result)};
    }
    if (action == "step") {
        require("POST");
        auto request = parse_body(body);
        auto text = string_field(request, "facet");
        if (!text) {
            throw bad_request("field 'facet' is required");
        }
        auto facet = parse_facet(*text);
        auto saved = session.mode();
        auto mode = mode_from(request, saved);
        if (mode != saved) {
            session.set_mode(mode);
        }
        StepOutcome outcome;
        try {
            outcome = session.step(facet);
        } catch (...) {
            if (mode != saved && !session.pending()) {
                session.set_mode(saved);
            }
            throw;
        }
        if (mode != saved && !session.pending()) {
            session.set_mode(saved);
        }
        auto result = json::step_outcome(outcome);
        result["state"] = json::session_state(session, {});
        return {200, std::move(result)};
    }
    if (action == "redirect") {
        require("POST");
        auto request = parse_body(body);
        StepOutcome outcome;
        if (auto it = request.find("option"); it != request.end()) {
            if (!it->is_number_unsigned()) {
                throw bad_request("field 'option' must be a non-negative index");
            }
            outcome = session.choose_redirection(it->get<std::size_t>());
        } else if (auto it = request.find("route"); it != request.end()) {
            if (!it->is_array()) {
                throw bad_request("field 'route' must be an array of facets");
            }
            Route route;
            for (auto const &item : *it) {
                if (!item.is_string()) {
                    throw bad_request("field 'route' must be an array of facets");
                }
                route.push(parse_facet(item.get<std::string>()));
            }
            outcome = session.choose_redirection(route);
        } else {
            throw bad_request("field 'option' or 'route' is required");
        }
        auto result = json::step_outcome(outcome);
        result["state"] = json::session_state(session, {});
        return {200, std::move(result)};
    }
    if (action == "retract") {
        require("POST");
        auto request = parse_body(body);
        StepOutcome outcome;
        if (auto facet = string_field(request, "facet")) {
            outcome = session.retract(parse_facet(*facet));
        } else if (request.value("all", false)) {
            outcome = session.retract_all();
        } else {
            outcome = session.retract_last();
        }
        auto result = json::step_outcome(outcome);
        result["state"] = json::session_state(session, {});
        return {200, std::move(result)};
    }
    if (action == "answer-sets") {
        require("GET");
        auto limit = parse_count(query, "limit", 100);
        auto offset = parse_count(query, "offset", 0);
        if (limit > 1000) {
            throw bad_request("limit must be at most 1000");
        }
        auto all = session.answer_sets();
        auto items = Json::array();
        for (auto i = offset; i < all.size() && i < offset + limit; ++i) {
            items.push_back(json::interpretation(all[i]));
        }
        return {200, Json{{"route", json::route(session.route())},
                          {"total", all.size()},
                          {"offset", offset},
                          {"limit", limit},
                          {"answer_sets", std::move(items)}}};
    }
    if (action == "facets") {
        require("GET");
        auto kinds = kinds_from_query("weights", {});
        auto result = Json{{"route", json::route(session.route())}, {"facets", json::facet_report(session.facets())}};
        auto weights = Json::object();
        for (auto kind : kinds) {
            if (!space.is_safe(session.route())) {
                throw Error{ErrorCode::pending_redirection, "the route has no answer sets, choose a redirection"};
            }
            weights[to_string(kind)] = json::weighted_facets(weighted_facets(kind, space, session.route()));
        }
        result["weights"] = std::move(weights);
        return {200, std::move(result)};
    }
    if (action == "pace") {
        require("GET");
        auto it = query.find("kind");
        auto kind = it == query.end() ? WeightKind::facet_counting : parse_weight_kind(it->second);
        return {200, Json{{"route", json::route(session.route())},
                          {"kind", to_string(kind)},
                          {"pace", json::pace(json::try_pace(kind, space, session.route()))}}};
    }
    throw HttpError{404, "not_found", "no such endpoint /" + std::string{action}};
}

auto serve(Api &api, std::string const &host, int port) -> bool {
    httplib::Server server;
    auto adapter = [&api](httplib::Request const &request, httplib::Response &response) {
        QueryParameters query;
        for (auto const &[key, value] : request.params) {
            query.emplace(key, value);
        }
        auto result = api.handle(request.method, request.path, query, request.body);
        response.status = result.status;
        response.set_header("Access-Control-Allow-Origin", "*");
        response.set_content(result.body.dump(), "application/json");
    };
    server.Get(".*", adapter);
    server.Post(".*", adapter);
    server.Delete(".*", adapter);
    server.Options(".*", [](httplib::Request const &, httplib::Response &response) {
        response.set_header("Access-Control-Allow-Origin", "*");
        response.set_header("Access-Control-Allow-Methods", "GET, POST, DELETE, OPTIONS");
        response.set_header("Access-Control-Allow-Headers", "Content-Type");
        response.status = 204;
    });
    return server.listen(host, port);
}

} // namespace facetnav
