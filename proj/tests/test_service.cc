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


#include "catch_amalgamated.hpp"

#include "facetnav/service.hh"

#include <atomic>
#include <thread>

using namespace facetnav;

namespace {

constexpr char const *pi1_text = "a | b.\nc | d :- b.\ne.\n";
constexpr char const *pi2_text = "a | b | c.\nd | e :- b.\nf :- c.\n";

struct Client {
    Api api;

    auto call(std::string_view method, std::string const &path, Json const &body = nullptr,
              QueryParameters const &query = {}) -> HttpResponse {
        return api.handle(method, path, query, body.is_null() ? "" : body.dump());
    }
    auto create(std::string const &program, Json extra = Json::object()) -> std::string {
        extra["program"] = program;
        auto response = call("POST", "/sessions", extra);
        INFO(response.body.dump());
        REQUIRE(response.status == 201);
        return response.body["id"];
    }
};

} // namespace

TEST_CASE("creating sessions", "[service]") {
    Client client;
    auto created = client.call("POST", "/sessions", Json{{"program", pi1_text}});
    REQUIRE(created.status == 201);
    REQUIRE(created.body["state"]["counts"]["abs"] == 3);
    REQUIRE(created.body["state"]["facets"]["count"] == 8);
    REQUIRE(created.body["unsat"] == false);
    REQUIRE(created.body["program_digest"] == fnv1a_digest(pi1_text));
    REQUIRE(created.body["program_digest"].get<std::string>().size() == 16);

    auto raw = client.api.handle("POST", "/sessions", {}, pi1_text);
    REQUIRE(raw.status == 201);
    REQUIRE(raw.body["id"] != created.body["id"]);

    auto unsat = client.call("POST", "/sessions", Json{{"program", "a. :- a."}});
    REQUIRE(unsat.status == 201);
    REQUIRE(unsat.body["unsat"] == true);
    REQUIRE(unsat.body["state"]["counts"]["abs"] == 0);
    REQUIRE(unsat.body["state"]["facets"]["count"] == 0);

    auto malformed = client.call("POST", "/sessions", Json{{"program", "a.\nb :- ."}});
    REQUIRE(malformed.status == 400);
    REQUIRE(malformed.body["code"] == "parse_error");
    REQUIRE(malformed.body["detail"]["line"] == 2);
    REQUIRE(malformed.body["detail"]["column"] == 6);

    ServiceOptions options;
    options.limits.max_head_atoms = 2;
    Client capped{Api{options}};
    REQUIRE(capped.call("POST", "/sessions", Json{{"program", pi1_text}}).status == 413);
    options.max_program_bytes = 4;
    Client small{Api{options}};
    REQUIRE(small.call("POST", "/sessions", Json{{"program", pi1_text}}).status == 413);

    REQUIRE(client.call("POST", "/sessions", Json{{"text", pi1_text}}).status == 400);
    REQUIRE(client.call("GET", "/sessions").status == 405);
    REQUIRE(client.call("GET", "/nothing").status == 404);
}

TEST_CASE("session state", "[service]") {
    Client client;
    auto id = client.create(pi1_text);
    auto state = client.call("GET", "/sessions/" + id);
    REQUIRE(state.status == 200);
    REQUIRE(state.body["state"]["route"] == Json::array());
    REQUIRE(state.body["state"]["maximal_safe"] == false);
    REQUIRE(state.body["state"]["pace"]["abs"]["fraction"] == "0/1");
    REQUIRE(client.call("GET", "/sessions/" + id).body == state.body);

    client.call("POST", "/sessions/" + id + "/step", Json{{"facet", "~a"}});
    auto middle = client.call("GET", "/sessions/" + id).body["state"];
    REQUIRE(middle["counts"]["abs"] == 2);
    REQUIRE(middle["facets"]["all"] == Json::array({"c", "d", "~c", "~d"}));

    client.call("POST", "/sessions/" + id + "/retract", Json::object());
    client.call("POST", "/sessions/" + id + "/step", Json{{"facet", "a"}});
    auto leaf = client.call("GET", "/sessions/" + id, nullptr, {{"weights", "abs,fc,supp"}}).body["state"];
    REQUIRE(leaf["maximal_safe"] == true);
    REQUIRE(leaf["pace"]["fc"]["fraction"] == "1/1");
    REQUIRE(leaf["pace"]["fc"]["percent"] == "100%");
    REQUIRE(leaf["counts"]["supp"] == 1);

    auto single = client.create("a.");
    REQUIRE(client.call("GET", "/sessions/" + single).body["state"]["pace"]["abs"].is_null());
    REQUIRE(client.call("GET", "/sessions/nope").status == 404);
}

TEST_CASE("steps", "[service]") {
    Client client;
    auto id = client.create(pi1_text, Json{{"mode", "free"}});
    auto step = client.call("POST", "/sessions/" + id + "/step", Json{{"facet", "a"}});
    REQUIRE(step.body["status"] == "applied");
    REQUIRE(step.body["counts_after"]["abs"] == 1);
    auto conflict = client.call("POST", "/sessions/" + id + "/step", Json{{"facet", "b"}});
    REQUIRE(conflict.status == 200);
    REQUIRE(conflict.body["status"] == "needs_redirection");
    REQUIRE(conflict.body["options"] == Json::parse(R"([["b"], []])"));
    REQUIRE(client.call("GET", "/sessions/" + id + "/answer-sets").status == 409);
    REQUIRE(client.call("POST", "/sessions/" + id + "/step", Json{{"facet", "c"}}).status == 409);
    REQUIRE(client.call("POST", "/sessions/" + id + "/redirect", Json{{"option", 7}}).status == 422);
    auto redirected = client.call("POST", "/sessions/" + id + "/redirect", Json{{"route", {"b"}}});
    REQUIRE(redirected.status == 200);
    REQUIRE(redirected.body["route"] == Json::array({"b"}));
    REQUIRE(client.call("POST", "/sessions/" + id + "/redirect", Json{{"option", 0}}).status == 409);

    auto go = client.create(pi1_text);
    auto applied = client.call("POST", "/sessions/" + go + "/step", Json{{"facet", "a"}});
    REQUIRE(applied.body["counts_after"]["abs"] == 1);
    REQUIRE(client.call("POST", "/sessions/" + go + "/step", Json{{"facet", "zzz"}}).status == 422);
    REQUIRE(client.call("POST", "/sessions/" + go + "/step", Json{{"facet", "a."}}).status == 400);
    REQUIRE(client.call("POST", "/sessions/" + go + "/step", Json::object()).status == 400);
    REQUIRE(client.api.handle("POST", "/sessions/" + go + "/step", {}, "{not json").status == 400);

    auto sgo = client.create(pi2_text, Json{{"mode", "sgo-fc"}});
    auto ignored = client.call("POST", "/sessions/" + sgo + "/step", Json{{"facet", "~a"}});
    REQUIRE(ignored.body["status"] == "ignored");
    REQUIRE(ignored.body["reason"] == "not maximal weighted (2 < 12)");
    // a mode override applies to one step only
    auto overridden = client.call("POST", "/sessions/" + sgo + "/step", Json{{"facet", "~a"}, {"mode", "go"}});
    REQUIRE(overridden.body["status"] == "applied");
    REQUIRE(overridden.body["state"]["mode"]["name"] == "sgo-fc");

    auto retract = client.call("POST", "/sessions/" + go + "/retract", Json{{"all", true}});
    REQUIRE(retract.body["route"] == Json::array());
    REQUIRE(client.call("POST", "/sessions/" + go + "/retract", Json::object()).status == 409);
}

TEST_CASE("answer sets, facets and pace", "[service]") {
    Client client;
    auto id = client.create(pi1_text);
    auto page = client.call("GET", "/sessions/" + id + "/answer-sets", nullptr, {{"limit", "10"}});
    REQUIRE(page.body["total"] == 3);
    REQUIRE(page.body["answer_sets"] == Json::parse(R"([["a","e"],["b","c","e"],["b","d","e"]])"));
    auto beyond = client.call("GET", "/sessions/" + id + "/answer-sets", nullptr, {{"offset", "5"}});
    REQUIRE(beyond.body["answer_sets"] == Json::array());
    REQUIRE(beyond.body["total"] == 3);
    auto second = client.call("GET", "/sessions/" + id + "/answer-sets", nullptr, {{"offset", "1"}, {"limit", "1"}});
    REQUIRE(second.body["answer_sets"] == Json::parse(R"([["b","c","e"]])"));
    REQUIRE(client.call("GET", "/sessions/" + id + "/answer-sets", nullptr, {{"limit", "1001"}}).status == 400);
    REQUIRE(client.call("GET", "/sessions/" + id + "/answer-sets", nullptr, {{"limit", "-1"}}).status == 400);

    auto facets = client.call("GET", "/sessions/" + id + "/facets", nullptr, {{"weights", "fc,abs"}});
    REQUIRE(facets.body["facets"]["count"] == 8);
    auto const &fc = facets.body["weights"]["fc"];
    REQUIRE(fc[4] == Json{{"facet", "~a"}, {"weight", 4}});
    REQUIRE(fc[6] == Json{{"facet", "~c"}, {"weight", 2}});
    REQUIRE(client.call("GET", "/sessions/" + id + "/facets", nullptr, {{"weights", "size"}}).status == 400);

    client.call("POST", "/sessions/" + id + "/step", Json{{"facet", "~c"}});
    auto pace = client.call("GET", "/sessions/" + id + "/pace", nullptr, {{"kind", "fc"}});
    REQUIRE(pace.body["pace"]["fraction"] == "1/4");
    REQUIRE(pace.body["pace"]["percent"] == "25%");
    REQUIRE(client.call("GET", "/sessions/" + id + "/pace", nullptr, {{"kind", "abs"}}).body["pace"]["fraction"] ==
            "1/3");
}

TEST_CASE("api and engine agree", "[service]") {
    Client client;
    auto id = client.create(pi2_text);
    client.call("POST", "/sessions/" + id + "/step", Json{{"facet", "~a"}});
    auto body = client.call("GET", "/sessions/" + id + "/facets", nullptr, {{"weights", "abs,fc,supp"}}).body;
    RouteSpace space{parse_program(pi2_text)};
    auto route = parse_route("<~a>");
    for (auto kind : all_weight_kinds) {
        auto expected = json::weighted_facets(weighted_facets(kind, space, route));
        REQUIRE(body["weights"][to_string(kind)] == expected);
    }
    REQUIRE(body["facets"] == json::facet_report(space.facets(route)));
}

TEST_CASE("deleting and evicting sessions", "[service]") {
    auto now = ServiceClock::now();
    ServiceOptions options;
    options.ttl = std::chrono::minutes{30};
    options.clock = [&now] { return now; };
    Client client{Api{options}};
    auto id = client.create(pi1_text);
    REQUIRE(client.call("DELETE", "/sessions/" + id).status == 200);
    REQUIRE(client.call("GET", "/sessions/" + id).status == 404);
    REQUIRE(client.call("DELETE", "/sessions/" + id).status == 404);
    REQUIRE(client.call("DELETE", "/sessions/unknown").status == 404);

    auto idle = client.create(pi1_text);
    auto busy = client.create(pi1_text);
    now += std::chrono::minutes{20};
    REQUIRE(client.call("GET", "/sessions/" + busy).status == 200);
    now += std::chrono::minutes{20};
    REQUIRE(client.api.store().evict_expired() == 1);
    REQUIRE(client.call("GET", "/sessions/" + idle).status == 404);
    REQUIRE(client.call("GET", "/sessions/" + busy).status == 200);
}

TEST_CASE("concurrent requests", "[service]") {
    Client client;
    std::vector<std::string> ids;
    for (int i = 0; i < 4; ++i) {
        ids.push_back(client.create(pi2_text));
    }
    std::vector<std::thread> threads;
    std::atomic<int> failures{0};
    for (int t = 0; t < 8; ++t) {
        threads.emplace_back([&, t] {
            auto const &id = ids[static_cast<std::size_t>(t) % ids.size()];
            for (int i = 0; i < 20; ++i) {
                auto step = client.call("POST", "/sessions/" + id + "/step", Json{{"facet", "~a"}});
                auto back = client.call("POST", "/sessions/" + id + "/retract", Json{{"all", true}});
                if (step.status != 200 || back.status != 200) {
                    ++failures;
                }
            }
        });
    }
    for (auto &thread : threads) {
        thread.join();
    }
    REQUIRE(failures == 0);
    for (auto const &id : ids) {
        REQUIRE(client.call("GET", "/sessions/" + id).body["state"]["route"] == Json::array());
    }
}
