#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <random>

#include "multiprong/json_io.hpp"

using namespace multiprong;

namespace {

bool same_election(const Election& a, const Election& b) {
    if (a.candidates.size() != b.candidates.size() || a.voters.size() != b.voters.size())
        return false;
    for (std::size_t i = 0; i < a.candidates.size(); ++i)
        if (a.candidates[i].id != b.candidates[i].id || a.candidates[i].name != b.candidates[i].name)
            return false;
    for (std::size_t i = 0; i < a.voters.size(); ++i) {
        if (a.voters[i].name != b.voters[i].name) return false;
        if (a.voters[i].ballot.kind != b.voters[i].ballot.kind) return false;
        if (a.voters[i].ballot.order != b.voters[i].ballot.order) return false;
        if (a.voters[i].ballot.approved != b.voters[i].ballot.approved) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("linear elections round-trip") {
    std::mt19937 rng(43);
    for (int t = 0; t < 40; ++t) {
        Election e;
        int m = 2 + static_cast<int>(rng() % 3);
        std::vector<CandidateId> ids;
        for (int i = 0; i < m; ++i) {
            e.candidates.push_back({i * 2, "name " + std::to_string(i)});  // sparse ids
            ids.push_back(i * 2);
        }
        for (int v = 0; v < 3; ++v) {
            auto o = ids;
            std::shuffle(o.begin(), o.end(), rng);
            e.voters.push_back({"voter/" + std::to_string(v), Ballot::linear(o)});
        }
        Election back = election_from_json(election_to_json(e));
        CHECK(same_election(e, back));
    }
}

TEST_CASE("approval elections round-trip through positional bit vectors") {
    Election e;
    e.candidates = {{3, "a"}, {7, "b"}, {9, "c"}};
    e.voters = {{"v1", Ballot::approval({3, 9})},
                {"v2", Ballot::approval({})},
                {"v3", Ballot::approval({3, 7, 9})}};
    json j = election_to_json(e);
    CHECK(j["ballots"][0]["approve"] == std::vector<int>{1, 0, 1});
    Election back = election_from_json(j);
    CHECK(same_election(e, back));
}

TEST_CASE("malformed election files are rejected by name") {
    Election e;
    e.candidates = {{0, "a"}, {1, "b"}};
    e.voters = {{"v1", Ballot::linear({0, 1})}, {"v2", Ballot::approval({0})}};
    CHECK_THROWS_WITH_AS(election_from_json(election_to_json(e)), doctest::Contains("mixed"),
                         std::invalid_argument);
    json j = election_to_json(e);
    j["ballots"] = json::array({{{"voter", "v1"}}});
    CHECK_THROWS_WITH_AS(election_from_json(j), doctest::Contains("order"),
                         std::invalid_argument);
    j["ballots"] = json::array({{{"voter", "v1"}, {"approve", {1, 0, 1}}}});
    CHECK_THROWS_WITH_AS(election_from_json(j), doctest::Contains("length"),
                         std::invalid_argument);
}

TEST_CASE("control instances round-trip") {
    ControlInstance inst;
    inst.candidates = {{0, "p"}, {1, "a"}};
    inst.spoilers = {{2, "x"}};
    inst.registered = {{"v1", Ballot::linear({1, 0, 2})}, {"v2", Ballot::linear({0, 1, 2})}};
    inst.unregistered = {{"w1", Ballot::linear({2, 0, 1})}};
    inst.focus = 0;
    inst.goal = Goal::Destructive;
    inst.winner_model = WinnerModel::Nonunique;
    inst.prongs = {Prong::AC, Prong::AV, Prong::BV};
    inst.budgets = {1, 0, 1, 0, 2};
    json j = control_instance_to_json(inst);
    ControlInstance back = control_instance_from_json(j);
    CHECK(back.spoilers.size() == 1);
    CHECK(back.focus == 0);
    CHECK(back.goal == Goal::Destructive);
    CHECK(back.winner_model == WinnerModel::Nonunique);
    CHECK(back.resource_model == ResourceModel::Separate);
    CHECK(back.prongs == inst.prongs);
    CHECK(back.budgets.bv == 2);
    CHECK(control_instance_to_json(back) == j);

    inst.resource_model = ResourceModel::Shared;
    inst.budgets = {};
    inst.shared_budget = 2;
    json js = control_instance_to_json(inst);
    ControlInstance backs = control_instance_from_json(js);
    CHECK(backs.resource_model == ResourceModel::Shared);
    CHECK(backs.shared_budget == 2);
}

TEST_CASE("bad enum fields are rejected") {
    ControlInstance inst;
    inst.candidates = {{0, "p"}, {1, "a"}};
    inst.registered = {{"v1", Ballot::linear({0, 1})}};
    inst.focus = 0;
    json j = control_instance_to_json(inst);
    json bad = j;
    bad["goal"] = "both";
    CHECK_THROWS_AS(control_instance_from_json(bad), std::invalid_argument);
    bad = j;
    bad["prongs"] = {"XX"};
    CHECK_THROWS_WITH_AS(control_instance_from_json(bad), doctest::Contains("prong"),
                         std::invalid_argument);
    bad = j;
    bad["winner_model"] = "plural";
    CHECK_THROWS_AS(control_instance_from_json(bad), std::invalid_argument);
}

TEST_CASE("plans serialize both ballot kinds") {
    ControlPlan plan;
    plan.added_candidates = {2};
    plan.deleted_voters = {"v9"};
    plan.bribes["v1"] = Ballot::linear({0, 1, 2});
    plan.bribes["v2"] = Ballot::approval({0, 2});
    json j = plan_to_json(plan);
    CHECK(j["added_candidates"] == std::set<CandidateId>{2});
    CHECK(j["bribes"]["v1"]["order"] == std::vector<CandidateId>{0, 1, 2});
    CHECK(j["bribes"]["v2"]["approved"] == std::vector<CandidateId>{0, 2});
}

TEST_CASE("x3c round-trips and validates on load") {
    X3CInstance x{{1, 2, 3, 4, 5, 6}, {{1, 2, 3}, {4, 5, 6}, {1, 4, 5}}, 2};
    X3CInstance back = x3c_from_json(x3c_to_json(x));
    CHECK(back.ground == x.ground);
    CHECK(back.sets == x.sets);
    CHECK(back.k == x.k);
    json j = x3c_to_json(x);
    j["k"] = 1;
    CHECK_THROWS_AS(x3c_from_json(j), std::invalid_argument);
}

TEST_CASE("digests are stable and key-order independent") {
    json a = {{"x", 1}, {"y", {1, 2, 3}}};
    json b = {{"y", {1, 2, 3}}, {"x", 1}};
    CHECK(fnv1a_digest(a) == fnv1a_digest(b));  // nlohmann objects sort keys
    CHECK(fnv1a_digest(a).size() == 16);
    CHECK(fnv1a_digest(a) != fnv1a_digest(json{{"x", 2}}));
    CHECK(fnv1a_digest(json::object()) == fnv1a_digest(json::object()));
}

TEST_CASE("file helpers round-trip and fail loudly") {
    std::string path = "/tmp/mp_json_io_test.json";
    json j = {{"hello", "world"}};
    save_json_file(path, j);
    CHECK(load_json_file(path) == j);
    std::remove(path.c_str());
    CHECK_THROWS_WITH_AS(load_json_file("/nonexistent/nope.json"), doctest::Contains("open"),
                         std::invalid_argument);
}
