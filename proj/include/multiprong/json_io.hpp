#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "multiprong/control.hpp"
#include "multiprong/election.hpp"
#include "multiprong/reductions.hpp"

namespace multiprong {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Elections. Approval ballots travel as positional 0/1 vectors over the file's
// candidate order; internally they are sorted id sets.
// ---------------------------------------------------------------------------
inline json election_to_json(const Election& e) {
    json j;
    j["candidates"] = json::array();
    for (const auto& c : e.candidates) j["candidates"].push_back({{"id", c.id}, {"name", c.name}});
    j["ballots"] = json::array();
    for (const auto& v : e.voters) {
        json b;
        b["voter"] = v.name;
        if (v.ballot.is_linear()) {
            b["order"] = v.ballot.order;
        } else {
            std::vector<int> bits;
            for (const auto& c : e.candidates) bits.push_back(v.ballot.approves(c.id) ? 1 : 0);
            b["approve"] = bits;
        }
        j["ballots"].push_back(std::move(b));
    }
    return j;
}

namespace detail {

inline std::vector<Candidate> candidates_from_json(const json& j) {
    std::vector<Candidate> out;
    for (const auto& c : j)
        out.push_back({c.at("id").get<CandidateId>(), c.at("name").get<std::string>()});
    return out;
}

inline std::vector<Voter> voters_from_json(const json& ballots,
                                           const std::vector<Candidate>& candidates) {
    std::vector<Voter> out;
    int kind = -1;  // 0 linear, 1 approval
    for (const auto& b : ballots) {
        Voter v;
        v.name = b.at("voter").get<std::string>();
        if (b.contains("order")) {
            if (kind == 1) throw std::invalid_argument("mixed ballot kinds in one file");
            kind = 0;
            v.ballot = Ballot::linear(b.at("order").get<std::vector<CandidateId>>());
        } else if (b.contains("approve")) {
            if (kind == 0) throw std::invalid_argument("mixed ballot kinds in one file");
            kind = 1;
            auto bits = b.at("approve").get<std::vector<int>>();
            if (bits.size() != candidates.size())
                throw std::invalid_argument("approval vector length does not match candidates");
            std::vector<CandidateId> app;
            for (std::size_t i = 0; i < bits.size(); ++i)
                if (bits[i]) app.push_back(candidates[i].id);
            v.ballot = Ballot::approval(std::move(app));
        } else {
            throw std::invalid_argument("ballot needs an \"order\" or \"approve\" field");
        }
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace detail

inline Election election_from_json(const json& j) {
    Election e;
    e.candidates = detail::candidates_from_json(j.at("candidates"));
    e.voters = detail::voters_from_json(j.at("ballots"), e.candidates);
    e.validate();
    return e;
}

// ---------------------------------------------------------------------------
// Control instances.
// ---------------------------------------------------------------------------
inline json control_instance_to_json(const ControlInstance& inst) {
    Election pool = inst.pool_election();
    json j;
    j["candidates"] = json::array();
    for (const auto& c : inst.candidates) j["candidates"].push_back({{"id", c.id}, {"name", c.name}});
    j["spoilers"] = json::array();
    for (const auto& a : inst.spoilers) j["spoilers"].push_back({{"id", a.id}, {"name", a.name}});

    auto ballots = [&](const std::vector<Voter>& voters) {
        json arr = json::array();
        for (const auto& v : voters) {
            json b;
            b["voter"] = v.name;
            if (v.ballot.is_linear()) {
                b["order"] = v.ballot.order;
            } else {
                std::vector<int> bits;
                for (const auto& c : pool.candidates) bits.push_back(v.ballot.approves(c.id) ? 1 : 0);
                b["approve"] = bits;
            }
            arr.push_back(std::move(b));
        }
        return arr;
    };
    j["ballots"] = ballots(inst.registered);
    j["unregistered"] = ballots(inst.unregistered);
    j["focus"] = inst.focus;
    j["budgets"] = {{"ac", inst.budgets.ac}, {"dc", inst.budgets.dc}, {"av", inst.budgets.av},
                    {"dv", inst.budgets.dv}, {"bv", inst.budgets.bv}};
    j["goal"] = inst.goal == Goal::Constructive ? "constructive" : "destructive";
    j["winner_model"] = inst.winner_model == WinnerModel::Unique ? "unique" : "nonunique";
    j["resource_model"] = inst.resource_model == ResourceModel::Separate ? "separate" : "shared";
    if (inst.resource_model == ResourceModel::Shared) j["shared_budget"] = inst.shared_budget;
    j["prongs"] = json::array();
    for (Prong p : inst.prongs) j["prongs"].push_back(prong_name(p));
    return j;
}

inline ControlInstance control_instance_from_json(const json& j) {
    ControlInstance inst;
    inst.candidates = detail::candidates_from_json(j.at("candidates"));
    inst.spoilers = detail::candidates_from_json(j.value("spoilers", json::array()));
    std::vector<Candidate> pool = inst.candidates;
    pool.insert(pool.end(), inst.spoilers.begin(), inst.spoilers.end());
    inst.registered = detail::voters_from_json(j.at("ballots"), pool);
    inst.unregistered = detail::voters_from_json(j.value("unregistered", json::array()), pool);
    inst.focus = j.at("focus").get<CandidateId>();
    const auto& b = j.at("budgets");
    inst.budgets = {b.value("ac", 0), b.value("dc", 0), b.value("av", 0), b.value("dv", 0),
                    b.value("bv", 0)};
    std::string goal = j.value("goal", "constructive");
    if (goal != "constructive" && goal != "destructive")
        throw std::invalid_argument("goal must be constructive or destructive");
    inst.goal = goal == "constructive" ? Goal::Constructive : Goal::Destructive;
    std::string wm = j.value("winner_model", "unique");
    if (wm != "unique" && wm != "nonunique")
        throw std::invalid_argument("winner_model must be unique or nonunique");
    inst.winner_model = wm == "unique" ? WinnerModel::Unique : WinnerModel::Nonunique;
    std::string rm = j.value("resource_model", "separate");
    if (rm != "separate" && rm != "shared")
        throw std::invalid_argument("resource_model must be separate or shared");
    inst.resource_model = rm == "separate" ? ResourceModel::Separate : ResourceModel::Shared;
    inst.shared_budget = j.value("shared_budget", 0);
    for (const auto& p : j.value("prongs", json::array())) {
        std::string name = p.get<std::string>();
        if (name == "AC") inst.prongs.insert(Prong::AC);
        else if (name == "ACu") inst.prongs.insert(Prong::ACu);
        else if (name == "DC") inst.prongs.insert(Prong::DC);
        else if (name == "AV") inst.prongs.insert(Prong::AV);
        else if (name == "DV") inst.prongs.insert(Prong::DV);
        else if (name == "BV") inst.prongs.insert(Prong::BV);
        else throw std::invalid_argument("unknown prong " + name);
    }
    inst.validate();
    return inst;
}

// ---------------------------------------------------------------------------
// Plans, X3C, digests.
// ---------------------------------------------------------------------------
inline json plan_to_json(const ControlPlan& plan) {
    json j;
    j["added_candidates"] = plan.added_candidates;
    j["deleted_candidates"] = plan.deleted_candidates;
    j["added_voters"] = plan.added_voters;
    j["deleted_voters"] = plan.deleted_voters;
    j["bribes"] = json::object();
    for (const auto& [name, ballot] : plan.bribes) {
        if (ballot.is_linear())
            j["bribes"][name] = {{"order", ballot.order}};
        else
            j["bribes"][name] = {{"approved", ballot.approved}};
    }
    return j;
}

inline json x3c_to_json(const X3CInstance& x) {
    return {{"ground", x.ground}, {"sets", x.sets}, {"k", x.k}};
}

inline X3CInstance x3c_from_json(const json& j) {
    X3CInstance x;
    x.ground = j.at("ground").get<std::vector<int>>();
    x.sets = j.at("sets").get<std::vector<std::vector<int>>>();
    x.k = j.at("k").get<int>();
    x.validate();
    return x;
}

// FNV-1a over the canonical (sorted-key, compact) JSON dump.
inline std::string fnv1a_digest(const json& j) {
    std::string text = j.dump();
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return json::parse(in);
}

inline void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace multiprong
