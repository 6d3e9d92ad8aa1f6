// Command-line front-end: solve control instances, run verification sweeps,
// and materialize the X3C reductions.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "multiprong/attacks.hpp"
#include "multiprong/dodgson.hpp"
#include "multiprong/fpt.hpp"
#include "multiprong/json_io.hpp"
#include "multiprong/oracle.hpp"
#include "multiprong/reductions.hpp"

namespace mp = multiprong;

namespace {

mp::RuleSpec parse_rule(const std::string& text) {
    auto colon = text.find(':');
    std::string name = text.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
    if (name == "plurality") return mp::RuleSpec::plurality();
    if (name == "maximin") return mp::RuleSpec::maximin();
    if (name == "approval") return mp::RuleSpec::approval();
    if (name == "condorcet") return mp::RuleSpec::condorcet();
    if (name == "llull") return mp::RuleSpec::original_llull();
    if (name == "copeland") {
        if (arg.empty()) throw std::invalid_argument("copeland needs :alpha (e.g. copeland:1/2)");
        auto slash = arg.find('/');
        std::int64_t num = std::stoll(arg.substr(0, slash));
        std::int64_t den = slash == std::string::npos ? 1 : std::stoll(arg.substr(slash + 1));
        return mp::RuleSpec::copeland(mp::Rational(num, den));
    }
    if (name == "scoring") {
        std::vector<std::int64_t> vec;
        std::size_t pos = 0;
        while (pos < arg.size()) {
            auto comma = arg.find(',', pos);
            vec.push_back(std::stoll(arg.substr(pos, comma - pos)));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        return mp::RuleSpec::scoring_protocol(vec);
    }
    throw std::invalid_argument("unknown rule " + text);
}

mp::OracleEnvelope envelope_from_env() {
    mp::OracleEnvelope env;
    if (const char* raw = std::getenv("CONTROL_ORACLE_ENVELOPE")) {
        int c = 0, v = 0, b = 0;
        if (std::sscanf(raw, "%d,%d,%d", &c, &v, &b) == 3) {
            env.max_candidates = c;
            env.max_voters = v;
            env.max_bribes = b;
        } else {
            throw std::invalid_argument("CONTROL_ORACLE_ENVELOPE must be \"C,V,B\"");
        }
    }
    return env;
}

// ---------------------------------------------------------------------------
// Solver routing (D25): one row per planner-covered (rule, goal, mask) cell.
// ---------------------------------------------------------------------------
struct Route {
    std::string planner;
    mp::RuleSpec::Kind rule;
    mp::Goal goal;
    std::set<mp::Prong> mask;  // covered mask (instance mask must be a subset)
    std::function<mp::AttackResult(const mp::ControlInstance&, const mp::RuleSpec&)> run;
};

const std::vector<Route>& routing_table() {
    using K = mp::RuleSpec::Kind;
    using P = mp::Prong;
    static const std::vector<Route> table = {
        {"plurality_constructive_av_dv_bv", K::Plurality, mp::Goal::Constructive,
         {P::AV, P::DV, P::BV},
         [](const auto& i, const auto& r) { return mp::plurality_constructive_av_dv_bv(i, r); }},
        {"plurality_destructive_av_dv_bv", K::Plurality, mp::Goal::Destructive,
         {P::AV, P::DV, P::BV},
         [](const auto& i, const auto& r) { return mp::plurality_destructive_av_dv_bv(i, r); }},
        {"condorcet_destructive_ac_av_dv_bv", K::Condorcet, mp::Goal::Destructive,
         {P::AC, P::AV, P::DV, P::BV},
         [](const auto& i, const auto& r) { return mp::condorcet_destructive_ac_av_dv_bv(i, r); }},
        {"approval_destructive_ac_av_dv_bv", K::Approval, mp::Goal::Destructive,
         {P::AC, P::AV, P::DV, P::BV},
         [](const auto& i, const auto& r) { return mp::approval_destructive_ac_av_dv_bv(i, r); }},
        {"copeland_destructive_ac_dc", K::Copeland, mp::Goal::Destructive, {P::AC, P::DC},
         [](const auto& i, const auto& r) { return mp::copeland_destructive_ac_dc(i, r); }},
        {"maximin_constructive_acu_dc", K::Maximin, mp::Goal::Constructive, {P::ACu, P::DC},
         [](const auto& i, const auto& r) { return mp::maximin_constructive_acu_dc(i, r); }},
        {"maximin_destructive_ac_dc", K::Maximin, mp::Goal::Destructive, {P::AC, P::DC},
         [](const auto& i, const auto& r) { return mp::maximin_destructive_ac_dc(i, r); }},
        {"llull_constructive_ac", K::OriginalLlull, mp::Goal::Constructive, {P::AC},
         [](const auto& i, const auto& r) { return mp::llull_constructive_ac(i, r); }},
        {"llull_constructive_acu", K::OriginalLlull, mp::Goal::Constructive, {P::ACu},
         [](const auto& i, const auto& r) { return mp::llull_constructive_ac(i, r); }},
        {"llull_constructive_av", K::OriginalLlull, mp::Goal::Constructive, {P::AV},
         [](const auto& i, const auto& r) { return mp::llull_constructive_av(i, r); }},
    };
    return table;
}

const Route* find_route(const mp::ControlInstance& inst, const mp::RuleSpec& rule) {
    if (inst.winner_model != mp::WinnerModel::Unique ||
        inst.resource_model != mp::ResourceModel::Separate)
        return nullptr;
    for (const auto& row : routing_table()) {
        if (row.rule != rule.kind || row.goal != inst.goal) continue;
        bool covered = true;
        for (mp::Prong p : inst.prongs)
            if (!row.mask.count(p)) covered = false;
        if (covered) return &row;
    }
    return nullptr;
}

bool fpt_supported(const mp::ControlInstance& inst, const mp::RuleSpec& rule) {
    if (inst.resource_model != mp::ResourceModel::Separate) return false;
    if (inst.goal == mp::Goal::Destructive && inst.winner_model != mp::WinnerModel::Unique)
        return false;
    switch (rule.kind) {
        case mp::RuleSpec::Kind::Plurality:
        case mp::RuleSpec::Kind::Maximin:
            return true;
        case mp::RuleSpec::Kind::ScoringProtocol:
            return !inst.candidate_adding_allowed() && inst.budgets.dc == 0 &&
                   inst.spoilers.empty();
        default:
            return false;
    }
}

void explain_routing(const mp::ControlInstance& inst, const mp::RuleSpec& rule) {
    std::cerr << "routing table (planner / rule / goal / covered mask):\n";
    for (const auto& row : routing_table()) {
        std::cerr << "  " << row.planner << " / "
                  << (row.rule == rule.kind ? "*" : " ") << " / "
                  << (row.goal == mp::Goal::Constructive ? "constructive" : "destructive")
                  << " / {";
        bool first = true;
        for (mp::Prong p : row.mask) {
            if (!first) std::cerr << ",";
            std::cerr << mp::prong_name(p);
            first = false;
        }
        std::cerr << "}\n";
    }
    const Route* r = find_route(inst, rule);
    std::cerr << "selected: "
              << (r ? ("greedy (" + r->planner + ")")
                    : fpt_supported(inst, rule) ? std::string("fpt") : std::string("oracle"))
              << "\n";
}

int cmd_solve(const std::string& instance_path, const std::string& rule_text,
              const std::string& solver, const std::string& out_path, bool explain) {
    auto t0 = std::chrono::steady_clock::now();
    mp::json raw = mp::load_json_file(instance_path);
    mp::ControlInstance inst = mp::control_instance_from_json(raw);
    mp::RuleSpec rule = parse_rule(rule_text);
    if (explain) explain_routing(inst, rule);

    std::string used = solver;
    mp::AttackResult result;
    if (solver == "greedy" || (solver == "auto" && find_route(inst, rule))) {
        const Route* r = find_route(inst, rule);
        if (!r) throw std::invalid_argument("no planner covers this (rule, goal, mask)");
        std::cerr << "solver: greedy (" << r->planner << ")\n";
        used = "greedy:" + r->planner;
        result = r->run(inst, rule);
    } else if (solver == "fpt" || (solver == "auto" && fpt_supported(inst, rule))) {
        if (!fpt_supported(inst, rule))
            throw std::invalid_argument("fpt solver does not support this rule/instance");
        std::cerr << "solver: fpt\n";
        used = "fpt";
        result = mp::fpt_solve(inst, rule);
    } else if (solver == "oracle" || solver == "auto") {
        std::cerr << "solver: oracle\n";
        used = "oracle";
        mp::OracleOptions opts;
        opts.envelope = envelope_from_env();
        result = mp::solve_exhaustive(inst, rule, opts);
    } else {
        throw std::invalid_argument("unknown solver " + solver);
    }

    bool verified = false;
    if (result.found()) {
        verified = mp::check_plan_goal(inst, result.plan, rule);
        if (!verified) throw std::logic_error("emitted plan failed re-verification");
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    mp::json report;
    report["instance_digest"] = mp::fnv1a_digest(raw);
    report["solver"] = used;
    report["outcome"] = result.found() ? "plan" : "impossible";
    if (result.found()) report["plan"] = mp::plan_to_json(result.plan);
    report["trace"] = result.trace;
    report["wall_ms"] = ms;
    report["verified"] = verified;
    std::cout << report.dump(2) << "\n";
    if (!out_path.empty()) mp::save_json_file(out_path, report);
    return result.found() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// Verification suites (small-scale versions of the acceptance sweeps).
// ---------------------------------------------------------------------------
int cmd_verify(const std::string& suite, int m, int n, int k, const std::string& rule_text,
               int count, unsigned seed) {
    int checked = 0, failed = 0;
    if (suite == "dodgson") {
        std::vector<mp::CandidateId> ids;
        for (int i = 0; i < m; ++i) ids.push_back(i);
        auto orders = mp::canonical_orders(ids);
        std::vector<int> pick(n, 0);
        bool more = true;
        while (more) {
            mp::Election e;
            for (int i = 0; i < m; ++i) e.candidates.push_back({i, "c" + std::to_string(i)});
            for (int v = 0; v < n; ++v)
                e.voters.push_back({"v" + std::to_string(v), mp::Ballot::linear(orders[pick[v]])});
            auto rep = mp::verify_sandwich(e);
            ++checked;
            if (!rep.lemma_chain_ok || !rep.theorem_chain_ok) ++failed;
            more = false;
            for (int t = n - 1; t >= 0; --t) {
                if (++pick[t] < static_cast<int>(orders.size())) {
                    more = true;
                    break;
                }
                pick[t] = 0;
            }
        }
    } else if (suite == "table1") {
        mp::X3CInstance x;
        for (int i = 0; i < 3 * k; ++i) x.ground.push_back(i + 1);
        // first n 3-subsets in lexicographic order
        for (int a = 0; a < 3 * k && static_cast<int>(x.sets.size()) < n; ++a)
            for (int b = a + 1; b < 3 * k && static_cast<int>(x.sets.size()) < n; ++b)
                for (int c = b + 1; c < 3 * k && static_cast<int>(x.sets.size()) < n; ++c)
                    x.sets.push_back({x.ground[a], x.ground[b], x.ground[c]});
        x.k = k;
        for (mp::Goal goal : {mp::Goal::Constructive, mp::Goal::Destructive}) {
            auto inst = mp::reduce_maximin_bv(x, goal);
            mp::Election e = inst.base_election();
            int off = goal == mp::Goal::Constructive ? 1 : 0;
            const mp::CandidateId p = 0, d = 1, s = 2;
            auto expect = [&](mp::CandidateId a, mp::CandidateId b, int want) {
                ++checked;
                if (mp::pairwise_tally(e, a, b) != want) ++failed;
            };
            expect(p, d, n + 3 * k + 1 + off);
            expect(p, s, n + 3 * k + 1 + off);
            expect(d, p, n + 5 * k + 1);
            expect(d, s, 2 * n + 4 * k + 1 + off);
            expect(s, p, n + 5 * k + 1);
            expect(s, d, 4 * k + 1);
            for (const auto& c : e.candidates) {
                if (c.id < 3) continue;
                expect(p, c.id, n + 4 * k + off);
                expect(d, c.id, n + 6 * k + 1 + off);
                expect(s, c.id, n + 4 * k + 1 + off);
                expect(c.id, p, n + 4 * k + 2);
                expect(c.id, d, n + 2 * k + 1);
                expect(c.id, s, n + 4 * k + 1);
            }
        }
    } else if (suite == "oracle-vs-greedy") {
        mp::RuleSpec rule = parse_rule(rule_text);
        std::mt19937 rng(seed);
        for (int t = 0; t < count; ++t) {
            mp::ControlInstance inst;
            int nc = 2 + static_cast<int>(rng() % 2);
            std::vector<mp::CandidateId> ids;
            for (int i = 0; i < nc; ++i) {
                inst.candidates.push_back({i, "c" + std::to_string(i)});
                ids.push_back(i);
            }
            int nv = 1 + static_cast<int>(rng() % 4);
            for (int i = 0; i < nv; ++i) {
                auto order = ids;
                std::shuffle(order.begin(), order.end(), rng);
                if (rule.uses_approval_ballots()) {
                    std::vector<mp::CandidateId> app;
                    for (auto c : ids)
                        if (rng() % 2) app.push_back(c);
                    inst.registered.push_back(
                        {"v" + std::to_string(i), mp::Ballot::approval(app)});
                } else {
                    inst.registered.push_back({"v" + std::to_string(i), mp::Ballot::linear(order)});
                }
            }
            inst.focus = 0;
            inst.goal = rule.kind == mp::RuleSpec::Kind::Plurality ? mp::Goal::Constructive
                                                                   : mp::Goal::Destructive;
            inst.prongs = {mp::Prong::DV, mp::Prong::BV};
            inst.budgets.dv = static_cast<int>(rng() % 2);
            inst.budgets.bv = static_cast<int>(rng() % 2);
            const Route* r = find_route(inst, rule);
            if (!r) continue;
            ++checked;
            bool greedy = r->run(inst, rule).found();
            bool oracle = mp::solve_exhaustive(inst, rule).found();
            if (greedy != oracle) ++failed;
        }
    } else {
        throw std::invalid_argument("unknown suite " + suite);
    }
    std::cout << "suite " << suite << ": " << (checked - failed) << "/" << checked << " passed\n";
    return failed == 0 ? 0 : 1;
}

int cmd_reduce(const std::string& from, const std::string& to, const std::string& goal_text,
               const std::string& in_path, const std::string& out_path) {
    mp::Goal goal = goal_text == "d" ? mp::Goal::Destructive : mp::Goal::Constructive;
    mp::ControlInstance out;
    if (from == "x3c") {
        mp::X3CInstance x = mp::x3c_from_json(mp::load_json_file(in_path));
        if (to == "maximin-ac") {
            if (goal == mp::Goal::Destructive)
                throw std::invalid_argument("maximin-ac reduction is constructive only");
            out = mp::reduce_maximin_constructive_ac(x);
        } else if (to == "maximin-av") {
            out = mp::reduce_maximin_av(x, goal);
        } else if (to == "maximin-dv") {
            out = mp::reduce_maximin_dv(x, goal);
        } else if (to == "maximin-bv") {
            out = mp::reduce_maximin_bv(x, goal);
        } else {
            throw std::invalid_argument("unknown reduction " + to);
        }
    } else if (from == "copeland-av" && to == "llull") {
        out = mp::reduce_copeland1_av_to_llull(
            mp::control_instance_from_json(mp::load_json_file(in_path)));
    } else {
        throw std::invalid_argument("unsupported reduction " + from + " -> " + to);
    }
    mp::json j = mp::control_instance_to_json(out);
    mp::save_json_file(out_path, j);
    std::cout << mp::fnv1a_digest(j) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multiprong election control toolkit"};
    app.require_subcommand(1);

    auto* solve = app.add_subcommand("solve", "solve a control instance");
    std::string instance_path, rule_text, solver = "auto", out_path;
    bool explain = false;
    solve->add_option("--instance", instance_path, "control instance JSON")->required();
    solve->add_option("--rule", rule_text, "voting rule, e.g. plurality, copeland:1/2")->required();
    solve->add_option("--solver", solver, "auto|greedy|oracle|fpt");
    solve->add_option("--out", out_path, "also write the report here");
    solve->add_flag("--explain-routing", explain, "print the routing table");

    auto* verify = app.add_subcommand("verify", "run a verification sweep");
    std::string suite, vrule = "plurality";
    int m = 3, n = 3, k = 2, count = 200;
    unsigned seed = 1;
    verify->add_option("--suite", suite, "dodgson|table1|oracle-vs-greedy")->required();
    verify->add_option("--m", m, "candidate count");
    verify->add_option("--n", n, "voter / set count");
    verify->add_option("--k", k, "cover size");
    verify->add_option("--rule", vrule, "rule for oracle-vs-greedy");
    verify->add_option("--count", count, "random instance count");
    verify->add_option("--seed", seed, "RNG seed");

    auto* reduce = app.add_subcommand("reduce", "materialize a hardness reduction");
    std::string from = "x3c", to, goal_text = "c", rin, rout;
    reduce->add_option("--from", from, "x3c|copeland-av");
    reduce->add_option("--to", to, "maximin-ac|maximin-av|maximin-dv|maximin-bv|llull")->required();
    reduce->add_option("--goal", goal_text, "c|d");
    reduce->add_option("--instance", rin, "input JSON")->required();
    reduce->add_option("--out", rout, "output instance JSON")->required();

    CLI11_PARSE(app, argc, argv);
    try {
        if (solve->parsed()) return cmd_solve(instance_path, rule_text, solver, out_path, explain);
        if (verify->parsed()) return cmd_verify(suite, m, n, k, vrule, count, seed);
        if (reduce->parsed()) return cmd_reduce(from, to, goal_text, rin, rout);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 2;
}
