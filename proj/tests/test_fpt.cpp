#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "multiprong/attacks.hpp"
#include "multiprong/fpt.hpp"
#include "multiprong/oracle.hpp"

using namespace multiprong;

namespace {

bool satisfies(const LinearSystem& sys, const std::vector<std::int64_t>& x) {
    using Cmp = LinearSystem::Cmp;
    for (const auto& c : sys.constraints) {
        std::int64_t v = 0;
        for (std::size_t i = 0; i < x.size(); ++i) v += c.coeffs[i] * x[i];
        switch (c.cmp) {
            case Cmp::LT: if (!(v < c.constant)) return false; break;
            case Cmp::LE: if (!(v <= c.constant)) return false; break;
            case Cmp::GT: if (!(v > c.constant)) return false; break;
            case Cmp::GE: if (!(v >= c.constant)) return false; break;
        }
    }
    return true;
}

// All count vectors of length q with entries summing to at most `total`.
void for_each_count_vector(int q, std::int64_t total,
                           const std::function<void(const std::vector<std::int64_t>&)>& fn) {
    std::vector<std::int64_t> counts(q, 0);
    auto rec = [&](auto&& self, int i, std::int64_t left) -> void {
        if (i == q) {
            fn(counts);
            return;
        }
        for (std::int64_t v = 0; v <= left; ++v) {
            counts[i] = v;
            self(self, i + 1, left - v);
        }
        counts[i] = 0;
    };
    rec(rec, 0, total);
}

ControlInstance random_voter_instance(std::mt19937& rng, int m, int n, int nw) {
    ControlInstance inst;
    std::vector<CandidateId> ids;
    for (int i = 0; i < m; ++i) {
        inst.candidates.push_back({i, "c" + std::to_string(i)});
        ids.push_back(i);
    }
    for (int v = 0; v < n; ++v) {
        auto o = ids;
        std::shuffle(o.begin(), o.end(), rng);
        inst.registered.push_back({"v" + std::to_string(v), Ballot::linear(o)});
    }
    for (int w = 0; w < nw; ++w) {
        auto o = ids;
        std::shuffle(o.begin(), o.end(), rng);
        inst.unregistered.push_back({"w" + std::to_string(w), Ballot::linear(o)});
    }
    inst.focus = 0;
    return inst;
}

}  // namespace

TEST_CASE("anonymous profiles round-trip through materialize") {
    auto p = AnonymousProfile::empty({2, 0, 1});
    CHECK(p.K == std::vector<CandidateId>{0, 1, 2});
    CHECK(p.orders.size() == 6);
    CHECK(p.orders.front() == std::vector<CandidateId>{0, 1, 2});
    CHECK(p.orders.back() == std::vector<CandidateId>{2, 1, 0});
    p.counts = {1, 0, 2, 0, 0, 1};
    Election e = p.materialize();
    CHECK(e.voters.size() == 4);
    auto q = profile_from_election(e);
    CHECK(q.counts == p.counts);
    CHECK_THROWS_AS(p.order_index({0, 1}), std::invalid_argument);
}

TEST_CASE("scoring win constraints are faithful pointwise") {
    std::vector<CandidateId> K = {0, 1, 2};
    for (auto vec : {std::vector<std::int64_t>{1, 0, 0}, std::vector<std::int64_t>{2, 1, 0}}) {
        RuleSpec rule = (vec[0] == 1) ? RuleSpec::plurality() : RuleSpec::scoring_protocol(vec);
        for (CandidateId target : K) {
            for (WinnerModel model : {WinnerModel::Unique, WinnerModel::Nonunique}) {
                auto sys = win_constraints_scoring(vec, K, target, model, 4);
                int checked = 0;
                for_each_count_vector(6, 4, [&](const std::vector<std::int64_t>& counts) {
                    auto p = AnonymousProfile::empty(K);
                    p.counts = counts;
                    Election e = p.materialize();
                    bool won = (model == WinnerModel::Unique)
                                   ? is_unique_winner(e, rule, target)
                                   : is_winner(e, rule, target);
                    if (satisfies(sys, counts) != won) ++checked;
                });
                CHECK(checked == 0);
            }
        }
    }
}

TEST_CASE("maximin win programs are faithful as a disjunction") {
    std::vector<CandidateId> K = {0, 1, 2};
    for (CandidateId target : K) {
        for (WinnerModel model : {WinnerModel::Unique, WinnerModel::Nonunique}) {
            auto programs = maximin_win_programs(K, target, model, 4);
            CHECK(programs.size() == 8);  // (m-1)^m = 2^3
            int mismatches = 0;
            for_each_count_vector(6, 4, [&](const std::vector<std::int64_t>& counts) {
                auto p = AnonymousProfile::empty(K);
                p.counts = counts;
                Election e = p.materialize();
                if (e.voters.empty()) return;  // degenerate: every score ties at 0
                bool won = (model == WinnerModel::Unique) ? is_unique_winner(e, RuleSpec::maximin(), target)
                                                          : is_winner(e, RuleSpec::maximin(), target);
                bool any = false;
                for (const auto& sys : programs)
                    if (satisfies(sys, counts)) any = true;
                if (any != won) ++mismatches;
            });
            CHECK(mismatches == 0);
        }
    }
    CHECK_THROWS_AS(maximin_win_programs({0}, 0, WinnerModel::Unique, 1), std::invalid_argument);
    CHECK_THROWS_AS(maximin_win_programs({0, 1}, 7, WinnerModel::Unique, 1), std::invalid_argument);
}

TEST_CASE("control program assignments conserve class mass") {
    std::mt19937 rng(53);
    for (int t = 0; t < 60; ++t) {
        ControlInstance inst = random_voter_instance(rng, 2, 1 + static_cast<int>(rng() % 4),
                                                     static_cast<int>(rng() % 3));
        inst.goal = Goal::Constructive;
        inst.prongs = {Prong::AV, Prong::DV, Prong::BV};
        inst.budgets.av = static_cast<int>(rng() % 3);
        inst.budgets.dv = static_cast<int>(rng() % 3);
        inst.budgets.bv = static_cast<int>(rng() % 2);
        std::vector<CandidateId> K = {0, 1};
        std::vector<std::int64_t> vec = {1, 0};
        auto win = win_constraints_scoring(
            vec, K, 0, WinnerModel::Unique,
            static_cast<std::int64_t>(inst.registered.size() + inst.unregistered.size()));
        ControlProgram cp = build_control_program(K, inst, win);
        auto sol = solve_feasibility(cp.sys);
        if (!sol) continue;
        for (int i = 0; i < cp.q; ++i) {
            std::int64_t lhs = 0;
            for (int j = 0; j < cp.q; ++j) lhs += (*sol)[cp.bv(i, j)];
            std::int64_t rhs = static_cast<std::int64_t>(cp.v_by_class[i].size()) +
                               (*sol)[cp.av(i)] - (*sol)[cp.dv(i)];
            CHECK(lhs == rhs);
        }
        ControlPlan plan = reconstruct_plan(cp, inst, *sol);
        CHECK(check_plan_goal(inst, plan, RuleSpec::plurality()));
        if (inst.budgets.bv == 0) CHECK(plan.bribes.empty());
    }
}

TEST_CASE("fpt matches the oracle for plurality over all five prongs") {
    std::mt19937 rng(59);
    for (Goal goal : {Goal::Constructive, Goal::Destructive}) {
        for (int t = 0; t < 60; ++t) {
            ControlInstance inst = random_voter_instance(rng, 2 + static_cast<int>(rng() % 2),
                                                         1 + static_cast<int>(rng() % 3),
                                                         static_cast<int>(rng() % 3));
            int na = static_cast<int>(rng() % 2);
            for (int i = 0; i < na; ++i) {
                CandidateId id = static_cast<CandidateId>(inst.candidates.size());
                inst.spoilers.push_back({id, "x" + std::to_string(i)});
                for (auto& v : inst.registered) v.ballot.order.push_back(id);
                for (auto& w : inst.unregistered) w.ballot.order.push_back(id);
            }
            inst.goal = goal;
            inst.prongs = {Prong::AC, Prong::DC, Prong::AV, Prong::DV, Prong::BV};
            inst.budgets.ac = static_cast<int>(rng() % 2);
            inst.budgets.dc = static_cast<int>(rng() % 2);
            inst.budgets.av = static_cast<int>(rng() % 2);
            inst.budgets.dv = static_cast<int>(rng() % 2);
            inst.budgets.bv = static_cast<int>(rng() % 2);
            auto got = fpt_solve(inst, RuleSpec::plurality());
            CAPTURE(t);
            CHECK(got.found() == solve_exhaustive(inst, RuleSpec::plurality()).found());
        }
    }
}

TEST_CASE("fpt matches the oracle for maximin voter prongs") {
    std::mt19937 rng(61);
    for (Goal goal : {Goal::Constructive, Goal::Destructive}) {
        for (int t = 0; t < 50; ++t) {
            ControlInstance inst = random_voter_instance(rng, 3, 1 + static_cast<int>(rng() % 3),
                                                         static_cast<int>(rng() % 3));
            inst.goal = goal;
            inst.prongs = {Prong::AV, Prong::DV, Prong::BV};
            inst.budgets.av = static_cast<int>(rng() % 2);
            inst.budgets.dv = static_cast<int>(rng() % 2);
            inst.budgets.bv = static_cast<int>(rng() % 2);
            auto got = fpt_solve(inst, RuleSpec::maximin());
            CAPTURE(t);
            CHECK(got.found() == solve_exhaustive(inst, RuleSpec::maximin()).found());
        }
    }
}

TEST_CASE("fpt agrees with the maximin ACu+DC planner") {
    std::mt19937 rng(67);
    for (int t = 0; t < 60; ++t) {
        int na = static_cast<int>(rng() % 3);
        ControlInstance inst = random_voter_instance(rng, 2 + static_cast<int>(rng() % 2),
                                                     1 + static_cast<int>(rng() % 4), 0);
        for (int i = 0; i < na; ++i) {
            CandidateId id = static_cast<CandidateId>(inst.candidates.size() + i);
            inst.spoilers.push_back({id, "x" + std::to_string(i)});
        }
        // extend ballots over the pool
        for (auto& v : inst.registered)
            for (const auto& a : inst.spoilers) v.ballot.order.push_back(a.id);
        inst.goal = Goal::Constructive;
        inst.prongs = {Prong::ACu, Prong::DC};
        inst.budgets.ac = na;
        inst.budgets.dc = static_cast<int>(rng() % 3);
        auto greedy = maximin_constructive_acu_dc(inst);
        auto fpt = fpt_solve(inst, RuleSpec::maximin());
        CAPTURE(t);
        CHECK(greedy.found() == fpt.found());
    }
}

TEST_CASE("fpt names its contract violations") {
    std::mt19937 rng(71);
    ControlInstance inst = random_voter_instance(rng, 3, 2, 0);
    inst.goal = Goal::Destructive;
    inst.winner_model = WinnerModel::Nonunique;
    CHECK_THROWS_WITH_AS(fpt_solve(inst, RuleSpec::plurality()),
                         doctest::Contains("unique-winner"), std::invalid_argument);
    inst.winner_model = WinnerModel::Unique;
    inst.resource_model = ResourceModel::Shared;
    inst.shared_budget = 1;
    inst.prongs = {Prong::DV};
    CHECK_THROWS_WITH_AS(fpt_solve(inst, RuleSpec::plurality()),
                         doctest::Contains("separate"), std::invalid_argument);
    inst.resource_model = ResourceModel::Separate;
    inst.shared_budget = 0;
    inst.prongs = {Prong::DC, Prong::DV};
    inst.budgets.dc = 1;
    inst.budgets.dv = 1;
    CHECK_THROWS_WITH_AS(fpt_solve(inst, RuleSpec::scoring_protocol({2, 1, 0})),
                         doctest::Contains("voter prongs"), std::invalid_argument);
    CHECK_THROWS_AS(fpt_solve(inst, RuleSpec::condorcet()), std::invalid_argument);
}
