#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "multiprong/attack_result.hpp"
#include "multiprong/control.hpp"
#include "multiprong/election.hpp"
#include "multiprong/ilp.hpp"

namespace multiprong {

// Canonical enumeration of the |K|! preference orders over K: lexicographic
// permutations of the ascending candidate ids.
inline std::vector<std::vector<CandidateId>> canonical_orders(std::vector<CandidateId> K) {
    std::sort(K.begin(), K.end());
    std::vector<std::vector<CandidateId>> orders;
    do {
        orders.push_back(K);
    } while (std::next_permutation(K.begin(), K.end()));
    return orders;
}

// An anonymous profile over K: one count per canonical preference order.
struct AnonymousProfile {
    std::vector<CandidateId> K;                     // ascending
    std::vector<std::vector<CandidateId>> orders;   // canonical enumeration
    std::vector<std::int64_t> counts;               // n_1..n_{|K|!}

    static AnonymousProfile empty(std::vector<CandidateId> K) {
        AnonymousProfile p;
        p.orders = canonical_orders(K);
        std::sort(K.begin(), K.end());
        p.K = std::move(K);
        p.counts.assign(p.orders.size(), 0);
        return p;
    }

    int order_index(const std::vector<CandidateId>& o) const {
        for (std::size_t i = 0; i < orders.size(); ++i)
            if (orders[i] == o) return static_cast<int>(i);
        throw std::invalid_argument("order is not over this profile's candidate set");
    }

    // An election with synthetic voter names realizing the counts.
    Election materialize() const {
        Election e;
        for (CandidateId c : K) e.candidates.push_back({c, "c" + std::to_string(c)});
        int serial = 0;
        for (std::size_t i = 0; i < orders.size(); ++i)
            for (std::int64_t t = 0; t < counts[i]; ++t)
                e.voters.push_back({"v" + std::to_string(serial++), Ballot::linear(orders[i])});
        return e;
    }
};

inline AnonymousProfile profile_from_election(const Election& e) {
    auto p = AnonymousProfile::empty(e.candidate_ids());
    for (const auto& v : e.voters) p.counts[p.order_index(v.ballot.order)] += 1;
    return p;
}

// ---------------------------------------------------------------------------
// Winner encodings over the n_i variables.
// ---------------------------------------------------------------------------
inline LinearSystem win_constraints_scoring(const std::vector<std::int64_t>& scoring,
                                            const std::vector<CandidateId>& K, CandidateId target,
                                            WinnerModel model, std::int64_t cap) {
    if (scoring.size() != K.size())
        throw std::invalid_argument("scoring vector length must equal |K|");
    for (std::size_t i = 0; i < scoring.size(); ++i) {
        if (scoring[i] < 0) throw std::invalid_argument("scoring vector entries must be nonnegative");
        if (i > 0 && scoring[i] > scoring[i - 1])
            throw std::invalid_argument("scoring vector must be nonincreasing");
    }
    auto orders = canonical_orders(K);
    LinearSystem sys;
    for (std::size_t i = 0; i < orders.size(); ++i)
        sys.add_variable("n" + std::to_string(i + 1), 0, cap);

    auto points = [&](CandidateId c, const std::vector<CandidateId>& o) -> std::int64_t {
        for (std::size_t pos = 0; pos < o.size(); ++pos)
            if (o[pos] == c) return scoring[pos];
        throw std::logic_error("candidate missing from order");
    };

    for (CandidateId rival : K) {
        if (rival == target) continue;
        std::vector<std::int64_t> row(orders.size());
        for (std::size_t i = 0; i < orders.size(); ++i)
            row[i] = points(target, orders[i]) - points(rival, orders[i]);
        sys.add_constraint(std::move(row),
                           model == WinnerModel::Unique ? LinearSystem::Cmp::GT
                                                        : LinearSystem::Cmp::GE,
                           0);
    }
    return sys;
}

// One system per guess vector k (k_i indexes each candidate's presumed
// min-opponent, k_i ≠ i). The target wins iff some system is feasible.
inline std::vector<LinearSystem> maximin_win_programs(const std::vector<CandidateId>& K_in,
                                                      CandidateId target, WinnerModel model,
                                                      std::int64_t cap) {
    std::vector<CandidateId> K = K_in;
    std::sort(K.begin(), K.end());
    const int m = static_cast<int>(K.size());
    if (m < 2) throw std::invalid_argument("maximin_win_programs needs at least two candidates");
    int ell = -1;
    for (int i = 0; i < m; ++i)
        if (K[i] == target) ell = i;
    if (ell == -1) throw std::invalid_argument("target not in K");

    auto orders = canonical_orders(K);
    const int q = static_cast<int>(orders.size());

    // O(c_i, c_j): indicator per order of "c_i preferred to c_j".
    auto prefers_row = [&](int i, int j) {
        std::vector<std::int64_t> row(q, 0);
        for (int t = 0; t < q; ++t)
            if (Ballot::linear(orders[t]).prefers(K[i], K[j])) row[t] = 1;
        return row;
    };

    std::vector<LinearSystem> out;
    std::vector<int> guess(m, 0);
    auto emit = [&] {
        LinearSystem sys;
        for (int i = 0; i < q; ++i) sys.add_variable("n" + std::to_string(i + 1), 0, cap);
        // Family 1: N(c_i, c_{k_i}) really is c_i's minimum.
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                if (j == i || j == guess[i]) continue;
                auto a = prefers_row(i, guess[i]);
                auto b = prefers_row(i, j);
                for (int t = 0; t < q; ++t) a[t] -= b[t];
                sys.add_constraint(std::move(a), LinearSystem::Cmp::LE, 0);
            }
        // Family 2: the target's minimum tops everyone else's.
        for (int i = 0; i < m; ++i) {
            if (i == ell) continue;
            auto a = prefers_row(ell, guess[ell]);
            auto b = prefers_row(i, guess[i]);
            for (int t = 0; t < q; ++t) a[t] -= b[t];
            sys.add_constraint(std::move(a),
                               model == WinnerModel::Unique ? LinearSystem::Cmp::GT
                                                            : LinearSystem::Cmp::GE,
                               0);
        }
        out.push_back(std::move(sys));
    };
    auto rec = [&](auto&& self, int i) -> void {
        if (i == m) {
            emit();
            return;
        }
        for (int k = 0; k < m; ++k) {
            if (k == i) continue;
            guess[i] = k;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

// ---------------------------------------------------------------------------
// The control program P(K) and its bookkeeping for plan reconstruction.
// ---------------------------------------------------------------------------
struct ControlProgram {
    std::vector<CandidateId> K;                    // ascending
    std::vector<std::vector<CandidateId>> orders;  // canonical
    std::vector<std::vector<std::string>> v_by_class;  // registered names, ascending
    std::vector<std::vector<std::string>> w_by_class;  // unregistered names, ascending
    int q = 0;            // |K|!
    int av_base = 0, dv_base = 0, bv_base = 0;  // variable offsets
    LinearSystem sys;

    int av(int i) const { return av_base + i; }
    int dv(int i) const { return dv_base + i; }
    int bv(int i, int j) const { return bv_base + i * q + j; }
};

inline ControlProgram build_control_program(const std::vector<CandidateId>& K_in,
                                            const ControlInstance& inst,
                                            const LinearSystem& win_sys) {
    ControlProgram cp;
    cp.K = K_in;
    std::sort(cp.K.begin(), cp.K.end());
    bool has_p = std::find(cp.K.begin(), cp.K.end(), inst.focus) != cp.K.end();
    if (!has_p) throw std::invalid_argument("build_control_program: focus not in K");
    cp.orders = canonical_orders(cp.K);
    cp.q = static_cast<int>(cp.orders.size());
    if (static_cast<int>(win_sys.variables.size()) != cp.q)
        throw std::invalid_argument("win system arity does not match |K|!");

    std::set<CandidateId> keep(cp.K.begin(), cp.K.end());
    auto classify = [&](const Voter& v) -> int {
        std::vector<CandidateId> induced;
        for (CandidateId c : v.ballot.order)
            if (keep.count(c)) induced.push_back(c);
        for (int i = 0; i < cp.q; ++i)
            if (cp.orders[i] == induced) return i;
        throw std::logic_error("ballot does not induce an order over K");
    };

    cp.v_by_class.assign(cp.q, {});
    cp.w_by_class.assign(cp.q, {});
    for (const auto& v : inst.registered) cp.v_by_class[classify(v)].push_back(v.name);
    for (const auto& w : inst.unregistered) cp.w_by_class[classify(w)].push_back(w.name);
    for (auto& g : cp.v_by_class) std::sort(g.begin(), g.end());
    for (auto& g : cp.w_by_class) std::sort(g.begin(), g.end());

    const std::int64_t pool =
        static_cast<std::int64_t>(inst.registered.size() + inst.unregistered.size());

    LinearSystem& sys = cp.sys;
    cp.av_base = 0;
    for (int i = 0; i < cp.q; ++i)
        sys.add_variable("av" + std::to_string(i + 1), 0,
                         static_cast<std::int64_t>(cp.w_by_class[i].size()));
    cp.dv_base = cp.q;
    for (int i = 0; i < cp.q; ++i)
        sys.add_variable("dv" + std::to_string(i + 1), 0,
                         static_cast<std::int64_t>(cp.v_by_class[i].size()));
    cp.bv_base = 2 * cp.q;
    for (int i = 0; i < cp.q; ++i)
        for (int j = 0; j < cp.q; ++j)
            sys.add_variable("bv" + std::to_string(i + 1) + "_" + std::to_string(j + 1), 0, pool);

    const int nvars = 2 * cp.q + cp.q * cp.q;
    auto zeros = [&] { return std::vector<std::int64_t>(nvars, 0); };

    // Budget rows.
    {
        auto row = zeros();
        for (int i = 0; i < cp.q; ++i) row[cp.av(i)] = 1;
        sys.add_constraint(std::move(row), LinearSystem::Cmp::LE, inst.budgets.av);
    }
    {
        auto row = zeros();
        for (int i = 0; i < cp.q; ++i) row[cp.dv(i)] = 1;
        sys.add_constraint(std::move(row), LinearSystem::Cmp::LE, inst.budgets.dv);
    }
    {
        auto row = zeros();
        for (int i = 0; i < cp.q; ++i)
            for (int j = 0; j < cp.q; ++j)
                if (i != j) row[cp.bv(i, j)] = 1;
        sys.add_constraint(std::move(row), LinearSystem::Cmp::LE, inst.budgets.bv);
    }
    // Conservation: Σ_j bv_{i,j} = n^V_i + av_i − dv_i.
    for (int i = 0; i < cp.q; ++i) {
        auto row = zeros();
        for (int j = 0; j < cp.q; ++j) row[cp.bv(i, j)] = 1;
        row[cp.av(i)] = -1;
        row[cp.dv(i)] = 1;
        sys.add_equality(row, static_cast<std::int64_t>(cp.v_by_class[i].size()));
    }
    // Win rows with ℓ_j := Σ_i bv_{i,j}.
    for (const auto& wrow : win_sys.constraints) {
        auto row = zeros();
        for (int j = 0; j < cp.q; ++j)
            for (int i = 0; i < cp.q; ++i) row[cp.bv(i, j)] += wrow.coeffs[j];
        sys.add_constraint(std::move(row), wrow.cmp, wrow.constant);
    }
    return cp;
}

// Deterministic plan extraction: within each preference class, voters are
// consumed in ascending name order; class-preserving (diagonal) mass is left
// unbribed.
inline ControlPlan reconstruct_plan(const ControlProgram& cp, const ControlInstance& inst,
                                    const std::vector<std::int64_t>& assignment) {
    ControlPlan plan;
    std::set<CandidateId> kset(cp.K.begin(), cp.K.end());
    for (const auto& c : inst.candidates)
        if (!kset.count(c.id)) plan.deleted_candidates.insert(c.id);
    for (const auto& a : inst.spoilers)
        if (kset.count(a.id)) plan.added_candidates.insert(a.id);

    for (int i = 0; i < cp.q; ++i) {
        std::int64_t av = assignment[cp.av(i)];
        std::int64_t dv = assignment[cp.dv(i)];
        std::vector<std::string> present;  // final electorate of class i
        for (std::int64_t t = 0; t < av; ++t) {
            plan.added_voters.insert(cp.w_by_class[i][t]);
            present.push_back(cp.w_by_class[i][t]);
        }
        for (std::size_t t = 0; t < cp.v_by_class[i].size(); ++t) {
            if (static_cast<std::int64_t>(t) < dv)
                plan.deleted_voters.insert(cp.v_by_class[i][t]);
            else
                present.push_back(cp.v_by_class[i][t]);
        }
        std::sort(present.begin(), present.end());
        std::size_t next = 0;
        for (int j = 0; j < cp.q; ++j) {
            std::int64_t take = assignment[cp.bv(i, j)];
            for (std::int64_t t = 0; t < take; ++t) {
                if (next >= present.size())
                    throw std::logic_error("bv mass exceeds the class electorate");
                if (j != i) plan.bribes[present[next]] = Ballot::linear(cp.orders[j]);
                ++next;
            }
        }
        if (next != present.size())
            throw std::logic_error("bv mass does not cover the class electorate");
    }
    return plan;
}

// ---------------------------------------------------------------------------
// The subset-K driver.
// ---------------------------------------------------------------------------
namespace detail {

inline std::vector<LinearSystem> win_systems_for(const RuleSpec& rule,
                                                 const std::vector<CandidateId>& K,
                                                 CandidateId target, WinnerModel model,
                                                 std::int64_t cap) {
    switch (rule.kind) {
        case RuleSpec::Kind::Plurality: {
            std::vector<std::int64_t> vec(K.size(), 0);
            vec[0] = 1;
            return {win_constraints_scoring(vec, K, target, model, cap)};
        }
        case RuleSpec::Kind::ScoringProtocol:
            return {win_constraints_scoring(rule.scoring, K, target, model, cap)};
        case RuleSpec::Kind::Maximin:
            return maximin_win_programs(K, target, model, cap);
        default:
            throw std::invalid_argument("fpt_solve: unsupported rule " + rule.name());
    }
}

}  // namespace detail

inline AttackResult fpt_solve(const ControlInstance& inst, const RuleSpec& rule) {
    inst.validate();
    if (inst.resource_model != ResourceModel::Separate)
        throw std::invalid_argument("fpt_solve: separate-resource instances only");
    if (rule.kind == RuleSpec::Kind::ScoringProtocol &&
        (inst.candidate_adding_allowed() || inst.budgets.dc > 0 || !inst.spoilers.empty()))
        throw std::invalid_argument(
            "fpt_solve: general scoring protocols support voter prongs only "
            "(the scoring vector is tied to the full candidate count)");
    if (inst.goal == Goal::Destructive && inst.winner_model != WinnerModel::Unique)
        throw std::invalid_argument(
            "fpt_solve: destructive goals are handled in the unique-winner model");

    const CandidateId p = inst.focus;
    int k_ac = inst.has_prong(Prong::ACu) ? static_cast<int>(inst.spoilers.size())
                                          : inst.budgets.ac;

    std::vector<CandidateId> pool_ids;
    for (const auto& c : inst.candidates) pool_ids.push_back(c.id);
    for (const auto& a : inst.spoilers) pool_ids.push_back(a.id);
    std::sort(pool_ids.begin(), pool_ids.end());
    const int n = static_cast<int>(pool_ids.size());
    std::set<CandidateId> aids;
    for (const auto& a : inst.spoilers) aids.insert(a.id);
    const std::int64_t cap =
        static_cast<std::int64_t>(inst.registered.size() + inst.unregistered.size());

    // Destructive targets per the strongly-voiced corollary: p fails to be the
    // unique winner iff some rival can be made a (possibly nonunique) winner.
    std::vector<CandidateId> targets;
    WinnerModel target_model;
    if (inst.goal == Goal::Constructive) {
        targets = {p};
        target_model = inst.winner_model;
    } else {
        for (CandidateId c : pool_ids)
            if (c != p) targets.push_back(c);
        target_model = WinnerModel::Nonunique;
    }

    auto try_K = [&](const std::vector<CandidateId>& K,
                     CandidateId target) -> std::optional<ControlPlan> {
        if (K.size() == 1) {
            // Only p remains; it wins vacuously.
            ControlPlan plan;
            for (const auto& c : inst.candidates)
                if (c.id != p) plan.deleted_candidates.insert(c.id);
            if (check_plan_goal(inst, plan, rule)) return plan;
            return std::nullopt;
        }
        for (const auto& win : detail::win_systems_for(rule, K, target, target_model, cap)) {
            ControlProgram cp = build_control_program(K, inst, win);
            auto sol = solve_feasibility(cp.sys);
            if (!sol) continue;
            ControlPlan plan = reconstruct_plan(cp, inst, *sol);
            if (!check_plan_goal(inst, plan, rule))
                throw std::logic_error("fpt_solve: reconstructed plan fails its goal check");
            return plan;
        }
        return std::nullopt;
    };

    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<CandidateId> K;
        for (int b = 0; b < n; ++b)
            if (mask & (1 << b)) K.push_back(pool_ids[b]);
        if (std::find(K.begin(), K.end(), p) == K.end()) continue;
        int dc_used = 0, ac_used = 0;
        std::set<CandidateId> kset(K.begin(), K.end());
        for (const auto& c : inst.candidates)
            if (!kset.count(c.id)) ++dc_used;
        for (CandidateId c : K)
            if (aids.count(c)) ++ac_used;
        if (dc_used > inst.budgets.dc || ac_used > k_ac) continue;

        for (CandidateId target : targets) {
            if (inst.goal == Goal::Destructive && !kset.count(target)) continue;
            if (auto plan = try_K(K, target)) {
                return AttackResult::success(std::move(*plan),
                                             {"candidate set of size " + std::to_string(K.size())});
            }
        }
    }
    return AttackResult::impossible({"no reachable candidate set admits a feasible program"});
}

}  // namespace multiprong
