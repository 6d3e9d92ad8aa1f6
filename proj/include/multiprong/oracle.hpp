#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "multiprong/attack_result.hpp"
#include "multiprong/control.hpp"
#include "multiprong/election.hpp"

namespace multiprong {

// Hard caps refusing instances beyond desk scale; enumeration is exact within.
struct OracleEnvelope {
    int max_candidates = 5;  // |C ∪ A|
    int max_voters = 8;      // |V ∪ W|
    int max_bribes = 3;      // k_BV

    void check(const ControlInstance& inst) const {
        int nc = static_cast<int>(inst.candidates.size() + inst.spoilers.size());
        int nv = static_cast<int>(inst.registered.size() + inst.unregistered.size());
        if (nc > max_candidates)
            throw std::invalid_argument("oracle envelope exceeded: " + std::to_string(nc) +
                                        " candidates > " + std::to_string(max_candidates));
        if (nv > max_voters)
            throw std::invalid_argument("oracle envelope exceeded: " + std::to_string(nv) +
                                        " voters > " + std::to_string(max_voters));
        if (std::min(inst.budgets.bv, nv) > max_bribes)
            throw std::invalid_argument("oracle envelope exceeded: k_BV " +
                                        std::to_string(inst.budgets.bv) + " > " +
                                        std::to_string(max_bribes));
    }
};

struct OracleOptions {
    OracleEnvelope envelope;
    // Restrict bribe replacements to "lift one fixed candidate to the top of
    // the voter's current ballot". Used by the BV-reduction sweeps, where that
    // restriction is known not to change the decision answer. The lifted
    // candidate defaults to the focus; destructive sweeps lift the rival that
    // is meant to catch up instead.
    bool lift_focus_bribes_only = false;
    CandidateId lift_candidate = -1;  // -1: lift the focus
};

namespace detail {

// All t-element index subsets of {0..n-1} in lexicographic order.
inline void for_each_subset(int n, int t, const std::function<bool(const std::vector<int>&)>& fn) {
    std::vector<int> idx(t);
    std::function<bool(int, int)> rec = [&](int start, int depth) -> bool {
        if (depth == t) return fn(idx);
        for (int i = start; i <= n - (t - depth); ++i) {
            idx[depth] = i;
            if (!rec(i + 1, depth + 1)) return false;
        }
        return true;
    };
    rec(0, 0);  // return value signals "stop"; callers ignore the final result
}

inline Ballot lift_to_top(const Ballot& b, CandidateId p) {
    if (!b.is_linear()) {
        Ballot out = b;
        if (!out.approves(p)) {
            out.approved.push_back(p);
            std::sort(out.approved.begin(), out.approved.end());
        }
        return out;
    }
    Ballot out;
    out.kind = Ballot::Kind::LinearOrder;
    out.order.push_back(p);
    for (CandidateId c : b.order)
        if (c != p) out.order.push_back(c);
    return out;
}

}  // namespace detail

// Exhaustive ground-truth solver. Enumerates every legal plan in canonical
// order — sizes (|A'|,|C'|,|W'|,|V'|,|bribes|) lexicographically, subsets in
// lexicographic id/name order within each size — and returns the first
// successful plan, or Impossible. The visitor form underlies both the decision
// and the counting entry points.
inline void oracle_for_each_solution(const ControlInstance& inst, const RuleSpec& rule,
                                     const OracleOptions& opts,
                                     const std::function<bool(const ControlPlan&)>& on_hit) {
    inst.validate();
    opts.envelope.check(inst);
    if (inst.resource_model != ResourceModel::Separate)
        throw std::invalid_argument("oracle handles separate-resource instances; "
                                    "expand shared instances first");

    const auto& A = inst.spoilers;
    const auto& C = inst.candidates;
    const auto& V = inst.registered;
    const auto& W = inst.unregistered;

    // Budget clipping: budgets beyond pool sizes change nothing.
    int k_ac = std::min(inst.has_prong(Prong::ACu) ? static_cast<int>(A.size()) : inst.budgets.ac,
                        static_cast<int>(A.size()));
    int k_dc = std::min(inst.budgets.dc, static_cast<int>(C.size()) - 1);
    int k_av = std::min(inst.budgets.av, static_cast<int>(W.size()));
    int k_dv = std::min(inst.budgets.dv, static_cast<int>(V.size()));
    int k_bv = std::min(inst.budgets.bv, static_cast<int>(V.size() + W.size()));

    std::vector<CandidateId> deletable;  // C − {p}, in candidate order
    for (const auto& c : C)
        if (c.id != inst.focus) deletable.push_back(c.id);

    Election pool = inst.pool_election();
    bool stop = false;

    for (int sA = 0; sA <= k_ac && !stop; ++sA)
        for (int sC = 0; sC <= k_dc && !stop; ++sC) {
            detail::for_each_subset(static_cast<int>(A.size()), sA, [&](const std::vector<int>& ai) {
                detail::for_each_subset(
                    static_cast<int>(deletable.size()), sC, [&](const std::vector<int>& ci) {
                        ControlPlan base;
                        for (int i : ai) base.added_candidates.insert(A[i].id);
                        for (int i : ci) base.deleted_candidates.insert(deletable[i]);

                        std::set<CandidateId> final_set;
                        for (const auto& c : C)
                            if (!base.deleted_candidates.count(c.id)) final_set.insert(c.id);
                        for (CandidateId a : base.added_candidates) final_set.insert(a);

                        Election restricted = restrict(pool, final_set);
                        // restricted.voters: V first, then W, in instance order.

                        // Replacement ballots available to the briber on this candidate set.
                        std::vector<CandidateId> fs(final_set.begin(), final_set.end());
                        std::vector<Ballot> replacements;
                        if (k_bv > 0 && !opts.lift_focus_bribes_only) {
                            if (rule.uses_approval_ballots()) {
                                int m = static_cast<int>(fs.size());
                                for (int mask = 0; mask < (1 << m); ++mask) {
                                    std::vector<CandidateId> app;
                                    for (int b = 0; b < m; ++b)
                                        if (mask & (1 << b)) app.push_back(fs[b]);
                                    replacements.push_back(Ballot::approval(std::move(app)));
                                }
                            } else {
                                std::vector<CandidateId> perm = fs;
                                do {
                                    replacements.push_back(Ballot::linear(perm));
                                } while (std::next_permutation(perm.begin(), perm.end()));
                            }
                        }

                        for (int sW = 0; sW <= k_av && !stop; ++sW)
                            for (int sV = 0; sV <= k_dv && !stop; ++sV) {
                                detail::for_each_subset(
                                    static_cast<int>(W.size()), sW, [&](const std::vector<int>& wi) {
                                        detail::for_each_subset(
                                            static_cast<int>(V.size()), sV,
                                            [&](const std::vector<int>& vi) {
                                                ControlPlan plan = base;
                                                for (int i : wi)
                                                    plan.added_voters.insert(W[i].name);
                                                for (int i : vi)
                                                    plan.deleted_voters.insert(V[i].name);

                                                // Final electorate in V-then-W order.
                                                Election e;
                                                e.candidates = restricted.candidates;
                                                std::vector<int> elect_idx;
                                                for (std::size_t i = 0; i < V.size(); ++i)
                                                    if (!plan.deleted_voters.count(V[i].name))
                                                        elect_idx.push_back(static_cast<int>(i));
                                                for (int i : wi)
                                                    elect_idx.push_back(
                                                        static_cast<int>(V.size()) + i);
                                                for (int i : elect_idx)
                                                    e.voters.push_back(restricted.voters[i]);

                                                int ne = static_cast<int>(e.voters.size());
                                                for (int sB = 0; sB <= k_bv && !stop; ++sB) {
                                                    detail::for_each_subset(
                                                        ne, sB, [&](const std::vector<int>& bi) {
                                                            // Odometer over replacement ballots
                                                            // for the bribed voters.
                                                            std::vector<Ballot> saved;
                                                            for (int i : bi)
                                                                saved.push_back(e.voters[i].ballot);
                                                            std::size_t nopt =
                                                                opts.lift_focus_bribes_only
                                                                    ? 1
                                                                    : replacements.size();
                                                            std::vector<std::size_t> pick(sB, 0);
                                                            bool more = true;
                                                            while (more && !stop) {
                                                                for (int t = 0; t < sB; ++t) {
                                                                    int i = bi[t];
                                                                    e.voters[i].ballot =
                                                                        opts.lift_focus_bribes_only
                                                                            ? detail::lift_to_top(
                                                                                  saved[t],
                                                                                  opts.lift_candidate == -1
                                                                                      ? inst.focus
                                                                                      : opts.lift_candidate)
                                                                            : replacements[pick[t]];
                                                                }
                                                                if (goal_holds(e, rule, inst.focus,
                                                                               inst.goal,
                                                                               inst.winner_model)) {
                                                                    ControlPlan hit = plan;
                                                                    for (int t = 0; t < sB; ++t)
                                                                        hit.bribes[e.voters[bi[t]]
                                                                                       .name] =
                                                                            e.voters[bi[t]].ballot;
                                                                    if (!on_hit(hit)) stop = true;
                                                                }
                                                                // advance odometer
                                                                more = false;
                                                                for (int t = sB - 1; t >= 0; --t) {
                                                                    if (++pick[t] < nopt) {
                                                                        more = true;
                                                                        break;
                                                                    }
                                                                    pick[t] = 0;
                                                                }
                                                                if (sB == 0) more = false;
                                                            }
                                                            for (int t = 0; t < sB; ++t)
                                                                e.voters[bi[t]].ballot = saved[t];
                                                            return !stop;
                                                        });
                                                    if (stop) break;
                                                }
                                                return !stop;
                                            });
                                        return !stop;
                                    });
                            }
                        return !stop;
                    });
                return !stop;
            });
        }
}

inline AttackResult solve_exhaustive(const ControlInstance& inst, const RuleSpec& rule,
                                     const OracleOptions& opts = {}) {
    AttackResult result = AttackResult::impossible();
    oracle_for_each_solution(inst, rule, opts, [&](const ControlPlan& plan) {
        result = AttackResult::success(plan, {"exhaustive search hit"});
        return false;  // first hit in canonical order
    });
    return result;
}

inline std::int64_t count_solutions(const ControlInstance& inst, const RuleSpec& rule,
                                    const OracleOptions& opts = {}) {
    std::int64_t n = 0;
    oracle_for_each_solution(inst, rule, opts, [&](const ControlPlan&) {
        ++n;
        return true;
    });
    return n;
}

}  // namespace multiprong
