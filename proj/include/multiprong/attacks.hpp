#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "multiprong/attack_result.hpp"
#include "multiprong/control.hpp"
#include "multiprong/election.hpp"

namespace multiprong {

namespace detail {

inline void require_planner_preconditions(const ControlInstance& inst, const RuleSpec& rule,
                                          RuleSpec::Kind kind, Goal goal,
                                          const std::set<Prong>& allowed,
                                          const std::string& planner) {
    inst.validate();
    if (rule.kind != kind)
        throw std::invalid_argument(planner + ": wrong rule " + rule.name());
    if (inst.goal != goal) throw std::invalid_argument(planner + ": wrong goal");
    if (inst.winner_model != WinnerModel::Unique)
        throw std::invalid_argument(planner + ": unique-winner model only");
    if (inst.resource_model != ResourceModel::Separate)
        throw std::invalid_argument(planner + ": separate-resource model only");
    for (Prong p : inst.prongs)
        if (!allowed.count(p))
            throw std::invalid_argument(planner + ": prong " + prong_name(p) + " not covered");
}

// Certification contract: a planner never reports a plan it cannot re-verify.
inline AttackResult certify(const ControlInstance& inst, const RuleSpec& rule, ControlPlan plan,
                            std::vector<std::string> trace) {
    if (!check_plan_goal(inst, plan, rule))
        throw std::logic_error("planner produced a plan that fails its goal check");
    return AttackResult::success(std::move(plan), std::move(trace));
}

// Replacement ballot "rank p first": p on top, the rest keeping their order.
inline Ballot rank_first(const Ballot& b, CandidateId p) {
    Ballot out;
    out.kind = Ballot::Kind::LinearOrder;
    out.order.push_back(p);
    for (CandidateId c : b.order)
        if (c != p) out.order.push_back(c);
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Plurality, constructive AV+DV+BV: add p-voters, then greedily delete, then
// greedily bribe first-place voters of the strongest rival.
// ---------------------------------------------------------------------------
inline AttackResult plurality_constructive_av_dv_bv(const ControlInstance& inst,
                                                    const RuleSpec& rule = RuleSpec::plurality()) {
    detail::require_planner_preconditions(inst, rule, RuleSpec::Kind::Plurality,
                                          Goal::Constructive, {Prong::AV, Prong::DV, Prong::BV},
                                          "plurality_constructive_av_dv_bv");
    const CandidateId p = inst.focus;
    ControlPlan plan;
    std::vector<std::string> trace;

    std::set<CandidateId> cset;
    for (const auto& c : inst.candidates) cset.insert(c.id);
    Election e = inst.base_election();

    auto rebuild = [&] { e = apply_plan(inst, plan); };
    auto unique_now = [&] { return is_unique_winner(e, rule, p); };
    // Strongest rival (max plurality score, ties by ascending id), or -1.
    auto top_rival = [&]() -> CandidateId {
        auto s = scores(e, rule);
        CandidateId best = -1;
        for (const auto& [id, sc] : s) {
            if (id == p) continue;
            if (best == -1 || s.at(best) < sc) best = id;
        }
        return best;
    };
    // First (by name) voter in e whose top choice is c and who is unbribed.
    auto voter_topping = [&](CandidateId c) -> std::string {
        std::string pick;
        for (const auto& v : e.voters) {
            if (v.ballot.order.empty() || v.ballot.order.front() != c) continue;
            if (plan.bribes.count(v.name)) continue;
            if (pick.empty() || v.name < pick) pick = v.name;
        }
        return pick;
    };

    // Add every unregistered voter who votes for p, as far as the budget goes.
    std::vector<const Voter*> adds;
    for (const auto& w : inst.unregistered) {
        // top choice after restriction to C
        CandidateId top = -1;
        for (CandidateId c : w.ballot.order)
            if (cset.count(c)) { top = c; break; }
        if (top == p) adds.push_back(&w);
    }
    std::sort(adds.begin(), adds.end(),
              [](const Voter* a, const Voter* b) { return a->name < b->name; });
    for (const Voter* w : adds) {
        if (static_cast<int>(plan.added_voters.size()) >= inst.budgets.av) break;
        plan.added_voters.insert(w->name);
        trace.push_back("add voter " + w->name);
    }
    rebuild();

    // One pass over the strongest rival's first-place voters. Bribing such a
    // voter strictly dominates deleting them (p gains the point the rival
    // loses), so bribes are spent first and deletion is the fallback.
    std::set<std::string> vnames;
    for (const auto& v : inst.registered) vnames.insert(v.name);
    while (!unique_now()) {
        CandidateId rival = top_rival();
        if (rival == -1) break;
        std::string victim = voter_topping(rival);
        if (victim.empty()) break;
        if (static_cast<int>(plan.bribes.size()) < inst.budgets.bv) {
            for (const auto& v : e.voters)
                if (v.name == victim) plan.bribes[victim] = detail::rank_first(v.ballot, p);
            trace.push_back("bribe voter " + victim + " to rank p first");
        } else if (static_cast<int>(plan.deleted_voters.size()) < inst.budgets.dv &&
                   vnames.count(victim)) {
            plan.deleted_voters.insert(victim);
            trace.push_back("delete voter " + victim);
        } else {
            break;
        }
        rebuild();
    }

    // Fallback for the empty-electorate corner: import a voter and bribe them
    // in the same breath. One point for p per AV+BV pair spent; bribing an
    // existing rival voter dominates this, so it comes last.
    for (const auto& w : inst.unregistered) {
        if (unique_now()) break;
        if (static_cast<int>(plan.added_voters.size()) >= inst.budgets.av) break;
        if (static_cast<int>(plan.bribes.size()) >= inst.budgets.bv) break;
        if (plan.added_voters.count(w.name)) continue;
        Ballot rb;
        rb.kind = Ballot::Kind::LinearOrder;
        rb.order.push_back(p);
        for (CandidateId c : w.ballot.order)
            if (cset.count(c) && c != p) rb.order.push_back(c);
        plan.added_voters.insert(w.name);
        plan.bribes[w.name] = rb;
        trace.push_back("add and bribe voter " + w.name);
        rebuild();
    }

    if (!unique_now()) return AttackResult::impossible(std::move(trace));
    return detail::certify(inst, rule, std::move(plan), std::move(trace));
}

// ---------------------------------------------------------------------------
// Plurality, destructive AV+DV+BV: per rival, pump the rival and drain p.
// ---------------------------------------------------------------------------
inline AttackResult plurality_destructive_av_dv_bv(const ControlInstance& inst,
                                                   const RuleSpec& rule = RuleSpec::plurality()) {
    detail::require_planner_preconditions(inst, rule, RuleSpec::Kind::Plurality, Goal::Destructive,
                                          {Prong::AV, Prong::DV, Prong::BV},
                                          "plurality_destructive_av_dv_bv");
    const CandidateId p = inst.focus;
    if (!is_unique_winner(inst.base_election(), rule, p))
        return detail::certify(inst, rule, {}, {"goal already holds"});

    std::set<CandidateId> cset;
    for (const auto& c : inst.candidates) cset.insert(c.id);

    std::vector<CandidateId> rivals(cset.begin(), cset.end());
    for (CandidateId c : rivals) {
        if (c == p) continue;
        ControlPlan plan;
        std::vector<std::string> trace;
        auto done = [&] {
            return goal_holds(apply_plan(inst, plan), rule, p, inst.goal, inst.winner_model);
        };

        // Add voters who vote for c.
        for (const auto& w : inst.unregistered) {
            if (static_cast<int>(plan.added_voters.size()) >= inst.budgets.av) break;
            CandidateId top = -1;
            for (CandidateId cc : w.ballot.order)
                if (cset.count(cc)) { top = cc; break; }
            if (top == c) {
                plan.added_voters.insert(w.name);
                trace.push_back("add voter " + w.name);
                if (done()) return detail::certify(inst, rule, std::move(plan), std::move(trace));
            }
        }
        // Delete voters who vote for p.
        for (const auto& v : inst.registered) {
            if (static_cast<int>(plan.deleted_voters.size()) >= inst.budgets.dv) break;
            CandidateId top = -1;
            for (CandidateId cc : v.ballot.order)
                if (cset.count(cc)) { top = cc; break; }
            if (top == p) {
                plan.deleted_voters.insert(v.name);
                trace.push_back("delete voter " + v.name);
                if (done()) return detail::certify(inst, rule, std::move(plan), std::move(trace));
            }
        }
        // Bribe remaining p-voters over to c.
        Election e = apply_plan(inst, plan);
        for (const auto& v : e.voters) {
            if (static_cast<int>(plan.bribes.size()) >= inst.budgets.bv) break;
            if (v.ballot.order.empty() || v.ballot.order.front() != p) continue;
            plan.bribes[v.name] = detail::rank_first(v.ballot, c);
            trace.push_back("bribe voter " + v.name + " to vote for rival");
            if (done()) return detail::certify(inst, rule, std::move(plan), std::move(trace));
        }
        if (done()) return detail::certify(inst, rule, std::move(plan), std::move(trace));
    }
    return AttackResult::impossible({"no rival can catch up"});
}

// ---------------------------------------------------------------------------
// Condorcet, destructive AC+AV+DV+BV: defeat p head-to-head with some rival,
// possibly an added one.
// ---------------------------------------------------------------------------
inline AttackResult condorcet_destructive_ac_av_dv_bv(
    const ControlInstance& inst, const RuleSpec& rule = RuleSpec::condorcet()) {
    detail::require_planner_preconditions(inst, rule, RuleSpec::Kind::Condorcet, Goal::Destructive,
                                          {Prong::AC, Prong::AV, Prong::DV, Prong::BV},
                                          "condorcet_destructive_ac_av_dv_bv");
    const CandidateId p = inst.focus;
    if (!is_unique_winner(inst.base_election(), rule, p))
        return detail::certify(inst, rule, {}, {"p is not a Condorcet winner already"});

    std::vector<CandidateId> rivals;
    for (const auto& c : inst.candidates)
        if (c.id != p) rivals.push_back(c.id);
    for (const auto& a : inst.spoilers) rivals.push_back(a.id);
    std::sort(rivals.begin(), rivals.end());

    std::set<CandidateId> aids;
    for (const auto& a : inst.spoilers) aids.insert(a.id);

    for (CandidateId c : rivals) {
        ControlPlan plan;
        std::vector<std::string> trace;
        if (aids.count(c)) {
            // Adding the single defeating candidate is enough.
            if (inst.budgets.ac < 1) continue;
            plan.added_candidates.insert(c);
            trace.push_back("add candidate " + std::to_string(c));
        }
        // Add as many voters who prefer c to p as possible.
        for (const auto& w : inst.unregistered) {
            if (static_cast<int>(plan.added_voters.size()) >= inst.budgets.av) break;
            if (w.ballot.prefers(c, p)) {
                plan.added_voters.insert(w.name);
                trace.push_back("add voter " + w.name);
            }
        }
        // Delete as many voters who prefer p to c as possible.
        for (const auto& v : inst.registered) {
            if (static_cast<int>(plan.deleted_voters.size()) >= inst.budgets.dv) break;
            if (v.ballot.prefers(p, c)) {
                plan.deleted_voters.insert(v.name);
                trace.push_back("delete voter " + v.name);
            }
        }
        // Bribe remaining p-over-c voters to rank c first.
        Election e = apply_plan(inst, plan);
        for (const auto& v : e.voters) {
            if (static_cast<int>(plan.bribes.size()) >= inst.budgets.bv) break;
            if (v.ballot.prefers(p, c)) {
                plan.bribes[v.name] = detail::rank_first(v.ballot, c);
                trace.push_back("bribe voter " + v.name + " to rank rival first");
            }
        }
        if (check_plan_goal(inst, plan, rule))
            return detail::certify(inst, rule, std::move(plan), std::move(trace));
    }
    return AttackResult::impossible({"no rival can tie or beat p head-to-head"});
}

// ---------------------------------------------------------------------------
// Approval, destructive AC+AV+DV+BV.
// ---------------------------------------------------------------------------
inline AttackResult approval_destructive_ac_av_dv_bv(
    const ControlInstance& inst, const RuleSpec& rule = RuleSpec::approval()) {
    detail::require_planner_preconditions(inst, rule, RuleSpec::Kind::Approval, Goal::Destructive,
                                          {Prong::AC, Prong::AV, Prong::DV, Prong::BV},
                                          "approval_destructive_ac_av_dv_bv");
    const CandidateId p = inst.focus;
    if (!is_unique_winner(inst.base_election(), rule, p))
        return detail::certify(inst, rule, {}, {"goal already holds"});

    std::vector<CandidateId> rivals;
    for (const auto& c : inst.candidates)
        if (c.id != p) rivals.push_back(c.id);
    for (const auto& a : inst.spoilers) rivals.push_back(a.id);
    std::sort(rivals.begin(), rivals.end());

    std::set<CandidateId> aids;
    for (const auto& a : inst.spoilers) aids.insert(a.id);

    for (CandidateId c : rivals) {
        ControlPlan plan;
        std::vector<std::string> trace;
        if (aids.count(c)) {
            if (inst.budgets.ac < 1) continue;
            plan.added_candidates.insert(c);
            trace.push_back("add candidate " + std::to_string(c));
        }
        // Add voters who approve of c but not of p.
        for (const auto& w : inst.unregistered) {
            if (static_cast<int>(plan.added_voters.size()) >= inst.budgets.av) break;
            if (w.ballot.approves(c) && !w.ballot.approves(p)) {
                plan.added_voters.insert(w.name);
                trace.push_back("add voter " + w.name);
            }
        }
        // Delete voters who approve of p but not of c.
        for (const auto& v : inst.registered) {
            if (static_cast<int>(plan.deleted_voters.size()) >= inst.budgets.dv) break;
            if (v.ballot.approves(p) && !v.ballot.approves(c)) {
                plan.deleted_voters.insert(v.name);
                trace.push_back("delete voter " + v.name);
            }
        }
        // Bribe remaining p-not-c approvers to reverse approvals on p and c.
        Election e = apply_plan(inst, plan);
        for (const auto& v : e.voters) {
            if (static_cast<int>(plan.bribes.size()) >= inst.budgets.bv) break;
            if (v.ballot.approves(p) && !v.ballot.approves(c)) {
                Ballot nb = v.ballot;
                nb.approved.erase(std::find(nb.approved.begin(), nb.approved.end(), p));
                nb.approved.push_back(c);
                std::sort(nb.approved.begin(), nb.approved.end());
                plan.bribes[v.name] = nb;
                trace.push_back("bribe voter " + v.name + " to swap p/rival approvals");
            }
        }
        if (check_plan_goal(inst, plan, rule))
            return detail::certify(inst, rule, std::move(plan), std::move(trace));
    }
    return AttackResult::impossible({"no rival reaches p's approval score"});
}

// ---------------------------------------------------------------------------
// Copeland^α, destructive AC+DC: pairwise-score decomposition greedy.
// ---------------------------------------------------------------------------
inline AttackResult copeland_destructive_ac_dc(const ControlInstance& inst, const RuleSpec& rule) {
    detail::require_planner_preconditions(inst, rule, RuleSpec::Kind::Copeland, Goal::Destructive,
                                          {Prong::AC, Prong::DC}, "copeland_destructive_ac_dc");
    const CandidateId d = inst.focus;
    if (!is_unique_winner(inst.base_election(), rule, d))
        return detail::certify(inst, rule, {}, {"goal already holds"});

    Election pool;
    pool.candidates = inst.all_candidates();
    pool.voters = inst.registered;

    // score^α of x in the two-candidate election ({x,y},V).
    auto pair_score = [&](CandidateId x, CandidateId y) -> Rational {
        int nxy = pairwise_tally(pool, x, y);
        int nyx = static_cast<int>(pool.voters.size()) - nxy;
        if (nxy > nyx) return Rational(1);
        if (nxy == nyx) return rule.alpha;
        return Rational(0);
    };

    std::set<CandidateId> aids, cids;
    for (const auto& a : inst.spoilers) aids.insert(a.id);
    for (const auto& c : inst.candidates) cids.insert(c.id);

    std::vector<CandidateId> challengers(cids.begin(), cids.end());
    challengers.insert(challengers.end(), aids.begin(), aids.end());
    std::sort(challengers.begin(), challengers.end());

    for (CandidateId c : challengers) {
        if (c == d) continue;
        ControlPlan plan;
        std::vector<std::string> trace;
        int adds_left = inst.budgets.ac;
        if (aids.count(c)) {
            if (adds_left < 1) continue;
            plan.added_candidates.insert(c);
            --adds_left;
            trace.push_back("add challenger " + std::to_string(c));
        }
        // a(c') = score({c,c'},V)(c) − score({d,c'},V)(d): the pairwise-score
        // margin gained by adding spoiler c'.
        while (adds_left > 0) {
            CandidateId best = -1;
            Rational best_a(0);
            for (CandidateId cp : aids) {
                if (cp == c || plan.added_candidates.count(cp)) continue;
                Rational a = pair_score(c, cp) - pair_score(d, cp);
                if (a > Rational(0) && (best == -1 || a > best_a)) {
                    best = cp;
                    best_a = a;
                }
            }
            if (best == -1) break;
            plan.added_candidates.insert(best);
            --adds_left;
            trace.push_back("add spoiler " + std::to_string(best));
        }
        // r(c') = score({d,c'},V)(d) − score({c,c'},V)(c): the margin removed
        // by deleting incumbent c'.
        while (static_cast<int>(plan.deleted_candidates.size()) < inst.budgets.dc) {
            CandidateId best = -1;
            Rational best_r(0);
            for (CandidateId cp : cids) {
                if (cp == c || cp == d || plan.deleted_candidates.count(cp)) continue;
                Rational r = pair_score(d, cp) - pair_score(c, cp);
                if (r > Rational(0) && (best == -1 || r > best_r)) {
                    best = cp;
                    best_r = r;
                }
            }
            if (best == -1) break;
            plan.deleted_candidates.insert(best);
            trace.push_back("delete candidate " + std::to_string(best));
        }
        if (check_plan_goal(inst, plan, rule))
            return detail::certify(inst, rule, std::move(plan), std::move(trace));
    }
    return AttackResult::impossible({"no challenger can match d"});
}

// ---------------------------------------------------------------------------
// Maximin, constructive AC_u+DC: target-score sweep with the fixing loop.
// ---------------------------------------------------------------------------
inline AttackResult maximin_constructive_acu_dc(const ControlInstance& inst,
                                                const RuleSpec& rule = RuleSpec::maximin()) {
    detail::require_planner_preconditions(inst, rule, RuleSpec::Kind::Maximin, Goal::Constructive,
                                          {Prong::ACu, Prong::DC}, "maximin_constructive_acu_dc");
    const CandidateId p = inst.focus;

    if (inst.budgets.dc >= static_cast<int>(inst.candidates.size()) - 1) {
        ControlPlan plan;
        for (const auto& c : inst.candidates)
            if (c.id != p) plan.deleted_candidates.insert(c.id);
        return detail::certify(inst, rule, std::move(plan), {"delete all candidates but p"});
    }

    Election pool;
    pool.candidates = inst.all_candidates();
    pool.voters = inst.registered;

    std::set<CandidateId> all_ids;
    for (const auto& c : pool.candidates) all_ids.insert(c.id);
    std::set<CandidateId> cids;
    for (const auto& c : inst.candidates) cids.insert(c.id);
    std::set<CandidateId> aids;
    for (const auto& a : inst.spoilers) aids.insert(a.id);

    // P: every score value p can attain by deletions.
    std::set<int> targets;
    for (CandidateId c : all_ids)
        if (c != p) targets.insert(pairwise_tally(pool, p, c));
    if (all_ids.size() == 1) targets.insert(static_cast<int>(pool.voters.size()));

    for (int k : targets) {
        // Q(k): candidates preventing p from having at least k points.
        std::set<CandidateId> to_delete;
        for (CandidateId c : all_ids)
            if (c != p && pairwise_tally(pool, p, c) < k) to_delete.insert(c);

        // Fixing loop: delete anyone who still reaches score k.
        for (;;) {
            std::set<CandidateId> keep = all_ids;
            for (CandidateId c : to_delete) keep.erase(c);
            Election cur = restrict(pool, keep);
            auto s = scores(cur, rule);
            CandidateId offender = -1;
            for (const auto& [id, sc] : s) {
                if (id == p) continue;
                if (sc >= Rational(k)) { offender = id; break; }  // ascending id via map order
            }
            if (offender == -1) break;
            to_delete.insert(offender);
        }

        int dc_used = 0;
        for (CandidateId c : to_delete)
            if (cids.count(c)) ++dc_used;
        if (dc_used <= inst.budgets.dc) {
            ControlPlan plan;
            for (CandidateId c : to_delete)
                if (cids.count(c)) plan.deleted_candidates.insert(c);
            for (CandidateId a : aids)
                if (!to_delete.count(a)) plan.added_candidates.insert(a);
            return detail::certify(inst, rule, std::move(plan),
                                   {"target score " + std::to_string(k)});
        }
    }
    return AttackResult::impossible({"no attainable target score works"});
}

// ---------------------------------------------------------------------------
// Maximin, destructive AC+DC: guess up to two candidates to add (challenger c'
// and score-capper d'), then the score-maximizing legal deletion set.
// ---------------------------------------------------------------------------
inline AttackResult maximin_destructive_ac_dc(const ControlInstance& inst,
                                              const RuleSpec& rule = RuleSpec::maximin()) {
    detail::require_planner_preconditions(inst, rule, RuleSpec::Kind::Maximin, Goal::Destructive,
                                          {Prong::AC, Prong::DC}, "maximin_destructive_ac_dc");
    const CandidateId d = inst.focus;
    if (!is_unique_winner(inst.base_election(), rule, d))
        return detail::certify(inst, rule, {}, {"goal already holds"});

    Election pool;
    pool.candidates = inst.all_candidates();
    pool.voters = inst.registered;
    const int nv = static_cast<int>(pool.voters.size());

    std::set<CandidateId> cids, aids;
    for (const auto& c : inst.candidates) cids.insert(c.id);
    for (const auto& a : inst.spoilers) aids.insert(a.id);
    std::vector<CandidateId> others;
    for (const auto& c : pool.candidates)
        if (c.id != d) others.push_back(c.id);
    std::sort(others.begin(), others.end());

    // Guesses: every {c',d'} with 0 ≤ |{c',d'}| ≤ 2, both roles tried.
    std::vector<std::pair<CandidateId, CandidateId>> guesses;  // (c', d'), -1 = absent
    for (CandidateId cp : others) {
        guesses.push_back({cp, -1});
        for (CandidateId dp : others)
            if (dp != cp) guesses.push_back({cp, dp});
    }

    for (auto [cp, dp] : guesses) {
        std::set<CandidateId> guess = {cp};
        if (dp != -1) guess.insert(dp);
        int ac_needed = 0;
        for (CandidateId g : guess)
            if (aids.count(g)) ++ac_needed;
        if (ac_needed > inst.budgets.ac) continue;

        // D(i) = incumbents (outside {c',d',d}) with N(c',·) < i; take the
        // largest i whose D fits the deletion budget.
        std::set<CandidateId> deletions;
        for (int i = nv; i >= 1; --i) {
            std::set<CandidateId> di;
            for (CandidateId c : cids)
                if (c != d && !guess.count(c) && pairwise_tally(pool, cp, c) < i) di.insert(c);
            if (static_cast<int>(di.size()) <= inst.budgets.dc) {
                deletions = di;
                break;
            }
        }

        ControlPlan plan;
        for (CandidateId g : guess)
            if (aids.count(g)) plan.added_candidates.insert(g);
        plan.deleted_candidates = deletions;
        if (check_plan_goal(inst, plan, rule))
            return detail::certify(inst, rule, std::move(plan),
                                   {"guess challenger " + std::to_string(cp)});
    }
    return AttackResult::impossible({"no two-candidate guess dethrones d"});
}

// ---------------------------------------------------------------------------
// OriginalLlull, constructive single-prong AC / AV: make the voter-name set
// equal the candidate set, then check Copeland^1 victory.
// ---------------------------------------------------------------------------
inline AttackResult llull_constructive_ac(const ControlInstance& inst,
                                          const RuleSpec& rule = RuleSpec::original_llull()) {
    detail::require_planner_preconditions(inst, rule, RuleSpec::Kind::OriginalLlull,
                                          Goal::Constructive, {Prong::AC, Prong::ACu},
                                          "llull_constructive_ac");
    std::set<std::string> vnames;
    for (const auto& v : inst.registered) vnames.insert(v.name);
    std::set<std::string> cnames;
    for (const auto& c : inst.candidates) cnames.insert(c.name);

    for (const auto& n : cnames)
        if (!vnames.count(n)) return AttackResult::impossible({"voter named " + n + " missing"});

    ControlPlan plan;
    int k_ac = inst.has_prong(Prong::ACu) ? static_cast<int>(inst.spoilers.size())
                                          : inst.budgets.ac;
    for (const auto& n : vnames) {
        if (cnames.count(n)) continue;
        CandidateId found = -1;
        for (const auto& a : inst.spoilers)
            if (a.name == n && found == -1) found = a.id;
        if (found == -1)
            return AttackResult::impossible({"no addable candidate named " + n});
        plan.added_candidates.insert(found);
    }
    if (static_cast<int>(plan.added_candidates.size()) > k_ac)
        return AttackResult::impossible({"name equation needs more additions than k_AC"});
    if (!check_plan_goal(inst, plan, rule))
        return AttackResult::impossible({"name equation reachable but p does not win"});
    return detail::certify(inst, rule, std::move(plan), {"match candidate set to voter names"});
}

inline AttackResult llull_constructive_av(const ControlInstance& inst,
                                          const RuleSpec& rule = RuleSpec::original_llull()) {
    detail::require_planner_preconditions(inst, rule, RuleSpec::Kind::OriginalLlull,
                                          Goal::Constructive, {Prong::AV},
                                          "llull_constructive_av");
    std::set<std::string> vnames;
    for (const auto& v : inst.registered) vnames.insert(v.name);
    std::set<std::string> cnames;
    for (const auto& c : inst.candidates) cnames.insert(c.name);

    for (const auto& n : vnames)
        if (!cnames.count(n))
            return AttackResult::impossible({"registered voter " + n + " has no candidate"});

    ControlPlan plan;
    for (const auto& n : cnames) {
        if (vnames.count(n)) continue;
        bool found = false;
        for (const auto& w : inst.unregistered)
            if (w.name == n) found = true;
        if (!found) return AttackResult::impossible({"no addable voter named " + n});
        plan.added_voters.insert(n);
    }
    if (static_cast<int>(plan.added_voters.size()) > inst.budgets.av)
        return AttackResult::impossible({"name equation needs more additions than k_AV"});
    if (!check_plan_goal(inst, plan, rule))
        return AttackResult::impossible({"name equation reachable but p does not win"});
    return detail::certify(inst, rule, std::move(plan), {"match voter names to candidate set"});
}

}  // namespace multiprong
