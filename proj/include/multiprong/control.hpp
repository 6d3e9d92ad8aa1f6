#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "multiprong/election.hpp"

namespace multiprong {

enum class Prong { AC, ACu, DC, AV, DV, BV };

inline std::string prong_name(Prong p) {
    switch (p) {
        case Prong::AC: return "AC";
        case Prong::ACu: return "ACu";
        case Prong::DC: return "DC";
        case Prong::AV: return "AV";
        case Prong::DV: return "DV";
        case Prong::BV: return "BV";
    }
    return "?";
}

enum class Goal { Constructive, Destructive };
enum class WinnerModel { Unique, Nonunique };
enum class ResourceModel { Separate, Shared };

struct Budgets {
    int ac = 0;
    int dc = 0;
    int av = 0;
    int dv = 0;
    int bv = 0;
};

// One multiprong control instance: the registered election (C,V), the pools
// the attacker may draw on (spoilers A, unregistered voters W), the focus
// candidate, and per-prong budgets. Ballots in V and W range over C ∪ A.
struct ControlInstance {
    std::vector<Candidate> candidates;    // C
    std::vector<Candidate> spoilers;      // A, disjoint from C
    std::vector<Voter> registered;        // V
    std::vector<Voter> unregistered;      // W, names disjoint from V
    CandidateId focus = 0;                // p ∈ C
    Budgets budgets;
    Goal goal = Goal::Constructive;
    WinnerModel winner_model = WinnerModel::Unique;
    ResourceModel resource_model = ResourceModel::Separate;
    int shared_budget = 0;                // Shared only
    std::set<Prong> prongs;

    std::vector<Candidate> all_candidates() const {
        std::vector<Candidate> all = candidates;
        all.insert(all.end(), spoilers.begin(), spoilers.end());
        return all;
    }

    // The election (C ∪ A, V ∪ W); ballots are stated over this full set.
    Election pool_election() const {
        Election e;
        e.candidates = all_candidates();
        e.voters = registered;
        e.voters.insert(e.voters.end(), unregistered.begin(), unregistered.end());
        return e;
    }

    // The pre-attack election (C, V) with ballots restricted to C.
    Election base_election() const {
        Election e;
        e.candidates = all_candidates();
        e.voters = registered;
        std::set<CandidateId> keep;
        for (const auto& c : candidates) keep.insert(c.id);
        return restrict(e, keep);
    }

    bool has_prong(Prong p) const { return prongs.count(p) > 0; }
    bool candidate_adding_allowed() const { return has_prong(Prong::AC) || has_prong(Prong::ACu); }

    void validate() const {
        pool_election().validate();
        std::set<CandidateId> cids, aids;
        for (const auto& c : candidates) cids.insert(c.id);
        for (const auto& a : spoilers) aids.insert(a.id);
        for (CandidateId a : aids)
            if (cids.count(a)) throw std::invalid_argument("spoiler pool overlaps C");
        if (!cids.count(focus)) throw std::invalid_argument("focus candidate not in C");
        if (budgets.ac < 0 || budgets.dc < 0 || budgets.av < 0 || budgets.dv < 0 || budgets.bv < 0)
            throw std::invalid_argument("negative budget");
        if (has_prong(Prong::AC) && has_prong(Prong::ACu))
            throw std::invalid_argument("AC and ACu are mutually exclusive prongs");
        if (has_prong(Prong::ACu) && budgets.ac != static_cast<int>(spoilers.size()))
            throw std::invalid_argument("ACu requires k_AC = |A|");
        if (!candidate_adding_allowed() && (budgets.ac != 0 || !spoilers.empty()))
            throw std::invalid_argument("AC prong missing but spoiler pool/budget nonzero");
        if (!has_prong(Prong::DC) && budgets.dc != 0)
            throw std::invalid_argument("DC prong missing but k_DC nonzero");
        if (!has_prong(Prong::AV) && (budgets.av != 0 || !unregistered.empty()))
            throw std::invalid_argument("AV prong missing but unregistered pool/budget nonzero");
        if (!has_prong(Prong::DV) && budgets.dv != 0)
            throw std::invalid_argument("DV prong missing but k_DV nonzero");
        if (!has_prong(Prong::BV) && budgets.bv != 0)
            throw std::invalid_argument("BV prong missing but k_BV nonzero");
    }
};

// A concrete attack against a ControlInstance.
struct ControlPlan {
    std::set<CandidateId> added_candidates;   // A' ⊆ A
    std::set<CandidateId> deleted_candidates; // C' ⊆ C − {p}
    std::set<std::string> added_voters;       // W' by name
    std::set<std::string> deleted_voters;     // V' by name
    std::map<std::string, Ballot> bribes;     // voter in (V−V')∪W' → replacement ballot

    bool empty() const {
        return added_candidates.empty() && deleted_candidates.empty() && added_voters.empty() &&
               deleted_voters.empty() && bribes.empty();
    }
};

inline void check_plan_legal(const ControlInstance& inst, const ControlPlan& plan) {
    std::set<CandidateId> cids, aids;
    for (const auto& c : inst.candidates) cids.insert(c.id);
    for (const auto& a : inst.spoilers) aids.insert(a.id);

    int k_ac = inst.has_prong(Prong::ACu) ? static_cast<int>(inst.spoilers.size()) : inst.budgets.ac;
    if (static_cast<int>(plan.added_candidates.size()) > k_ac)
        throw std::invalid_argument("plan breaches k_AC: adds " +
                                    std::to_string(plan.added_candidates.size()));
    for (CandidateId a : plan.added_candidates)
        if (!aids.count(a)) throw std::invalid_argument("plan adds candidate outside A");

    if (static_cast<int>(plan.deleted_candidates.size()) > inst.budgets.dc)
        throw std::invalid_argument("plan breaches k_DC: deletes " +
                                    std::to_string(plan.deleted_candidates.size()));
    for (CandidateId c : plan.deleted_candidates) {
        if (!cids.count(c)) throw std::invalid_argument("plan deletes candidate outside C");
        if (c == inst.focus) throw std::invalid_argument("plan deletes the focus candidate");
    }

    std::set<std::string> vnames, wnames;
    for (const auto& v : inst.registered) vnames.insert(v.name);
    for (const auto& w : inst.unregistered) wnames.insert(w.name);

    if (static_cast<int>(plan.added_voters.size()) > inst.budgets.av)
        throw std::invalid_argument("plan breaches k_AV: adds " +
                                    std::to_string(plan.added_voters.size()));
    for (const auto& n : plan.added_voters)
        if (!wnames.count(n)) throw std::invalid_argument("plan adds voter outside W: " + n);

    if (static_cast<int>(plan.deleted_voters.size()) > inst.budgets.dv)
        throw std::invalid_argument("plan breaches k_DV: deletes " +
                                    std::to_string(plan.deleted_voters.size()));
    for (const auto& n : plan.deleted_voters)
        if (!vnames.count(n)) throw std::invalid_argument("plan deletes voter outside V: " + n);

    if (static_cast<int>(plan.bribes.size()) > inst.budgets.bv)
        throw std::invalid_argument("plan breaches k_BV: bribes " +
                                    std::to_string(plan.bribes.size()));
    for (const auto& [name, ballot] : plan.bribes) {
        bool in_v = vnames.count(name) && !plan.deleted_voters.count(name);
        bool in_w = plan.added_voters.count(name);
        if (!in_v && !in_w)
            throw std::invalid_argument("plan bribes voter absent from the final electorate: " +
                                        name);
    }
}

// Definition of the attacked election: ((C−C') ∪ A', (V−V') ∪ W') with bribed
// ballots replaced and all surviving ballots restricted to the final set.
inline Election apply_plan(const ControlInstance& inst, const ControlPlan& plan) {
    check_plan_legal(inst, plan);

    Election pool = inst.pool_election();
    std::set<CandidateId> final_set;
    for (const auto& c : inst.candidates)
        if (!plan.deleted_candidates.count(c.id)) final_set.insert(c.id);
    for (CandidateId a : plan.added_candidates) final_set.insert(a);

    Election staged;
    staged.candidates = pool.candidates;
    for (const auto& v : inst.registered)
        if (!plan.deleted_voters.count(v.name)) staged.voters.push_back(v);
    for (const auto& w : inst.unregistered)
        if (plan.added_voters.count(w.name)) staged.voters.push_back(w);

    Election out = restrict(staged, final_set);
    for (auto& v : out.voters) {
        auto it = plan.bribes.find(v.name);
        if (it != plan.bribes.end()) v.ballot = it->second;
    }
    out.validate();
    return out;
}

inline bool goal_holds(const Election& e, const RuleSpec& rule, CandidateId p, Goal goal,
                       WinnerModel model) {
    if (!e.has_candidate(p)) {
        // p can never be deleted in a legal plan; guard anyway.
        return goal == Goal::Destructive;
    }
    bool won = (model == WinnerModel::Unique) ? is_unique_winner(e, rule, p) : is_winner(e, rule, p);
    return goal == Goal::Constructive ? won : !won;
}

inline bool check_plan_goal(const ControlInstance& inst, const ControlPlan& plan,
                            const RuleSpec& rule) {
    Election e = apply_plan(inst, plan);
    return goal_holds(e, rule, inst.focus, inst.goal, inst.winner_model);
}

// Shared-resource → separate-resource reduction: the shared instance is a yes
// iff at least one emitted separate instance is. Enumerates all budget splits
// of min(k, total pool capacity) across the active prongs, capped per pool.
inline std::vector<ControlInstance> shared_to_separate(const ControlInstance& inst) {
    if (inst.resource_model != ResourceModel::Shared)
        throw std::invalid_argument("shared_to_separate: instance is not shared-resource");

    struct Slot {
        Prong prong;
        int cap;
    };
    std::vector<Slot> slots;
    if (inst.candidate_adding_allowed())
        slots.push_back({Prong::AC, static_cast<int>(inst.spoilers.size())});
    if (inst.has_prong(Prong::DC))
        slots.push_back({Prong::DC, static_cast<int>(inst.candidates.size()) - 1});
    if (inst.has_prong(Prong::AV))
        slots.push_back({Prong::AV, static_cast<int>(inst.unregistered.size())});
    if (inst.has_prong(Prong::DV))
        slots.push_back({Prong::DV, static_cast<int>(inst.registered.size())});
    if (inst.has_prong(Prong::BV))
        slots.push_back({Prong::BV,
                         static_cast<int>(inst.registered.size() + inst.unregistered.size())});

    int total_cap = 0;
    for (const auto& s : slots) total_cap += s.cap;
    int k = std::min(inst.shared_budget, total_cap);

    std::vector<ControlInstance> out;
    std::vector<int> parts(slots.size(), 0);
    auto emit = [&] {
        ControlInstance sep = inst;
        sep.resource_model = ResourceModel::Separate;
        sep.shared_budget = 0;
        sep.budgets = Budgets{};
        // ACu degenerates to plain AC once the shared pool fixes its budget.
        if (sep.prongs.erase(Prong::ACu)) sep.prongs.insert(Prong::AC);
        for (std::size_t i = 0; i < slots.size(); ++i) {
            switch (slots[i].prong) {
                case Prong::AC: sep.budgets.ac = parts[i]; break;
                case Prong::DC: sep.budgets.dc = parts[i]; break;
                case Prong::AV: sep.budgets.av = parts[i]; break;
                case Prong::DV: sep.budgets.dv = parts[i]; break;
                case Prong::BV: sep.budgets.bv = parts[i]; break;
                default: break;
            }
        }
        out.push_back(std::move(sep));
    };
    auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
        if (i + 1 == slots.size()) {
            if (remaining <= slots[i].cap) {
                parts[i] = remaining;
                emit();
            }
            return;
        }
        for (int v = 0; v <= std::min(remaining, slots[i].cap); ++v) {
            parts[i] = v;
            self(self, i + 1, remaining - v);
        }
    };
    if (slots.empty()) {
        emit();
    } else {
        rec(rec, 0, k);
    }
    return out;
}

enum class ProngLabel { Immune, Vulnerable, Resistant };

// The prong-combination calculus: Resistant dominates, then Vulnerable, then
// Immune. Valid only when every single prong is already classified I/V/R; the
// caller asserts that via the flag (vulnerabilities need not combine for
// arbitrary systems, so this is bookkeeping, not a theorem prover).
inline ProngLabel classify_multiprong(const std::vector<ProngLabel>& labels,
                                      bool each_prong_classified = true) {
    if (labels.empty()) throw std::invalid_argument("classify_multiprong: empty label list");
    if (!each_prong_classified)
        throw std::invalid_argument(
            "classify_multiprong: applicable only when every prong is classified I/V/R");
    ProngLabel best = ProngLabel::Immune;
    for (ProngLabel l : labels) {
        if (l == ProngLabel::Resistant) return ProngLabel::Resistant;
        if (l == ProngLabel::Vulnerable) best = ProngLabel::Vulnerable;
    }
    return best;
}

}  // namespace multiprong
