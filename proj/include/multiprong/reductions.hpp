#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "multiprong/control.hpp"
#include "multiprong/election.hpp"

namespace multiprong {

// An exact-cover-by-3-sets instance: ground set B of size 3k and a family of
// distinct 3-subsets.
struct X3CInstance {
    std::vector<int> ground;             // B
    std::vector<std::vector<int>> sets;  // S_1..S_n, each of size 3
    int k = 0;

    int n() const { return static_cast<int>(sets.size()); }

    void validate() const {
        if (k < 0) throw std::invalid_argument("X3C: negative k");
        if (static_cast<int>(ground.size()) != 3 * k)
            throw std::invalid_argument("X3C: |B| must equal 3k");
        std::set<int> b(ground.begin(), ground.end());
        if (b.size() != ground.size()) throw std::invalid_argument("X3C: duplicate ground element");
        std::set<std::set<int>> seen;
        for (const auto& s : sets) {
            std::set<int> ss(s.begin(), s.end());
            if (ss.size() != 3 || s.size() != 3)
                throw std::invalid_argument("X3C: sets must have exactly three distinct elements");
            for (int x : ss)
                if (!b.count(x)) throw std::invalid_argument("X3C: set element outside B");
            if (!seen.insert(ss).second) throw std::invalid_argument("X3C: duplicate set");
        }
    }
};

inline bool x3c_is_yes(const X3CInstance& x) {
    x.validate();
    if (x.n() > 20) throw std::invalid_argument("x3c_is_yes envelope exceeded (n <= 20)");
    if (x.k == 0) return x.ground.empty();
    std::vector<int> idx;
    auto rec = [&](auto&& self, int start) -> bool {
        if (static_cast<int>(idx.size()) == x.k) {
            std::set<int> covered;
            for (int i : idx)
                for (int e : x.sets[i]) covered.insert(e);
            return covered.size() == x.ground.size();
        }
        for (int i = start; i < x.n(); ++i) {
            idx.push_back(i);
            if (self(self, i + 1)) return true;
            idx.pop_back();
        }
        return false;
    };
    return rec(rec, 0);
}

namespace detail {

// Candidate-id layout shared by the maximin reductions: special candidates
// first, then one id per ground element in B's listed order.
struct ReductionIds {
    std::vector<CandidateId> b;  // B in ground order
    std::set<CandidateId> bset;

    std::vector<CandidateId> of_set(const X3CInstance& x, int i) const {
        std::vector<CandidateId> out;
        for (std::size_t t = 0; t < x.ground.size(); ++t)
            if (std::find(x.sets[i].begin(), x.sets[i].end(), x.ground[t]) != x.sets[i].end())
                out.push_back(b[t]);
        return out;
    }
    std::vector<CandidateId> complement(const std::vector<CandidateId>& s) const {
        std::vector<CandidateId> out;
        for (CandidateId c : b)
            if (std::find(s.begin(), s.end(), c) == s.end()) out.push_back(c);
        return out;
    }
};

inline Voter make_voter(std::string name, const std::vector<OrderItem>& items,
                        const std::vector<CandidateId>& full_set, ConventionOrder conv) {
    return {std::move(name), Ballot::linear(build_order(items, full_set, conv))};
}

}  // namespace detail

// X3C → constructive maximin control by adding candidates (k_AC = k).
inline ControlInstance reduce_maximin_constructive_ac(
    const X3CInstance& x, ConventionOrder conv = ConventionOrder::AscendingId) {
    x.validate();
    const int n = x.n();
    const int m = static_cast<int>(x.ground.size());

    ControlInstance inst;
    const CandidateId p = 0;
    inst.candidates.push_back({p, "p"});
    detail::ReductionIds ids;
    for (int t = 0; t < m; ++t) {
        ids.b.push_back(1 + t);
        inst.candidates.push_back({1 + t, "b" + std::to_string(t + 1)});
    }
    std::vector<CandidateId> a;
    for (int i = 0; i < n; ++i) {
        a.push_back(1 + m + i);
        inst.spoilers.push_back({1 + m + i, "a" + std::to_string(i + 1)});
    }
    std::vector<CandidateId> full;
    full.push_back(p);
    full.insert(full.end(), ids.b.begin(), ids.b.end());
    full.insert(full.end(), a.begin(), a.end());

    for (int i = 0; i < n; ++i) {
        auto si = ids.of_set(x, i);
        auto rest_b = ids.complement(si);
        std::vector<CandidateId> rest_a;
        for (int j = 0; j < n; ++j)
            if (j != i) rest_a.push_back(a[j]);
        inst.registered.push_back(detail::make_voter(
            "v" + std::to_string(i + 1),
            {OrderItem::single(p), OrderItem::set(rest_b), OrderItem::single(a[i]),
             OrderItem::set(si), OrderItem::set(rest_a)},
            full, conv));
        inst.registered.push_back(detail::make_voter(
            "v" + std::to_string(n + i + 1),
            {OrderItem::rev(rest_a), OrderItem::single(a[i]), OrderItem::rev(si),
             OrderItem::rev(rest_b), OrderItem::single(p)},
            full, conv));
    }
    inst.registered.push_back(detail::make_voter(
        "v" + std::to_string(2 * n + 1),
        {OrderItem::single(p), OrderItem::set(a), OrderItem::set(ids.b)}, full, conv));
    inst.registered.push_back(detail::make_voter(
        "v" + std::to_string(2 * n + 2),
        {OrderItem::rev(ids.b), OrderItem::single(p), OrderItem::rev(a)}, full, conv));
    std::sort(inst.registered.begin(), inst.registered.end(),
              [](const Voter& l, const Voter& r) { return l.name < r.name; });

    inst.focus = p;
    inst.goal = Goal::Constructive;
    inst.prongs = {Prong::AC};
    inst.budgets.ac = x.k;
    inst.validate();
    return inst;
}

// X3C → maximin control by adding voters (k_AV = k); the destructive variant
// drops one p > B > d voter and aims at d.
inline ControlInstance reduce_maximin_av(const X3CInstance& x, Goal goal,
                                         ConventionOrder conv = ConventionOrder::AscendingId) {
    x.validate();
    if (x.k < 1) throw std::invalid_argument("reduce_maximin_av: proof assumes k >= 1");
    const int n = x.n();
    const int m = static_cast<int>(x.ground.size());

    ControlInstance inst;
    const CandidateId p = 0;
    const CandidateId d = 1 + m;
    inst.candidates.push_back({p, "p"});
    detail::ReductionIds ids;
    for (int t = 0; t < m; ++t) {
        ids.b.push_back(1 + t);
        inst.candidates.push_back({1 + t, "b" + std::to_string(t + 1)});
    }
    inst.candidates.push_back({d, "d"});
    std::vector<CandidateId> full;
    full.push_back(p);
    full.insert(full.end(), ids.b.begin(), ids.b.end());
    full.push_back(d);

    int serial = 0;
    auto add_block = [&](int count, const std::vector<OrderItem>& items) {
        for (int t = 0; t < count; ++t)
            inst.registered.push_back(
                detail::make_voter("v" + std::to_string(++serial), items, full, conv));
    };
    add_block(2 * x.k, {OrderItem::single(d), OrderItem::set(ids.b), OrderItem::single(p)});
    add_block(goal == Goal::Destructive ? x.k - 1 : x.k,
              {OrderItem::single(p), OrderItem::set(ids.b), OrderItem::single(d)});
    add_block(x.k, {OrderItem::single(p), OrderItem::single(d), OrderItem::set(ids.b)});

    for (int i = 0; i < n; ++i) {
        auto si = ids.of_set(x, i);
        inst.unregistered.push_back(detail::make_voter(
            "w" + std::to_string(i + 1),
            {OrderItem::set(ids.complement(si)), OrderItem::single(p), OrderItem::set(si),
             OrderItem::single(d)},
            full, conv));
    }

    inst.focus = (goal == Goal::Destructive) ? d : p;
    inst.goal = goal;
    inst.prongs = {Prong::AV};
    inst.budgets.av = x.k;
    inst.validate();
    return inst;
}

// X3C → maximin control by deleting voters (k_DV = k).
inline ControlInstance reduce_maximin_dv(const X3CInstance& x, Goal goal,
                                         ConventionOrder conv = ConventionOrder::AscendingId) {
    x.validate();
    if (!(x.n() >= x.k && x.k >= 3))
        throw std::invalid_argument(
            "reduce_maximin_dv: proof assumes n >= k >= 3; solve smaller instances by oracle");
    const int n = x.n();
    const int m = static_cast<int>(x.ground.size());

    ControlInstance inst;
    const CandidateId p = 0;
    const CandidateId d = 1 + m;
    inst.candidates.push_back({p, "p"});
    detail::ReductionIds ids;
    for (int t = 0; t < m; ++t) {
        ids.b.push_back(1 + t);
        inst.candidates.push_back({1 + t, "b" + std::to_string(t + 1)});
    }
    inst.candidates.push_back({d, "d"});
    std::vector<CandidateId> full;
    full.push_back(p);
    full.insert(full.end(), ids.b.begin(), ids.b.end());
    full.push_back(d);

    for (int i = 0; i < n; ++i) {
        auto si = ids.of_set(x, i);
        auto rest = ids.complement(si);
        inst.registered.push_back(detail::make_voter(
            "v" + std::to_string(i + 1),
            {OrderItem::single(d), OrderItem::set(rest), OrderItem::single(p), OrderItem::set(si)},
            full, conv));
        inst.registered.push_back(detail::make_voter(
            "v" + std::to_string(n + i + 1),
            {OrderItem::single(d), OrderItem::rev(si), OrderItem::single(p), OrderItem::rev(rest)},
            full, conv));
    }
    int serial = 2 * n;
    auto add_block = [&](int count, const std::vector<OrderItem>& items) {
        for (int t = 0; t < count; ++t)
            inst.registered.push_back(
                detail::make_voter("v" + std::to_string(++serial), items, full, conv));
    };
    if (goal == Goal::Constructive) {
        add_block(2, {OrderItem::single(p), OrderItem::single(d), OrderItem::set(ids.b)});
        add_block(n - x.k, {OrderItem::single(p), OrderItem::set(ids.b), OrderItem::single(d)});
        add_block(n, {OrderItem::set(ids.b), OrderItem::single(p), OrderItem::single(d)});
    } else {
        add_block(1, {OrderItem::single(p), OrderItem::single(d), OrderItem::set(ids.b)});
        add_block(n - x.k, {OrderItem::single(p), OrderItem::set(ids.b), OrderItem::single(d)});
        add_block(n - 1, {OrderItem::set(ids.b), OrderItem::single(p), OrderItem::single(d)});
    }

    inst.focus = (goal == Goal::Destructive) ? d : p;
    inst.goal = goal;
    inst.prongs = {Prong::DV};
    inst.budgets.dv = x.k;
    inst.validate();
    return inst;
}

// X3C → maximin bribery (k_BV = k); E_c carries the single p-first voter V6,
// E_d drops it.
inline ControlInstance reduce_maximin_bv(const X3CInstance& x, Goal goal,
                                         ConventionOrder conv = ConventionOrder::AscendingId) {
    x.validate();
    if (!(x.n() > x.k && x.k > 1))
        throw std::invalid_argument(
            "reduce_maximin_bv: proof assumes n > k > 1; smaller instances are trivial");
    const int n = x.n();
    const int k = x.k;
    const int m = static_cast<int>(x.ground.size());

    ControlInstance inst;
    const CandidateId p = 0, d = 1, s = 2;
    inst.candidates.push_back({p, "p"});
    inst.candidates.push_back({d, "d"});
    inst.candidates.push_back({s, "s"});
    detail::ReductionIds ids;
    for (int t = 0; t < m; ++t) {
        ids.b.push_back(3 + t);
        inst.candidates.push_back({3 + t, "b" + std::to_string(t + 1)});
    }
    std::vector<CandidateId> full = {p, d, s};
    full.insert(full.end(), ids.b.begin(), ids.b.end());

    int serial = 0;
    auto add = [&](const std::vector<OrderItem>& items) {
        inst.registered.push_back(
            detail::make_voter("v" + std::to_string(++serial), items, full, conv));
    };

    for (int i = 0; i < n; ++i)
        add({OrderItem::single(d), OrderItem::single(s), OrderItem::set(ids.of_set(x, i)),
             OrderItem::single(p), OrderItem::set(ids.complement(ids.of_set(x, i)))});
    for (int i = 0; i < n; ++i)
        add({OrderItem::rev(ids.complement(ids.of_set(x, i))), OrderItem::single(p),
             OrderItem::rev(ids.of_set(x, i)), OrderItem::single(d), OrderItem::single(s)});
    for (int i = 0; i < k; ++i)
        add({OrderItem::single(s), OrderItem::single(d), OrderItem::single(p),
             OrderItem::set(ids.b)});
    for (int i = 0; i < k; ++i)
        add({OrderItem::rev(ids.b), OrderItem::single(d), OrderItem::single(p),
             OrderItem::single(s)});
    for (int i = 0; i < k; ++i)
        add({OrderItem::single(d), OrderItem::single(s), OrderItem::single(p),
             OrderItem::set(ids.b)});
    for (int i = 0; i < k; ++i)
        add({OrderItem::rev(ids.b), OrderItem::single(s), OrderItem::single(p),
             OrderItem::single(d)});
    for (int i = 0; i < 2 * k; ++i)
        add({OrderItem::single(d), OrderItem::set(ids.b), OrderItem::single(p),
             OrderItem::single(s)});
    for (int i = 0; i < 2 * k; ++i)
        add({OrderItem::single(s), OrderItem::single(p), OrderItem::single(d),
             OrderItem::rev(ids.b)});
    add({OrderItem::single(s), OrderItem::set(ids.b), OrderItem::single(p),
         OrderItem::single(d)});
    add({OrderItem::single(d), OrderItem::rev(ids.b), OrderItem::single(p),
         OrderItem::single(s)});
    if (goal == Goal::Constructive)
        add({OrderItem::single(p), OrderItem::single(d), OrderItem::single(s),
             OrderItem::set(ids.b)});

    inst.focus = (goal == Goal::Destructive) ? d : p;
    inst.goal = goal;
    inst.prongs = {Prong::BV};
    inst.budgets.bv = k;
    inst.validate();
    return inst;
}

// Copeland^1-AV instance → OriginalLlull AC+AV instance: pad with score-neutral
// dummy voters, introduce never-winning spoiler candidates, and rename voters
// so that names(V ∪ V') ⊇ names(C) and names(V ∪ V' ∪ W) = names(C ∪ A).
inline ControlInstance reduce_copeland1_av_to_llull(
    const ControlInstance& in, ConventionOrder conv = ConventionOrder::AscendingId) {
    in.validate();
    if (in.registered.empty())
        throw std::invalid_argument("reduce_copeland1_av_to_llull: proof assumes V is not empty");
    if (in.prongs != std::set<Prong>{Prong::AV} || !in.spoilers.empty())
        throw std::invalid_argument("reduce_copeland1_av_to_llull: input mask must be AV only");
    if (in.goal != Goal::Constructive || in.winner_model != WinnerModel::Unique)
        throw std::invalid_argument(
            "reduce_copeland1_av_to_llull: constructive unique-winner instances only");

    const int nc = static_cast<int>(in.candidates.size());
    const int nv = static_cast<int>(in.registered.size());
    const int nw = static_cast<int>(in.unregistered.size());

    int n_dummy = 0;
    if (nv < nc) {
        n_dummy = nc - nv;
        if (n_dummy % 2 == 1) ++n_dummy;
    }
    const int n_spoilers = nv + n_dummy + nw - nc;

    ControlInstance out;
    out.candidates = in.candidates;
    CandidateId next_id = 0;
    for (const auto& c : in.candidates) next_id = std::max(next_id, c.id + 1);
    std::vector<CandidateId> a_ids;
    for (int i = 0; i < n_spoilers; ++i) {
        a_ids.push_back(next_id + i);
        out.spoilers.push_back({next_id + i, "x" + std::to_string(i + 1)});
    }

    // Extend a ballot over C by the spoilers, appended in fixed (ascending) order.
    auto extend = [&](const Ballot& b) {
        Ballot nb = b;
        nb.order.insert(nb.order.end(), a_ids.begin(), a_ids.end());
        return nb;
    };

    std::vector<CandidateId> cids;
    for (const auto& c : in.candidates) cids.push_back(c.id);
    std::vector<Ballot> dummy_ballots;
    for (int i = 0; i < n_dummy; ++i) {
        auto item = (i < n_dummy / 2) ? OrderItem::set(cids) : OrderItem::rev(cids);
        dummy_ballots.push_back(extend(Ballot::linear(build_order({item}, cids, conv))));
    }

    // names(V ∪ V') gets every candidate name first, then spoiler names; W
    // takes the remaining spoiler names.
    std::vector<std::string> names;
    for (const auto& c : in.candidates) names.push_back(c.name);
    for (const auto& a : out.spoilers) names.push_back(a.name);

    std::size_t next_name = 0;
    for (const auto& v : in.registered)
        out.registered.push_back({names[next_name++], extend(v.ballot)});
    for (const auto& b : dummy_ballots) out.registered.push_back({names[next_name++], b});
    for (const auto& w : in.unregistered)
        out.unregistered.push_back({names[next_name++], extend(w.ballot)});
    if (next_name != names.size())
        throw std::logic_error("llull padding arithmetic is off");

    out.focus = in.focus;
    out.goal = Goal::Constructive;
    out.winner_model = WinnerModel::Unique;
    out.prongs = {Prong::AC, Prong::AV};
    out.budgets.ac = n_spoilers;
    out.budgets.av = in.budgets.av;
    out.validate();
    return out;
}

}  // namespace multiprong
