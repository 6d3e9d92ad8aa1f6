#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <vector>

#include "multiprong/election.hpp"

namespace multiprong {

// df_E(a,b): the number of voters that must newly rank a ahead of b before a
// beats b by a strict majority; 0 when a already does.
inline int deficit(const Election& e, CandidateId a, CandidateId b) {
    if (a == b) throw std::invalid_argument("deficit: identical candidates");
    int n = static_cast<int>(e.voters.size());
    int need = n / 2 + 1;
    return std::max(0, need - pairwise_tally(e, a, b));
}

// sc'_E(c) = m^2 * max over rivals of df_E(c, rival).
inline int sc_prime(const Election& e, CandidateId c) {
    int m = static_cast<int>(e.candidates.size());
    if (m < 2) throw std::invalid_argument("sc_prime: needs at least two candidates");
    if (!e.has_candidate(c)) throw std::invalid_argument("sc_prime: unknown candidate");
    int worst = 0;
    for (const auto& r : e.candidates)
        if (r.id != c) worst = std::max(worst, deficit(e, c, r.id));
    return m * m * worst;
}

namespace detail {

inline void check_dodgson_envelope(const Election& e) {
    if (e.candidates.size() > 5 || e.voters.size() > 7)
        throw std::invalid_argument("dodgson envelope exceeded (m <= 5, n <= 7)");
}

// Lift c by `amount` adjacent upward swaps in one ballot.
inline std::vector<CandidateId> lifted(const std::vector<CandidateId>& order, CandidateId c,
                                       int amount) {
    std::vector<CandidateId> out = order;
    auto it = std::find(out.begin(), out.end(), c);
    int pos = static_cast<int>(it - out.begin());
    for (int t = 0; t < amount; ++t) {
        std::swap(out[pos], out[pos - 1]);
        --pos;
    }
    return out;
}

}  // namespace detail

// Exact Dodgson score: the fewest adjacent swaps making c the Condorcet
// winner. Only upward moves of c are useful, so the search is over per-voter
// lift amounts.
inline int dodgson_score_exact(const Election& e, CandidateId c) {
    detail::check_dodgson_envelope(e);
    if (!e.has_candidate(c)) throw std::invalid_argument("dodgson_score_exact: unknown candidate");
    for (const auto& v : e.voters)
        if (!v.ballot.is_linear())
            throw std::invalid_argument("dodgson_score_exact: linear ballots only");
    const int n = static_cast<int>(e.voters.size());
    const int need = n / 2 + 1;

    // Per voter: positions of c (max useful lift) and, per lift amount, which
    // rivals become newly beaten.
    std::vector<int> max_lift(n);
    for (int i = 0; i < n; ++i) {
        const auto& o = e.voters[i].ballot.order;
        max_lift[i] = static_cast<int>(std::find(o.begin(), o.end(), c) - o.begin());
    }

    std::map<CandidateId, int> base;  // N_E(c, rival)
    for (const auto& r : e.candidates)
        if (r.id != c) base[r.id] = pairwise_tally(e, c, r.id);

    int best = std::numeric_limits<int>::max();
    std::vector<int> lift(n, 0);
    auto rec = [&](auto&& self, int i, int cost) -> void {
        if (cost >= best) return;
        if (i == n) {
            for (const auto& [rid, tally] : base) {
                int gained = 0;
                for (int v = 0; v < n; ++v) {
                    if (lift[v] == 0) continue;
                    const auto& o = e.voters[v].ballot.order;
                    int cpos = max_lift[v];
                    // rival newly overtaken iff it sat within the lifted span
                    for (int t = 1; t <= lift[v]; ++t)
                        if (o[cpos - t] == rid) ++gained;
                }
                if (base[rid] + gained < need) return;
            }
            best = cost;
            return;
        }
        for (int a = 0; a <= max_lift[i]; ++a) {
            lift[i] = a;
            self(self, i + 1, cost + a);
        }
        lift[i] = 0;
    };
    rec(rec, 0, 0);
    if (best == std::numeric_limits<int>::max())
        throw std::logic_error("dodgson_score_exact: no lift combination succeeds");
    return best;
}

struct DodgsonReport {
    std::map<CandidateId, int> dodgson;   // exact score per candidate
    std::map<CandidateId, int> approx;    // sc' per candidate
    std::vector<CandidateId> maximin_winners;
    int min_score = 0;                    // s, the Dodgson winner's score
    bool lemma_chain_ok = true;           // score^D <= sc' <= m^2 score^D
    bool theorem_chain_ok = true;         // s <= score^D(w) <= m^2 s for maximin winners w
};

inline DodgsonReport verify_sandwich(const Election& e) {
    detail::check_dodgson_envelope(e);
    if (e.candidates.size() < 2)
        throw std::invalid_argument("verify_sandwich: needs at least two candidates");
    const int m2 = static_cast<int>(e.candidates.size() * e.candidates.size());

    DodgsonReport rep;
    rep.min_score = std::numeric_limits<int>::max();
    for (const auto& c : e.candidates) {
        rep.dodgson[c.id] = dodgson_score_exact(e, c.id);
        rep.approx[c.id] = sc_prime(e, c.id);
        rep.min_score = std::min(rep.min_score, rep.dodgson[c.id]);
    }
    rep.maximin_winners = winners(e, RuleSpec::maximin());

    for (const auto& c : e.candidates) {
        int d = rep.dodgson[c.id];
        int a = rep.approx[c.id];
        if (!(d <= a && a <= m2 * d)) rep.lemma_chain_ok = false;
    }
    for (CandidateId w : rep.maximin_winners) {
        int d = rep.dodgson[w];
        if (!(rep.min_score <= d && d <= m2 * rep.min_score)) rep.theorem_chain_ok = false;
    }
    return rep;
}

}  // namespace multiprong
