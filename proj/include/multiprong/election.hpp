#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "multiprong/rational.hpp"

namespace multiprong {

using CandidateId = int;

struct Candidate {
    CandidateId id = 0;
    std::string name;

    bool operator==(const Candidate&) const = default;
};

// A ballot is either a total strict order over the candidate set or an
// approval set (the ids the voter approves of).
struct Ballot {
    enum class Kind { LinearOrder, Approval };

    Kind kind = Kind::LinearOrder;
    std::vector<CandidateId> order;     // LinearOrder: best first, a permutation of the candidate ids
    std::vector<CandidateId> approved;  // Approval: sorted approved ids

    static Ballot linear(std::vector<CandidateId> order) {
        Ballot b;
        b.kind = Kind::LinearOrder;
        b.order = std::move(order);
        return b;
    }
    static Ballot approval(std::vector<CandidateId> approved) {
        Ballot b;
        b.kind = Kind::Approval;
        b.approved = std::move(approved);
        std::sort(b.approved.begin(), b.approved.end());
        b.approved.erase(std::unique(b.approved.begin(), b.approved.end()), b.approved.end());
        return b;
    }

    bool is_linear() const { return kind == Kind::LinearOrder; }

    // LinearOrder only: true when a is ranked above b.
    bool prefers(CandidateId a, CandidateId b) const {
        for (CandidateId c : order) {
            if (c == a) return true;
            if (c == b) return false;
        }
        return false;
    }

    bool approves(CandidateId c) const {
        return std::binary_search(approved.begin(), approved.end(), c);
    }

    bool operator==(const Ballot&) const = default;
};

struct Voter {
    std::string name;
    Ballot ballot;

    bool operator==(const Voter&) const = default;
};

struct Election {
    std::vector<Candidate> candidates;
    std::vector<Voter> voters;

    bool has_candidate(CandidateId id) const {
        for (const auto& c : candidates)
            if (c.id == id) return true;
        return false;
    }

    const Candidate& candidate(CandidateId id) const {
        for (const auto& c : candidates)
            if (c.id == id) return c;
        throw std::invalid_argument("unknown candidate id " + std::to_string(id));
    }

    std::vector<CandidateId> candidate_ids() const {
        std::vector<CandidateId> ids;
        ids.reserve(candidates.size());
        for (const auto& c : candidates) ids.push_back(c.id);
        return ids;
    }

    std::set<std::string> voter_names() const {
        std::set<std::string> names;
        for (const auto& v : voters) names.insert(v.name);
        return names;
    }

    // Checks all structural invariants; throws on the first violation.
    void validate() const {
        if (candidates.empty()) throw std::invalid_argument("election has no candidates");
        std::set<CandidateId> ids;
        for (const auto& c : candidates)
            if (!ids.insert(c.id).second)
                throw std::invalid_argument("duplicate candidate id " + std::to_string(c.id));
        std::set<std::string> names;
        for (const auto& v : voters) {
            if (!names.insert(v.name).second)
                throw std::invalid_argument("duplicate voter name " + v.name);
            if (v.ballot.is_linear()) {
                std::set<CandidateId> seen(v.ballot.order.begin(), v.ballot.order.end());
                if (seen != ids || v.ballot.order.size() != ids.size())
                    throw std::invalid_argument("ballot of " + v.name +
                                                " is not a permutation of the candidate set");
            } else {
                for (CandidateId c : v.ballot.approved)
                    if (!ids.count(c))
                        throw std::invalid_argument("ballot of " + v.name +
                                                    " approves unknown candidate");
            }
        }
    }
};

struct RuleSpec {
    enum class Kind {
        Plurality,
        Copeland,
        Maximin,
        Approval,
        Condorcet,
        OriginalLlull,
        ScoringProtocol,
    };

    Kind kind = Kind::Plurality;
    Rational alpha;                           // Copeland only, in [0,1]
    std::vector<std::int64_t> scoring;        // ScoringProtocol only, nonincreasing

    static RuleSpec plurality() { return {Kind::Plurality, {}, {}}; }
    static RuleSpec copeland(Rational alpha) {
        if (alpha < Rational(0) || alpha > Rational(1))
            throw std::invalid_argument("Copeland alpha must be in [0,1]");
        return {Kind::Copeland, alpha, {}};
    }
    static RuleSpec maximin() { return {Kind::Maximin, {}, {}}; }
    static RuleSpec approval() { return {Kind::Approval, {}, {}}; }
    static RuleSpec condorcet() { return {Kind::Condorcet, {}, {}}; }
    static RuleSpec original_llull() { return {Kind::OriginalLlull, {}, {}}; }
    static RuleSpec scoring_protocol(std::vector<std::int64_t> vec) {
        for (std::size_t i = 0; i < vec.size(); ++i) {
            if (vec[i] < 0) throw std::invalid_argument("scoring vector entries must be nonnegative");
            if (i > 0 && vec[i] > vec[i - 1])
                throw std::invalid_argument("scoring vector must be nonincreasing");
        }
        return {Kind::ScoringProtocol, {}, std::move(vec)};
    }

    bool uses_approval_ballots() const { return kind == Kind::Approval; }

    std::string name() const {
        switch (kind) {
            case Kind::Plurality: return "plurality";
            case Kind::Copeland: return "copeland:" + alpha.str();
            case Kind::Maximin: return "maximin";
            case Kind::Approval: return "approval";
            case Kind::Condorcet: return "condorcet";
            case Kind::OriginalLlull: return "llull";
            case Kind::ScoringProtocol: return "scoring";
        }
        return "?";
    }

    bool operator==(const RuleSpec&) const = default;
};

// N_E(a,b): number of voters preferring a to b. Linear ballots only.
inline int pairwise_tally(const Election& e, CandidateId a, CandidateId b) {
    if (a == b) throw std::invalid_argument("pairwise_tally: identical candidates");
    if (!e.has_candidate(a) || !e.has_candidate(b))
        throw std::invalid_argument("pairwise_tally: unknown candidate");
    int count = 0;
    for (const auto& v : e.voters) {
        if (!v.ballot.is_linear())
            throw std::invalid_argument("pairwise_tally: approval ballots supplied");
        if (v.ballot.prefers(a, b)) ++count;
    }
    return count;
}

inline std::map<CandidateId, Rational> scores(const Election& e, const RuleSpec& rule) {
    std::map<CandidateId, Rational> result;
    for (const auto& c : e.candidates) result[c.id] = Rational(0);

    auto require_linear = [&] {
        for (const auto& v : e.voters)
            if (!v.ballot.is_linear())
                throw std::invalid_argument("rule " + rule.name() + " needs linear-order ballots");
    };

    switch (rule.kind) {
        case RuleSpec::Kind::Plurality: {
            require_linear();
            for (const auto& v : e.voters)
                if (!v.ballot.order.empty()) result[v.ballot.order.front()] += Rational(1);
            break;
        }
        case RuleSpec::Kind::Approval: {
            for (const auto& v : e.voters) {
                if (v.ballot.is_linear())
                    throw std::invalid_argument("approval rule needs approval ballots");
                for (CandidateId c : v.ballot.approved) result[c] += Rational(1);
            }
            break;
        }
        case RuleSpec::Kind::ScoringProtocol: {
            require_linear();
            if (rule.scoring.size() != e.candidates.size())
                throw std::invalid_argument("scoring vector length does not match candidate count");
            for (const auto& v : e.voters)
                for (std::size_t pos = 0; pos < v.ballot.order.size(); ++pos)
                    result[v.ballot.order[pos]] += Rational(rule.scoring[pos]);
            break;
        }
        case RuleSpec::Kind::Maximin: {
            require_linear();
            for (const auto& ci : e.candidates) {
                if (e.candidates.size() == 1) {
                    // Min over an empty rival set: capped at the electorate size so the
                    // lone candidate is the unique winner.
                    result[ci.id] = Rational(static_cast<std::int64_t>(e.voters.size()));
                    continue;
                }
                int best = -1;
                for (const auto& cj : e.candidates) {
                    if (cj.id == ci.id) continue;
                    int n = pairwise_tally(e, ci.id, cj.id);
                    if (best < 0 || n < best) best = n;
                }
                result[ci.id] = Rational(best);
            }
            break;
        }
        case RuleSpec::Kind::Copeland: {
            require_linear();
            for (const auto& ci : e.candidates) {
                Rational s(0);
                for (const auto& cj : e.candidates) {
                    if (cj.id == ci.id) continue;
                    int nij = pairwise_tally(e, ci.id, cj.id);
                    int nji = static_cast<int>(e.voters.size()) - nij;
                    if (nij > nji)
                        s += Rational(1);
                    else if (nij == nji)
                        s += rule.alpha;
                }
                result[ci.id] = s;
            }
            break;
        }
        default:
            throw std::invalid_argument("scores: rule " + rule.name() + " is not score-based");
    }
    return result;
}

inline std::vector<CandidateId> winners(const Election& e, const RuleSpec& rule) {
    switch (rule.kind) {
        case RuleSpec::Kind::Condorcet: {
            for (const auto& c : e.candidates) {
                bool beats_all = true;
                for (const auto& r : e.candidates) {
                    if (r.id == c.id) continue;
                    int n = pairwise_tally(e, c.id, r.id);
                    if (!(n > static_cast<int>(e.voters.size()) - n)) {
                        beats_all = false;
                        break;
                    }
                }
                if (beats_all && e.candidates.size() >= 1) {
                    if (e.candidates.size() == 1 && e.voters.empty()) return {c.id};
                    if (e.candidates.size() > 1) return {c.id};
                    // single candidate, nonempty electorate: vacuously a Condorcet winner
                    return {c.id};
                }
            }
            return {};
        }
        case RuleSpec::Kind::OriginalLlull: {
            // No winners unless the voter-name set equals the candidate-name set.
            std::set<std::string> cand_names;
            for (const auto& c : e.candidates) cand_names.insert(c.name);
            if (e.voter_names() != cand_names || e.voters.size() != e.candidates.size()) return {};
            return winners(e, RuleSpec::copeland(Rational(1)));
        }
        default: {
            auto s = scores(e, rule);
            std::vector<CandidateId> result;
            const Rational* best = nullptr;
            for (const auto& [id, sc] : s)
                if (!best || *best < sc) best = &sc;
            if (!best) return {};
            for (const auto& [id, sc] : s)
                if (sc == *best) result.push_back(id);
            std::sort(result.begin(), result.end());
            return result;
        }
    }
}

inline bool is_winner(const Election& e, const RuleSpec& rule, CandidateId c) {
    if (!e.has_candidate(c)) throw std::invalid_argument("is_winner: unknown candidate");
    auto w = winners(e, rule);
    return std::find(w.begin(), w.end(), c) != w.end();
}

inline bool is_unique_winner(const Election& e, const RuleSpec& rule, CandidateId c) {
    if (!e.has_candidate(c)) throw std::invalid_argument("is_unique_winner: unknown candidate");
    auto w = winners(e, rule);
    return w.size() == 1 && w.front() == c;
}

// Induced election on a nonempty subset of the candidates. Linear orders keep
// their relative order; approval sets drop the removed ids.
inline Election restrict(const Election& e, const std::set<CandidateId>& keep) {
    if (keep.empty()) throw std::invalid_argument("restrict: empty keep set");
    for (CandidateId id : keep)
        if (!e.has_candidate(id))
            throw std::invalid_argument("restrict: keep set contains unknown candidate");
    Election out;
    for (const auto& c : e.candidates)
        if (keep.count(c.id)) out.candidates.push_back(c);
    for (const auto& v : e.voters) {
        Voter nv;
        nv.name = v.name;
        nv.ballot.kind = v.ballot.kind;
        if (v.ballot.is_linear()) {
            for (CandidateId c : v.ballot.order)
                if (keep.count(c)) nv.ballot.order.push_back(c);
        } else {
            for (CandidateId c : v.ballot.approved)
                if (keep.count(c)) nv.ballot.approved.push_back(c);
        }
        out.voters.push_back(std::move(nv));
    }
    return out;
}

// Convention A: a set item expands in a fixed order (ascending candidate id by
// default); a reversed set expands in the opposite order.
enum class ConventionOrder { AscendingId, DescendingId };

struct OrderItem {
    enum class Kind { Single, Set, ReversedSet };
    Kind kind;
    std::vector<CandidateId> ids;  // one id for Single

    static OrderItem single(CandidateId id) { return {Kind::Single, {id}}; }
    static OrderItem set(std::vector<CandidateId> ids) { return {Kind::Set, std::move(ids)}; }
    static OrderItem rev(std::vector<CandidateId> ids) {
        return {Kind::ReversedSet, std::move(ids)};
    }
};

inline std::vector<CandidateId> build_order(const std::vector<OrderItem>& items,
                                            const std::vector<CandidateId>& candidate_set,
                                            ConventionOrder conv = ConventionOrder::AscendingId) {
    std::vector<CandidateId> order;
    for (const auto& item : items) {
        std::vector<CandidateId> part = item.ids;
        std::sort(part.begin(), part.end());
        bool descending = (conv == ConventionOrder::DescendingId);
        if (item.kind == OrderItem::Kind::ReversedSet) descending = !descending;
        if (descending) std::reverse(part.begin(), part.end());
        order.insert(order.end(), part.begin(), part.end());
    }
    std::set<CandidateId> seen(order.begin(), order.end());
    std::set<CandidateId> expected(candidate_set.begin(), candidate_set.end());
    if (seen != expected || order.size() != expected.size())
        throw std::invalid_argument("build_order: items do not partition the candidate set");
    return order;
}

}  // namespace multiprong
