#pragma once

#include <string>
#include <vector>

#include "multiprong/control.hpp"

namespace multiprong {

// Outcome of a planner or the exhaustive solver. When a plan is returned the
// caller can (and our planners do) re-verify it via check_plan_goal.
struct AttackResult {
    enum class Outcome { Plan, Impossible };

    Outcome outcome = Outcome::Impossible;
    ControlPlan plan;
    std::vector<std::string> trace;  // elementary moves, for certification

    bool found() const { return outcome == Outcome::Plan; }

    static AttackResult impossible(std::vector<std::string> trace = {}) {
        AttackResult r;
        r.outcome = Outcome::Impossible;
        r.trace = std::move(trace);
        return r;
    }
    static AttackResult success(ControlPlan plan, std::vector<std::string> trace = {}) {
        AttackResult r;
        r.outcome = Outcome::Plan;
        r.plan = std::move(plan);
        r.trace = std::move(trace);
        return r;
    }
};

}  // namespace multiprong
