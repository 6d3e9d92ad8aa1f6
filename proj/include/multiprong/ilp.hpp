#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace multiprong {

// A finite-box integer linear system: every variable carries inclusive integer
// bounds, every constraint is a linear row compared against a constant.
struct LinearSystem {
    enum class Cmp { LT, LE, GT, GE };

    struct Variable {
        std::string name;
        std::int64_t lo = 0;
        std::int64_t hi = 0;
    };
    struct Constraint {
        std::vector<std::int64_t> coeffs;  // one per declared variable
        Cmp cmp = Cmp::LE;
        std::int64_t constant = 0;
    };

    std::vector<Variable> variables;
    std::vector<Constraint> constraints;

    int add_variable(std::string name, std::int64_t lo, std::int64_t hi) {
        if (lo > hi) throw std::invalid_argument("variable " + name + " has empty bounds");
        variables.push_back({std::move(name), lo, hi});
        return static_cast<int>(variables.size()) - 1;
    }

    void add_constraint(std::vector<std::int64_t> coeffs, Cmp cmp, std::int64_t constant) {
        if (coeffs.size() != variables.size())
            throw std::invalid_argument("constraint arity does not match variable count");
        constraints.push_back({std::move(coeffs), cmp, constant});
    }

    // Equality as a ≤ / ≥ pair.
    void add_equality(const std::vector<std::int64_t>& coeffs, std::int64_t constant) {
        add_constraint(coeffs, Cmp::LE, constant);
        add_constraint(coeffs, Cmp::GE, constant);
    }

    static const char* cmp_name(Cmp c) {
        switch (c) {
            case Cmp::LT: return "<";
            case Cmp::LE: return "<=";
            case Cmp::GT: return ">";
            case Cmp::GE: return ">=";
        }
        return "?";
    }

    // Plain-text rows "c1*x1 + c2*x2 + ... OP const", one per line.
    std::string dump() const {
        std::ostringstream out;
        for (const auto& row : constraints) {
            bool first = true;
            for (std::size_t i = 0; i < row.coeffs.size(); ++i) {
                if (row.coeffs[i] == 0) continue;
                if (!first) out << " + ";
                out << row.coeffs[i] << "*" << variables[i].name;
                first = false;
            }
            if (first) out << "0";
            out << " " << cmp_name(row.cmp) << " " << row.constant << "\n";
        }
        return out.str();
    }
};

namespace detail {

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}
inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
    return q;
}

}  // namespace detail

// Exact feasibility by depth-first search in declaration order, ascending
// values, with per-row interval propagation to a fixpoint before each branch.
// Strict rows are normalized to nonstrict by shifting the constant by one.
inline std::optional<std::vector<std::int64_t>> solve_feasibility(const LinearSystem& sys) {
    const int nv = static_cast<int>(sys.variables.size());
    for (const auto& c : sys.constraints)
        if (c.coeffs.size() != sys.variables.size())
            throw std::invalid_argument("constraint arity does not match variable count");

    // Normal form: every row becomes Σ c_i x_i ≤ K.
    struct Row {
        std::vector<std::int64_t> coeffs;
        std::int64_t constant;
    };
    std::vector<Row> rows;
    for (const auto& c : sys.constraints) {
        Row r{c.coeffs, c.constant};
        switch (c.cmp) {
            case LinearSystem::Cmp::LE: break;
            case LinearSystem::Cmp::LT: r.constant -= 1; break;
            case LinearSystem::Cmp::GE:
            case LinearSystem::Cmp::GT: {
                for (auto& x : r.coeffs) x = -x;
                r.constant = -r.constant;
                if (c.cmp == LinearSystem::Cmp::GT) r.constant -= 1;
                break;
            }
        }
        rows.push_back(std::move(r));
    }

    std::vector<std::int64_t> lo(nv), hi(nv);
    for (int i = 0; i < nv; ++i) {
        lo[i] = sys.variables[i].lo;
        hi[i] = sys.variables[i].hi;
    }

    // Tighten [lo,hi] against every row until stable; false = empty interval.
    auto propagate = [&](std::vector<std::int64_t>& lo, std::vector<std::int64_t>& hi) -> bool {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& r : rows) {
                // Minimum achievable value of the row's left side.
                std::int64_t min_total = 0;
                for (int i = 0; i < nv; ++i) {
                    if (r.coeffs[i] > 0)
                        min_total += r.coeffs[i] * lo[i];
                    else if (r.coeffs[i] < 0)
                        min_total += r.coeffs[i] * hi[i];
                }
                if (min_total > r.constant) return false;
                for (int j = 0; j < nv; ++j) {
                    std::int64_t cj = r.coeffs[j];
                    if (cj == 0) continue;
                    std::int64_t rest = min_total - (cj > 0 ? cj * lo[j] : cj * hi[j]);
                    std::int64_t slack = r.constant - rest;
                    if (cj > 0) {
                        std::int64_t ub = detail::floor_div(slack, cj);
                        if (ub < hi[j]) {
                            hi[j] = ub;
                            changed = true;
                        }
                    } else {
                        std::int64_t lb = detail::ceil_div(slack, cj);
                        if (lb > lo[j]) {
                            lo[j] = lb;
                            changed = true;
                        }
                    }
                    if (lo[j] > hi[j]) return false;
                }
            }
        }
        return true;
    };

    std::vector<std::int64_t> assignment(nv);
    auto dfs = [&](auto&& self, int depth, std::vector<std::int64_t> lo,
                   std::vector<std::int64_t> hi) -> bool {
        if (!propagate(lo, hi)) return false;
        if (depth == nv) {
            for (int i = 0; i < nv; ++i) assignment[i] = lo[i];
            return true;
        }
        for (std::int64_t v = lo[depth]; v <= hi[depth]; ++v) {
            auto l2 = lo;
            auto h2 = hi;
            l2[depth] = h2[depth] = v;
            if (self(self, depth + 1, std::move(l2), std::move(h2))) {
                assignment[depth] = v;
                return true;
            }
        }
        return false;
    };

    if (!dfs(dfs, 0, lo, hi)) return std::nullopt;
    return assignment;
}

}  // namespace multiprong
