#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "planreal/pddl.hpp"

namespace planreal {

struct GroundAction {
    const ActionSchemaDef* schema = nullptr;
    std::vector<std::string> args;  // objects bound to schema params, in order

    std::string display() const;  // e.g. "moveTo(Table_1)"
};

struct SymbolicPlan {
    std::vector<GroundAction> actions;
};

/// All type-consistent bindings of every schema over constants + objects,
/// in deterministic (schema order, object declaration order) enumeration.
std::vector<GroundAction> ground(const Domain& domain, const Problem& problem);

enum class PlanStatus { Solved, Unsolvable, NodeCapExceeded };

struct PlanResult {
    PlanStatus status = PlanStatus::Unsolvable;
    SymbolicPlan plan;      // valid when status == Solved
    std::uint64_t expanded = 0;
};

/// A* forward search over ground-atom states: goal-count heuristic, uniform
/// action cost, deterministic tie-breaking (f, h, insertion order) with
/// successors generated in lexicographic (action name, args) order.
PlanResult plan(const Domain& domain, const Problem& problem,
                std::uint64_t node_cap = 1000000);

/// Independent symbolic validator: replays add/delete effects from init and
/// checks every precondition and the goal. Returns an error description or
/// nullopt when the plan is valid.
std::optional<std::string> validate_plan(const Domain& domain, const Problem& problem,
                                         const SymbolicPlan& plan);

}  // namespace planreal
