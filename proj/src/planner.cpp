#include "planreal/planner.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <unordered_map>

namespace planreal {

std::string GroundAction::display() const {
    std::string s = schema->name + "(";
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i > 0) s += ", ";
        s += args[i];
    }
    return s + ")";
}

namespace {

std::vector<TypedName> collect_objects(const Domain& domain, const Problem& problem) {
    std::vector<TypedName> objs = domain.constants;
    objs.insert(objs.end(), problem.objects.begin(), problem.objects.end());
    return objs;
}

}  // namespace

std::vector<GroundAction> ground(const Domain& domain, const Problem& problem) {
    const auto objs = collect_objects(domain, problem);
    std::vector<GroundAction> out;
    for (const auto& schema : domain.schemas) {
        // Candidates per slot, in declaration order.
        std::vector<std::vector<std::string>> candidates(schema.params.size());
        for (std::size_t s = 0; s < schema.params.size(); ++s) {
            for (const auto& o : objs) {
                if (domain.is_subtype(o.type, schema.params[s].type))
                    candidates[s].push_back(o.name);
            }
        }
        std::vector<std::size_t> idx(schema.params.size(), 0);
        if (schema.params.empty()) {
            out.push_back({&schema, {}});
            continue;
        }
        bool any_empty = std::any_of(candidates.begin(), candidates.end(),
                                     [](const auto& c) { return c.empty(); });
        if (any_empty) continue;
        while (true) {
            GroundAction ga;
            ga.schema = &schema;
            for (std::size_t s = 0; s < idx.size(); ++s) ga.args.push_back(candidates[s][idx[s]]);
            out.push_back(std::move(ga));
            std::size_t k = idx.size();
            while (k > 0) {
                --k;
                if (++idx[k] < candidates[k].size()) break;
                idx[k] = 0;
                if (k == 0) goto done;
            }
        }
    done:;
    }
    return out;
}

namespace {

struct GroundLiteralSets {
    std::vector<int> pre_pos;
    std::vector<int> pre_neg;
    std::vector<int> add;
    std::vector<int> del;
};

class AtomTable {
public:
    int intern(const GroundAtom& a) {
        auto it = ids_.find(a);
        if (it != ids_.end()) return it->second;
        const int id = static_cast<int>(atoms_.size());
        ids_.emplace(a, id);
        atoms_.push_back(a);
        return id;
    }
    const GroundAtom& atom(int id) const { return atoms_[static_cast<std::size_t>(id)]; }

private:
    std::map<GroundAtom, int> ids_;
    std::vector<GroundAtom> atoms_;
};

GroundAtom substitute(const Literal& lit, const ActionSchemaDef& schema,
                      const std::vector<std::string>& args) {
    GroundAtom a;
    a.pred = lit.pred;
    for (const auto& arg : lit.args) {
        if (!arg.empty() && arg[0] == '?') {
            for (std::size_t i = 0; i < schema.params.size(); ++i) {
                if (schema.params[i].name == arg) {
                    a.args.push_back(args[i]);
                    break;
                }
            }
        } else {
            a.args.push_back(arg);
        }
    }
    return a;
}

GroundLiteralSets ground_literals(const GroundAction& ga, AtomTable& table) {
    GroundLiteralSets g;
    for (const auto& lit : ga.schema->preconditions) {
        const int id = table.intern(substitute(lit, *ga.schema, ga.args));
        (lit.negated ? g.pre_neg : g.pre_pos).push_back(id);
    }
    for (const auto& lit : ga.schema->effects) {
        const int id = table.intern(substitute(lit, *ga.schema, ga.args));
        (lit.negated ? g.del : g.add).push_back(id);
    }
    return g;
}

using State = std::vector<int>;  // sorted atom ids

bool state_contains(const State& s, int atom) {
    return std::binary_search(s.begin(), s.end(), atom);
}

bool applicable(const State& s, const GroundLiteralSets& g) {
    for (int a : g.pre_pos)
        if (!state_contains(s, a)) return false;
    for (int a : g.pre_neg)
        if (state_contains(s, a)) return false;
    return true;
}

State apply(const State& s, const GroundLiteralSets& g) {
    State next;
    next.reserve(s.size() + g.add.size());
    for (int a : s)
        if (!std::count(g.del.begin(), g.del.end(), a)) next.push_back(a);
    for (int a : g.add)
        if (!std::binary_search(next.begin(), next.end(), a)) next.push_back(a);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    return next;
}

struct StateHash {
    std::size_t operator()(const State& s) const {
        std::size_t h = 1469598103934665603ULL;
        for (int a : s) {
            h ^= static_cast<std::size_t>(a) + 0x9e3779b9;
            h *= 1099511628211ULL;
        }
        return h;
    }
};

int goal_count(const State& s, const std::vector<int>& goal_pos,
               const std::vector<int>& goal_neg) {
    int unsat = 0;
    for (int a : goal_pos)
        if (!state_contains(s, a)) ++unsat;
    for (int a : goal_neg)
        if (state_contains(s, a)) ++unsat;
    return unsat;
}

}  // namespace

PlanResult plan(const Domain& domain, const Problem& problem, std::uint64_t node_cap) {
    AtomTable table;
    std::vector<GroundAction> actions = ground(domain, problem);
    // Lexicographic successor-generation order.
    std::sort(actions.begin(), actions.end(), [](const GroundAction& a, const GroundAction& b) {
        if (a.schema->name != b.schema->name) return a.schema->name < b.schema->name;
        return a.args < b.args;
    });
    std::vector<GroundLiteralSets> lits;
    lits.reserve(actions.size());
    for (const auto& a : actions) lits.push_back(ground_literals(a, table));

    std::vector<int> goal_pos, goal_neg;
    for (const auto& lit : problem.goal) {
        const int id = table.intern(GroundAtom{lit.pred, lit.args});
        (lit.negated ? goal_neg : goal_pos).push_back(id);
    }

    State init;
    for (const auto& atom : problem.init) init.push_back(table.intern(atom));
    std::sort(init.begin(), init.end());
    init.erase(std::unique(init.begin(), init.end()), init.end());

    struct Node {
        State state;
        int g = 0;
        int parent = -1;       // index into nodes
        int via_action = -1;   // index into actions
    };
    struct OpenEntry {
        int f;
        int h;
        std::uint64_t seq;
        int node;
        bool operator>(const OpenEntry& o) const {
            if (f != o.f) return f > o.f;
            if (h != o.h) return h > o.h;
            return seq > o.seq;
        }
    };

    std::vector<Node> nodes;
    std::priority_queue<OpenEntry, std::vector<OpenEntry>, std::greater<OpenEntry>> open;
    std::unordered_map<State, int, StateHash> best_g;

    nodes.push_back({init, 0, -1, -1});
    best_g[init] = 0;
    std::uint64_t seq = 0;
    open.push({goal_count(init, goal_pos, goal_neg), goal_count(init, goal_pos, goal_neg), seq++, 0});

    PlanResult result;
    while (!open.empty()) {
        const OpenEntry top = open.top();
        open.pop();
        const Node node = nodes[static_cast<std::size_t>(top.node)];
        auto it = best_g.find(node.state);
        if (it != best_g.end() && it->second < node.g) continue;  // stale entry

        if (goal_count(node.state, goal_pos, goal_neg) == 0) {
            result.status = PlanStatus::Solved;
            std::vector<int> chain;
            for (int n = top.node; nodes[static_cast<std::size_t>(n)].via_action >= 0;
                 n = nodes[static_cast<std::size_t>(n)].parent) {
                chain.push_back(nodes[static_cast<std::size_t>(n)].via_action);
            }
            std::reverse(chain.begin(), chain.end());
            for (int a : chain) result.plan.actions.push_back(actions[static_cast<std::size_t>(a)]);
            return result;
        }

        ++result.expanded;
        if (result.expanded > node_cap) {
            result.status = PlanStatus::NodeCapExceeded;
            return result;
        }

        for (std::size_t ai = 0; ai < actions.size(); ++ai) {
            if (!applicable(node.state, lits[ai])) continue;
            State next = apply(node.state, lits[ai]);
            const int g = node.g + 1;
            auto found = best_g.find(next);
            if (found != best_g.end() && found->second <= g) continue;
            best_g[next] = g;
            const int h = goal_count(next, goal_pos, goal_neg);
            nodes.push_back({std::move(next), g, top.node, static_cast<int>(ai)});
            open.push({g + h, h, seq++, static_cast<int>(nodes.size()) - 1});
        }
    }
    result.status = PlanStatus::Unsolvable;
    return result;
}

std::optional<std::string> validate_plan(const Domain& domain, const Problem& problem,
                                         const SymbolicPlan& plan) {
    std::set<GroundAtom> state(problem.init.begin(), problem.init.end());
    for (std::size_t i = 0; i < plan.actions.size(); ++i) {
        const GroundAction& ga = plan.actions[i];
        for (const auto& lit : ga.schema->preconditions) {
            const GroundAtom atom = [&] {
                GroundAtom a;
                a.pred = lit.pred;
                for (const auto& arg : lit.args) {
                    if (!arg.empty() && arg[0] == '?') {
                        for (std::size_t k = 0; k < ga.schema->params.size(); ++k)
                            if (ga.schema->params[k].name == arg) a.args.push_back(ga.args[k]);
                    } else {
                        a.args.push_back(arg);
                    }
                }
                return a;
            }();
            const bool holds = state.count(atom) > 0;
            if (holds == lit.negated) {
                return "action " + std::to_string(i + 1) + " (" + ga.display() +
                       "): precondition " + std::string(lit.negated ? "(not " : "") + atom.str() +
                       (lit.negated ? ")" : "") + " violated";
            }
        }
        std::vector<GroundAtom> adds;
        for (const auto& lit : ga.schema->effects) {
            GroundAtom a;
            a.pred = lit.pred;
            for (const auto& arg : lit.args) {
                if (!arg.empty() && arg[0] == '?') {
                    for (std::size_t k = 0; k < ga.schema->params.size(); ++k)
                        if (ga.schema->params[k].name == arg) a.args.push_back(ga.args[k]);
                } else {
                    a.args.push_back(arg);
                }
            }
            if (lit.negated)
                state.erase(a);
            else
                adds.push_back(a);
        }
        for (const auto& a : adds) state.insert(a);
    }
    for (const auto& lit : problem.goal) {
        const GroundAtom atom{lit.pred, lit.args};
        const bool holds = state.count(atom) > 0;
        if (holds == lit.negated)
            return "goal literal " + std::string(lit.negated ? "(not " : "") + atom.str() +
                   (lit.negated ? ")" : "") + " unsatisfied at plan end";
    }
    return std::nullopt;
}

}  // namespace planreal
