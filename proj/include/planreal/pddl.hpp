#pragma once

#include <map>
#include <string>
#include <vector>

#include <stdexcept>

namespace planreal {

/// Parse/validation failure with source position.
class PddlError : public std::runtime_error {
public:
    PddlError(const std::string& msg, int line, int col)
        : std::runtime_error(msg + " (line " + std::to_string(line) + ", col " +
                             std::to_string(col) + ")"),
          line(line),
          col(col) {}
    explicit PddlError(const std::string& msg) : std::runtime_error(msg), line(0), col(0) {}
    int line;
    int col;
};

struct TypedName {
    std::string name;
    std::string type;
};

struct PredicateDef {
    std::string name;
    std::vector<std::string> arg_types;
};

struct Literal {
    std::string pred;
    std::vector<std::string> args;  // ?variables or constant names
    bool negated = false;
};

enum class ControllerId { AStarTrack, FabricReach, FabricRelease, Push };

std::string controller_name(ControllerId id);

struct ActionSchemaDef {
    std::string name;
    std::vector<TypedName> params;
    ControllerId controller = ControllerId::AStarTrack;
    std::string cost_id = "time_per_step";
    std::string success_id;  // defaults per controller
    std::vector<Literal> preconditions;
    std::vector<Literal> effects;  // negated entries are deletes
};

struct Domain {
    std::string name;
    std::vector<std::string> requirements;
    std::map<std::string, std::string> type_parents;  // type -> parent ("object" roots)
    std::vector<TypedName> constants;
    std::vector<PredicateDef> predicates;
    std::vector<ActionSchemaDef> schemas;

    const PredicateDef* find_predicate(const std::string& name) const;
    bool type_known(const std::string& t) const;
    bool is_subtype(const std::string& t, const std::string& ancestor) const;
};

struct GroundAtom {
    std::string pred;
    std::vector<std::string> args;

    std::string str() const;
    bool operator<(const GroundAtom& o) const;
    bool operator==(const GroundAtom& o) const;
};

struct Problem {
    std::string name;
    std::string domain_name;
    std::vector<TypedName> objects;
    std::vector<GroundAtom> init;
    std::vector<Literal> goal;  // conjunction of ground literals
    std::map<std::string, std::string> param_bindings;  // PDDL object -> ParamSpec id
};

/// Parses the :strips/:typing/:negative-preconditions subset, plus the
/// :controller extension key inside actions.
Domain parse_domain(const std::string& text);

/// Parses a problem, including the :params extension block that binds PDDL
/// objects to continuous parameter spec ids.
Problem parse_problem(const std::string& text, const Domain& domain);

std::string read_text_file(const std::string& path);

}  // namespace planreal
