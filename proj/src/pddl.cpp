#include "planreal/pddl.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace planreal {

std::string controller_name(ControllerId id) {
    switch (id) {
        case ControllerId::AStarTrack: return "astar_track";
        case ControllerId::FabricReach: return "fabric_reach";
        case ControllerId::FabricRelease: return "fabric_release";
        case ControllerId::Push: return "push";
    }
    return "?";
}

const PredicateDef* Domain::find_predicate(const std::string& name) const {
    for (const auto& p : predicates)
        if (p.name == name) return &p;
    return nullptr;
}

bool Domain::type_known(const std::string& t) const {
    return t == "object" || type_parents.count(t) > 0;
}

bool Domain::is_subtype(const std::string& t, const std::string& ancestor) const {
    if (ancestor == "object") return true;
    std::string cur = t;
    while (true) {
        if (cur == ancestor) return true;
        auto it = type_parents.find(cur);
        if (it == type_parents.end() || it->second == cur) return false;
        cur = it->second;
        if (cur == "object") return cur == ancestor;
    }
}

std::string GroundAtom::str() const {
    std::string s = pred + "(";
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i > 0) s += ", ";
        s += args[i];
    }
    return s + ")";
}

bool GroundAtom::operator<(const GroundAtom& o) const {
    if (pred != o.pred) return pred < o.pred;
    return args < o.args;
}

bool GroundAtom::operator==(const GroundAtom& o) const {
    return pred == o.pred && args == o.args;
}

namespace {

struct Sexp {
    bool is_list = false;
    std::string atom;
    std::vector<Sexp> items;
    int line = 0;
    int col = 0;

    bool is_atom(const std::string& s) const { return !is_list && atom == s; }
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    Sexp parse_all_single() {
        skip_ws();
        Sexp root = parse_one();
        skip_ws();
        if (pos_ < text_.size())
            throw PddlError("trailing content after top-level form", line_, col_);
        return root;
    }

private:
    Sexp parse_one() {
        skip_ws();
        if (pos_ >= text_.size()) throw PddlError("unexpected end of input", line_, col_);
        const int l = line_, c = col_;
        if (text_[pos_] == '(') {
            advance();
            Sexp list;
            list.is_list = true;
            list.line = l;
            list.col = c;
            while (true) {
                skip_ws();
                if (pos_ >= text_.size())
                    throw PddlError("unclosed '('", l, c);
                if (text_[pos_] == ')') {
                    advance();
                    return list;
                }
                list.items.push_back(parse_one());
            }
        }
        if (text_[pos_] == ')') throw PddlError("unexpected ')'", line_, col_);
        Sexp atom;
        atom.line = l;
        atom.col = c;
        while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
               text_[pos_] != '(' && text_[pos_] != ')' && text_[pos_] != ';') {
            atom.atom += text_[pos_];
            advance();
        }
        if (atom.atom.empty()) throw PddlError("empty token", l, c);
        return atom;
    }

    void skip_ws() {
        while (pos_ < text_.size()) {
            const char ch = text_[pos_];
            if (ch == ';') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(ch))) {
                advance();
            } else {
                return;
            }
        }
    }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

const Sexp& expect_list(const Sexp& s, const std::string& what) {
    if (!s.is_list) throw PddlError("expected a list for " + what, s.line, s.col);
    return s;
}

const std::string& expect_atom(const Sexp& s, const std::string& what) {
    if (s.is_list) throw PddlError("expected a name for " + what, s.line, s.col);
    return s.atom;
}

/// Parses "name name - type name - type ..." lists used by :types,
/// :objects, :constants and :parameters. Untyped names get default_type.
std::vector<TypedName> parse_typed_list(const std::vector<Sexp>& items, std::size_t begin,
                                        const std::string& default_type) {
    std::vector<TypedName> out;
    std::vector<std::string> pending;
    for (std::size_t i = begin; i < items.size(); ++i) {
        const std::string& tok = expect_atom(items[i], "typed list entry");
        if (tok == "-") {
            if (i + 1 >= items.size())
                throw PddlError("dangling '-' in typed list", items[i].line, items[i].col);
            const std::string& type = expect_atom(items[i + 1], "type name");
            for (const auto& n : pending) out.push_back({n, type});
            pending.clear();
            ++i;
        } else {
            pending.push_back(tok);
        }
    }
    for (const auto& n : pending) out.push_back({n, default_type});
    return out;
}

Literal parse_literal(const Sexp& s, const Domain* domain_for_check) {
    const Sexp& list = expect_list(s, "literal");
    if (list.items.empty()) throw PddlError("empty literal", s.line, s.col);
    Literal lit;
    const Sexp* body = &list;
    if (list.items[0].is_atom("not")) {
        if (list.items.size() != 2)
            throw PddlError("'not' takes exactly one literal", s.line, s.col);
        lit.negated = true;
        body = &expect_list(list.items[1], "negated literal");
        if (body->items.empty()) throw PddlError("empty literal", s.line, s.col);
    }
    lit.pred = expect_atom(body->items[0], "predicate name");
    for (std::size_t i = 1; i < body->items.size(); ++i) {
        lit.args.push_back(expect_atom(body->items[i], "predicate argument"));
    }
    if (domain_for_check) {
        const PredicateDef* def = domain_for_check->find_predicate(lit.pred);
        if (!def)
            throw PddlError("unknown predicate '" + lit.pred + "'", body->items[0].line,
                            body->items[0].col);
        if (def->arg_types.size() != lit.args.size())
            throw PddlError("arity mismatch for predicate '" + lit.pred + "': expected " +
                                std::to_string(def->arg_types.size()) + ", got " +
                                std::to_string(lit.args.size()),
                            body->items[0].line, body->items[0].col);
    }
    return lit;
}

std::vector<Literal> parse_condition(const Sexp& s, const Domain* domain) {
    const Sexp& list = expect_list(s, "condition");
    std::vector<Literal> out;
    if (!list.items.empty() && list.items[0].is_atom("and")) {
        for (std::size_t i = 1; i < list.items.size(); ++i) {
            out.push_back(parse_literal(list.items[i], domain));
        }
        return out;
    }
    if (list.items.empty()) return out;  // "()" — empty conjunction
    out.push_back(parse_literal(s, domain));
    return out;
}

ControllerId parse_controller_id(const Sexp& s) {
    const std::string& name = expect_atom(s, ":controller value");
    if (name == "astar_track") return ControllerId::AStarTrack;
    if (name == "fabric_reach") return ControllerId::FabricReach;
    if (name == "fabric_release") return ControllerId::FabricRelease;
    if (name == "push") return ControllerId::Push;
    throw PddlError("unknown controller '" + name + "'", s.line, s.col);
}

std::string default_success_id(ControllerId c) {
    switch (c) {
        case ControllerId::AStarTrack: return "base_in";
        case ControllerId::FabricReach: return "ee_closed_in";
        case ControllerId::FabricRelease: return "ee_in_open";
        case ControllerId::Push: return "ee_in_open";
    }
    return "?";
}

}  // namespace

Domain parse_domain(const std::string& text) {
    Lexer lexer(text);
    const Sexp root = lexer.parse_all_single();
    expect_list(root, "domain");
    if (root.items.empty() || !root.items[0].is_atom("define"))
        throw PddlError("expected (define (domain ...) ...)", root.line, root.col);

    Domain d;
    if (root.items.size() < 2 || !root.items[1].is_list || root.items[1].items.size() != 2 ||
        !root.items[1].items[0].is_atom("domain"))
        throw PddlError("expected (domain <name>)", root.line, root.col);
    d.name = expect_atom(root.items[1].items[1], "domain name");

    for (std::size_t i = 2; i < root.items.size(); ++i) {
        const Sexp& sec = expect_list(root.items[i], "domain section");
        if (sec.items.empty()) throw PddlError("empty domain section", sec.line, sec.col);
        const std::string& tag = expect_atom(sec.items[0], "section tag");
        if (tag == ":requirements") {
            static const std::set<std::string> supported = {":strips", ":typing",
                                                            ":negative-preconditions"};
            for (std::size_t k = 1; k < sec.items.size(); ++k) {
                const std::string& req = expect_atom(sec.items[k], "requirement");
                if (!supported.count(req))
                    throw PddlError("unsupported requirement '" + req + "'", sec.items[k].line,
                                    sec.items[k].col);
                d.requirements.push_back(req);
            }
        } else if (tag == ":types") {
            for (const auto& tn : parse_typed_list(sec.items, 1, "object")) {
                d.type_parents[tn.name] = tn.type;
            }
        } else if (tag == ":constants") {
            for (const auto& tn : parse_typed_list(sec.items, 1, "object")) {
                if (!d.type_known(tn.type))
                    throw PddlError("unknown type '" + tn.type + "' in :constants", sec.line,
                                    sec.col);
                d.constants.push_back(tn);
            }
        } else if (tag == ":predicates") {
            for (std::size_t k = 1; k < sec.items.size(); ++k) {
                const Sexp& ps = expect_list(sec.items[k], "predicate declaration");
                if (ps.items.empty())
                    throw PddlError("empty predicate declaration", ps.line, ps.col);
                PredicateDef def;
                def.name = expect_atom(ps.items[0], "predicate name");
                if (d.find_predicate(def.name))
                    throw PddlError("duplicate predicate '" + def.name + "'", ps.line, ps.col);
                for (const auto& tn : parse_typed_list(ps.items, 1, "object")) {
                    if (!d.type_known(tn.type))
                        throw PddlError("unknown type '" + tn.type + "' in predicate '" +
                                            def.name + "'",
                                        ps.line, ps.col);
                    def.arg_types.push_back(tn.type);
                }
                d.predicates.push_back(def);
            }
        } else if (tag == ":action") {
            if (sec.items.size() < 2)
                throw PddlError("action without a name", sec.line, sec.col);
            ActionSchemaDef a;
            a.name = expect_atom(sec.items[1], "action name");
            bool controller_set = false;
            for (std::size_t k = 2; k + 1 < sec.items.size(); k += 2) {
                const std::string& key = expect_atom(sec.items[k], "action key");
                const Sexp& val = sec.items[k + 1];
                if (key == ":parameters") {
                    const Sexp& pl = expect_list(val, ":parameters");
                    for (const auto& tn : parse_typed_list(pl.items, 0, "object")) {
                        if (tn.name.empty() || tn.name[0] != '?')
                            throw PddlError("action parameter must start with '?': " + tn.name,
                                            pl.line, pl.col);
                        if (!d.type_known(tn.type))
                            throw PddlError("unknown type '" + tn.type + "' in action '" +
                                                a.name + "'",
                                            pl.line, pl.col);
                        a.params.push_back(tn);
                    }
                } else if (key == ":precondition") {
                    a.preconditions = parse_condition(val, &d);
                } else if (key == ":effect") {
                    a.effects = parse_condition(val, &d);
                } else if (key == ":controller") {
                    a.controller = parse_controller_id(val);
                    controller_set = true;
                } else if (key == ":success") {
                    a.success_id = expect_atom(val, ":success value");
                } else if (key == ":cost") {
                    a.cost_id = expect_atom(val, ":cost value");
                } else {
                    throw PddlError("unknown action key '" + key + "'", sec.items[k].line,
                                    sec.items[k].col);
                }
            }
            if (!controller_set)
                throw PddlError("action '" + a.name + "' is missing :controller", sec.line,
                                sec.col);
            if (a.success_id.empty()) a.success_id = default_success_id(a.controller);

            // Effects must not add and delete the same atom.
            for (const auto& e : a.effects) {
                for (const auto& f : a.effects) {
                    if (&e != &f && !e.negated && f.negated && e.pred == f.pred &&
                        e.args == f.args)
                        throw PddlError("action '" + a.name +
                                            "' adds and deletes the same atom '" + e.pred + "'",
                                        sec.line, sec.col);
                }
            }
            // Literal variables must be declared parameters or constants.
            auto check_args = [&](const std::vector<Literal>& lits, const char* where) {
                for (const auto& lit : lits) {
                    for (const auto& arg : lit.args) {
                        if (!arg.empty() && arg[0] == '?') {
                            const bool found = std::any_of(
                                a.params.begin(), a.params.end(),
                                [&](const TypedName& p) { return p.name == arg; });
                            if (!found)
                                throw PddlError("undeclared variable '" + arg + "' in " + where +
                                                    " of action '" + a.name + "'",
                                                sec.line, sec.col);
                        } else {
                            const bool found = std::any_of(
                                d.constants.begin(), d.constants.end(),
                                [&](const TypedName& c) { return c.name == arg; });
                            if (!found)
                                throw PddlError("unknown constant '" + arg + "' in " + where +
                                                    " of action '" + a.name + "'",
                                                sec.line, sec.col);
                        }
                    }
                }
            };
            check_args(a.preconditions, "precondition");
            check_args(a.effects, "effect");
            d.schemas.push_back(a);
        } else {
            throw PddlError("unknown domain section '" + tag + "'", sec.line, sec.col);
        }
    }
    return d;
}

Problem parse_problem(const std::string& text, const Domain& domain) {
    Lexer lexer(text);
    const Sexp root = lexer.parse_all_single();
    expect_list(root, "problem");
    if (root.items.empty() || !root.items[0].is_atom("define"))
        throw PddlError("expected (define (problem ...) ...)", root.line, root.col);

    Problem p;
    if (root.items.size() < 2 || !root.items[1].is_list || root.items[1].items.size() != 2 ||
        !root.items[1].items[0].is_atom("problem"))
        throw PddlError("expected (problem <name>)", root.line, root.col);
    p.name = expect_atom(root.items[1].items[1], "problem name");

    auto all_objects = [&]() {
        std::vector<TypedName> objs = domain.constants;
        objs.insert(objs.end(), p.objects.begin(), p.objects.end());
        return objs;
    };

    auto check_ground_literal = [&](const Literal& lit, const Sexp& at) {
        const PredicateDef* def = domain.find_predicate(lit.pred);
        const auto objs = all_objects();
        for (std::size_t i = 0; i < lit.args.size(); ++i) {
            const auto it = std::find_if(objs.begin(), objs.end(), [&](const TypedName& o) {
                return o.name == lit.args[i];
            });
            if (it == objs.end())
                throw PddlError("unknown object '" + lit.args[i] + "'", at.line, at.col);
            if (!domain.is_subtype(it->type, def->arg_types[i]))
                throw PddlError("object '" + lit.args[i] + "' of type '" + it->type +
                                    "' does not match '" + def->arg_types[i] + "' in '" +
                                    lit.pred + "'",
                                at.line, at.col);
        }
    };

    for (std::size_t i = 2; i < root.items.size(); ++i) {
        const Sexp& sec = expect_list(root.items[i], "problem section");
        if (sec.items.empty()) throw PddlError("empty problem section", sec.line, sec.col);
        const std::string& tag = expect_atom(sec.items[0], "section tag");
        if (tag == ":domain") {
            if (sec.items.size() != 2)
                throw PddlError(":domain takes one name", sec.line, sec.col);
            p.domain_name = expect_atom(sec.items[1], "domain name");
            if (p.domain_name != domain.name)
                throw PddlError("problem is for domain '" + p.domain_name +
                                    "', parsed domain is '" + domain.name + "'",
                                sec.line, sec.col);
        } else if (tag == ":objects") {
            for (const auto& tn : parse_typed_list(sec.items, 1, "object")) {
                if (!domain.type_known(tn.type))
                    throw PddlError("unknown type '" + tn.type + "' in :objects", sec.line,
                                    sec.col);
                p.objects.push_back(tn);
            }
        } else if (tag == ":init") {
            for (std::size_t k = 1; k < sec.items.size(); ++k) {
                const Literal lit = parse_literal(sec.items[k], &domain);
                if (lit.negated)
                    throw PddlError("negated atom in :init", sec.items[k].line,
                                    sec.items[k].col);
                check_ground_literal(lit, sec.items[k]);
                p.init.push_back(GroundAtom{lit.pred, lit.args});
            }
        } else if (tag == ":goal") {
            if (sec.items.size() != 2)
                throw PddlError(":goal takes one formula", sec.line, sec.col);
            p.goal = parse_condition(sec.items[1], &domain);
            for (const auto& lit : p.goal) check_ground_literal(lit, sec.items[1]);
        } else if (tag == ":params") {
            for (std::size_t k = 1; k < sec.items.size(); ++k) {
                const Sexp& pairlist = expect_list(sec.items[k], ":params entry");
                if (pairlist.items.size() != 2)
                    throw PddlError(":params entries are (object param-spec-id)", pairlist.line,
                                    pairlist.col);
                const std::string obj = expect_atom(pairlist.items[0], "object name");
                const std::string spec = expect_atom(pairlist.items[1], "param spec id");
                p.param_bindings[obj] = spec;
            }
        } else {
            throw PddlError("unknown problem section '" + tag + "'", sec.line, sec.col);
        }
    }

    // Binding targets must be declared objects or constants.
    const auto objs = all_objects();
    for (const auto& [obj, spec] : p.param_bindings) {
        const bool found = std::any_of(objs.begin(), objs.end(),
                                       [&](const TypedName& o) { return o.name == obj; });
        if (!found) throw PddlError(":params references unknown object '" + obj + "'");
    }
    return p;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PddlError("cannot open file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace planreal
