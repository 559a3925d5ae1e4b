#include "autoseq/compiler.hpp"

#include "autoseq/automaton_ops.hpp"
#include "autoseq/numeration.hpp"

#include <algorithm>
#include <map>
#include <memory>

namespace autoseq {
namespace {

std::string display_name(const std::string& unique) {
    auto hash = unique.find('#');
    return hash == std::string::npos ? unique : unique.substr(0, hash);
}

std::string where(SourcePos pos) { return " (line " + std::to_string(pos.line) + ", column " + std::to_string(pos.column) + ")"; }

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw CompileError("coefficient overflow");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw CompileError("coefficient overflow");
    return r;
}

struct Linear {
    std::map<std::string, std::int64_t> coeffs;
    std::int64_t constant = 0;

    bool is_constant() const {
        return std::all_of(coeffs.begin(), coeffs.end(), [](const auto& kv) { return kv.second == 0; });
    }
    void add(const Linear& o, std::int64_t sign) {
        for (const auto& [v, c] : o.coeffs) coeffs[v] = checked_add(coeffs[v], checked_mul(sign, c));
        constant = checked_add(constant, checked_mul(sign, o.constant));
    }
    void scale(std::int64_t k) {
        for (auto& [v, c] : coeffs) c = checked_mul(c, k);
        constant = checked_mul(constant, k);
    }
};

// Resolved form: unique variable names, fresh variables for compound
// arguments, every atom with its numeration system.
struct Node {
    enum class Kind { Not, Binary, Quantifier, Atom, Relation, Dfao };
    Kind kind = Kind::Atom;
    BoolOp op = BoolOp::And;
    bool universal = false;
    std::vector<std::string> vars;  // quantified, or relation arguments, or the DFAO argument
    AffineAtom atom;
    const Automaton* relation = nullptr;
    const OutputAutomaton* dfao = nullptr;
    int value = 0;
    bool negate = false;
    std::vector<AffineAtom> side;  // constraints on fresh variables
    std::vector<std::string> fresh;
    std::unique_ptr<Node> a, b;
};

AffineAtom to_atom(const Linear& l, Relation rel, NumberSystem system) {
    AffineAtom atom;
    for (const auto& [v, c] : l.coeffs)
        if (c != 0) atom.terms.emplace_back(c, v);
    atom.constant = l.constant;
    atom.relation = rel;
    atom.system = system;
    return atom;
}

class Resolver {
public:
    explicit Resolver(const Environment& env) : env_(env) {}

    std::unique_ptr<Node> resolve(const Formula& f) {
        auto n = std::make_unique<Node>();
        switch (f.kind) {
            case Formula::Kind::Not:
                n->kind = Node::Kind::Not;
                n->a = resolve(*f.a);
                break;
            case Formula::Kind::Binary:
                n->kind = Node::Kind::Binary;
                n->op = f.op;
                n->a = resolve(*f.a);
                n->b = resolve(*f.b);
                break;
            case Formula::Kind::Quantifier: {
                n->kind = Node::Kind::Quantifier;
                n->universal = f.universal;
                for (const auto& v : f.vars) {
                    std::string unique = v + "#" + std::to_string(++counter_);
                    scope_[v].push_back(unique);
                    n->vars.push_back(unique);
                }
                n->a = resolve(*f.a);
                for (const auto& v : f.vars) scope_[v].pop_back();
                for (const auto& u : n->vars)
                    if (!bases_.count(u)) bases_[u] = f.system;
                break;
            }
            case Formula::Kind::Compare: {
                Linear l = linearize(*f.left);
                l.add(linearize(*f.right), -1);
                for (const auto& [v, c] : l.coeffs) constrain(v, f.system, f.pos);
                n->atom = to_atom(l, f.relation, f.system);
                break;
            }
            case Formula::Kind::Relation: {
                n->kind = Node::Kind::Relation;
                try {
                    n->relation = &env_.relation(f.name);
                } catch (const std::invalid_argument& e) {
                    throw CompileError(std::string(e.what()) + where(f.pos));
                }
                const auto& sig = n->relation->signature();
                if (sig.size() != f.args.size())
                    throw ArityMismatch("$" + f.name + " takes " + std::to_string(sig.size()) + " arguments, got " +
                                        std::to_string(f.args.size()) + where(f.pos));
                for (std::size_t i = 0; i < f.args.size(); ++i) n->vars.push_back(argument(*f.args[i], sig[i].system, n->vars, *n));
                break;
            }
            case Formula::Kind::DfaoTest: {
                n->kind = Node::Kind::Dfao;
                try {
                    n->dfao = &env_.dfao(f.name);
                } catch (const std::invalid_argument& e) {
                    throw CompileError(std::string(e.what()) + where(f.pos));
                }
                n->value = f.value;
                n->negate = f.negate;
                n->vars.push_back(argument(*f.args[0], n->dfao->system(), {}, *n));
                break;
            }
        }
        return n;
    }

    const std::map<std::string, NumberSystem>& bases() const { return bases_; }

private:
    std::string lookup(const std::string& name) const {
        auto it = scope_.find(name);
        if (it != scope_.end() && !it->second.empty()) return it->second.back();
        return name;
    }

    void constrain(const std::string& var, NumberSystem system, SourcePos pos) {
        auto [it, inserted] = bases_.try_emplace(var, system);
        if (!inserted && it->second != system)
            throw BaseMismatch("variable '" + display_name(var) + "' used with both " + it->second.name() + " and " +
                               system.name() + where(pos));
    }

    Linear linearize(const Term& t) {
        Linear l;
        switch (t.kind) {
            case Term::Kind::Var: l.coeffs[lookup(t.name)] = 1; break;
            case Term::Kind::Const: l.constant = t.value; break;
            case Term::Kind::Add:
            case Term::Kind::Sub:
                l = linearize(*t.lhs);
                l.add(linearize(*t.rhs), t.kind == Term::Kind::Add ? 1 : -1);
                break;
            case Term::Kind::Mul: {
                Linear x = linearize(*t.lhs), y = linearize(*t.rhs);
                if (!x.is_constant() && !y.is_constant())
                    throw CompileError("product of two variables is not allowed" + where(t.pos));
                if (x.is_constant()) std::swap(x, y);
                x.scale(y.constant);
                l = std::move(x);
                break;
            }
        }
        return l;
    }

    // A bare variable not yet used in this application is passed through;
    // anything else becomes a fresh variable tied to the term by an atom.
    std::string argument(const Term& t, NumberSystem system, const std::vector<std::string>& used, Node& n) {
        if (t.kind == Term::Kind::Var) {
            std::string u = lookup(t.name);
            if (std::find(used.begin(), used.end(), u) == used.end()) {
                constrain(u, system, t.pos);
                return u;
            }
        }
        std::string f = "$" + std::to_string(++counter_);
        bases_[f] = system;
        Linear l = linearize(t);
        for (const auto& [v, c] : l.coeffs) constrain(v, system, t.pos);
        l.scale(-1);
        l.coeffs[f] = 1;
        n.side.push_back(to_atom(l, Relation::Eq, system));
        n.fresh.push_back(f);
        return f;
    }

    const Environment& env_;
    std::map<std::string, std::vector<std::string>> scope_;
    std::map<std::string, NumberSystem> bases_;
    int counter_ = 0;
};

Automaton build(const Node& n) {
    switch (n.kind) {
        case Node::Kind::Not: return complement(build(*n.a));
        case Node::Kind::Binary: return product(build(*n.a), build(*n.b), n.op);
        case Node::Kind::Quantifier: {
            Automaton body = build(*n.a);
            return n.universal ? forall(body, n.vars) : project(body, n.vars);
        }
        case Node::Kind::Atom: return compile_atom(n.atom);
        case Node::Kind::Relation:
        case Node::Kind::Dfao: {
            Automaton a = n.kind == Node::Kind::Relation ? rename_tracks(*n.relation, n.vars)
                                                         : n.dfao->recognizer(n.vars[0], n.value, n.negate);
            for (const auto& atom : n.side) a = product(a, compile_atom(atom), BoolOp::And);
            return n.fresh.empty() ? a : project(a, n.fresh);
        }
    }
    return {};
}

}  // namespace

Automaton compile(const Formula& f, const Environment& env) {
    Resolver resolver(env);
    auto root = resolver.resolve(f);
    Automaton a = build(*root);
    // Free variables whose constraints cancelled out still get a track.
    for (const auto& v : free_variables(f))
        if (!a.signature().index_of(v)) a = add_track(a, Track{v, resolver.bases().at(v)});
    return canonical_track_order(a);
}

Automaton compile(std::string_view text, const Environment& env) { return compile(*parse_formula(text), env); }

std::string format_assignment(const Automaton& a, const Word& word) {
    const auto& sig = a.signature();
    std::string out;
    try {
        auto values = sig.decode_values(word);
        for (std::size_t i = 0; i < sig.size(); ++i)
            out += (i ? ", " : "") + sig[i].name + "=" + std::to_string(values[i]);
    } catch (const std::overflow_error&) {
        out = sig.format_word(word);
    }
    return out;
}

Decision decide(const Formula& sentence, const Environment& env) {
    auto free = free_variables(sentence);
    if (!free.empty()) throw CompileError("not a sentence: '" + free.front() + "' is free");
    Automaton a = compile(sentence, env);
    Decision d;
    d.truth = a.is_accepting(a.initial());
    if (!d.truth) {
        // Strip leading universal quantifiers and look for a falsifying
        // assignment of their variables.
        const Formula* body = &sentence;
        while (body->kind == Formula::Kind::Quantifier && body->universal) body = body->a.get();
        if (body != &sentence) {
            Automaton neg = complement(compile(*body, env));
            if (auto w = find_witness(neg)) d.counterexample = format_assignment(neg, *w);
        }
    }
    return d;
}

Decision decide(std::string_view text, const Environment& env) { return decide(*parse_formula(text), env); }

}  // namespace autoseq
