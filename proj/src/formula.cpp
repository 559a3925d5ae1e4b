#include "autoseq/formula.hpp"

#include <algorithm>
#include <set>

namespace autoseq {

std::string to_string(const Term& t) {
    switch (t.kind) {
        case Term::Kind::Var: return t.name;
        case Term::Kind::Const: return std::to_string(t.value);
        case Term::Kind::Add: return "(" + to_string(*t.lhs) + "+" + to_string(*t.rhs) + ")";
        case Term::Kind::Sub: return "(" + to_string(*t.lhs) + "-" + to_string(*t.rhs) + ")";
        case Term::Kind::Mul: return "(" + to_string(*t.lhs) + "*" + to_string(*t.rhs) + ")";
    }
    return "?";
}

std::string to_string(const Formula& f) {
    switch (f.kind) {
        case Formula::Kind::Not: return "~" + to_string(*f.a);
        case Formula::Kind::Binary: {
            const char* op = "&";
            switch (f.op) {
                case BoolOp::And: op = "&"; break;
                case BoolOp::Or: op = "|"; break;
                case BoolOp::Implies: op = "=>"; break;
                case BoolOp::Iff: op = "<=>"; break;
                case BoolOp::Xor: op = "^"; break;
            }
            return "(" + to_string(*f.a) + " " + op + " " + to_string(*f.b) + ")";
        }
        case Formula::Kind::Quantifier: {
            std::string s = "(";
            s += f.universal ? "A" : "E";
            for (std::size_t i = 0; i < f.vars.size(); ++i) s += (i ? "," : "") + f.vars[i];
            return s + " ?" + f.system.name() + " " + to_string(*f.a) + ")";
        }
        case Formula::Kind::Compare:
            return "(?" + f.system.name() + " " + to_string(*f.left) + std::string(symbol(f.relation)) +
                   to_string(*f.right) + ")";
        case Formula::Kind::Relation: {
            std::string s = "$" + f.name + "(";
            for (std::size_t i = 0; i < f.args.size(); ++i) s += (i ? "," : "") + to_string(*f.args[i]);
            return s + ")";
        }
        case Formula::Kind::DfaoTest:
            return f.name + "[" + to_string(*f.args[0]) + "]" + (f.negate ? "!=" : "=") + "@" + std::to_string(f.value);
    }
    return "?";
}

namespace {

void term_vars(const Term& t, const std::set<std::string>& bound, std::vector<std::string>& out) {
    if (t.kind == Term::Kind::Var) {
        if (!bound.count(t.name) && std::find(out.begin(), out.end(), t.name) == out.end()) out.push_back(t.name);
        return;
    }
    if (t.lhs) term_vars(*t.lhs, bound, out);
    if (t.rhs) term_vars(*t.rhs, bound, out);
}

void collect(const Formula& f, std::set<std::string> bound, std::vector<std::string>& out) {
    switch (f.kind) {
        case Formula::Kind::Not: collect(*f.a, bound, out); return;
        case Formula::Kind::Binary:
            collect(*f.a, bound, out);
            collect(*f.b, bound, out);
            return;
        case Formula::Kind::Quantifier:
            for (const auto& v : f.vars) bound.insert(v);
            collect(*f.a, bound, out);
            return;
        case Formula::Kind::Compare:
            term_vars(*f.left, bound, out);
            term_vars(*f.right, bound, out);
            return;
        case Formula::Kind::Relation:
        case Formula::Kind::DfaoTest:
            for (const auto& t : f.args) term_vars(*t, bound, out);
            return;
    }
}

}  // namespace

std::vector<std::string> free_variables(const Formula& f) {
    std::vector<std::string> out;
    collect(f, {}, out);
    return out;
}

}  // namespace autoseq
