#pragma once

#include "autoseq/automaton_ops.hpp"
#include "autoseq/numeration.hpp"

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace autoseq {

struct SourcePos {
    int line = 1;
    int column = 1;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, SourcePos pos)
        : std::runtime_error("line " + std::to_string(pos.line) + ", column " + std::to_string(pos.column) + ": " + what),
          pos_(pos) {}
    SourcePos pos() const { return pos_; }

private:
    SourcePos pos_;
};

struct Term;
using TermPtr = std::shared_ptr<const Term>;

/// Affine term: variables, natural constants, +, - and products with at
/// least one constant factor.
struct Term {
    enum class Kind { Var, Const, Add, Sub, Mul };
    Kind kind = Kind::Const;
    std::string name;
    std::int64_t value = 0;
    TermPtr lhs, rhs;
    SourcePos pos;
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
    enum class Kind {
        Not,
        Binary,      // op, a, b
        Quantifier,  // universal, vars, a = body, system = default base of the vars
        Compare,     // relation, left, right, system
        Relation,    // name, args
        DfaoTest,    // name, args[0], value, negate
    };
    Kind kind = Kind::Compare;
    BoolOp op = BoolOp::And;
    bool universal = false;
    std::vector<std::string> vars;
    Relation relation = Relation::Eq;
    TermPtr left, right;
    NumberSystem system;
    std::string name;
    std::vector<TermPtr> args;
    int value = 0;
    bool negate = false;
    FormulaPtr a, b;
    SourcePos pos;
};

/// Parses one formula of the query language. `start` is the position of the
/// first character, for error messages inside scripts.
FormulaPtr parse_formula(std::string_view text, SourcePos start = {});

/// Renders a formula back into the query language (fully parenthesized).
std::string to_string(const Formula& f);
std::string to_string(const Term& t);

/// Free variables in order of first occurrence.
std::vector<std::string> free_variables(const Formula& f);

struct Command {
    enum class Kind { Def, Eval, Reg };
    Kind kind = Kind::Def;
    std::string name;
    /// def/eval: listed free variables (a counting query when non-empty).
    std::vector<std::string> vars;
    /// reg: the number systems of the tracks.
    std::vector<std::string> systems;
    std::string body;
    FormulaPtr formula;  // def/eval only
    SourcePos pos;
    SourcePos body_pos;
};

struct QueryScript {
    std::vector<Command> commands;
};

/// Parses def/eval/reg commands terminated by ':' or ';'. '#' starts a
/// comment outside of quoted bodies.
QueryScript parse_script(std::string_view text);

}  // namespace autoseq
