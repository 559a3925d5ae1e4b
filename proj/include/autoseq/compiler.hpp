#pragma once

#include "autoseq/environment.hpp"
#include "autoseq/formula.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace autoseq {

class CompileError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ArityMismatch : public CompileError {
public:
    using CompileError::CompileError;
};

/// Compiles a formula to the minimal automaton over its free variables,
/// tracks sorted by name. Throws CompileError, UndefinedName and
/// BaseMismatch.
Automaton compile(const Formula& f, const Environment& env);
Automaton compile(std::string_view text, const Environment& env);

struct Decision {
    bool truth = false;
    /// For a false sentence of the form A x1..xk phi: an assignment
    /// falsifying phi, e.g. "n=3, y=2".
    std::optional<std::string> counterexample;
};

/// Decides a sentence. CompileError when it has free variables.
Decision decide(const Formula& sentence, const Environment& env);
Decision decide(std::string_view text, const Environment& env);

/// Renders a witness word of `a` as "name=value" pairs.
std::string format_assignment(const Automaton& a, const Word& word);

}  // namespace autoseq
