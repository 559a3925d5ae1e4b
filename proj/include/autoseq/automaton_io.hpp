#pragma once

#include "autoseq/automaton.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace autoseq {

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Writes the Walnut text format: the systems line, a blank line, then one
/// block per state ("q o" followed by "d1 d2 -> q'" lines). A rejecting sink
/// numbered last is left implicit. Zero-track automata are written as
/// "true" or "false".
void write_automaton(std::ostream& out, const Automaton& a);
std::string to_text(const Automaton& a);

/// Reads the format produced by write_automaton. Missing transitions go to
/// an implicit rejecting sink. Tracks are named by `names` when given, and
/// "a", "b", ... otherwise.
Automaton read_automaton(std::istream& in, const std::vector<std::string>& names = {});
Automaton automaton_from_text(const std::string& text, const std::vector<std::string>& names = {});

void write_dfao(std::ostream& out, const OutputAutomaton& dfao);
OutputAutomaton read_dfao(std::istream& in);

/// Default positional track names: a, b, ..., z, t26, t27, ...
std::vector<std::string> positional_names(std::size_t n);

}  // namespace autoseq
