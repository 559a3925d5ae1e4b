#pragma once

#include "autoseq/compiler.hpp"

#include <optional>
#include <string>
#include <vector>

namespace autoseq {

struct RunOptions {
    bool continue_on_error = false;
    /// Allow def/reg to replace an existing name.
    bool overwrite = false;
};

struct CommandResult {
    Command::Kind kind = Command::Kind::Def;
    std::string name;
    bool ok = true;
    std::string error;
    /// Sentences only.
    std::optional<bool> truth;
    std::optional<std::string> counterexample;
    /// Relations: state count and track names. Counting queries: rank.
    std::size_t states = 0;
    std::vector<std::string> tracks;
    std::optional<long> rank;
    double seconds = 0;
};

/// Executes the commands in order. def/eval with listed variables produce a
/// linear representation over those variables counting the rest; other defs
/// and regs store an automaton. Stops after the first failing command unless
/// continue_on_error is set.
std::vector<CommandResult> run_script(const QueryScript& script, Environment& env, const RunOptions& options = {});
std::vector<CommandResult> run_script(std::string_view text, Environment& env, const RunOptions& options = {});

CommandResult run_command(const Command& cmd, Environment& env, const RunOptions& options = {});

/// One line per result, e.g. "eval test1: TRUE (0.002 s)".
std::string describe(const CommandResult& r);

}  // namespace autoseq
