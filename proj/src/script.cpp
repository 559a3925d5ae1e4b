#include "autoseq/script.hpp"

#include "autoseq/automaton_io.hpp"
#include "autoseq/regex.hpp"

#include <chrono>
#include <cstdio>

namespace autoseq {

CommandResult run_command(const Command& cmd, Environment& env, const RunOptions& options) {
    CommandResult r;
    r.kind = cmd.kind;
    r.name = cmd.name;
    const auto start = std::chrono::steady_clock::now();
    try {
        if (!options.overwrite && cmd.kind != Command::Kind::Eval && env.contains(cmd.name)) throw Redefinition(cmd.name);
        if (cmd.kind == Command::Kind::Reg) {
            std::vector<Track> tracks;
            auto names = positional_names(cmd.systems.size());
            for (std::size_t i = 0; i < cmd.systems.size(); ++i)
                tracks.push_back(Track{names[i], NumberSystem::parse(cmd.systems[i])});
            Automaton a = from_regex(TrackSignature(std::move(tracks)), cmd.body);
            r.states = a.num_states();
            for (const auto& t : a.signature()) r.tracks.push_back(t.name);
            env.define(cmd.name, std::move(a), true);
        } else if (!cmd.vars.empty()) {
            Automaton a = compile(*cmd.formula, env);
            for (const auto& v : cmd.vars)
                if (!a.signature().index_of(v)) throw CompileError("listed variable '" + v + "' is not free");
            auto rep = count_linrep(a, cmd.vars);
            r.states = a.num_states();
            r.rank = static_cast<long>(rep.rank());
            for (const auto& t : rep.signature()) r.tracks.push_back(t.name);
            env.define(cmd.name, std::move(rep), true);
        } else if (cmd.kind == Command::Kind::Eval && free_variables(*cmd.formula).empty()) {
            auto d = decide(*cmd.formula, env);
            r.truth = d.truth;
            r.counterexample = d.counterexample;
        } else {
            Automaton a = compile(*cmd.formula, env);
            r.states = a.num_states();
            for (const auto& t : a.signature()) r.tracks.push_back(t.name);
            if (a.signature().empty()) r.truth = a.is_accepting(a.initial());
            env.define(cmd.name, std::move(a), true);
        }
    } catch (const std::exception& e) {
        r.ok = false;
        r.error = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<CommandResult> run_script(const QueryScript& script, Environment& env, const RunOptions& options) {
    std::vector<CommandResult> out;
    for (const auto& cmd : script.commands) {
        out.push_back(run_command(cmd, env, options));
        if (!out.back().ok && !options.continue_on_error) break;
    }
    return out;
}

std::vector<CommandResult> run_script(std::string_view text, Environment& env, const RunOptions& options) {
    return run_script(parse_script(text), env, options);
}

std::string describe(const CommandResult& r) {
    static const char* const kinds[] = {"def", "eval", "reg"};
    std::string s = std::string(kinds[static_cast<int>(r.kind)]) + " " + r.name + ": ";
    if (!r.ok) {
        s += "ERROR " + r.error;
    } else if (r.truth) {
        s += *r.truth ? "TRUE" : "FALSE";
        if (r.counterexample) s += " [counterexample " + *r.counterexample + "]";
    } else if (r.rank) {
        s += "linear representation of rank " + std::to_string(*r.rank);
    } else {
        s += std::to_string(r.states) + " states";
        if (!r.tracks.empty()) {
            s += " over";
            for (const auto& t : r.tracks) s += " " + t;
        }
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, " (%.3f s)", r.seconds);
    return s + buf;
}

}  // namespace autoseq
