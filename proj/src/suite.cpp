#include "autoseq/suite.hpp"

#include "autoseq/automaton_ops.hpp"
#include "autoseq/regex.hpp"

#include <fnmatch.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace autoseq {

std::string to_string(const Expectation& e) {
    switch (e.kind) {
        case Expectation::Kind::Truth: return e.truth ? "TRUE" : "FALSE";
        case Expectation::Kind::Regex: return e.name + " = \"" + e.pattern + "\"";
        case Expectation::Kind::RankZero: return "rank(minimize(" + e.name + " - " + e.other + ")) = 0";
        case Expectation::Kind::RankAtMost: return "rank(" + e.name + ") <= " + std::to_string(e.rank);
    }
    return "?";
}

namespace {

Expectation parse_expect(const std::string& rest, int line) {
    std::istringstream in(rest);
    std::string kind;
    in >> kind;
    Expectation e;
    auto fail = [&](const std::string& what) -> ManifestError {
        return ManifestError("manifest line " + std::to_string(line) + ": " + what);
    };
    if (kind == "true" || kind == "false") {
        e.truth = kind == "true";
    } else if (kind == "regex") {
        e.kind = Expectation::Kind::Regex;
        in >> e.name;
        auto open = rest.find('"'), close = rest.rfind('"');
        if (e.name.empty() || open == std::string::npos || close == open) throw fail("expected: regex <name> \"<pattern>\"");
        e.pattern = rest.substr(open + 1, close - open - 1);
    } else if (kind == "rank0") {
        e.kind = Expectation::Kind::RankZero;
        if (!(in >> e.name >> e.other)) throw fail("expected: rank0 <a> <b>");
    } else if (kind == "rank<=") {
        e.kind = Expectation::Kind::RankAtMost;
        if (!(in >> e.name >> e.rank)) throw fail("expected: rank<= <name> <n>");
    } else {
        throw fail("unknown expectation '" + kind + "'");
    }
    return e;
}

}  // namespace

std::vector<TheoremCheck> parse_manifest(std::istream& in) {
    std::vector<TheoremCheck> checks;
    std::string line;
    int number = 0;
    TheoremCheck* current = nullptr;
    bool in_script = false;
    while (std::getline(in, line)) {
        ++number;
        if (in_script) {
            if (line == "end") {
                in_script = false;
                current = nullptr;
            } else {
                current->script += line + "\n";
            }
            continue;
        }
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        auto space = line.find(' ', first);
        std::string key = line.substr(first, space - first);
        std::string rest = space == std::string::npos ? "" : line.substr(line.find_first_not_of(' ', space));
        if (key == "check") {
            for (const auto& c : checks)
                if (c.id == rest) throw ManifestError("manifest line " + std::to_string(number) + ": duplicate id " + rest);
            checks.push_back({rest, "", "", {}, number});
            current = &checks.back();
        } else if (!current) {
            throw ManifestError("manifest line " + std::to_string(number) + ": '" + key + "' outside a check");
        } else if (key == "anchor") {
            current->anchor = rest;
        } else if (key == "expect") {
            current->expects.push_back(parse_expect(rest, number));
        } else if (key == "script") {
            in_script = true;
        } else {
            throw ManifestError("manifest line " + std::to_string(number) + ": unknown key '" + key + "'");
        }
    }
    if (in_script) throw ManifestError("manifest: missing 'end' for check " + checks.back().id);
    for (const auto& c : checks)
        if (c.expects.empty()) throw ManifestError("manifest: check " + c.id + " has no expectation");
    return checks;
}

std::vector<TheoremCheck> load_manifest(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ManifestError("cannot read " + path.string());
    return parse_manifest(in);
}

namespace {

ExpectationResult evaluate(const Expectation& e, const std::vector<CommandResult>& commands, const Environment& env) {
    ExpectationResult r;
    r.expected = to_string(e);
    try {
        switch (e.kind) {
            case Expectation::Kind::Truth: {
                const CommandResult* last = nullptr;
                for (const auto& c : commands)
                    if (c.truth) last = &c;
                if (!last) {
                    r.actual = "no truth value";
                    break;
                }
                r.actual = *last->truth ? "TRUE" : "FALSE";
                if (last->counterexample) r.actual += " [counterexample " + *last->counterexample + "]";
                r.passed = *last->truth == e.truth;
                break;
            }
            case Expectation::Kind::Regex: {
                const Automaton& a = env.relation(e.name);
                Automaton gold = from_regex(a.signature(), e.pattern);
                r.passed = language_equal(a, gold);
                if (r.passed) {
                    r.actual = "equal";
                } else {
                    Automaton diff = product(a, gold, BoolOp::Xor);
                    auto w = find_witness(diff);
                    r.actual = "differs";
                    if (w) r.actual += " on " + a.signature().format_word(*w) + (a.accepts(*w) ? " (accepted)" : " (rejected)");
                }
                break;
            }
            case Expectation::Kind::RankZero: {
                auto m = minimize_schutzenberger(subtract(env.linrep(e.name), env.linrep(e.other)));
                r.actual = "rank " + std::to_string(m.rank());
                r.passed = m.rank() == 0;
                break;
            }
            case Expectation::Kind::RankAtMost: {
                auto rank = env.linrep(e.name).rank();
                r.actual = "rank " + std::to_string(rank);
                r.passed = rank <= e.rank;
                break;
            }
        }
    } catch (const std::exception& ex) {
        r.actual = std::string("error: ") + ex.what();
        r.passed = false;
    }
    return r;
}

}  // namespace

CheckResult run_check(const TheoremCheck& check, const Environment& base) {
    CheckResult result;
    result.id = check.id;
    result.anchor = check.anchor;
    const auto start = std::chrono::steady_clock::now();
    Environment env = base;
    RunOptions options;
    options.overwrite = true;
    try {
        result.commands = run_script(check.script, env, options);
    } catch (const std::exception& e) {
        CommandResult failed;
        failed.ok = false;
        failed.error = e.what();
        result.commands.push_back(failed);
    }
    bool commands_ok = true;
    for (const auto& c : result.commands) {
        commands_ok = commands_ok && c.ok;
        result.max_command_seconds = std::max(result.max_command_seconds, c.seconds);
    }
    result.passed = commands_ok;
    if (!commands_ok) {
        for (const auto& c : result.commands)
            if (!c.ok) result.outcomes.push_back({"no errors", describe(c), false});
    }
    for (const auto& e : check.expects) {
        result.outcomes.push_back(evaluate(e, result.commands, env));
        result.passed = result.passed && result.outcomes.back().passed;
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

bool SuiteReport::all_passed() const { return passed_count() == checks.size(); }

std::size_t SuiteReport::passed_count() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.passed ? 1 : 0;
    return n;
}

SuiteReport run_suite(const std::vector<TheoremCheck>& checks, const Environment& env, const std::string& filter) {
    SuiteReport report;
    const auto start = std::chrono::steady_clock::now();
    for (const auto& c : checks)
        if (fnmatch(filter.c_str(), c.id.c_str(), 0) == 0) report.checks.push_back(run_check(c, env));
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

void write_text_report(std::ostream& out, const SuiteReport& report) {
    char buf[64];
    for (const auto& c : report.checks) {
        std::snprintf(buf, sizeof buf, "%8.3f s", c.seconds);
        out << (c.passed ? "PASS " : "FAIL ") << buf << "  " << c.id << "\n";
        if (!c.passed)
            for (const auto& o : c.outcomes)
                if (!o.passed) out << "       expected " << o.expected << ", got " << o.actual << "\n";
    }
    std::snprintf(buf, sizeof buf, "%.2f s", report.seconds);
    out << report.passed_count() << "/" << report.checks.size() << " checks passed in " << buf << "\n";
}

}  // namespace autoseq
