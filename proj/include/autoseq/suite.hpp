#pragma once

#include "autoseq/environment.hpp"
#include "autoseq/script.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace autoseq {

struct Expectation {
    enum class Kind { Truth, Regex, RankZero, RankAtMost };
    Kind kind = Kind::Truth;
    bool truth = true;
    std::string name;     // Regex, RankZero (first), RankAtMost
    std::string other;    // RankZero: subtracted representation
    std::string pattern;  // Regex
    long rank = 0;        // RankAtMost
};

std::string to_string(const Expectation& e);

/// A named check: a script run on a copy of the corpus environment and the
/// outcomes it must produce.
struct TheoremCheck {
    std::string id;
    std::string anchor;
    std::string script;
    std::vector<Expectation> expects;
    int line = 0;
};

class ManifestError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Manifest blocks:
///   check <id>
///   anchor <statement>
///   expect true | false | regex <name> "<pattern>" | rank0 <a> <b> | rank<= <name> <n>
///   script
///   <script lines>
///   end
std::vector<TheoremCheck> parse_manifest(std::istream& in);
std::vector<TheoremCheck> load_manifest(const std::filesystem::path& path);

struct ExpectationResult {
    std::string expected;
    std::string actual;
    bool passed = false;
};

struct CheckResult {
    std::string id;
    std::string anchor;
    bool passed = false;
    std::vector<ExpectationResult> outcomes;
    std::vector<CommandResult> commands;
    double seconds = 0;
    /// Slowest single command.
    double max_command_seconds = 0;
};

CheckResult run_check(const TheoremCheck& check, const Environment& env);

struct SuiteReport {
    std::vector<CheckResult> checks;
    double seconds = 0;
    bool all_passed() const;
    std::size_t passed_count() const;
};

/// Runs the checks whose id matches the shell glob `filter`, each on its own
/// copy of `env`.
SuiteReport run_suite(const std::vector<TheoremCheck>& checks, const Environment& env, const std::string& filter = "*");

void write_text_report(std::ostream& out, const SuiteReport& report);

}  // namespace autoseq
