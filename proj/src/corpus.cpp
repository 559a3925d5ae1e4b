#include "autoseq/corpus.hpp"

#include "autoseq/automaton_io.hpp"
#include "autoseq/numeration.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace autoseq {

std::filesystem::path corpus_dir() {
    if (const char* dir = std::getenv("AUTOSEQ_CORPUS")) return dir;
    return AUTOSEQ_CORPUS_DIR;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

namespace {

Automaton shipped_or_guessed(const std::filesystem::path& dir, const std::string& name, const std::string& oracle) {
    auto path = dir / "automata" / (name + ".txt");
    if (std::filesystem::exists(path)) {
        std::ifstream in(path);
        return read_automaton(in, {"n", "y"});
    }
    return guess_sync(named_oracle(oracle));
}

}  // namespace

Environment bootstrap_corpus(const std::filesystem::path& dir, BootstrapLog* log) {
    Environment env = sequence_environment();
    for (auto& [name, a] : corpus_regex_automata()) env.define(name, std::move(a));

    const std::pair<const char*, const char*> sync[] = {{"rss", "s"}, {"rst", "t"}};
    for (const auto& [name, oracle] : sync) {
        Automaton candidate = shipped_or_guessed(dir, name, oracle);
        auto report = register_sync(env, name, candidate, std::string(oracle) == "s" ? spec_s() : spec_t());
        if (!report.ok) throw std::runtime_error(std::string(name) + " failed verification: " + report.witness.value_or(""));
        if (log) log->verified.emplace_back(name, report);
    }

    auto results = run_script(read_file(dir / "bootstrap.txt"), env);
    for (const auto& r : results)
        if (!r.ok) throw std::runtime_error("bootstrap: " + describe(r));
    for (const char* name : {"omega", "alpha", "alphap"})
        if (auto w = check_functional(env.relation(name)))
            throw FunctionalityViolation(std::string(name) + " is not functional at " + *w);
    if (log) log->commands = std::move(results);
    return env;
}

const Environment& corpus_environment() {
    static const Environment env = bootstrap_corpus(corpus_dir());
    return env;
}

}  // namespace autoseq
