#pragma once

#include "autoseq/environment.hpp"
#include "autoseq/script.hpp"
#include "autoseq/synchronized.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace autoseq {

/// Directory holding bootstrap.txt, suite.manifest and the shipped
/// automata. AUTOSEQ_CORPUS overrides the compiled-in location.
std::filesystem::path corpus_dir();

std::string read_file(const std::filesystem::path& path);

struct BootstrapLog {
    std::vector<std::pair<std::string, VerifyReport>> verified;
    std::vector<CommandResult> commands;
};

/// Builds the corpus environment: RS4, RSP4, even4, odd4, the regular
/// relations, rss and rst (shipped files, or guessed when missing), each
/// verified by induction, then the definitions of bootstrap.txt. Throws when
/// a verification or a definition fails.
Environment bootstrap_corpus(const std::filesystem::path& dir, BootstrapLog* log = nullptr);

/// bootstrap_corpus(corpus_dir()), built once per process.
const Environment& corpus_environment();

}  // namespace autoseq
