#pragma once

#include "autoseq/environment.hpp"
#include "autoseq/sequences.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace autoseq {

class GuessFailed : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class FunctionalityViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Builds a candidate automaton for the graph of `oracle` over tracks
/// n (input system) and y (output system) from the values below
/// sample_bound. Prefixes are separated by their residual membership tables
/// over short suffixes; the suffix length grows until the resulting machine
/// is closed and agrees with every sampled word. The result is only a
/// candidate until verify_sync accepts it.
Automaton guess_sync(const SequenceOracle& oracle, std::uint64_t sample_bound = std::uint64_t{1} << 14,
                     std::size_t state_cap = 64, NumberSystem input = NumberSystem{4},
                     NumberSystem output = NumberSystem{2});

/// How a summatory function steps: f(n+1) = f(n) + sign * c(n+1) * a(n+1),
/// with c = (-1)^(n+1) when alternating and 1 otherwise, and a the DFAO.
struct SyncSpec {
    std::string dfao;
    bool alternating = false;
    int sign = 1;
    std::uint64_t initial = 1;
};

SyncSpec spec_s();
SyncSpec spec_t();
SyncSpec spec_sprime();
SyncSpec spec_one_minus_tprime();

struct VerifyStep {
    std::string name;
    std::string sentence;
    bool truth = false;
    std::optional<std::string> counterexample;
};

struct VerifyReport {
    bool ok = false;
    std::vector<VerifyStep> steps;
    /// First counterexample found, if any.
    std::optional<std::string> witness;
};

/// Environment with RS4, RSP4, even4 and odd4.
Environment sequence_environment();

/// Inductive proof that `candidate` (tracks msd_4, msd_2) is the graph of
/// the function described by `spec`: base case, one step per direction,
/// totality and functionality, each decided as a sentence.
VerifyReport verify_sync(const Automaton& candidate, const SyncSpec& spec, const Environment& env);
VerifyReport verify_sync(const Automaton& candidate, const SyncSpec& spec);

inline bool verify_sync_s(const Automaton& candidate) { return verify_sync(candidate, spec_s()).ok; }
inline bool verify_sync_t(const Automaton& candidate) { return verify_sync(candidate, spec_t()).ok; }

/// Defines `name` with Verified status when verification succeeds and with
/// Candidate status otherwise.
VerifyReport register_sync(Environment& env, const std::string& name, const Automaton& candidate,
                           const SyncSpec& spec, bool overwrite = false);

/// The unique y with (n, y) accepted, reading n on `input_track` of a
/// two-track relation.
std::uint64_t sync_eval(const Automaton& rel, std::uint64_t n, std::size_t input_track = 0);

/// Null when every input has at most one output; otherwise an input with two.
std::optional<std::string> check_functional(const Automaton& rel, std::size_t input_track = 0);

/// Compiles `formula`, checks that it is functional in its first track and
/// defines it. Throws FunctionalityViolation with a witness otherwise.
const Automaton& define_derived_sync(Environment& env, const std::string& name, const std::string& formula,
                                     bool overwrite = false);

}  // namespace autoseq
