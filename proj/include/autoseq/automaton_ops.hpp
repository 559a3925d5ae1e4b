#pragma once

#include "autoseq/automaton.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace autoseq {

enum class BoolOp { And, Or, Implies, Iff, Xor };

bool apply(BoolOp op, bool lhs, bool rhs);

/// Synchronous product. Shared tracks are matched by name; tracks private to
/// one side are appended to the union signature and ignored by the other.
/// The result is minimized. Throws BaseMismatch on conflicting bases.
Automaton product(const Automaton& a, const Automaton& b, BoolOp op);

Automaton complement(const Automaton& a);

/// Existential projection of the named tracks (missing names are ignored).
/// States reachable from the initial state by tuples that are zero on the
/// remaining tracks join the initial set before the subset construction, so
/// witnesses longer than the remaining word are found.
Automaton project(const Automaton& a, const std::vector<std::string>& tracks);
inline Automaton project(const Automaton& a, const std::string& track) {
    return project(a, std::vector<std::string>{track});
}

/// Universal quantification as complement . project . complement.
Automaton forall(const Automaton& a, const std::vector<std::string>& tracks);

enum class Padding {
    None,
    /// Accept 0^j v whenever 0^k v is accepted for some k: the padding
    /// closure of the language.
    Close,
};

/// Subset construction; the result is complete and minimized.
Automaton determinize(const Nfa& nfa, Padding padding = Padding::None);

/// Hopcroft partition refinement. States are renumbered breadth-first from
/// the initial state (letters ascending) with a rejecting sink, if any,
/// numbered last.
Automaton minimize(const Automaton& a);

/// Reversal of a deterministic automaton (nondeterministic in general).
Nfa reverse(const Automaton& a);

/// Renames tracks positionally; names must be distinct.
Automaton rename_tracks(const Automaton& a, const std::vector<std::string>& names);

/// Permutes tracks into the given name order (a permutation of the current
/// names).
Automaton reorder_tracks(const Automaton& a, const std::vector<std::string>& order);

/// Reorders tracks lexicographically by name.
Automaton canonical_track_order(const Automaton& a);

/// Adds a track that the language does not depend on.
Automaton add_track(const Automaton& a, const Track& track);

bool is_empty(const Automaton& a);
bool is_universal(const Automaton& a);

/// True iff both automata accept the same tuples. Signatures must contain the
/// same tracks (order may differ); otherwise throws BaseMismatch.
bool language_equal(const Automaton& a, const Automaton& b);

/// Shortest accepted word (lexicographically least among the shortest), or
/// nullopt when the language is empty. For padding-closed languages the
/// result never begins with a zero tuple.
std::optional<Word> find_witness(const Automaton& a);

/// Per-state flag: can the state reach an accepting state.
std::vector<char> coreachable(const Automaton& a);

}  // namespace autoseq
