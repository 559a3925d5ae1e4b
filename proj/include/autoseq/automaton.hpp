#pragma once

#include "autoseq/signature.hpp"

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace autoseq {

using State = std::int32_t;

/// Complete deterministic automaton over a multi-track digit alphabet.
///
/// Every relation the engine manipulates is stored in this form. Compiled
/// automata accept all leading-zero paddings of their tuples (padding
/// closure); operations in automaton_ops preserve that property.
class Automaton {
public:
    Automaton() = default;
    Automaton(TrackSignature signature, State initial, std::vector<State> delta, std::vector<char> accepting);

    /// One-state automaton accepting every word (or none).
    static Automaton constant(TrackSignature signature, bool accept_all);

    const TrackSignature& signature() const { return signature_; }
    std::size_t alphabet_size() const { return signature_.alphabet_size(); }
    std::size_t num_states() const { return accepting_.size(); }
    State initial() const { return initial_; }

    State next(State q, Letter a) const { return delta_[static_cast<std::size_t>(q) * alphabet_size() + a]; }
    bool is_accepting(State q) const { return accepting_[static_cast<std::size_t>(q)] != 0; }

    State run(const Word& word) const;
    bool accepts(const Word& word) const { return is_accepting(run(word)); }
    bool accepts_values(std::span<const std::uint64_t> values) const {
        return accepts(signature_.encode_values(values));
    }

    const std::vector<State>& transitions() const { return delta_; }
    const std::vector<char>& accepting() const { return accepting_; }

    /// Number of states that can reach an accepting state.
    std::size_t live_state_count() const;

    friend bool operator==(const Automaton&, const Automaton&) = default;

private:
    TrackSignature signature_;
    State initial_ = 0;
    std::vector<State> delta_;
    std::vector<char> accepting_;
};

/// Nondeterministic automaton, the input form for determinize.
struct Nfa {
    TrackSignature signature;
    std::vector<std::vector<std::pair<Letter, State>>> edges;
    std::vector<char> accepting;
    std::vector<State> initial;

    State add_state(bool accept) {
        edges.emplace_back();
        accepting.push_back(accept ? 1 : 0);
        return static_cast<State>(edges.size() - 1);
    }
    void add_edge(State from, Letter letter, State to) { edges[static_cast<std::size_t>(from)].emplace_back(letter, to); }
    std::size_t num_states() const { return edges.size(); }
};

/// Complete deterministic automaton with an integer output per state
/// (DFAO). Single track.
class OutputAutomaton {
public:
    OutputAutomaton() = default;
    OutputAutomaton(NumberSystem system, State initial, std::vector<State> delta, std::vector<int> outputs);

    NumberSystem system() const { return system_; }
    int base() const { return system_.base; }
    std::size_t num_states() const { return outputs_.size(); }
    State initial() const { return initial_; }
    State next(State q, int digit) const {
        return delta_[static_cast<std::size_t>(q) * static_cast<std::size_t>(base()) + static_cast<std::size_t>(digit)];
    }
    int output(State q) const { return outputs_[static_cast<std::size_t>(q)]; }
    const std::vector<int>& outputs() const { return outputs_; }
    const std::vector<State>& transitions() const { return delta_; }

    int value(std::uint64_t n) const;

    /// Recognizer for { n : value(n) == v } (or != v when negate is set) on
    /// a single track with the given name.
    Automaton recognizer(const std::string& track, int v, bool negate = false) const;

    friend bool operator==(const OutputAutomaton&, const OutputAutomaton&) = default;

private:
    NumberSystem system_;
    State initial_ = 0;
    std::vector<State> delta_;
    std::vector<int> outputs_;
};

/// Minimal DFAO with states renumbered in breadth-first order.
OutputAutomaton minimize(const OutputAutomaton& dfao);

}  // namespace autoseq
