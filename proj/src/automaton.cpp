#include "autoseq/automaton.hpp"

#include "autoseq/automaton_ops.hpp"
#include "partition.hpp"

#include <algorithm>

#include <stdexcept>

namespace autoseq {

Automaton::Automaton(TrackSignature signature, State initial, std::vector<State> delta, std::vector<char> accepting)
    : signature_(std::move(signature)), initial_(initial), delta_(std::move(delta)), accepting_(std::move(accepting)) {
    const auto n = accepting_.size();
    if (n == 0) throw std::invalid_argument("automaton needs at least one state");
    if (delta_.size() != n * signature_.alphabet_size())
        throw std::invalid_argument("transition table size does not match states x alphabet");
    if (initial_ < 0 || static_cast<std::size_t>(initial_) >= n) throw std::invalid_argument("initial state out of range");
    for (State q : delta_)
        if (q < 0 || static_cast<std::size_t>(q) >= n) throw std::invalid_argument("transition target out of range");
}

Automaton Automaton::constant(TrackSignature signature, bool accept_all) {
    const auto k = signature.alphabet_size();
    return Automaton(std::move(signature), 0, std::vector<State>(k, 0), {static_cast<char>(accept_all ? 1 : 0)});
}

State Automaton::run(const Word& word) const {
    State q = initial_;
    for (Letter a : word) {
        if (a >= alphabet_size()) throw std::invalid_argument("letter outside alphabet");
        q = next(q, a);
    }
    return q;
}

std::size_t Automaton::live_state_count() const {
    auto live = coreachable(*this);
    return static_cast<std::size_t>(std::count(live.begin(), live.end(), 1));
}

OutputAutomaton::OutputAutomaton(NumberSystem system, State initial, std::vector<State> delta, std::vector<int> outputs)
    : system_(system), initial_(initial), delta_(std::move(delta)), outputs_(std::move(outputs)) {
    const auto n = outputs_.size();
    if (n == 0) throw std::invalid_argument("DFAO needs at least one state");
    if (delta_.size() != n * static_cast<std::size_t>(system_.base))
        throw std::invalid_argument("DFAO transition table size does not match states x base");
    if (initial_ < 0 || static_cast<std::size_t>(initial_) >= n) throw std::invalid_argument("initial state out of range");
    for (State q : delta_)
        if (q < 0 || static_cast<std::size_t>(q) >= n) throw std::invalid_argument("transition target out of range");
}

int OutputAutomaton::value(std::uint64_t n) const {
    State q = initial_;
    for (int d : to_digits(n, base())) q = next(q, d);
    return output(q);
}

Automaton OutputAutomaton::recognizer(const std::string& track, int v, bool negate) const {
    std::vector<char> accepting(num_states());
    for (std::size_t q = 0; q < num_states(); ++q) accepting[q] = ((outputs_[q] == v) != negate) ? 1 : 0;
    TrackSignature sig({Track{track, system_}});
    return Automaton(std::move(sig), initial_, delta_, std::move(accepting));
}

OutputAutomaton minimize(const OutputAutomaton& dfao) {
    const auto k = static_cast<std::size_t>(dfao.base());
    auto order = detail::bfs_order(dfao.num_states(), k, dfao.transitions(), dfao.initial());
    std::vector<State> index(dfao.num_states(), -1);
    for (std::size_t i = 0; i < order.size(); ++i) index[static_cast<std::size_t>(order[i])] = static_cast<State>(i);

    std::vector<State> delta(order.size() * k);
    std::vector<int> outputs(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        outputs[i] = dfao.output(order[i]);
        for (std::size_t d = 0; d < k; ++d) delta[i * k + d] = index[static_cast<std::size_t>(dfao.next(order[i], static_cast<int>(d)))];
    }
    auto cls = detail::refine_partition(order.size(), k, delta, outputs);

    // Renumber classes breadth-first from the initial state.
    int num_classes = 0;
    for (int c : cls) num_classes = std::max(num_classes, c + 1);
    std::vector<State> rep(static_cast<std::size_t>(num_classes), -1);
    for (std::size_t q = 0; q < order.size(); ++q)
        if (rep[static_cast<std::size_t>(cls[q])] < 0) rep[static_cast<std::size_t>(cls[q])] = static_cast<State>(q);
    std::vector<State> qdelta(static_cast<std::size_t>(num_classes) * k);
    for (int c = 0; c < num_classes; ++c)
        for (std::size_t d = 0; d < k; ++d)
            qdelta[static_cast<std::size_t>(c) * k + d] = cls[static_cast<std::size_t>(delta[static_cast<std::size_t>(rep[static_cast<std::size_t>(c)]) * k + d])];
    auto qorder = detail::bfs_order(static_cast<std::size_t>(num_classes), k, qdelta, cls[0]);
    std::vector<State> qindex(static_cast<std::size_t>(num_classes));
    for (std::size_t i = 0; i < qorder.size(); ++i) qindex[static_cast<std::size_t>(qorder[i])] = static_cast<State>(i);
    std::vector<State> out_delta(qorder.size() * k);
    std::vector<int> out_outputs(qorder.size());
    for (std::size_t i = 0; i < qorder.size(); ++i) {
        auto c = static_cast<std::size_t>(qorder[i]);
        out_outputs[i] = outputs[static_cast<std::size_t>(rep[c])];
        for (std::size_t d = 0; d < k; ++d) out_delta[i * k + d] = qindex[static_cast<std::size_t>(qdelta[c * k + d])];
    }
    return OutputAutomaton(dfao.system(), 0, std::move(out_delta), std::move(out_outputs));
}

}  // namespace autoseq
