#include "autoseq/automaton_ops.hpp"

#include <algorithm>
#include <unordered_map>

namespace autoseq {
namespace {

struct SubsetHash {
    std::size_t operator()(const std::vector<State>& s) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (State q : s) {
            h ^= static_cast<std::size_t>(q) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

using SubsetMap = std::unordered_map<std::vector<State>, State, SubsetHash>;

/// For each letter of `from`, the letter of `to` obtained by keeping the
/// digits of the tracks of `to` (looked up by name in `from`).
std::vector<Letter> letter_restriction(const TrackSignature& from, const TrackSignature& to) {
    std::vector<std::size_t> idx;
    for (const auto& t : to) idx.push_back(*from.index_of(t.name));
    std::vector<Letter> map(from.alphabet_size());
    std::vector<int> digits(to.size());
    for (Letter l = 0; l < from.alphabet_size(); ++l) {
        for (std::size_t i = 0; i < idx.size(); ++i) digits[i] = from.digit(l, idx[i]);
        map[l] = to.encode(digits);
    }
    return map;
}

TrackSignature union_signature(const TrackSignature& a, const TrackSignature& b) {
    std::vector<Track> tracks = a.tracks();
    for (const auto& t : b) {
        if (auto i = a.index_of(t.name)) {
            if (a[*i].system != t.system)
                throw BaseMismatch("track '" + t.name + "' used with both " + a[*i].system.name() + " and " +
                                   t.system.name());
        } else {
            tracks.push_back(t);
        }
    }
    return TrackSignature(std::move(tracks));
}

}  // namespace

bool apply(BoolOp op, bool lhs, bool rhs) {
    switch (op) {
        case BoolOp::And: return lhs && rhs;
        case BoolOp::Or: return lhs || rhs;
        case BoolOp::Implies: return !lhs || rhs;
        case BoolOp::Iff: return lhs == rhs;
        case BoolOp::Xor: return lhs != rhs;
    }
    return false;
}

Automaton product(const Automaton& a, const Automaton& b, BoolOp op) {
    TrackSignature sig = union_signature(a.signature(), b.signature());
    const auto k = sig.alphabet_size();
    const auto map_a = letter_restriction(sig, a.signature());
    const auto map_b = letter_restriction(sig, b.signature());

    const auto na = a.num_states();
    const auto nb = b.num_states();
    const bool dense = na * nb <= (std::size_t{1} << 22);
    std::vector<State> dense_index(dense ? na * nb : 0, -1);
    std::unordered_map<std::uint64_t, State> sparse_index;
    std::vector<std::pair<State, State>> pairs;

    auto lookup = [&](State p, State q) -> State {
        const std::uint64_t key = static_cast<std::uint64_t>(p) * nb + static_cast<std::uint64_t>(q);
        if (dense) {
            State& slot = dense_index[key];
            if (slot < 0) {
                slot = static_cast<State>(pairs.size());
                pairs.emplace_back(p, q);
            }
            return slot;
        }
        auto [it, inserted] = sparse_index.try_emplace(key, static_cast<State>(pairs.size()));
        if (inserted) pairs.emplace_back(p, q);
        return it->second;
    };

    lookup(a.initial(), b.initial());
    std::vector<State> delta;
    std::vector<char> accepting;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto [p, q] = pairs[i];
        accepting.push_back(apply(op, a.is_accepting(p), b.is_accepting(q)) ? 1 : 0);
        for (Letter l = 0; l < k; ++l) {
            State r = lookup(a.next(p, map_a[l]), b.next(q, map_b[l]));
            delta.push_back(r);
        }
    }
    return minimize(Automaton(std::move(sig), 0, std::move(delta), std::move(accepting)));
}

Automaton complement(const Automaton& a) {
    std::vector<char> accepting(a.accepting());
    for (auto& c : accepting) c = c ? 0 : 1;
    return minimize(Automaton(a.signature(), a.initial(), a.transitions(), std::move(accepting)));
}

Automaton project(const Automaton& a, const std::vector<std::string>& tracks) {
    std::vector<Track> remaining;
    bool any = false;
    for (const auto& t : a.signature()) {
        if (std::find(tracks.begin(), tracks.end(), t.name) != tracks.end())
            any = true;
        else
            remaining.push_back(t);
    }
    if (!any) return a;
    TrackSignature sig(std::move(remaining));
    const auto k = a.alphabet_size();
    const auto rk = sig.alphabet_size();
    const auto reduce = letter_restriction(a.signature(), sig);
    std::vector<std::vector<Letter>> preimage(rk);
    for (Letter l = 0; l < k; ++l) preimage[reduce[l]].push_back(l);

    // Zero-closure of the initial state: remaining tracks padded with zeros.
    std::vector<char> in_closure(a.num_states(), 0);
    std::vector<State> closure{a.initial()};
    in_closure[static_cast<std::size_t>(a.initial())] = 1;
    for (std::size_t head = 0; head < closure.size(); ++head)
        for (Letter l : preimage[0]) {
            State r = a.next(closure[head], l);
            if (!in_closure[static_cast<std::size_t>(r)]) {
                in_closure[static_cast<std::size_t>(r)] = 1;
                closure.push_back(r);
            }
        }
    std::sort(closure.begin(), closure.end());

    SubsetMap index;
    std::vector<std::vector<State>> subsets;
    auto lookup = [&](std::vector<State>&& s) -> State {
        auto [it, inserted] = index.try_emplace(s, static_cast<State>(subsets.size()));
        if (inserted) subsets.push_back(std::move(s));
        return it->second;
    };
    lookup(std::move(closure));

    std::vector<std::uint32_t> stamp(a.num_states(), 0);
    std::uint32_t epoch = 0;
    std::vector<State> delta;
    std::vector<char> accepting;
    std::vector<State> target;
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        bool acc = false;
        for (State q : subsets[i]) acc = acc || a.is_accepting(q);
        accepting.push_back(acc ? 1 : 0);
        for (Letter r = 0; r < rk; ++r) {
            ++epoch;
            target.clear();
            for (State q : subsets[i])
                for (Letter l : preimage[r]) {
                    State s = a.next(q, l);
                    if (stamp[static_cast<std::size_t>(s)] != epoch) {
                        stamp[static_cast<std::size_t>(s)] = epoch;
                        target.push_back(s);
                    }
                }
            std::sort(target.begin(), target.end());
            delta.push_back(lookup(std::vector<State>(target)));
        }
    }
    return minimize(Automaton(std::move(sig), 0, std::move(delta), std::move(accepting)));
}

Automaton forall(const Automaton& a, const std::vector<std::string>& tracks) {
    return complement(project(complement(a), tracks));
}

Automaton determinize(const Nfa& input, Padding padding) {
    Nfa nfa = input;
    const auto k = nfa.signature.alphabet_size();
    if (padding == Padding::Close) {
        // New start state s0: loops on the zero tuple and otherwise behaves
        // like any state of the zero-closure of the initial set.
        std::vector<char> in_closure(nfa.num_states(), 0);
        std::vector<State> closure;
        for (State q : nfa.initial)
            if (!in_closure[static_cast<std::size_t>(q)]) {
                in_closure[static_cast<std::size_t>(q)] = 1;
                closure.push_back(q);
            }
        for (std::size_t head = 0; head < closure.size(); ++head)
            for (auto [l, r] : nfa.edges[static_cast<std::size_t>(closure[head])])
                if (l == 0 && !in_closure[static_cast<std::size_t>(r)]) {
                    in_closure[static_cast<std::size_t>(r)] = 1;
                    closure.push_back(r);
                }
        bool acc = false;
        for (State q : closure) acc = acc || nfa.accepting[static_cast<std::size_t>(q)];
        State s0 = nfa.add_state(acc);
        nfa.add_edge(s0, 0, s0);
        for (State q : closure)
            for (auto [l, r] : std::vector(nfa.edges[static_cast<std::size_t>(q)])) nfa.add_edge(s0, l, r);
        nfa.initial = {s0};
    }

    std::vector<State> start(nfa.initial);
    std::sort(start.begin(), start.end());
    start.erase(std::unique(start.begin(), start.end()), start.end());

    SubsetMap index;
    std::vector<std::vector<State>> subsets;
    auto lookup = [&](std::vector<State>&& s) -> State {
        auto [it, inserted] = index.try_emplace(s, static_cast<State>(subsets.size()));
        if (inserted) subsets.push_back(std::move(s));
        return it->second;
    };
    lookup(std::move(start));

    std::vector<std::vector<State>> buckets(k);
    std::vector<State> delta;
    std::vector<char> accepting;
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        bool acc = false;
        for (State q : subsets[i]) {
            acc = acc || nfa.accepting[static_cast<std::size_t>(q)];
            for (auto [l, r] : nfa.edges[static_cast<std::size_t>(q)]) buckets[l].push_back(r);
        }
        accepting.push_back(acc ? 1 : 0);
        for (Letter l = 0; l < k; ++l) {
            auto& b = buckets[l];
            std::sort(b.begin(), b.end());
            b.erase(std::unique(b.begin(), b.end()), b.end());
            delta.push_back(lookup(std::move(b)));
            b.clear();
        }
    }
    return minimize(Automaton(nfa.signature, 0, std::move(delta), std::move(accepting)));
}

Nfa reverse(const Automaton& a) {
    Nfa nfa;
    nfa.signature = a.signature();
    for (std::size_t q = 0; q < a.num_states(); ++q) {
        nfa.add_state(static_cast<State>(q) == a.initial());
        if (a.is_accepting(static_cast<State>(q))) nfa.initial.push_back(static_cast<State>(q));
    }
    for (std::size_t q = 0; q < a.num_states(); ++q)
        for (Letter l = 0; l < a.alphabet_size(); ++l) nfa.add_edge(a.next(static_cast<State>(q), l), l, static_cast<State>(q));
    return nfa;
}

Automaton rename_tracks(const Automaton& a, const std::vector<std::string>& names) {
    if (names.size() != a.signature().size()) throw std::invalid_argument("rename: arity mismatch");
    std::vector<Track> tracks;
    for (std::size_t i = 0; i < names.size(); ++i) tracks.push_back(Track{names[i], a.signature()[i].system});
    return Automaton(TrackSignature(std::move(tracks)), a.initial(), a.transitions(), a.accepting());
}

Automaton reorder_tracks(const Automaton& a, const std::vector<std::string>& order) {
    const auto& old = a.signature();
    if (order.size() != old.size()) throw std::invalid_argument("reorder: not a permutation of the tracks");
    std::vector<Track> tracks;
    for (const auto& name : order) {
        auto i = old.index_of(name);
        if (!i) throw std::invalid_argument("reorder: unknown track '" + name + "'");
        tracks.push_back(old[*i]);
    }
    TrackSignature sig(std::move(tracks));
    if (sig == old) return a;
    const auto to_old = letter_restriction(sig, old);
    const auto k = sig.alphabet_size();
    std::vector<State> delta(a.num_states() * k);
    for (std::size_t q = 0; q < a.num_states(); ++q)
        for (Letter l = 0; l < k; ++l) delta[q * k + l] = a.next(static_cast<State>(q), to_old[l]);
    return minimize(Automaton(std::move(sig), a.initial(), std::move(delta), a.accepting()));
}

Automaton canonical_track_order(const Automaton& a) {
    std::vector<std::string> names;
    for (const auto& t : a.signature()) names.push_back(t.name);
    std::sort(names.begin(), names.end());
    return reorder_tracks(a, names);
}

Automaton add_track(const Automaton& a, const Track& track) {
    if (a.signature().index_of(track.name)) throw std::invalid_argument("add_track: track exists");
    std::vector<Track> tracks = a.signature().tracks();
    tracks.push_back(track);
    TrackSignature sig(std::move(tracks));
    const auto to_old = letter_restriction(sig, a.signature());
    const auto k = sig.alphabet_size();
    std::vector<State> delta(a.num_states() * k);
    for (std::size_t q = 0; q < a.num_states(); ++q)
        for (Letter l = 0; l < k; ++l) delta[q * k + l] = a.next(static_cast<State>(q), to_old[l]);
    return Automaton(std::move(sig), a.initial(), std::move(delta), a.accepting());
}

std::optional<Word> find_witness(const Automaton& a) {
    const auto k = a.alphabet_size();
    std::vector<State> parent(a.num_states(), -1);
    std::vector<Letter> via(a.num_states(), 0);
    std::vector<char> seen(a.num_states(), 0);
    std::vector<State> queue{a.initial()};
    seen[static_cast<std::size_t>(a.initial())] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        State q = queue[head];
        if (a.is_accepting(q)) {
            Word word;
            for (State s = q; parent[static_cast<std::size_t>(s)] >= 0; s = parent[static_cast<std::size_t>(s)])
                word.push_back(via[static_cast<std::size_t>(s)]);
            std::reverse(word.begin(), word.end());
            return word;
        }
        for (Letter l = 0; l < k; ++l) {
            State r = a.next(q, l);
            if (!seen[static_cast<std::size_t>(r)]) {
                seen[static_cast<std::size_t>(r)] = 1;
                parent[static_cast<std::size_t>(r)] = q;
                via[static_cast<std::size_t>(r)] = l;
                queue.push_back(r);
            }
        }
    }
    return std::nullopt;
}

bool is_empty(const Automaton& a) { return !find_witness(a).has_value(); }

bool is_universal(const Automaton& a) { return is_empty(complement(a)); }

bool language_equal(const Automaton& a, const Automaton& b) {
    const auto& sa = a.signature();
    const auto& sb = b.signature();
    if (sa.size() != sb.size()) throw BaseMismatch("language_equal: signatures have different track sets");
    std::vector<std::string> order;
    for (const auto& t : sa) {
        auto i = sb.index_of(t.name);
        if (!i || sb[*i].system != t.system)
            throw BaseMismatch("language_equal: track '" + t.name + "' missing or with a different base");
        order.push_back(t.name);
    }
    return is_empty(product(a, reorder_tracks(b, order), BoolOp::Xor));
}

std::vector<char> coreachable(const Automaton& a) {
    const auto n = a.num_states();
    const auto k = a.alphabet_size();
    std::vector<std::vector<State>> back(n);
    for (std::size_t q = 0; q < n; ++q)
        for (Letter l = 0; l < k; ++l) back[static_cast<std::size_t>(a.next(static_cast<State>(q), l))].push_back(static_cast<State>(q));
    std::vector<char> live(n, 0);
    std::vector<State> stack;
    for (std::size_t q = 0; q < n; ++q)
        if (a.is_accepting(static_cast<State>(q))) {
            live[q] = 1;
            stack.push_back(static_cast<State>(q));
        }
    while (!stack.empty()) {
        State q = stack.back();
        stack.pop_back();
        for (State p : back[static_cast<std::size_t>(q)])
            if (!live[static_cast<std::size_t>(p)]) {
                live[static_cast<std::size_t>(p)] = 1;
                stack.push_back(p);
            }
    }
    return live;
}

}  // namespace autoseq
