#include "autoseq/numeration.hpp"

#include "autoseq/automaton_ops.hpp"
#include "autoseq/automaton_io.hpp"
#include "autoseq/regex.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <stdexcept>

namespace autoseq {

bool holds(Relation rel, std::int64_t lhs, std::int64_t rhs) {
    switch (rel) {
        case Relation::Eq: return lhs == rhs;
        case Relation::Ne: return lhs != rhs;
        case Relation::Lt: return lhs < rhs;
        case Relation::Le: return lhs <= rhs;
        case Relation::Gt: return lhs > rhs;
        case Relation::Ge: return lhs >= rhs;
    }
    return false;
}

std::string_view symbol(Relation rel) {
    switch (rel) {
        case Relation::Eq: return "=";
        case Relation::Ne: return "!=";
        case Relation::Lt: return "<";
        case Relation::Le: return "<=";
        case Relation::Gt: return ">";
        case Relation::Ge: return ">=";
    }
    return "?";
}

std::vector<std::string> AffineAtom::variables() const {
    std::vector<std::string> names;
    for (const auto& [c, v] : terms) names.push_back(v);
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    return names;
}

bool AffineAtom::evaluate(const std::vector<std::uint64_t>& values) const {
    auto names = variables();
    __int128 sum = constant;
    for (const auto& [c, v] : terms) {
        auto i = static_cast<std::size_t>(std::lower_bound(names.begin(), names.end(), v) - names.begin());
        sum += static_cast<__int128>(c) * static_cast<__int128>(values.at(i));
    }
    int sign = sum > 0 ? 1 : (sum < 0 ? -1 : 0);
    return holds(relation, sign, 0);
}

namespace {

TrackSignature tracks_of(const std::vector<std::string>& names, NumberSystem system) {
    std::vector<Track> tracks;
    for (const auto& n : names) tracks.push_back(Track{n, system});
    return TrackSignature(std::move(tracks));
}

}  // namespace

Automaton build_add(NumberSystem system, const std::vector<std::string>& names) {
    if (names.size() != 3) throw std::invalid_argument("build_add needs three track names");
    TrackSignature sig = tracks_of(names, system);
    const int b = system.base;
    const auto k = sig.alphabet_size();
    // Least significant digit first: states are the carry (0, 1) and a sink.
    constexpr State sink = 2;
    std::vector<State> delta(3 * k, sink);
    for (State carry = 0; carry < 2; ++carry)
        for (Letter l = 0; l < k; ++l) {
            int sum = sig.digit(l, 0) + sig.digit(l, 1) + carry;
            if (sum % b == sig.digit(l, 2)) delta[static_cast<std::size_t>(carry) * k + l] = sum / b;
        }
    Automaton lsd(sig, 0, std::move(delta), {1, 0, 0});
    return determinize(reverse(lsd), Padding::Close);
}

Automaton build_compare(Relation rel, NumberSystem system) {
    TrackSignature sig = tracks_of({"x", "y"}, system);
    const auto k = sig.alphabet_size();
    // 0: equal so far, 1: x < y decided, 2: x > y decided.
    std::vector<State> delta(3 * k);
    for (Letter l = 0; l < k; ++l) {
        int dx = sig.digit(l, 0), dy = sig.digit(l, 1);
        delta[l] = dx == dy ? 0 : (dx < dy ? 1 : 2);
        delta[k + l] = 1;
        delta[2 * k + l] = 2;
    }
    std::vector<char> acc{static_cast<char>(holds(rel, 0, 0)), static_cast<char>(holds(rel, 0, 1)),
                          static_cast<char>(holds(rel, 1, 0))};
    return minimize(Automaton(std::move(sig), 0, std::move(delta), std::move(acc)));
}

Automaton build_constant(std::uint64_t v, NumberSystem system, const std::string& name) {
    TrackSignature sig = tracks_of({name}, system);
    auto digits = to_digits(v, system.base);
    const auto n = digits.size();
    const auto b = static_cast<std::size_t>(system.base);
    // States 0..n: digits matched so far; n+1 is the sink.
    const auto sink = static_cast<State>(n + 1);
    std::vector<State> delta((n + 2) * b, sink);
    std::vector<char> acc(n + 2, 0);
    acc[n] = 1;
    delta[0] = 0;  // leading zeros
    for (std::size_t i = 0; i < n; ++i) {
        auto d = static_cast<std::size_t>(digits[i]);
        if (i == 0 && d == 0) continue;
        delta[i * b + d] = static_cast<State>(i + 1);
    }
    return minimize(Automaton(std::move(sig), 0, std::move(delta), std::move(acc)));
}

Automaton build_const_mul(std::uint64_t c, NumberSystem system) {
    if (c == 0) {
        auto zero = build_constant(0, system, "y");
        return canonical_track_order(add_track(zero, Track{"x", system}));
    }
    const auto equal = build_compare(Relation::Eq, system);
    auto rename = [](const Automaton& a, const std::string& from, const std::string& to) {
        std::vector<std::string> names;
        for (const auto& t : a.signature()) names.push_back(t.name == from ? to : t.name);
        return canonical_track_order(rename_tracks(a, names));
    };
    // pow(x, p): p = 2^j x.  acc(x, a): a = (c mod 2^j) x.
    Automaton pow = rename_tracks(equal, {"x", "p"});
    std::optional<Automaton> acc;
    for (std::uint64_t rest = c;; rest >>= 1) {
        if (rest & 1) {
            if (!acc) {
                acc = rename(pow, "p", "a");
            } else {
                auto sum = product(product(*acc, pow, BoolOp::And), build_add(system, {"a", "p", "s"}), BoolOp::And);
                acc = rename(project(sum, std::vector<std::string>{"a", "p"}), "s", "a");
            }
        }
        if (rest <= 1) break;
        auto twice = product(product(pow, rename_tracks(equal, {"p", "r"}), BoolOp::And),
                             build_add(system, {"p", "r", "q"}), BoolOp::And);
        pow = rename(project(twice, std::vector<std::string>{"p", "r"}), "q", "p");
    }
    return rename(*acc, "a", "y");
}

Automaton compile_atom(const AffineAtom& atom) {
    auto names = atom.variables();
    std::vector<std::int64_t> coeff(names.size(), 0);
    for (const auto& [c, v] : atom.terms)
        coeff[static_cast<std::size_t>(std::lower_bound(names.begin(), names.end(), v) - names.begin())] += c;
    TrackSignature sig = tracks_of(names, atom.system);
    const auto k = sig.alphabet_size();
    const std::int64_t b = atom.system.base;

    std::int64_t pos = 0, neg = 0;
    for (auto c : coeff) (c > 0 ? pos : neg) += std::llabs(c);
    const std::int64_t bound = std::max<std::int64_t>({pos, neg, static_cast<std::int64_t>(std::llabs(atom.constant))});
    if (bound > (std::int64_t{1} << 20)) throw std::invalid_argument("affine atom coefficients too large");

    // Partial value r in [-bound, bound]; above (below) the bound the value
    // only grows (shrinks), so the sign of r + constant is settled.
    const auto width = static_cast<std::size_t>(2 * bound + 1);
    const auto above = static_cast<State>(width);
    const auto below = static_cast<State>(width + 1);
    std::vector<State> delta((width + 2) * k);
    std::vector<char> acc(width + 2);
    std::vector<std::int64_t> letter_sum(k, 0);
    for (Letter l = 0; l < k; ++l)
        for (std::size_t i = 0; i < names.size(); ++i) letter_sum[l] += coeff[i] * sig.digit(l, i);
    for (std::size_t s = 0; s < width; ++s) {
        const std::int64_t r = static_cast<std::int64_t>(s) - bound;
        acc[s] = holds(atom.relation, r + atom.constant, 0) ? 1 : 0;
        for (Letter l = 0; l < k; ++l) {
            const std::int64_t next = b * r + letter_sum[l];
            delta[s * k + l] = next > bound ? above : (next < -bound ? below : static_cast<State>(next + bound));
        }
    }
    for (Letter l = 0; l < k; ++l) {
        delta[static_cast<std::size_t>(above) * k + l] = above;
        delta[static_cast<std::size_t>(below) * k + l] = below;
    }
    acc[static_cast<std::size_t>(above)] = holds(atom.relation, 1, 0) ? 1 : 0;
    acc[static_cast<std::size_t>(below)] = holds(atom.relation, -1, 0) ? 1 : 0;
    return minimize(Automaton(std::move(sig), static_cast<State>(bound), std::move(delta), std::move(acc)));
}

namespace {

/// Automaton over (vars..., out) with out = sum c_i v_i + k, all c_i, k >= 0.
Automaton build_sum(const std::vector<std::pair<std::uint64_t, std::string>>& terms, std::uint64_t k,
                    NumberSystem system, const std::string& out, int& fresh) {
    auto temp = [&] { return "_t" + std::to_string(fresh++); };
    std::optional<Automaton> acc;
    std::string acc_name;
    auto add_part = [&](Automaton part, const std::string& part_name) {
        if (!acc) {
            acc = std::move(part);
            acc_name = part_name;
            return;
        }
        std::string sum_name = temp();
        auto joined = product(product(*acc, part, BoolOp::And), build_add(system, {acc_name, part_name, sum_name}),
                              BoolOp::And);
        acc = project(joined, std::vector<std::string>{acc_name, part_name});
        acc_name = sum_name;
    };
    for (const auto& [c, v] : terms) {
        std::string t = temp();
        add_part(rename_tracks(build_const_mul(c, system), {v, t}), t);
    }
    if (k != 0 || !acc) {
        std::string t = temp();
        add_part(build_constant(k, system, t), t);
    }
    std::vector<std::string> names;
    for (const auto& track : acc->signature()) names.push_back(track.name == acc_name ? out : track.name);
    return rename_tracks(*acc, names);
}

}  // namespace

Automaton compile_atom_by_composition(const AffineAtom& atom) {
    auto names = atom.variables();
    std::vector<std::int64_t> coeff(names.size(), 0);
    for (const auto& [c, v] : atom.terms)
        coeff[static_cast<std::size_t>(std::lower_bound(names.begin(), names.end(), v) - names.begin())] += c;
    // Move negative parts across the relation so both sides stay in N.
    std::vector<std::pair<std::uint64_t, std::string>> lhs, rhs;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (coeff[i] > 0) lhs.emplace_back(static_cast<std::uint64_t>(coeff[i]), names[i]);
        if (coeff[i] < 0) rhs.emplace_back(static_cast<std::uint64_t>(-coeff[i]), names[i]);
    }
    std::uint64_t lk = atom.constant > 0 ? static_cast<std::uint64_t>(atom.constant) : 0;
    std::uint64_t rk = atom.constant < 0 ? static_cast<std::uint64_t>(-atom.constant) : 0;
    int fresh = 0;
    auto left = build_sum(lhs, lk, atom.system, "_L", fresh);
    auto right = build_sum(rhs, rk, atom.system, "_R", fresh);
    auto cmp = rename_tracks(build_compare(atom.relation, atom.system), {"_L", "_R"});
    auto all = product(product(left, right, BoolOp::And), cmp, BoolOp::And);
    auto result = project(all, std::vector<std::string>{"_L", "_R"});
    for (const auto& n : names)
        if (!result.signature().index_of(n)) result = add_track(result, Track{n, atom.system});
    return canonical_track_order(result);
}

const std::vector<RegexSpec>& corpus_regex_specs() {
    static const std::vector<RegexSpec> specs{
        {"power2", {"msd_2"}, "0*10*"},
        {"power4", {"msd_4"}, "0*10*"},
        {"oddpow2", {"msd_4"}, "0*20*"},
        {"link42", {"msd_4", "msd_2"}, "([0,0]|[1,1])*"},
        {"sqrtpow2", {"msd_4", "msd_2"}, "[0,0]*([1,1]|[0,1][2,0])[0,0]*"},
        {"rss_int", {"msd_4", "msd_4"}, "[0,0]*[1,3][0,3]*"},
        {"rst_int1", {"msd_4", "msd_4"}, "[0,0]*[1,1][0,3]*"},
        {"rst_int2", {"msd_4", "msd_4"}, "[0,0]*[2,3][0,3]*"},
    };
    return specs;
}

std::map<std::string, Automaton> corpus_regex_automata() {
    std::map<std::string, Automaton> out;
    for (const auto& spec : corpus_regex_specs()) {
        auto names = positional_names(spec.systems.size());
        std::vector<Track> tracks;
        for (std::size_t i = 0; i < names.size(); ++i) tracks.push_back(Track{names[i], NumberSystem::parse(spec.systems[i])});
        out.emplace(spec.name, from_regex(TrackSignature(std::move(tracks)), spec.pattern));
    }
    return out;
}

}  // namespace autoseq
