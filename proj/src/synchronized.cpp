#include "autoseq/synchronized.hpp"

#include "autoseq/automaton_ops.hpp"
#include "autoseq/compiler.hpp"

#include <algorithm>
#include <map>

namespace autoseq {
namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

class Guesser {
public:
    Guesser(const SequenceOracle& oracle, std::uint64_t bound, std::size_t cap, NumberSystem in, NumberSystem out)
        : sig_({Track{"n", in}, Track{"y", out}}), in_(static_cast<std::uint64_t>(in.base)),
          out_(static_cast<std::uint64_t>(out.base)), cap_(cap) {
        while (ipow(in_, length_ + 1) <= bound && length_ < 12) ++length_;
        if (length_ < 2) throw GuessFailed("sample bound " + std::to_string(bound) + " is too small");
        const auto size = ipow(in_, length_);
        values_.resize(size);
        for (std::uint64_t n = 0; n < size; ++n) {
            auto v = oracle.eval(n);
            if (v < 0) throw std::invalid_argument(oracle.name + " is negative at " + std::to_string(n));
            values_[n] = static_cast<std::uint64_t>(v);
        }
    }

    Automaton run() {
        for (unsigned s = 1; s < length_; ++s)
            if (auto a = attempt(s)) return minimize(*a);
        // Samples this short never close the table: merge prefixes whose
        // observed residuals agree instead. On longer samples an unclosed
        // table means the graph is not regular in these bases.
        if (length_ <= 3)
            if (auto a = merge_compatible()) return minimize(*a);
        throw GuessFailed("no consistent automaton from samples of length " + std::to_string(length_));
    }

private:
    struct Prefix {
        std::uint64_t n, y;
        unsigned len;
    };

    bool member(std::uint64_t n, std::uint64_t y) const { return values_[n] == y; }

    std::string row(const Prefix& p, unsigned s) const {
        std::string r;
        for (unsigned j = 0; j <= s; ++j) {
            const auto pn = ipow(in_, j), py = ipow(out_, j);
            for (std::uint64_t ne = 0; ne < pn; ++ne)
                for (std::uint64_t ye = 0; ye < py; ++ye) r += member(p.n * pn + ne, p.y * py + ye) ? '1' : '0';
        }
        return r;
    }

    Prefix extend(const Prefix& p, Letter l) const {
        return {p.n * in_ + static_cast<std::uint64_t>(sig_.digit(l, 0)),
                p.y * out_ + static_cast<std::uint64_t>(sig_.digit(l, 1)), p.len + 1};
    }

    std::optional<Automaton> attempt(unsigned s) {
        const unsigned p_len = length_ - s;
        const auto k = sig_.alphabet_size();
        std::vector<Prefix> access{{0, 0, 0}};
        std::map<std::string, State> index{{row(access[0], s), 0}};
        std::vector<State> delta;
        for (std::size_t i = 0; i < access.size(); ++i) {
            if (access[i].len >= p_len) return std::nullopt;
            for (Letter l = 0; l < k; ++l) {
                Prefix next = extend(access[i], l);
                auto [it, inserted] = index.try_emplace(row(next, s), static_cast<State>(access.size()));
                if (inserted) {
                    if (next.len >= p_len) return std::nullopt;
                    access.push_back(next);
                    if (access.size() > cap_)
                        throw GuessFailed("more than " + std::to_string(cap_) + " states; the sample is too small "
                                          "or the function is not synchronized in these bases");
                }
                delta.push_back(it->second);
            }
        }
        std::vector<char> accepting;
        for (const auto& p : access) accepting.push_back(member(p.n, p.y) ? 1 : 0);
        Automaton hypothesis(sig_, 0, std::move(delta), std::move(accepting));
        if (!consistent(hypothesis, 0, {0, 0, 0})) return std::nullopt;
        return hypothesis;
    }

    // Agreement on every sampled word p.e and q.e, suffix lengths capped.
    bool compatible(const Prefix& p, const Prefix& q) const {
        const unsigned longest = std::max(p.len, q.len);
        const unsigned s = std::min(length_ - longest, 4u);
        for (unsigned j = 0; j <= s; ++j) {
            const auto pn = ipow(in_, j), py = ipow(out_, j);
            for (std::uint64_t ne = 0; ne < pn; ++ne)
                for (std::uint64_t ye = 0; ye < py; ++ye)
                    if (member(p.n * pn + ne, p.y * py + ye) != member(q.n * pn + ne, q.y * py + ye)) return false;
        }
        return true;
    }

    std::optional<Automaton> merge_compatible() {
        const auto k = sig_.alphabet_size();
        std::vector<Prefix> access{{0, 0, 0}};
        std::vector<State> delta;
        for (std::size_t i = 0; i < access.size(); ++i)
            for (Letter l = 0; l < k; ++l) {
                if (access[i].len == length_) {
                    delta.push_back(0);  // beyond the sample
                    continue;
                }
                Prefix next = extend(access[i], l);
                State target = -1;
                for (std::size_t j = 0; j < access.size() && target < 0; ++j)
                    if (compatible(access[j], next)) target = static_cast<State>(j);
                if (target < 0) {
                    target = static_cast<State>(access.size());
                    access.push_back(next);
                    if (access.size() > cap_)
                        throw GuessFailed("more than " + std::to_string(cap_) + " states; the sample is too small "
                                          "or the function is not synchronized in these bases");
                }
                delta.push_back(target);
            }
        std::vector<char> accepting;
        for (const auto& p : access) accepting.push_back(member(p.n, p.y) ? 1 : 0);
        Automaton hypothesis(sig_, 0, std::move(delta), std::move(accepting));
        if (!consistent(hypothesis, 0, {0, 0, 0})) return std::nullopt;
        return hypothesis;
    }

    bool consistent(const Automaton& a, State q, const Prefix& p) const {
        if (a.is_accepting(q) != member(p.n, p.y)) return false;
        if (p.len == length_) return true;
        for (Letter l = 0; l < sig_.alphabet_size(); ++l)
            if (!consistent(a, a.next(q, l), extend(p, l))) return false;
        return true;
    }

    TrackSignature sig_;
    std::uint64_t in_, out_;
    std::size_t cap_;
    unsigned length_ = 0;
    std::vector<std::uint64_t> values_;
};

}  // namespace

Automaton guess_sync(const SequenceOracle& oracle, std::uint64_t sample_bound, std::size_t state_cap, NumberSystem input,
                     NumberSystem output) {
    return Guesser(oracle, sample_bound, state_cap, input, output).run();
}

SyncSpec spec_s() { return {"RS4", false, 1, 1}; }
SyncSpec spec_t() { return {"RS4", true, 1, 1}; }
SyncSpec spec_sprime() { return {"RSP4", false, 1, 1}; }
SyncSpec spec_one_minus_tprime() { return {"RSP4", true, -1, 0}; }

Environment sequence_environment() {
    Environment env;
    env.define("RS4", build_rs_dfao4());
    env.define("RSP4", build_rsp_dfao4());
    env.define("even4", compile("?msd_4 Ek n=2*k", env));
    env.define("odd4", compile("?msd_4 Ek n=2*k+1", env));
    return env;
}

VerifyReport verify_sync(const Automaton& candidate, const SyncSpec& spec, const Environment& base_env) {
    VerifyReport report;
    const auto& sig = candidate.signature();
    if (sig.size() != 2 || sig[0].system != NumberSystem{4} || sig[1].system != NumberSystem{2}) {
        report.witness = "candidate must have tracks msd_4, msd_2";
        return report;
    }
    Environment env = base_env;
    if (!env.contains(spec.dfao)) {
        if (spec.dfao == "RS4") env.define("RS4", build_rs_dfao4());
        if (spec.dfao == "RSP4") env.define("RSP4", build_rsp_dfao4());
    }
    if (!env.contains("even4")) env.define("even4", compile("?msd_4 Ek n=2*k", env));
    if (!env.contains("odd4")) env.define("odd4", compile("?msd_4 Ek n=2*k+1", env));
    env.define("sync_candidate", candidate, true);

    const std::uint64_t zero_initial[] = {0, spec.initial};
    VerifyStep base{"base", "(0, " + std::to_string(spec.initial) + ") accepted", candidate.accepts_values(zero_initial), {}};
    if (!base.truth) base.counterexample = "n=0";
    report.steps.push_back(base);

    const std::string d = spec.dfao + "[n+1]";
    std::string plus = d + "=@1", minus = d + "=@-1";
    if (spec.alternating) {
        plus = "(" + d + "=@1 & $even4(n+1)) | (" + d + "=@-1 & $odd4(n+1))";
        minus = "(" + d + "=@-1 & $even4(n+1)) | (" + d + "=@1 & $odd4(n+1))";
    }
    if (spec.sign < 0) std::swap(plus, minus);
    const std::vector<std::pair<std::string, std::string>> sentences = {
        {"step up", "?msd_4 An,y ($sync_candidate(n,y) & (" + plus + ")) => $sync_candidate(n+1,?msd_2 y+1)"},
        {"step down", "?msd_4 An,y ($sync_candidate(n,y) & (" + minus + ")) => $sync_candidate(n+1,?msd_2 y-1)"},
        {"total", "?msd_4 An Ey $sync_candidate(n,y)"},
        {"functional", "?msd_4 An ~(Ex,y $sync_candidate(n,x) & $sync_candidate(n,y) & (?msd_2 x!=y))"},
    };
    for (const auto& [name, text] : sentences) {
        auto decision = decide(text, env);
        report.steps.push_back({name, text, decision.truth, decision.counterexample});
    }
    report.ok = true;
    for (const auto& s : report.steps) {
        if (s.truth) continue;
        report.ok = false;
        if (!report.witness) report.witness = s.name + ": " + s.counterexample.value_or("no assignment");
    }
    return report;
}

VerifyReport verify_sync(const Automaton& candidate, const SyncSpec& spec) {
    static const Environment env = sequence_environment();
    return verify_sync(candidate, spec, env);
}

VerifyReport register_sync(Environment& env, const std::string& name, const Automaton& candidate, const SyncSpec& spec,
                           bool overwrite) {
    auto report = verify_sync(candidate, spec, env);
    env.define(name, Entry{candidate, report.ok ? Entry::Status::Verified : Entry::Status::Candidate}, overwrite);
    return report;
}

std::uint64_t sync_eval(const Automaton& rel, std::uint64_t n, std::size_t input_track) {
    const auto& sig = rel.signature();
    if (sig.size() != 2 || input_track > 1) throw std::invalid_argument("sync_eval needs a two-track relation");
    const std::size_t out_track = 1 - input_track;
    const int out_base = sig[out_track].system.base;
    const auto in_digits = to_digits(n, sig[input_track].system.base);
    const std::size_t k = rel.alphabet_size(), states = rel.num_states();

    // Letters grouped by input digit.
    std::vector<std::vector<Letter>> by_input(static_cast<std::size_t>(sig[input_track].system.base));
    for (Letter l = 0; l < k; ++l) by_input[static_cast<std::size_t>(sig.digit(l, input_track))].push_back(l);

    for (std::size_t len = in_digits.size(); len <= in_digits.size() + states + 1; ++len) {
        const std::size_t pad = len - in_digits.size();
        auto input_at = [&](std::size_t i) { return i < pad ? 0 : in_digits[i - pad]; };
        // live[i][q]: from q the remaining positions i.. can still be accepted.
        std::vector<std::vector<char>> live(len + 1, std::vector<char>(states, 0));
        for (std::size_t q = 0; q < states; ++q) live[len][q] = rel.is_accepting(static_cast<State>(q));
        for (std::size_t i = len; i-- > 0;)
            for (std::size_t q = 0; q < states; ++q)
                for (Letter l : by_input[static_cast<std::size_t>(input_at(i))])
                    if (live[i + 1][static_cast<std::size_t>(rel.next(static_cast<State>(q), l))]) {
                        live[i][q] = 1;
                        break;
                    }
        if (!live[0][static_cast<std::size_t>(rel.initial())]) continue;
        State q = rel.initial();
        std::uint64_t y = 0;
        for (std::size_t i = 0; i < len; ++i) {
            std::optional<Letter> choice;
            for (Letter l : by_input[static_cast<std::size_t>(input_at(i))]) {
                if (!live[i + 1][static_cast<std::size_t>(rel.next(q, l))]) continue;
                if (choice) throw FunctionalityViolation("more than one value at " + std::to_string(n));
                choice = l;
            }
            y = y * static_cast<std::uint64_t>(out_base) + static_cast<std::uint64_t>(sig.digit(*choice, out_track));
            q = rel.next(q, *choice);
        }
        return y;
    }
    throw FunctionalityViolation("no value at " + std::to_string(n));
}

std::optional<std::string> check_functional(const Automaton& rel, std::size_t input_track) {
    const auto& sig = rel.signature();
    if (sig.size() != 2 || input_track > 1) throw std::invalid_argument("check_functional needs a two-track relation");
    const Track in = sig[input_track], out = sig[1 - input_track];
    auto copy = [&](const std::string& y) {
        std::vector<std::string> names(2);
        names[input_track] = "$in";
        names[1 - input_track] = y;
        return rename_tracks(rel, names);
    };
    Automaton both = product(copy("$x"), copy("$y"), BoolOp::And);
    AffineAtom differ;
    differ.terms = {{1, "$x"}, {-1, "$y"}};
    differ.relation = Relation::Ne;
    differ.system = out.system;
    Automaton bad = project(product(both, compile_atom(differ), BoolOp::And), std::vector<std::string>{"$x", "$y"});
    if (auto w = find_witness(bad)) {
        auto v = bad.signature().decode_values(*w);
        return in.name + "=" + std::to_string(v[0]);
    }
    return std::nullopt;
}

const Automaton& define_derived_sync(Environment& env, const std::string& name, const std::string& formula,
                                     bool overwrite) {
    Automaton a = compile(formula, env);
    if (a.signature().size() != 2) throw std::invalid_argument(name + " must have exactly two free variables");
    if (auto w = check_functional(a))
        throw FunctionalityViolation(name + " is not functional: two values at " + *w);
    env.define(name, std::move(a), overwrite);
    return env.relation(name);
}

}  // namespace autoseq
