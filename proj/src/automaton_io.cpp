#include "autoseq/automaton_io.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace autoseq {
namespace {

bool is_rejecting_sink(const Automaton& a, State q) {
    if (a.is_accepting(q)) return false;
    for (Letter l = 0; l < a.alphabet_size(); ++l)
        if (a.next(q, l) != q) return false;
    return true;
}

struct Block {
    int output = 0;
    std::vector<std::pair<std::vector<int>, State>> edges;
};

struct ParsedFile {
    std::vector<std::string> systems;
    std::map<State, Block> blocks;
    std::size_t line_of_systems = 0;
};

std::vector<std::string> split(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    for (std::string tok; in >> tok;) out.push_back(tok);
    return out;
}

int to_int(const std::string& tok, std::size_t line) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(tok, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != tok.size()) throw FormatError("line " + std::to_string(line) + ": expected an integer, got '" + tok + "'");
    return v;
}

ParsedFile parse(std::istream& in) {
    ParsedFile file;
    std::string line;
    std::size_t lineno = 0;
    Block* current = nullptr;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        auto toks = split(line);
        if (toks.empty()) continue;
        if (file.systems.empty()) {
            file.systems = toks;
            file.line_of_systems = lineno;
            continue;
        }
        auto arrow = std::find(toks.begin(), toks.end(), "->");
        if (arrow == toks.end()) {
            if (toks.size() != 2) throw FormatError("line " + std::to_string(lineno) + ": expected 'state output'");
            State q = to_int(toks[0], lineno);
            if (file.blocks.count(q)) throw FormatError("line " + std::to_string(lineno) + ": state declared twice");
            current = &file.blocks[q];
            current->output = to_int(toks[1], lineno);
            continue;
        }
        if (!current) throw FormatError("line " + std::to_string(lineno) + ": transition before any state");
        if (arrow + 2 != toks.end()) throw FormatError("line " + std::to_string(lineno) + ": malformed transition");
        std::vector<int> digits;
        for (auto it = toks.begin(); it != arrow; ++it) digits.push_back(to_int(*it, lineno));
        current->edges.emplace_back(std::move(digits), to_int(*(arrow + 1), lineno));
    }
    if (file.systems.empty()) throw FormatError("empty automaton file");
    return file;
}

}  // namespace

std::vector<std::string> positional_names(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i)
        names.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "t" + std::to_string(i));
    return names;
}

void write_automaton(std::ostream& out, const Automaton& a) {
    const auto& sig = a.signature();
    if (sig.empty()) {
        out << (a.is_accepting(a.initial()) ? "true" : "false") << '\n';
        return;
    }
    const auto n = static_cast<State>(a.num_states());
    State sink = -1;
    if (n > 1 && a.initial() != n - 1 && is_rejecting_sink(a, n - 1)) sink = n - 1;
    // Serialized numbering puts the initial state at 0.
    std::vector<State> rename(static_cast<std::size_t>(n));
    for (State q = 0; q < n; ++q) rename[static_cast<std::size_t>(q)] = q;
    std::swap(rename[0], rename[static_cast<std::size_t>(a.initial())]);
    std::vector<State> order(static_cast<std::size_t>(n));
    for (State q = 0; q < n; ++q) order[static_cast<std::size_t>(rename[static_cast<std::size_t>(q)])] = q;

    out << sig.systems_line() << '\n';
    for (State i = 0; i < n; ++i) {
        State q = order[static_cast<std::size_t>(i)];
        if (q == sink) continue;
        out << '\n' << i << ' ' << (a.is_accepting(q) ? 1 : 0) << '\n';
        for (Letter l = 0; l < a.alphabet_size(); ++l) {
            State r = a.next(q, l);
            if (r == sink) continue;
            for (int d : sig.decode(l)) out << d << ' ';
            out << "-> " << rename[static_cast<std::size_t>(r)] << '\n';
        }
    }
}

std::string to_text(const Automaton& a) {
    std::ostringstream out;
    write_automaton(out, a);
    return out.str();
}

Automaton read_automaton(std::istream& in, const std::vector<std::string>& names) {
    ParsedFile file = parse(in);
    if (file.systems.size() == 1 && (file.systems[0] == "true" || file.systems[0] == "false")) {
        if (!file.blocks.empty()) throw FormatError("constant automaton with states");
        return Automaton::constant(TrackSignature{}, file.systems[0] == "true");
    }
    auto track_names = names.empty() ? positional_names(file.systems.size()) : names;
    if (track_names.size() != file.systems.size())
        throw FormatError("expected " + std::to_string(track_names.size()) + " tracks, file has " +
                          std::to_string(file.systems.size()));
    std::vector<Track> tracks;
    for (std::size_t i = 0; i < file.systems.size(); ++i) {
        try {
            tracks.push_back(Track{track_names[i], NumberSystem::parse(file.systems[i])});
        } catch (const std::invalid_argument& e) {
            throw FormatError(std::string("line ") + std::to_string(file.line_of_systems) + ": " + e.what());
        }
    }
    TrackSignature sig(std::move(tracks));
    if (file.blocks.empty()) return Automaton::constant(sig, false);

    const auto declared = static_cast<State>(file.blocks.size());
    for (State q = 0; q < declared; ++q)
        if (!file.blocks.count(q)) throw FormatError("states must be numbered 0.." + std::to_string(declared - 1));
    const State sink = declared;
    const auto k = sig.alphabet_size();
    std::vector<State> delta((static_cast<std::size_t>(declared) + 1) * k, sink);
    std::vector<char> accepting(static_cast<std::size_t>(declared) + 1, 0);
    for (auto& [q, block] : file.blocks) {
        accepting[static_cast<std::size_t>(q)] = block.output != 0 ? 1 : 0;
        for (auto& [digits, target] : block.edges) {
            if (digits.size() != sig.size()) throw FormatError("transition of state " + std::to_string(q) + " has wrong arity");
            for (std::size_t i = 0; i < digits.size(); ++i)
                if (digits[i] < 0 || digits[i] >= sig[i].system.base)
                    throw FormatError("digit out of range in state " + std::to_string(q));
            if (target < 0 || target >= declared) throw FormatError("transition to undeclared state " + std::to_string(target));
            delta[static_cast<std::size_t>(q) * k + sig.encode(digits)] = target;
        }
    }
    // keep the sink only when some transition needs it
    const std::size_t used = static_cast<std::size_t>(declared) * k;
    if (std::find(delta.begin(), delta.begin() + static_cast<std::ptrdiff_t>(used), sink) == delta.begin() + static_cast<std::ptrdiff_t>(used)) {
        delta.resize(used);
        accepting.pop_back();
    }
    return Automaton(std::move(sig), 0, std::move(delta), std::move(accepting));
}

Automaton automaton_from_text(const std::string& text, const std::vector<std::string>& names) {
    std::istringstream in(text);
    return read_automaton(in, names);
}

void write_dfao(std::ostream& out, const OutputAutomaton& dfao) {
    out << dfao.system().name() << '\n';
    const auto n = static_cast<State>(dfao.num_states());
    std::vector<State> rename(static_cast<std::size_t>(n));
    for (State q = 0; q < n; ++q) rename[static_cast<std::size_t>(q)] = q;
    std::swap(rename[0], rename[static_cast<std::size_t>(dfao.initial())]);
    std::vector<State> order(static_cast<std::size_t>(n));
    for (State q = 0; q < n; ++q) order[static_cast<std::size_t>(rename[static_cast<std::size_t>(q)])] = q;
    for (State i = 0; i < n; ++i) {
        State q = order[static_cast<std::size_t>(i)];
        out << '\n' << i << ' ' << dfao.output(q) << '\n';
        for (int d = 0; d < dfao.base(); ++d) out << d << " -> " << rename[static_cast<std::size_t>(dfao.next(q, d))] << '\n';
    }
}

OutputAutomaton read_dfao(std::istream& in) {
    ParsedFile file = parse(in);
    if (file.systems.size() != 1) throw FormatError("a DFAO file has exactly one number system");
    NumberSystem sys;
    try {
        sys = NumberSystem::parse(file.systems[0]);
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
    const auto n = static_cast<State>(file.blocks.size());
    if (n == 0) throw FormatError("DFAO without states");
    const auto b = static_cast<std::size_t>(sys.base);
    std::vector<State> delta(static_cast<std::size_t>(n) * b, -1);
    std::vector<int> outputs(static_cast<std::size_t>(n));
    for (State q = 0; q < n; ++q) {
        auto it = file.blocks.find(q);
        if (it == file.blocks.end()) throw FormatError("states must be numbered 0.." + std::to_string(n - 1));
        outputs[static_cast<std::size_t>(q)] = it->second.output;
        for (auto& [digits, target] : it->second.edges) {
            if (digits.size() != 1 || digits[0] < 0 || digits[0] >= sys.base)
                throw FormatError("bad transition in state " + std::to_string(q));
            if (target < 0 || target >= n) throw FormatError("transition to undeclared state " + std::to_string(target));
            delta[static_cast<std::size_t>(q) * b + static_cast<std::size_t>(digits[0])] = target;
        }
    }
    for (State t : delta)
        if (t < 0) throw FormatError("DFAO must be complete");
    return OutputAutomaton(sys, 0, std::move(delta), std::move(outputs));
}

}  // namespace autoseq
