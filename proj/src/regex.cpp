#include "autoseq/regex.hpp"

#include "autoseq/automaton_ops.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace autoseq {
namespace {

// Glushkov (position) automaton: every letter occurrence is a state.
struct Fragment {
    bool nullable = true;
    std::set<int> first;
    std::set<int> last;
};

class RegexParser {
public:
    RegexParser(const TrackSignature& sig, std::string_view text) : sig_(sig), text_(text) {}

    Nfa parse() {
        Fragment f = alternation();
        skip_space();
        if (pos_ != text_.size()) throw RegexError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);

        Nfa nfa;
        nfa.signature = sig_;
        State start = nfa.add_state(f.nullable);
        for (std::size_t p = 0; p < letters_.size(); ++p) nfa.add_state(f.last.count(static_cast<int>(p)) > 0);
        for (int p : f.first) nfa.add_edge(start, letters_[static_cast<std::size_t>(p)], p + 1);
        for (std::size_t p = 0; p < letters_.size(); ++p)
            for (int q : follow_[p]) nfa.add_edge(static_cast<State>(p + 1), letters_[static_cast<std::size_t>(q)], q + 1);
        nfa.initial = {start};
        return nfa;
    }

private:
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at(char c) {
        skip_space();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    Fragment alternation() {
        Fragment f = concatenation();
        while (at('|')) {
            ++pos_;
            Fragment g = concatenation();
            f.nullable = f.nullable || g.nullable;
            f.first.insert(g.first.begin(), g.first.end());
            f.last.insert(g.last.begin(), g.last.end());
        }
        return f;
    }

    Fragment concatenation() {
        Fragment f;  // epsilon
        while (true) {
            skip_space();
            if (pos_ >= text_.size() || text_[pos_] == '|' || text_[pos_] == ')') return f;
            Fragment g = starred();
            for (int p : f.last) follow_[static_cast<std::size_t>(p)].insert(g.first.begin(), g.first.end());
            Fragment h;
            h.nullable = f.nullable && g.nullable;
            h.first = f.first;
            if (f.nullable) h.first.insert(g.first.begin(), g.first.end());
            h.last = g.last;
            if (g.nullable) h.last.insert(f.last.begin(), f.last.end());
            f = std::move(h);
        }
    }

    Fragment starred() {
        Fragment f = atom();
        while (at('*')) {
            ++pos_;
            for (int p : f.last) follow_[static_cast<std::size_t>(p)].insert(f.first.begin(), f.first.end());
            f.nullable = true;
        }
        return f;
    }

    Fragment atom() {
        skip_space();
        if (pos_ >= text_.size()) throw RegexError("unexpected end of pattern", pos_);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Fragment f = alternation();
            if (!at(')')) throw RegexError("expected ')'", pos_);
            ++pos_;
            return f;
        }
        if (c == '[') return position(tuple());
        if (std::isdigit(static_cast<unsigned char>(c))) {
            if (sig_.size() != 1) throw RegexError("bare digit in a multi-track pattern", pos_);
            std::size_t at_digit = pos_++;
            return position(checked({c - '0'}, at_digit));
        }
        throw RegexError("unexpected '" + std::string(1, c) + "'", pos_);
    }

    Letter tuple() {
        std::size_t open = pos_++;
        std::vector<int> digits;
        while (true) {
            skip_space();
            std::size_t start = pos_;
            int value = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                value = value * 10 + (text_[pos_] - '0');
                if (value > 1 << 16) throw RegexError("digit too large", start);
                ++pos_;
            }
            if (pos_ == start) throw RegexError("malformed tuple literal", pos_);
            digits.push_back(value);
            skip_space();
            if (pos_ < text_.size() && text_[pos_] == ',') {
                ++pos_;
                continue;
            }
            if (pos_ < text_.size() && text_[pos_] == ']') {
                ++pos_;
                break;
            }
            throw RegexError("malformed tuple literal", pos_);
        }
        return checked(digits, open);
    }

    Letter checked(const std::vector<int>& digits, std::size_t where) {
        if (digits.size() != sig_.size())
            throw RegexError("tuple has " + std::to_string(digits.size()) + " components, expected " +
                                 std::to_string(sig_.size()),
                             where);
        for (std::size_t i = 0; i < digits.size(); ++i)
            if (digits[i] >= sig_[i].system.base)
                throw RegexError("digit " + std::to_string(digits[i]) + " out of range for " + sig_[i].system.name(),
                                 where);
        return sig_.encode(digits);
    }

    Fragment position(Letter letter) {
        int p = static_cast<int>(letters_.size());
        letters_.push_back(letter);
        follow_.emplace_back();
        Fragment f;
        f.nullable = false;
        f.first = {p};
        f.last = {p};
        return f;
    }

    const TrackSignature& sig_;
    std::string_view text_;
    std::size_t pos_ = 0;
    std::vector<Letter> letters_;
    std::vector<std::set<int>> follow_;
};

}  // namespace

Automaton from_regex(const TrackSignature& signature, std::string_view pattern) {
    RegexParser parser(signature, pattern);
    return determinize(parser.parse(), Padding::Close);
}

}  // namespace autoseq
