#pragma once

#include "autoseq/automaton.hpp"

#include <stdexcept>
#include <string_view>

namespace autoseq {

class RegexError : public std::invalid_argument {
public:
    RegexError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at offset " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Compiles a tuple regular expression such as "[0,0]*([1,1]|[0,1][2,0])"
/// over the given signature. Single-track patterns may use bare digits.
/// Supported: concatenation, '|', '*', parentheses. The result is the
/// minimized automaton of the padding closure of the pattern's language.
Automaton from_regex(const TrackSignature& signature, std::string_view pattern);

}  // namespace autoseq
