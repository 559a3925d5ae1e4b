#include "autoseq/signature.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace autoseq {

NumberSystem NumberSystem::parse(std::string_view text) {
    constexpr std::string_view prefix = "msd_";
    if (!text.starts_with(prefix) || text.size() == prefix.size())
        throw std::invalid_argument("unknown number system '" + std::string(text) + "'");
    int base = 0;
    for (char c : text.substr(prefix.size())) {
        if (c < '0' || c > '9')
            throw std::invalid_argument("unknown number system '" + std::string(text) + "'");
        base = base * 10 + (c - '0');
        if (base > 1 << 16) throw std::invalid_argument("base too large in '" + std::string(text) + "'");
    }
    if (base < 2) throw std::invalid_argument("base must be at least 2 in '" + std::string(text) + "'");
    return NumberSystem{base};
}

TrackSignature::TrackSignature(std::vector<Track> tracks) : tracks_(std::move(tracks)) {
    std::set<std::string> seen;
    for (const auto& t : tracks_) {
        if (!seen.insert(t.name).second) throw std::invalid_argument("duplicate track name '" + t.name + "'");
        if (t.system.base < 2) throw std::invalid_argument("track base must be at least 2");
    }
    strides_.assign(tracks_.size(), 1);
    std::uint64_t size = 1;
    for (std::size_t i = tracks_.size(); i-- > 0;) {
        strides_[i] = static_cast<Letter>(size);
        size *= static_cast<std::uint64_t>(tracks_[i].system.base);
        if (size > (1u << 24)) throw std::invalid_argument("alphabet too large");
    }
    alphabet_size_ = static_cast<std::size_t>(size);
}

std::optional<std::size_t> TrackSignature::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < tracks_.size(); ++i)
        if (tracks_[i].name == name) return i;
    return std::nullopt;
}

Letter TrackSignature::encode(std::span<const int> digits) const {
    if (digits.size() != tracks_.size()) throw std::invalid_argument("digit tuple has wrong arity");
    Letter letter = 0;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (digits[i] < 0 || digits[i] >= tracks_[i].system.base)
            throw std::invalid_argument("digit " + std::to_string(digits[i]) + " out of range for " +
                                        tracks_[i].system.name());
        letter += static_cast<Letter>(digits[i]) * strides_[i];
    }
    return letter;
}

std::vector<int> TrackSignature::decode(Letter letter) const {
    std::vector<int> digits(tracks_.size());
    for (std::size_t i = 0; i < tracks_.size(); ++i) digits[i] = digit(letter, i);
    return digits;
}

Word TrackSignature::encode_values(std::span<const std::uint64_t> values) const {
    if (values.size() != tracks_.size()) throw std::invalid_argument("value tuple has wrong arity");
    std::vector<std::vector<int>> reps;
    std::size_t length = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        reps.push_back(to_digits(values[i], tracks_[i].system.base));
        length = std::max(length, reps.back().size());
    }
    Word word(length, 0);
    for (std::size_t i = 0; i < reps.size(); ++i) {
        std::size_t pad = length - reps[i].size();
        for (std::size_t j = 0; j < reps[i].size(); ++j)
            word[pad + j] += static_cast<Letter>(reps[i][j]) * strides_[i];
    }
    return word;
}

std::vector<std::uint64_t> TrackSignature::decode_values(const Word& word) const {
    std::vector<std::uint64_t> values(tracks_.size(), 0);
    for (Letter letter : word) {
        for (std::size_t i = 0; i < tracks_.size(); ++i) {
            auto b = static_cast<std::uint64_t>(tracks_[i].system.base);
            auto d = static_cast<std::uint64_t>(digit(letter, i));
            if (values[i] > (std::numeric_limits<std::uint64_t>::max() - d) / b)
                throw std::overflow_error("decoded value exceeds 64 bits");
            values[i] = values[i] * b + d;
        }
    }
    return values;
}

std::string TrackSignature::format_word(const Word& word) const {
    std::string out;
    for (Letter letter : word) {
        out += '[';
        for (std::size_t i = 0; i < tracks_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(digit(letter, i));
        }
        out += ']';
    }
    return out;
}

std::string TrackSignature::systems_line() const {
    std::string out;
    for (std::size_t i = 0; i < tracks_.size(); ++i) {
        if (i) out += ' ';
        out += tracks_[i].system.name();
    }
    return out;
}

std::vector<int> to_digits(std::uint64_t value, int base) {
    std::vector<int> digits;
    while (value > 0) {
        digits.push_back(static_cast<int>(value % static_cast<std::uint64_t>(base)));
        value /= static_cast<std::uint64_t>(base);
    }
    std::reverse(digits.begin(), digits.end());
    return digits;
}

std::uint64_t from_digits(std::span<const int> digits, int base) {
    std::uint64_t value = 0;
    for (int d : digits) value = value * static_cast<std::uint64_t>(base) + static_cast<std::uint64_t>(d);
    return value;
}

}  // namespace autoseq
