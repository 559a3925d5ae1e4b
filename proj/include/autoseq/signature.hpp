#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace autoseq {

/// Positional numeration system read most-significant digit first.
struct NumberSystem {
    int base = 2;

    friend bool operator==(const NumberSystem&, const NumberSystem&) = default;

    std::string name() const { return "msd_" + std::to_string(base); }

    /// Parses "msd_k" (k >= 2).
    static NumberSystem parse(std::string_view text);
};

using Letter = std::uint32_t;
using Word = std::vector<Letter>;

/// Raised when two tracks with the same name disagree on their base, or when
/// two automata that must share a signature do not.
class BaseMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Track {
    std::string name;
    NumberSystem system;

    friend bool operator==(const Track&, const Track&) = default;
};

/// Ordered list of named tracks. A letter is a digit tuple encoded in mixed
/// radix with the first track most significant, so ascending letters are the
/// lexicographic order of digit tuples.
class TrackSignature {
public:
    TrackSignature() = default;
    explicit TrackSignature(std::vector<Track> tracks);

    std::size_t size() const { return tracks_.size(); }
    bool empty() const { return tracks_.empty(); }
    const Track& operator[](std::size_t i) const { return tracks_[i]; }
    const std::vector<Track>& tracks() const { return tracks_; }
    auto begin() const { return tracks_.begin(); }
    auto end() const { return tracks_.end(); }

    std::size_t alphabet_size() const { return alphabet_size_; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    Letter encode(std::span<const int> digits) const;
    std::vector<int> decode(Letter letter) const;
    int digit(Letter letter, std::size_t track) const {
        return static_cast<int>(letter / strides_[track]) % tracks_[track].system.base;
    }

    /// Encodes one natural number per track as a zero-padded word of the
    /// shortest common length.
    Word encode_values(std::span<const std::uint64_t> values) const;
    /// Inverse of encode_values; throws std::overflow_error past 64 bits.
    std::vector<std::uint64_t> decode_values(const Word& word) const;

    /// Tuple-notation rendering of a word, e.g. "[1,1][0,1]".
    std::string format_word(const Word& word) const;
    /// Space separated system names, e.g. "msd_4 msd_2".
    std::string systems_line() const;

    friend bool operator==(const TrackSignature& a, const TrackSignature& b) {
        return a.tracks_ == b.tracks_;
    }

private:
    std::vector<Track> tracks_;
    std::vector<Letter> strides_;
    std::size_t alphabet_size_ = 1;
};

/// Canonical most-significant-first digits of value; empty for zero.
std::vector<int> to_digits(std::uint64_t value, int base);
std::uint64_t from_digits(std::span<const int> digits, int base);

}  // namespace autoseq
