#pragma once

#include "autoseq/automaton.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace autoseq {

/// Rudin-Shapiro coefficient: (-1)^(number of possibly overlapping "11"
/// blocks in the binary expansion of n).
int rs(std::uint64_t n);
/// Same value from a(2n) = a(n), a(2n+1) = (-1)^n a(n), a(0) = 1.
int rs_recursive(std::uint64_t n);

/// s(n) = sum_{i<=n} a(i) and t(n) = sum_{i<=n} (-1)^i a(i), evaluated in
/// O(log n) through the binary recurrences for the pair (s, t).
std::int64_t s_oracle(std::uint64_t n);
std::int64_t t_oracle(std::uint64_t n);

/// Pseudo-square: the binary expansion of n read in base 4.
std::uint64_t pseudo_square(std::uint64_t n);

/// Companion coefficient counting "00" blocks instead of "11".
int aprime(std::uint64_t n);
/// a'(2n) = (-1)^(n+1) a'(n) (n >= 1), a'(2n+1) = a'(n), a'(0) = 1.
int aprime_recursive(std::uint64_t n);

/// Prefix sums computed by direct summation; O(n).
std::int64_t sprime(std::uint64_t n);
std::int64_t tprime(std::uint64_t n);

/// Directly summed values of all six sequences for 0 <= n < size.
struct SequenceTable {
    explicit SequenceTable(std::size_t size);

    std::size_t size() const { return a.size(); }

    std::vector<int> a;
    std::vector<std::int64_t> s;
    std::vector<std::int64_t> t;
    std::vector<int> ap;
    std::vector<std::int64_t> sp;
    std::vector<std::int64_t> tp;
};

/// Base-4 DFAO for a(n): states track the parity of the "11" count and the
/// last bit read.
OutputAutomaton build_rs_dfao4();
/// Base-4 DFAO for a'(n).
OutputAutomaton build_rsp_dfao4();

struct SequenceOracle {
    std::string name;
    std::function<std::int64_t(std::uint64_t)> eval;
};

/// Named oracles: "s", "t", "sprime", "one_minus_tprime", "m", "identity".
/// The primed sums are served from a table of `cache` directly summed values
/// and fall back to direct summation beyond it.
SequenceOracle named_oracle(const std::string& name, std::size_t cache = std::size_t{1} << 16);

}  // namespace autoseq
