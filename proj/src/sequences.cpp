#include "autoseq/sequences.hpp"

#include <bit>
#include <memory>
#include <stdexcept>

namespace autoseq {

int rs(std::uint64_t n) { return std::popcount(n & (n >> 1)) % 2 == 0 ? 1 : -1; }

int rs_recursive(std::uint64_t n) {
    int sign = 1;
    // Unroll a(2m+1) = (-1)^m a(m) and a(2m) = a(m) from the low end.
    while (n > 0) {
        if ((n & 1) && ((n >> 1) & 1)) sign = -sign;
        n >>= 1;
    }
    return sign;
}

namespace {

struct SumState {
    // s(n), t(n), s(n-1), t(n-1) with s(-1) = t(-1) = 0.
    std::int64_t s, t, sp, tp;
};

SumState sums(std::uint64_t n) {
    SumState f{1, 1, 0, 0};  // n = 0
    for (int bit = 63; bit >= 0; --bit) {
        const bool one = (n >> bit) & 1;
        SumState g{};
        if (one) {
            // 2m+1: s = s(m) + t(m), t = s(m) - t(m); previous is 2m.
            g = {f.s + f.t, f.s - f.t, f.s + f.tp, f.s - f.tp};
        } else {
            // 2m: s = s(m) + t(m-1), t = s(m) - t(m-1); previous is 2m-1.
            g = {f.s + f.tp, f.s - f.tp, f.sp + f.tp, f.sp - f.tp};
        }
        f = g;
    }
    return f;
}

}  // namespace

std::int64_t s_oracle(std::uint64_t n) { return sums(n).s; }
std::int64_t t_oracle(std::uint64_t n) { return sums(n).t; }

std::uint64_t pseudo_square(std::uint64_t n) {
    if (n >> 32) throw std::overflow_error("pseudo_square: argument too large");
    std::uint64_t m = 0;
    for (int bit = 31; bit >= 0; --bit) m = (m << 2) | ((n >> bit) & 1);
    return m;
}

int aprime(std::uint64_t n) {
    if (n == 0) return 1;
    const int len = 64 - std::countl_zero(n);
    // "00" blocks strictly inside the significant bits.
    const std::uint64_t mask = len >= 64 ? ~0ull : ((1ull << len) - 1);
    const std::uint64_t zeros = ~n & mask;
    const std::uint64_t pairs = zeros & (zeros >> 1) & (mask >> 1);
    return std::popcount(pairs) % 2 == 0 ? 1 : -1;
}

int aprime_recursive(std::uint64_t n) {
    if (n == 0) return 1;
    const std::uint64_t m = n >> 1;
    if (n & 1) return aprime_recursive(m);
    return ((m + 1) % 2 == 0 ? 1 : -1) * aprime_recursive(m);
}

std::int64_t sprime(std::uint64_t n) {
    std::int64_t sum = 0;
    for (std::uint64_t i = 0; i <= n; ++i) sum += aprime(i);
    return sum;
}

std::int64_t tprime(std::uint64_t n) {
    std::int64_t sum = 0;
    for (std::uint64_t i = 0; i <= n; ++i) sum += (i % 2 == 0 ? 1 : -1) * aprime(i);
    return sum;
}

SequenceTable::SequenceTable(std::size_t size) : a(size), s(size), t(size), ap(size), sp(size), tp(size) {
    std::int64_t s_acc = 0, t_acc = 0, sp_acc = 0, tp_acc = 0;
    for (std::size_t i = 0; i < size; ++i) {
        const int sign = i % 2 == 0 ? 1 : -1;
        a[i] = rs(i);
        ap[i] = aprime(i);
        s[i] = s_acc += a[i];
        t[i] = t_acc += sign * a[i];
        sp[i] = sp_acc += ap[i];
        tp[i] = tp_acc += sign * ap[i];
    }
}

namespace {

OutputAutomaton from_bit_machine(int num_states, const std::function<int(int, int)>& step,
                                 const std::function<int(int)>& output) {
    // Lift a binary machine to base 4 by reading two bits per digit.
    std::vector<State> delta(static_cast<std::size_t>(num_states) * 4);
    std::vector<int> outputs(static_cast<std::size_t>(num_states));
    for (int q = 0; q < num_states; ++q) {
        outputs[static_cast<std::size_t>(q)] = output(q);
        for (int d = 0; d < 4; ++d) delta[static_cast<std::size_t>(q) * 4 + static_cast<std::size_t>(d)] = step(step(q, d >> 1), d & 1);
    }
    return minimize(OutputAutomaton(NumberSystem{4}, 0, std::move(delta), std::move(outputs)));
}

}  // namespace

OutputAutomaton build_rs_dfao4() {
    // State = 2 * parity + last bit.
    return from_bit_machine(
        4,
        [](int q, int bit) {
            int parity = q >> 1, last = q & 1;
            if (last && bit) parity ^= 1;
            return 2 * parity + bit;
        },
        [](int q) { return (q >> 1) ? -1 : 1; });
}

OutputAutomaton build_rsp_dfao4() {
    // State = 4 * started + 2 * parity + last bit; blocks counted after the
    // leading 1 only.
    return from_bit_machine(
        8,
        [](int q, int bit) {
            int started = q >> 2, parity = (q >> 1) & 1, last = q & 1;
            if (!started) return bit ? 4 + 1 : 0;
            if (!last && !bit) parity ^= 1;
            return 4 + 2 * parity + bit;
        },
        [](int q) { return ((q >> 1) & 1) ? -1 : 1; });
}

SequenceOracle named_oracle(const std::string& name, std::size_t cache) {
    if (name == "s") return {name, [](std::uint64_t n) { return s_oracle(n); }};
    if (name == "t") return {name, [](std::uint64_t n) { return t_oracle(n); }};
    if (name == "m") return {name, [](std::uint64_t n) { return static_cast<std::int64_t>(pseudo_square(n)); }};
    if (name == "identity") return {name, [](std::uint64_t n) { return static_cast<std::int64_t>(n); }};
    if (name == "sprime" || name == "one_minus_tprime") {
        auto table = std::make_shared<const SequenceTable>(cache);
        if (name == "sprime")
            return {name, [table](std::uint64_t n) { return n < table->size() ? table->sp[n] : sprime(n); }};
        return {name, [table](std::uint64_t n) { return 1 - (n < table->size() ? table->tp[n] : tprime(n)); }};
    }
    throw std::invalid_argument("unknown sequence '" + name + "'");
}

}  // namespace autoseq
