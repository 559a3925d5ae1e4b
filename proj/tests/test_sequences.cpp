#include <doctest.h>

#include "autoseq/sequences.hpp"

#include <bit>
#include <random>

using namespace autoseq;

namespace {

// (-1)^(overlapping 11 blocks): the blocks are the set bits of n & (n >> 1)
int a_bits(std::uint64_t n) { return std::popcount(n & (n >> 1)) % 2 ? -1 : 1; }

// 00 blocks inside the binary expansion (leading zeros excluded)
int ap_bits(std::uint64_t n) {
    if (n == 0) return 1;
    std::uint64_t mask = (std::uint64_t{1} << (std::bit_width(n) - 1)) - 1;
    std::uint64_t zeros = ~n & mask;
    return std::popcount(zeros & (zeros >> 1)) % 2 ? -1 : 1;
}

}  // namespace

TEST_CASE("published values of s and t") {
    const std::int64_t s[] = {1, 2, 3, 2, 3, 4, 3, 4, 5, 6, 7, 6, 5, 4, 5, 4, 5, 6, 7, 6, 7};
    const std::int64_t t[] = {1, 0, 1, 2, 3, 2, 1, 0, 1, 0, 1, 2, 1, 2, 3, 4, 5, 4, 5, 6, 7};
    for (std::uint64_t n = 0; n <= 20; ++n) {
        CHECK(s_oracle(n) == s[n]);
        CHECK(t_oracle(n) == t[n]);
    }
}

TEST_CASE("published values of a', s' and t'") {
    const int ap[] = {1, 1, 1, 1, -1, 1, 1, 1, 1, -1, 1, 1, -1, 1, 1, 1};
    const std::int64_t sp[] = {1, 2, 3, 4, 3, 4, 5, 6, 7, 6, 7, 8, 7, 8, 9, 10};
    const std::int64_t tp[] = {1, 0, 1, 0, -1, -2, -1, -2, -1, 0, 1, 0, -1, -2, -1, -2};
    for (std::uint64_t n = 0; n < 16; ++n) {
        CHECK(aprime(n) == ap[n]);
        CHECK(sprime(n) == sp[n]);
        CHECK(tprime(n) == tp[n]);
    }
}

TEST_CASE("coefficients agree with bit counting and the recurrences") {
    for (std::uint64_t n = 0; n < (1u << 16); ++n) {
        REQUIRE(rs(n) == a_bits(n));
        REQUIRE(rs_recursive(n) == a_bits(n));
        REQUIRE(aprime(n) == ap_bits(n));
        REQUIRE(aprime_recursive(n) == ap_bits(n));
    }
    std::mt19937_64 rng(1);
    for (int i = 0; i < 2000; ++i) {
        std::uint64_t n = rng() >> 2;
        CHECK(rs(n) == a_bits(n));
        CHECK(aprime(n) == ap_bits(n));
    }
}

TEST_CASE("logarithmic oracles match direct summation") {
    const std::size_t N = std::size_t{1} << 16;
    SequenceTable table(N);
    std::int64_t s = 0, t = 0, sp = 0, tp = 0;
    for (std::uint64_t n = 0; n < N; ++n) {
        int sign = n % 2 ? -1 : 1;
        s += a_bits(n);
        t += sign * a_bits(n);
        sp += ap_bits(n);
        tp += sign * ap_bits(n);
        REQUIRE(s_oracle(n) == s);
        REQUIRE(t_oracle(n) == t);
        REQUIRE(table.s[n] == s);
        REQUIRE(table.t[n] == t);
        REQUIRE(table.sp[n] == sp);
        REQUIRE(table.tp[n] == tp);
        REQUIRE(table.a[n] == a_bits(n));
        REQUIRE(table.ap[n] == ap_bits(n));
    }
    CHECK(sprime(N + 5) == sp + ap_bits(N) + ap_bits(N + 1) + ap_bits(N + 2) + ap_bits(N + 3) + ap_bits(N + 4) + ap_bits(N + 5));
}

TEST_CASE("oracle at large arguments") {
    // one step of the definition at random points far past the tables
    std::mt19937_64 rng(2);
    for (int i = 0; i < 20; ++i) {
        std::uint64_t n = (rng() >> 24) + 1;
        std::int64_t s = s_oracle(n - 1) + a_bits(n);
        CHECK(s_oracle(n) == s);
        CHECK(t_oracle(n) == t_oracle(n - 1) + (n % 2 ? -1 : 1) * a_bits(n));
    }
    // s(2^(2k) - 1) = 2^k and s(2^(2k+1) - 1) = 2^(k+1)
    for (unsigned k = 1; k < 30; ++k) {
        CHECK(s_oracle((std::uint64_t{1} << (2 * k)) - 1) == (std::int64_t{1} << k));
        CHECK(s_oracle((std::uint64_t{1} << (2 * k + 1)) - 1) == (std::int64_t{1} << (k + 1)));
    }
}

TEST_CASE("pseudo-square") {
    CHECK(pseudo_square(0) == 0);
    CHECK(pseudo_square(5) == 17);  // 101 read in base 4
    for (std::uint64_t n = 0; n < (1u << 14); ++n) {
        std::uint64_t m = 0;
        for (int i = 31; i >= 0; --i) m = 4 * m + ((n >> i) & 1);
        REQUIRE(pseudo_square(n) == m);
        REQUIRE(3 * m >= n * n + 2 * n);
        REQUIRE(m <= n * n);
    }
}

TEST_CASE("base-4 automata with output") {
    auto a = build_rs_dfao4();
    auto ap = build_rsp_dfao4();
    CHECK(a.base() == 4);
    CHECK(ap.base() == 4);
    for (std::uint64_t n = 0; n < (1u << 16); ++n) {
        REQUIRE(a.value(n) == a_bits(n));
        REQUIRE(ap.value(n) == ap_bits(n));
    }
    CHECK(minimize(a).num_states() == a.num_states());
}

TEST_CASE("named oracles") {
    CHECK(named_oracle("s").eval(12) == 5);
    CHECK(named_oracle("t").eval(11) == 2);
    CHECK(named_oracle("sprime").eval(15) == 10);
    CHECK(named_oracle("one_minus_tprime").eval(5) == 3);
    CHECK(named_oracle("m").eval(5) == 17);
    CHECK(named_oracle("identity").eval(77) == 77);
    auto small = named_oracle("sprime", 16);
    CHECK(small.eval(100) == sprime(100));
    CHECK_THROWS(named_oracle("nope"));
}
