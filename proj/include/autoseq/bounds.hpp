#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace autoseq {

struct BoundLine {
    std::string statement;
    std::uint64_t from = 0;  // first n checked
    std::uint64_t to = 0;    // one past the last n checked
    std::uint64_t violations = 0;
    std::optional<std::uint64_t> first_violation;
};

struct BoundsReport {
    std::vector<BoundLine> lines;
    /// n with m(s(n)) = 3n+1, and n with 5 m(s(n)) = 3n+7, below the m limit.
    std::vector<std::uint64_t> upper_tight;
    std::vector<std::uint64_t> lower_tight;
    /// The first few n with t(n) = 0.
    std::vector<std::uint64_t> t_zeros;
    bool ok() const;
};

/// Integer-only sweep over 0 <= n < limit of the bounds on s, t and the
/// pseudo-square m; the statements involving m alone stop at m_limit.
BoundsReport verify_bounds(std::uint64_t limit, std::uint64_t m_limit = std::uint64_t{1} << 16);

void write_bounds_report(std::ostream& out, const BoundsReport& report);

}  // namespace autoseq
