#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace autoseq {

/// P_n = (s(n), t(n)).
struct CurvePoint {
    std::uint64_t n = 0;
    std::int64_t x = 0;
    std::int64_t y = 0;
};

std::vector<CurvePoint> curve_points(std::uint64_t count);

/// "n,x,y" header and one line per point.
void write_csv(std::ostream& out, const std::vector<CurvePoint>& points);
/// Polyline with rounded joins, x to the right and y upwards.
void write_svg(std::ostream& out, const std::vector<CurvePoint>& points);

struct CurveCheck {
    /// Consecutive points differ by (+-1, +-1): a unit step in the lattice
    /// coordinates ((x+y)/2, (x-y)/2).
    bool unit_steps = true;
    bool no_repeated_segment = true;
    bool at_most_two_hits = true;
    /// x >= y, x = y (mod 2), (x, y) != (0, 0).
    bool in_region = true;
    std::optional<std::string> failure;
    bool ok() const { return unit_steps && no_repeated_segment && at_most_two_hits && in_region; }
};

/// Brute-force check of the first `count` points.
CurveCheck check_curve(std::uint64_t count);

}  // namespace autoseq
