#include "autoseq/curve.hpp"

#include "autoseq/sequences.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>

namespace autoseq {

std::vector<CurvePoint> curve_points(std::uint64_t count) {
    std::vector<CurvePoint> points;
    points.reserve(count);
    std::int64_t s = 0, t = 0;
    for (std::uint64_t n = 0; n < count; ++n) {
        const int a = rs(n);
        s += a;
        t += n % 2 ? -a : a;
        points.push_back({n, s, t});
    }
    return points;
}

void write_csv(std::ostream& out, const std::vector<CurvePoint>& points) {
    out << "n,x,y\n";
    for (const auto& p : points) out << p.n << ',' << p.x << ',' << p.y << '\n';
}

void write_svg(std::ostream& out, const std::vector<CurvePoint>& points) {
    std::int64_t max_x = 1, max_y = 1;
    for (const auto& p : points) {
        max_x = std::max(max_x, p.x);
        max_y = std::max(max_y, p.y);
    }
    const int unit = 8, margin = 8;
    const auto width = max_x * unit + 2 * margin, height = max_y * unit + 2 * margin;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    out << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"3\" stroke-linejoin=\"round\" "
           "stroke-linecap=\"round\" points=\"";
    for (std::size_t i = 0; i < points.size(); ++i)
        out << (i ? " " : "") << margin + points[i].x * unit << ',' << height - margin - points[i].y * unit;
    out << "\"/>\n</svg>\n";
}

CurveCheck check_curve(std::uint64_t count) {
    CurveCheck c;
    auto fail = [&](bool& flag, const std::string& why) {
        flag = false;
        if (!c.failure) c.failure = why;
    };
    const auto points = curve_points(count);
    std::set<std::pair<std::pair<std::int64_t, std::int64_t>, std::pair<std::int64_t, std::int64_t>>> segments;
    std::map<std::pair<std::int64_t, std::int64_t>, int> hits;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto& p = points[i];
        std::pair<std::int64_t, std::int64_t> here{p.x, p.y};
        if (p.x < p.y || (p.x - p.y) % 2 != 0 || (p.x == 0 && p.y == 0))
            fail(c.in_region, "point outside the region at n=" + std::to_string(p.n));
        if (++hits[here] > 2) fail(c.at_most_two_hits, "third visit at n=" + std::to_string(p.n));
        if (i + 1 == points.size()) break;
        const auto& q = points[i + 1];
        // one unit in exactly one of (x+y)/2, (x-y)/2
        if (std::llabs(q.x - p.x) != 1 || std::llabs(q.y - p.y) != 1)
            fail(c.unit_steps, "non-unit step after n=" + std::to_string(p.n));
        std::pair<std::int64_t, std::int64_t> there{q.x, q.y};
        if (!segments.insert(std::minmax(here, there)).second)
            fail(c.no_repeated_segment, "segment repeated at n=" + std::to_string(p.n));
    }
    return c;
}

}  // namespace autoseq
