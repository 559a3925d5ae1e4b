#include "autoseq/bounds.hpp"

#include "autoseq/sequences.hpp"

#include <algorithm>
#include <ostream>

namespace autoseq {

bool BoundsReport::ok() const {
    return std::all_of(lines.begin(), lines.end(), [](const BoundLine& l) { return l.violations == 0; }) &&
           !upper_tight.empty() && !lower_tight.empty();
}

BoundsReport verify_bounds(std::uint64_t limit, std::uint64_t m_limit) {
    if (limit > (std::uint64_t{1} << 32)) throw std::invalid_argument("bounds limit too large");
    const std::uint64_t ml = std::min(limit, m_limit);
    BoundsReport r;
    auto line = [](const char* statement, std::uint64_t from, std::uint64_t to) {
        BoundLine l;
        l.statement = statement;
        l.from = from;
        l.to = to;
        return l;
    };
    r.lines = {
        line("5 s(n)^2 >= 3n+7", 1, limit), line("s(n)^2 <= 6n", 1, limit),    line("t(n) >= 0", 0, limit),
        line("t(n)^2 <= 3n", 1, limit),     line("m(s(n)) <= 3n+1", 1, limit), line("5 m(s(n)) >= 3n+7", 1, limit),
        line("m(t(n)) <= n+1", 0, limit),   line("3 m(n) >= n^2+2n", 0, ml),   line("m(n) <= n^2", 0, ml),
    };
    auto check = [&](std::size_t i, std::uint64_t n, bool holds) {
        auto& line = r.lines[i];
        if (n < line.from || n >= line.to || holds) return;
        if (!line.violations++) line.first_violation = n;
    };
    std::int64_t s = 0, t = 0;
    for (std::uint64_t n = 0; n < limit; ++n) {
        const int a = rs(n);
        s += a;
        t += (n % 2 ? -a : a);
        const auto un = static_cast<std::int64_t>(n);
        check(0, n, 5 * s * s >= 3 * un + 7);
        check(1, n, s * s <= 6 * un);
        check(2, n, t >= 0);
        check(3, n, t * t <= 3 * un);
        const auto ms = static_cast<std::int64_t>(pseudo_square(static_cast<std::uint64_t>(s)));
        const auto mt = t >= 0 ? static_cast<std::int64_t>(pseudo_square(static_cast<std::uint64_t>(t))) : 0;
        check(4, n, ms <= 3 * un + 1);
        check(5, n, 5 * ms >= 3 * un + 7);
        check(6, n, mt <= un + 1);
        if (n < ml) {
            const auto m = static_cast<std::int64_t>(pseudo_square(n));
            check(7, n, 3 * m >= un * un + 2 * un);
            check(8, n, m <= un * un);
            if (n >= 1 && ms == 3 * un + 1) r.upper_tight.push_back(n);
            if (n >= 1 && 5 * ms == 3 * un + 7) r.lower_tight.push_back(n);
        }
        if (t == 0 && r.t_zeros.size() < 16) r.t_zeros.push_back(n);
    }
    return r;
}

void write_bounds_report(std::ostream& out, const BoundsReport& report) {
    for (const auto& l : report.lines) {
        out << (l.violations ? "FAIL " : "PASS ") << l.statement << " for " << l.from << " <= n < " << l.to;
        if (l.violations) out << ": " << l.violations << " violations, first at n=" << *l.first_violation;
        out << "\n";
    }
    auto list = [&](const char* what, const std::vector<std::uint64_t>& v) {
        out << what << " (" << v.size() << "):";
        for (std::size_t i = 0; i < std::min<std::size_t>(v.size(), 8); ++i) out << " " << v[i];
        out << (v.size() > 8 ? " ...\n" : "\n");
    };
    list("m(s(n)) = 3n+1 at n", report.upper_tight);
    list("5 m(s(n)) = 3n+7 at n", report.lower_tight);
    list("t(n) = 0 at n", report.t_zeros);
}

}  // namespace autoseq
