#include <doctest.h>

#include "autoseq/automaton_io.hpp"
#include "autoseq/bounds.hpp"
#include "autoseq/corpus.hpp"
#include "autoseq/curve.hpp"
#include "autoseq/suite.hpp"

#include <bit>
#include <map>
#include <set>
#include <sstream>

using namespace autoseq;

namespace {

std::vector<std::pair<std::int64_t, std::int64_t>> brute_points(std::size_t n) {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    std::int64_t s = 0, t = 0;
    for (std::size_t i = 0; i < n; ++i) {
        int c = std::popcount(i & (i >> 1)) % 2 ? -1 : 1;
        s += c;
        t += (i % 2 ? -1 : 1) * c;
        out.emplace_back(s, t);
    }
    return out;
}

std::uint64_t m_of(std::uint64_t n) {
    std::uint64_t m = 0, p = 1;
    for (; n; n >>= 1, p *= 4) m += (n & 1) * p;
    return m;
}

}  // namespace

TEST_CASE("manifest parsing") {
    std::istringstream in(R"m(# header
check one
anchor something holds
expect true
script
eval a "Ax x=x":
end

check two
expect false
expect regex r "0*1"
expect rank0 p q
expect rank<= p 3
script
def r "x=1":
end
)m");
    auto checks = parse_manifest(in);
    REQUIRE(checks.size() == 2);
    CHECK(checks[0].id == "one");
    CHECK(checks[0].anchor == "something holds");
    CHECK(checks[0].script.find("eval a") != std::string::npos);
    REQUIRE(checks[1].expects.size() == 4);
    CHECK(checks[1].expects[0].kind == Expectation::Kind::Truth);
    CHECK_FALSE(checks[1].expects[0].truth);
    CHECK(checks[1].expects[1].pattern == "0*1");
    CHECK(checks[1].expects[2].other == "q");
    CHECK(checks[1].expects[3].rank == 3);

    auto bad = [](const char* text) {
        std::istringstream s(text);
        return parse_manifest(s);
    };
    CHECK_THROWS_AS(bad("check a\nexpect true\nscript\neval x \"Ax x=x\":\n"), ManifestError);
    CHECK_THROWS_AS(bad("check a\nscript\nend\n"), ManifestError);
    CHECK_THROWS_AS(bad("expect true\n"), ManifestError);
    CHECK_THROWS_AS(bad("check a\nfrobnicate\n"), ManifestError);
    CHECK_THROWS_AS(bad("check a\nexpect true\nscript\nend\ncheck a\nexpect true\nscript\nend\n"), ManifestError);
}

TEST_CASE("running checks") {
    const auto& env = corpus_environment();
    std::istringstream in(R"m(check holds
expect true
script
eval t "?msd_4 An,y $rss(n,y) => (?msd_2 y>=1)":
end

check fails
expect true
script
eval t "?msd_4 An,y $rss(n,y) => (?msd_2 y>=2)":
end

check regex
expect regex even "(0|1)*0"
script
def even "Ek n=2*k":
end

check regex_wrong
expect regex even "(0|1)*1"
script
def even "Ek n=2*k":
end
)m");
    auto checks = parse_manifest(in);
    auto report = run_suite(checks, env);
    REQUIRE(report.checks.size() == 4);
    CHECK(report.checks[0].passed);
    CHECK_FALSE(report.checks[1].passed);
    CHECK(report.checks[1].outcomes[0].actual.find("n=0") != std::string::npos);
    CHECK(report.checks[2].passed);
    CHECK_FALSE(report.checks[3].passed);
    CHECK(report.passed_count() == 2);
    CHECK_FALSE(report.all_passed());

    auto only = run_suite(checks, env, "regex*");
    CHECK(only.checks.size() == 2);

    std::ostringstream text;
    write_text_report(text, report);
    CHECK(text.str().find("fails") != std::string::npos);
}

TEST_CASE("corpus suite with a corrupted machine") {
    auto checks = load_manifest(corpus_dir() / "suite.manifest");
    CHECK(checks.size() >= 50);
    std::set<std::string> ids;
    for (const auto& c : checks) CHECK(ids.insert(c.id).second);

    Environment env = corpus_environment();
    const auto& rss = env.relation("rss");
    auto acc = rss.accepting();
    acc[2] = acc[2] ? 0 : 1;
    env.define("rss", Automaton(rss.signature(), rss.initial(), rss.transitions(), acc), true);
    auto report = run_suite(checks, env, "verify.rss.*");
    REQUIRE_FALSE(report.checks.empty());
    CHECK_FALSE(report.all_passed());
}

TEST_CASE("bounds sweep") {
    const std::uint64_t m_limit = std::uint64_t{1} << 12;
    auto report = verify_bounds(std::uint64_t{1} << 16, m_limit);
    CHECK(report.ok());
    for (const auto& line : report.lines) {
        CHECK(line.violations == 0);
        CHECK(line.to > line.from);
    }

    // independent tightness lists
    auto pts = brute_points(std::size_t{1} << 16);
    std::vector<std::uint64_t> upper, lower, zeros;
    for (std::uint64_t n = 0; n < pts.size(); ++n) {
        auto m = m_of(static_cast<std::uint64_t>(pts[n].first));
        if (n >= 1 && n < m_limit && m == 3 * n + 1) upper.push_back(n);
        if (n >= 1 && n < m_limit && 5 * m == 3 * n + 7) lower.push_back(n);
        if (pts[n].second == 0 && zeros.size() < 16) zeros.push_back(n);
    }
    CHECK(report.upper_tight == upper);
    CHECK(report.lower_tight == lower);
    CHECK(report.t_zeros == zeros);
    CHECK(zeros.front() == 1);
    CHECK_FALSE(upper.empty());
    CHECK_FALSE(lower.empty());

    std::ostringstream out;
    write_bounds_report(out, report);
    CHECK(out.str().find("5 s(n)^2") != std::string::npos);
}

TEST_CASE("curve points") {
    auto pts = curve_points(1024);
    REQUIRE(pts.size() == 1024);
    CHECK(pts[0].x == 1);
    CHECK(pts[0].y == 1);
    CHECK(pts[1].x == 2);
    CHECK(pts[1].y == 0);
    CHECK(pts[7].x == 4);
    CHECK(pts[7].y == 0);
    auto brute = brute_points(1024);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        CHECK(pts[i].n == i);
        CHECK(pts[i].x == brute[i].first);
        CHECK(pts[i].y == brute[i].second);
    }
}

TEST_CASE("curve properties") {
    auto check = check_curve(std::uint64_t{1} << 14);
    CHECK(check.ok());
    CHECK_FALSE(check.failure);

    auto pts = brute_points(std::size_t{1} << 14);
    std::map<std::pair<std::int64_t, std::int64_t>, int> hits;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        ++hits[pts[i]];
        if (i) {
            // exactly one of u = (x+y)/2, v = (x-y)/2 moves, by one
            auto du = std::abs((pts[i].first + pts[i].second) - (pts[i - 1].first + pts[i - 1].second)) / 2;
            auto dv = std::abs((pts[i].first - pts[i].second) - (pts[i - 1].first - pts[i - 1].second)) / 2;
            CHECK(du + dv == 1);
        }
    }
    // s(n) = 1 only at n = 0, so (1,1) is visited once
    CHECK(hits[{1, 1}] == 1);
    int most = 0;
    for (auto& [p, h] : hits) most = std::max(most, h);
    CHECK(most == 2);
    // every lattice point with x, y <= 32 in the region is reached early
    for (std::int64_t x = 0; x <= 32; ++x)
        for (std::int64_t y = 0; y <= x; ++y)
            if ((x - y) % 2 == 0 && x + y > 0) CHECK(hits.count({x, y}));
}

TEST_CASE("csv and svg output") {
    auto pts = curve_points(1024);
    std::ostringstream a, b;
    write_csv(a, pts);
    write_csv(b, curve_points(1024));
    CHECK(a.str() == b.str());
    CHECK(a.str().rfind("n,x,y\n0,1,1\n1,2,0\n", 0) == 0);

    std::ostringstream svg;
    write_svg(svg, pts);
    CHECK(svg.str().find("<polyline") != std::string::npos);
    CHECK(svg.str().find("stroke-linejoin=\"round\"") != std::string::npos);
}
