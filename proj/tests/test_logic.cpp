#include <doctest.h>

#include "autoseq/automaton_io.hpp"
#include "autoseq/compiler.hpp"
#include "autoseq/corpus.hpp"
#include "autoseq/regex.hpp"
#include "autoseq/script.hpp"

#include <bit>
#include <filesystem>
#include <functional>
#include <map>
#include <random>

using namespace autoseq;

namespace {

// test-side prefix sums of the Rudin-Shapiro coefficients
struct Sums {
    std::vector<std::int64_t> s, t;
    explicit Sums(std::size_t n) : s(n), t(n) {
        std::int64_t a = 0, b = 0;
        for (std::size_t i = 0; i < n; ++i) {
            int c = std::popcount(i & (i >> 1)) % 2 ? -1 : 1;
            a += c;
            b += (i % 2 ? -1 : 1) * c;
            s[i] = a;
            t[i] = b;
        }
    }
};

const Sums& sums() {
    static const Sums table(std::size_t{1} << 19);
    return table;
}

std::uint64_t m_of(std::uint64_t n) {
    std::uint64_t m = 0, p = 1;
    for (; n; n >>= 1, p *= 4) m += (n & 1) * p;
    return m;
}

// accepts_values with arguments given by track name
bool holds_at(const Automaton& a, const std::map<std::string, std::uint64_t>& at) {
    std::vector<std::uint64_t> v;
    for (const auto& t : a.signature()) v.push_back(at.at(t.name));
    return a.accepts_values(v);
}

Automaton random_formula(std::mt19937& rng, const Environment& env, std::string* text = nullptr) {
    const char* vars[] = {"x", "y", "z"};
    const char* rels[] = {"=", "!=", "<", "<=", ">", ">="};
    auto atom = [&] {
        std::string s = std::to_string(1 + rng() % 3) + "*" + vars[rng() % 3];
        if (rng() % 2) s += "+" + std::string(vars[rng() % 3]);
        s += rels[rng() % 6];
        s += rng() % 2 ? std::string(vars[rng() % 3]) : std::to_string(rng() % 9);
        return s;
    };
    std::string f = "(" + atom() + ")" + (rng() % 2 ? " & " : " | ") + "(" + atom() + ")";
    if (rng() % 2) f = "~(" + f + ") | (" + atom() + ")";
    if (text) *text = f;
    return compile(f, env);
}

}  // namespace

TEST_CASE("formula structure and precedence") {
    auto f = parse_formula("x=1 | y=2 & z=3");
    CHECK(f->kind == Formula::Kind::Binary);
    CHECK(f->op == BoolOp::Or);
    CHECK(f->b->op == BoolOp::And);

    auto g = parse_formula("x=1 => y=1 => z=1");
    CHECK(g->op == BoolOp::Implies);
    CHECK(g->b->op == BoolOp::Implies);  // right associative

    auto h = parse_formula("x=1 <=> y=1 => z=1");
    CHECK(h->op == BoolOp::Iff);

    auto q = parse_formula("?msd_4 An,k Em (m>n) & $rst(m,k)");
    REQUIRE(q->kind == Formula::Kind::Quantifier);
    CHECK(q->universal);
    CHECK(q->vars == std::vector<std::string>{"n", "k"});
    CHECK(q->system == NumberSystem{4});
    CHECK(q->a->kind == Formula::Kind::Quantifier);
    CHECK(q->a->a->op == BoolOp::And);  // quantifier scope extends right

    auto d = parse_formula("RS4[n+1]=@-1");
    CHECK(d->kind == Formula::Kind::DfaoTest);
    CHECK(d->value == -1);
    CHECK(to_string(*d) == "RS4[(n+1)]=@-1");

    auto e = parse_formula("Ek n=2*k");
    CHECK(free_variables(*e) == std::vector<std::string>{"n"});
    CHECK(to_string(*e) == "(Ek ?msd_2 (?msd_2 n=(2*k)))");

    // a variable named like a quantifier letter is still a variable
    CHECK(parse_formula("A=1 & E<2")->kind == Formula::Kind::Binary);
}

TEST_CASE("parse errors carry line and column") {
    try {
        parse_formula("x=1 &\n  y<<2");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.pos().line == 2);
        CHECK(e.pos().column == 5);
    }
    CHECK_THROWS_AS(parse_formula("(x=1"), ParseError);
    CHECK_THROWS_AS(parse_formula("x=99999999999999999999999"), ParseError);
    CHECK_THROWS_AS(parse_formula("x=1 #"), ParseError);
    CHECK_THROWS_AS(parse_formula("?msd_1 x=1"), ParseError);

    try {
        parse_script("def a \"x=1\":\n\ndef b \"x=1 &\n   )\":");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.pos().line == 4);
        CHECK(e.pos().column == 4);
    }
    CHECK_THROWS_WITH_AS(parse_script("deff a \"x=1\":"), doctest::Contains("unknown command"), ParseError);
    CHECK_THROWS_WITH_AS(parse_script("def a \"x=1:"), doctest::Contains("unbalanced quotes"), ParseError);
    CHECK_THROWS_AS(parse_script("reg p msd_x \"0*\":"), ParseError);
    CHECK_THROWS_AS(parse_script("def a \"x=1\""), ParseError);
}

TEST_CASE("scripts") {
    auto s = parse_script(R"s(# comment
def even2 "Ek n=2*k":
eval satz22 n "$rss(?msd_4 k,n)";
reg link42 msd_4 msd_2 "([0,0]|[1,1])*":
)s");
    REQUIRE(s.commands.size() == 3);
    CHECK(s.commands[0].kind == Command::Kind::Def);
    CHECK(s.commands[0].pos.line == 2);
    CHECK(s.commands[1].vars == std::vector<std::string>{"n"});
    CHECK(s.commands[2].kind == Command::Kind::Reg);
    CHECK(s.commands[2].systems == std::vector<std::string>{"msd_4", "msd_2"});
    CHECK(s.commands[2].body == "([0,0]|[1,1])*");
}

TEST_CASE("compiling arithmetic") {
    Environment env;
    auto even = compile("Ek n=2*k", env);
    for (std::uint64_t n = 0; n < 200; ++n) CHECK(holds_at(even, {{"n", n}}) == (n % 2 == 0));
    CHECK(even.num_states() == 2);

    // integer semantics for subtraction inside a comparison
    auto sub = compile("s>=n-1", env);
    CHECK(holds_at(sub, {{"s", 0}, {"n", 0}}));
    CHECK(holds_at(sub, {{"s", 0}, {"n", 1}}));
    CHECK_FALSE(holds_at(sub, {{"s", 0}, {"n", 2}}));

    auto tracks = compile("?msd_4 y<x & z=3", env);
    CHECK(tracks.signature()[0].name == "x");
    CHECK(tracks.signature()[2].system == NumberSystem{4});

    CHECK(decide("Ax,y x+y=y+x", env).truth);
    CHECK(decide("?msd_3 Ex 2*x=5", env).truth == false);
    auto d = decide("An n<5", env);
    CHECK_FALSE(d.truth);
    REQUIRE(d.counterexample);
    CHECK(*d.counterexample == "n=5");
}

TEST_CASE("compile errors") {
    const auto& env = corpus_environment();
    CHECK_THROWS_AS(compile("$nothing(n)", env), UndefinedName);
    CHECK_THROWS_AS(compile("$rss(n)", env), ArityMismatch);
    CHECK_THROWS_AS(compile("?msd_4 n=1 & (?msd_2 n=2)", env), BaseMismatch);
    CHECK_THROWS_AS(compile("RS4[n]=@1 & (?msd_2 n=2)", env), BaseMismatch);
    CHECK_THROWS(compile("x*y=1", env));
    CHECK_THROWS_AS(decide("x=1", env), CompileError);
}

TEST_CASE("relations and automata with output in formulas") {
    const auto& env = corpus_environment();
    const auto& S = sums();
    auto a = compile("RS4[n]=@-1", env);
    for (std::uint64_t n = 0; n < 1024; ++n)
        CHECK(holds_at(a, {{"n", n}}) == (std::popcount(n & (n >> 1)) % 2 == 1));

    // compound arguments: s(n+1) = s(n) + 1
    auto up = compile("?msd_4 Ex $rss(n,x) & $rss(n+1,x+1)", env);
    for (std::uint64_t n = 0; n < 1024; ++n) CHECK(holds_at(up, {{"n", n}}) == (S.s[n + 1] == S.s[n] + 1));

    auto sat = compile("?msd_4 $rss(n,k) & (?msd_2 k=5)", env);
    for (std::uint64_t n = 0; n < 1024; ++n) CHECK(holds_at(sat, {{"n", n}, {"k", 5}}) == (S.s[n] == 5));
}

TEST_CASE("soundness of the corpus definitions below 512") {
    const auto& env = corpus_environment();
    const auto& S = sums();
    const std::uint64_t N = 512;
    std::map<std::int64_t, std::uint64_t> last_s, first_s, first_t;
    for (std::uint64_t n = 0; n < S.s.size(); ++n) {
        last_s[S.s[n]] = n;
        first_s.emplace(S.s[n], n);
        first_t.emplace(S.t[n], n);
    }
    auto omega = [&](std::uint64_t k) -> std::optional<std::uint64_t> {
        if (k == 0 || !last_s.count(static_cast<std::int64_t>(k))) return std::nullopt;
        return last_s[static_cast<std::int64_t>(k)];
    };

    auto sweep2 = [&](const std::string& name, const std::function<bool(std::uint64_t, std::uint64_t)>& truth) {
        const auto& a = env.relation(name);
        REQUIRE(a.signature().size() == 2);
        for (std::uint64_t u = 0; u < N; ++u)
            for (std::uint64_t v = 0; v < N; ++v) {
                std::uint64_t vals[] = {u, v};
                if (a.accepts_values(vals) != truth(u, v)) {
                    FAIL_CHECK(name << " disagrees at (" << u << ", " << v << ")");
                    return;
                }
            }
    };

    // omega, alpha, alphap: tracks (k, n)
    sweep2("omega", [&](auto k, auto n) { return omega(k) == n; });
    sweep2("alpha", [&](auto k, auto n) { return k > 0 && first_s.count(static_cast<std::int64_t>(k)) && first_s[static_cast<std::int64_t>(k)] == n; });
    sweep2("alphap", [&](auto k, auto n) { return first_t.count(static_cast<std::int64_t>(k)) && first_t[static_cast<std::int64_t>(k)] == n; });
    // omegadiff (n, x): x = omega(n+1) - omega(n)
    sweep2("omegadiff", [&](auto n, auto x) {
        auto a = omega(n), b = omega(n + 1);
        return a && b && *b - *a == x;
    });
    sweep2("omegas", [&](auto n, auto x) { return omega(static_cast<std::uint64_t>(S.s[n])) == x; });
    sweep2("maps", [&](auto n, auto y) { return m_of(static_cast<std::uint64_t>(S.s[n])) == y; });
    sweep2("mapt", [&](auto n, auto y) { return m_of(static_cast<std::uint64_t>(S.t[n])) == y; });
    sweep2("rss", [&](auto n, auto y) { return static_cast<std::int64_t>(y) == S.s[n]; });
    sweep2("rst", [&](auto n, auto y) { return static_cast<std::int64_t>(y) == S.t[n]; });

    const auto& ex = env.relation("exceptional_set");
    const auto& even2 = env.relation("even2");
    for (std::uint64_t n = 0; n < N; ++n) {
        CHECK(holds_at(ex, {{"n", n}}) == (m_of(static_cast<std::uint64_t>(S.s[n])) > 2 * n));
        CHECK(holds_at(even2, {{"n", n}}) == (n % 2 == 0));
    }

    // three tracks: the endpoint relations below 128, the curve for n < 512
    // (s(n), t(n) < 64 there, so every accepted tuple is inside the box)
    const auto& le = env.relation("left_endpoint");
    const auto& re = env.relation("right_endpoint");
    for (std::uint64_t x = 0; x < 128; ++x)
        for (std::uint64_t y = 0; y < 128; ++y)
            for (std::uint64_t z = 0; z < 128; ++z) {
                std::uint64_t v[] = {x, y, z};
                REQUIRE(le.accepts_values(v) == (3 * z + 8 * y == 8 * x));
                REQUIRE(re.accepts_values(v) == (3 * z + 2 * y == 8 * x));
            }
    const auto& curve = env.relation("curve");
    REQUIRE(curve.signature()[0].name == "n");
    for (std::uint64_t n = 0; n < N; ++n)
        for (std::uint64_t x = 0; x < 64; ++x)
            for (std::uint64_t y = 0; y < 64; ++y) {
                std::uint64_t v[] = {n, x, y};
                REQUIRE(curve.accepts_values(v) ==
                        (static_cast<std::int64_t>(x) == S.s[n] && static_cast<std::int64_t>(y) == S.t[n]));
            }
}

TEST_CASE("quantifier duality and connective identities") {
    Environment env;
    std::mt19937 rng(23);
    for (int round = 0; round < 40; ++round) {
        std::string p, q;
        random_formula(rng, env, &p);
        random_formula(rng, env, &q);
        auto same = [&](const std::string& lhs, const std::string& rhs) {
            auto a = compile(lhs, env), b = compile(rhs, env);
            if (!language_equal(a, b)) FAIL_CHECK(lhs << "  vs  " << rhs);
        };
        same("Ax (" + p + ")", "~Ex ~(" + p + ")");
        same("Ex,y (" + p + ")", "~Ax,y ~(" + p + ")");
        same("~((" + p + ") | (" + q + "))", "~(" + p + ") & ~(" + q + ")");
        same("~((" + p + ") & (" + q + "))", "~(" + p + ") | ~(" + q + ")");
        same("(" + p + ") => (" + q + ")", "~(" + p + ") | (" + q + ")");
        same("(" + p + ") <=> (" + q + ")", "((" + p + ") => (" + q + ")) & ((" + q + ") => (" + p + "))");
        same("~~(" + p + ")", p);

        auto body = compile(p, env);
        if (body.signature().index_of("x")) {
            auto all = compile("Ax (" + p + ")", env);
            auto dual = complement(project(complement(body), "x"));
            CHECK(language_equal(all, dual));
        }
    }
}

TEST_CASE("script execution") {
    Environment env = corpus_environment();
    auto results = run_script(R"s(
eval test1 "?msd_4 An,x,y ($rss(n,x) & $rss(n+1,y)) => (?msd_2 x=y+1 | y=x+1)":
def twice "?msd_4 Ex $rss(n,x) & (?msd_2 y=2*x)":
eval counted n "$rss(?msd_4 k,n)":
eval wrong "An n<3":
)s", env);
    REQUIRE(results.size() == 4);
    CHECK(results[0].truth == true);
    CHECK(results[1].ok);
    CHECK(env.contains("twice"));
    CHECK_FALSE(env.contains("test1"));
    CHECK(results[2].rank);
    CHECK(env.contains("counted"));
    CHECK(results[3].truth == false);
    CHECK(results[3].counterexample == "n=3");
    CHECK(describe(results[0]).find("TRUE") != std::string::npos);

    auto again = run_script("def twice \"n=1\":", env);
    CHECK_FALSE(again[0].ok);
    CHECK(run_script("def twice \"n=1\":", env, RunOptions{false, true})[0].ok);

    auto stop = run_script("def a \"$nope(x)\":\ndef b \"x=1\":", env);
    CHECK(stop.size() == 1);
    CHECK(stop[0].error.find("nope") != std::string::npos);
    auto go_on = run_script("def a \"$nope(x)\":\ndef b \"x=1\":", env, RunOptions{true, false});
    CHECK(go_on.size() == 2);
    CHECK(go_on[1].ok);
}

TEST_CASE("environment persistence") {
    Environment env = corpus_environment();
    auto dir = std::filesystem::temp_directory_path() / "autoseq_env_test";
    std::filesystem::remove_all(dir);
    env.save(dir);
    Environment back;
    back.load(dir);
    for (const auto& name : env.names()) {
        REQUIRE(back.contains(name));
        const auto& e = env.entry(name).value;
        if (auto a = std::get_if<Automaton>(&e)) CHECK(back.relation(name) == *a);
        if (auto d = std::get_if<OutputAutomaton>(&e)) CHECK(back.dfao(name) == *d);
    }
    std::filesystem::remove_all(dir);

    CHECK_THROWS_AS(env.relation("missing"), UndefinedName);
    CHECK_THROWS_AS(env.relation("RS4"), std::invalid_argument);
    Environment copy = env;
    CHECK_THROWS_AS(copy.define("rss", Automaton::constant(TrackSignature{}, true)), Redefinition);
}

TEST_CASE("bootstrap is deterministic") {
    auto a = bootstrap_corpus(corpus_dir());
    auto b = bootstrap_corpus(corpus_dir());
    REQUIRE(a.names() == b.names());
    for (const auto& name : a.names()) {
        const auto& e = a.entry(name).value;
        if (auto x = std::get_if<Automaton>(&e)) CHECK(to_text(*x) == to_text(b.relation(name)));
    }
    CHECK(a.is_verified("rss"));
    CHECK(a.is_verified("rst"));
}
