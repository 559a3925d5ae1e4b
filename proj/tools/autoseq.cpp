#include "autoseq/automaton_io.hpp"
#include "autoseq/bounds.hpp"
#include "autoseq/corpus.hpp"
#include "autoseq/curve.hpp"
#include "autoseq/suite.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

using namespace autoseq;

namespace {

struct EnvOptions {
    std::string env_dir;
    bool bare = false;
};

Environment open_environment(const EnvOptions& o) {
    Environment env = o.bare ? Environment{} : corpus_environment();
    if (!o.env_dir.empty()) env.load(o.env_dir);
    return env;
}

void add_env_options(CLI::App* cmd, EnvOptions& o) {
    cmd->add_option("--env-dir", o.env_dir, "Directory of saved automata, loaded before and updated after");
    cmd->add_flag("--bare", o.bare, "Start from an empty environment instead of the corpus");
}

int report_results(const std::vector<CommandResult>& results) {
    int status = 0;
    for (const auto& r : results) {
        std::cout << describe(r) << "\n";
        if (!r.ok) status = 1;
    }
    return status;
}

nlohmann::json to_json(const SuiteReport& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : report.checks) {
        nlohmann::json outcomes = nlohmann::json::array();
        for (const auto& o : c.outcomes)
            outcomes.push_back({{"expected", o.expected}, {"actual", o.actual}, {"passed", o.passed}});
        nlohmann::json commands = nlohmann::json::array();
        for (const auto& r : c.commands) commands.push_back({{"name", r.name}, {"seconds", r.seconds}, {"summary", describe(r)}});
        checks.push_back({{"id", c.id},
                          {"anchor", c.anchor},
                          {"passed", c.passed},
                          {"seconds", c.seconds},
                          {"max_command_seconds", c.max_command_seconds},
                          {"outcomes", outcomes},
                          {"commands", commands}});
    }
    return {{"checks", checks},
            {"passed", report.passed_count()},
            {"total", report.checks.size()},
            {"seconds", report.seconds}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Automata-based prover for Rudin-Shapiro sums"};
    app.require_subcommand(1);

    EnvOptions env_opts;
    std::string script_path;
    RunOptions run_opts;
    auto* run = app.add_subcommand("run", "Run a script of def/eval/reg commands");
    run->add_option("script", script_path, "Script file")->required();
    run->add_flag("--continue-on-error", run_opts.continue_on_error);
    run->add_flag("--overwrite", run_opts.overwrite, "Allow redefinition of existing names");
    add_env_options(run, env_opts);

    std::string query;
    auto* eval = app.add_subcommand("eval", "Decide a sentence or compile a formula");
    eval->add_option("query", query, "Formula")->required();
    add_env_options(eval, env_opts);

    std::string def_name, def_body;
    auto* def = app.add_subcommand("def", "Define a relation and print its automaton");
    def->add_option("name", def_name)->required();
    def->add_option("formula", def_body)->required();
    def->add_flag("--overwrite", run_opts.overwrite, "Allow redefinition of existing names");
    add_env_options(def, env_opts);

    std::string filter = "*", report_kind = "text", manifest;
    auto* suite = app.add_subcommand("suite", "Run the theorem suite");
    suite->add_option("--filter", filter, "Glob on check ids");
    suite->add_option("--report", report_kind, "text or json")->check(CLI::IsMember({"text", "json"}));
    suite->add_option("--manifest", manifest, "Manifest file (default: the corpus suite)");

    std::uint64_t bound_to = std::uint64_t{1} << 20;
    auto* bounds = app.add_subcommand("bounds", "Integer sweep of the inequalities for s, t and m");
    bounds->add_option("--to", bound_to, "Check 0 <= n < N")->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 28));

    std::uint64_t points = 1024;
    std::string svg_path, csv_path;
    bool check = false;
    auto* curve = app.add_subcommand("curve", "Points (s(n), t(n)) of the plane-filling curve");
    curve->add_option("--points", points)->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 26));
    curve->add_option("--svg", svg_path, "Write an SVG polyline");
    curve->add_option("--csv", csv_path, "Write n,x,y rows");
    curve->add_flag("--check", check, "Check segments, visits and steps");

    std::uint64_t seq_to = 16;
    auto* seq = app.add_subcommand("seq", "Print a, s, t, a', s', t' as CSV");
    seq->add_option("--to", seq_to, "Values for 0 <= n < N")->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 26));

    std::string seq_name = "s", guess_out;
    std::uint64_t sample = std::uint64_t{1} << 14;
    std::size_t cap = 64;
    auto* guess = app.add_subcommand("guess", "Guess a synchronized automaton and verify it by induction");
    guess->add_option("sequence", seq_name, "s, t, sprime or one_minus_tprime")
        ->required()
        ->check(CLI::IsMember({"s", "t", "sprime", "one_minus_tprime"}));
    guess->add_option("bound", sample, "Sample bound");
    guess->add_option("cap", cap, "State cap");
    guess->add_option("--out", guess_out, "Write the automaton to this file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) {
            Environment env = open_environment(env_opts);
            auto results = run_script(read_file(script_path), env, run_opts);
            int status = report_results(results);
            if (!env_opts.env_dir.empty()) env.save(env_opts.env_dir);
            return status;
        }
        if (*eval) {
            Environment env = open_environment(env_opts);
            Command cmd;
            cmd.kind = Command::Kind::Eval;
            cmd.name = "query";
            cmd.body = query;
            cmd.formula = parse_formula(query);
            RunOptions o;
            o.overwrite = true;
            auto r = run_command(cmd, env, o);
            std::cout << describe(r) << "\n";
            if (r.ok && !r.truth) write_automaton(std::cout, env.relation("query"));
            return r.ok ? 0 : 1;
        }
        if (*def) {
            Environment env = open_environment(env_opts);
            Command cmd;
            cmd.kind = Command::Kind::Def;
            cmd.name = def_name;
            cmd.body = def_body;
            cmd.formula = parse_formula(def_body);
            auto r = run_command(cmd, env, run_opts);
            std::cout << describe(r) << "\n";
            if (!r.ok) return 1;
            write_automaton(std::cout, env.relation(def_name));
            if (!env_opts.env_dir.empty()) env.save(env_opts.env_dir);
            return 0;
        }
        if (*suite) {
            auto checks = load_manifest(manifest.empty() ? corpus_dir() / "suite.manifest" : std::filesystem::path(manifest));
            auto report = run_suite(checks, corpus_environment(), filter);
            if (report_kind == "json")
                std::cout << to_json(report).dump(2) << "\n";
            else
                write_text_report(std::cout, report);
            return report.all_passed() ? 0 : 1;
        }
        if (*bounds) {
            auto report = verify_bounds(bound_to);
            write_bounds_report(std::cout, report);
            return report.ok() ? 0 : 1;
        }
        if (*curve) {
            auto pts = curve_points(points);
            auto open = [](const std::string& path) {
                std::ofstream out(path, std::ios::binary);
                if (!out) throw std::runtime_error("cannot write " + path);
                return out;
            };
            if (!svg_path.empty()) {
                auto out = open(svg_path);
                write_svg(out, pts);
            }
            if (!csv_path.empty()) {
                auto out = open(csv_path);
                write_csv(out, pts);
            }
            if (svg_path.empty() && csv_path.empty() && !check) write_csv(std::cout, pts);
            if (check) {
                auto c = check_curve(points);
                std::cout << (c.ok() ? "curve check passed" : "curve check failed: " + c.failure.value_or("")) << "\n";
                return c.ok() ? 0 : 1;
            }
            return 0;
        }
        if (*seq) {
            SequenceTable table(seq_to);
            std::cout << "n,a,s,t,a_prime,s_prime,t_prime\n";
            for (std::size_t n = 0; n < table.size(); ++n)
                std::cout << n << ',' << table.a[n] << ',' << table.s[n] << ',' << table.t[n] << ',' << table.ap[n] << ','
                          << table.sp[n] << ',' << table.tp[n] << '\n';
            return 0;
        }
        if (*guess) {
            Automaton a = guess_sync(named_oracle(seq_name), sample, cap);
            SyncSpec spec = seq_name == "s"        ? spec_s()
                            : seq_name == "t"      ? spec_t()
                            : seq_name == "sprime" ? spec_sprime()
                                                   : spec_one_minus_tprime();
            auto report = verify_sync(a, spec);
            if (guess_out.empty()) {
                write_automaton(std::cout, a);
            } else {
                std::ofstream out(guess_out);
                write_automaton(out, a);
            }
            std::cout << "# " << a.num_states() << " states from n < " << sample << "\n";
            for (const auto& s : report.steps)
                std::cout << "# " << s.name << ": " << (s.truth ? "TRUE" : "FALSE")
                          << (s.counterexample ? " [counterexample " + *s.counterexample + "]" : "") << "\n";
            std::cout << "# " << (report.ok ? "verified" : "NOT verified") << "\n";
            return report.ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
