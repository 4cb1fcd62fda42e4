// deltalf: batch checker, REPL, evaluator and property harness.

#include <unistd.h>

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "deltalf/metacheck.hpp"
#include "deltalf/session.hpp"

using namespace deltalf;

namespace {

struct Flags {
    std::int64_t fuel = kDefaultFuel;
    std::int64_t essence_fuel = kDefaultEssenceFuel;
    bool json = false;
    bool trace = false;
    bool emit_coercion = false;
};

Session make_session(const Flags& f, bool permissive = false) {
    Session s(SessionOptions{f.trace, f.emit_coercion, permissive});
    s.settings.fuel = f.fuel;
    s.settings.essence_fuel = f.essence_fuel;
    s.trace_sink = [](const std::string& line) { std::cout << "  " << line << "\n"; };
    return s;
}

// Prints outcomes and folds them into an exit code: the first failure wins.
int report(const std::vector<Outcome>& outcomes, const Flags& f, int code = 0) {
    for (auto& o : outcomes) {
        if (f.json && !o.ok()) {
            std::cout << to_json(o) << "\n";
        } else {
            std::string text = render(o);
            if (!text.empty()) (o.ok() ? std::cout : std::cerr) << text << "\n";
        }
        if (code == 0 && !o.ok()) code = exit_code(o.status);
    }
    return code;
}

int run_check(const std::vector<std::string>& files, const Flags& f) {
    int code = 0;
    for (auto& file : files) {
        Session s = make_session(f);
        code = report(s.run_file(file), f, code);
    }
    return code;
}

int run_eval(const std::string& expr, const Flags& f) {
    Session s = make_session(f, true);
    return report(s.run_source("Eval " + expr + ".", "<expr>"), f);
}

bool complete(const std::string& buf) {
    auto end = buf.find_last_not_of(" \t\r\n");
    return end != std::string::npos && buf[end] == '.';
}

int run_repl(const Flags& f) {
    Session s = make_session(f);
    bool tty = isatty(STDIN_FILENO);
    std::string buf, line;
    if (tty) std::cout << "deltalf> " << std::flush;
    while (std::getline(std::cin, line)) {
        buf += line + "\n";
        if (!complete(buf)) {
            if (tty) std::cout << "   ...> " << std::flush;
            continue;
        }
        auto outcomes = s.run_source(buf, "<repl>");
        buf.clear();
        report(outcomes, f);
        if (!outcomes.empty() && outcomes.back().quit) return 0;
        if (tty) std::cout << "deltalf> " << std::flush;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dependently typed logical framework with strong intersection and union"};
    app.require_subcommand(1);
    Flags f;
    app.add_option("--fuel", f.fuel, "Reduction step budget")->check(CLI::PositiveNumber);
    app.add_option("--essence-fuel", f.essence_fuel, "Step budget for essence comparison")->check(CLI::PositiveNumber);
    app.add_flag("--json", f.json, "Report errors as JSON lines");
    app.add_flag("--trace", f.trace, "Print each reduction step of Eval");
    app.add_flag("--emit-coercion", f.emit_coercion, "Print Subtype coercions as definitions");

    std::vector<std::string> files;
    auto* check = app.add_subcommand("check", "Check .dlf files");
    check->add_option("files", files, "Input files")->required();

    std::string expr;
    auto* eval = app.add_subcommand("eval", "Normalize an expression");
    eval->add_option("-e,--expr", expr, "Expression")->required();

    auto* repl = app.add_subcommand("repl", "Interactive session");

    int seeds = 1000, size = 30;
    std::uint64_t first_seed = 1;
    auto* meta = app.add_subcommand("metacheck", "Run the property suites on fuzzed terms");
    meta->add_option("--seeds", seeds, "Number of samples");
    meta->add_option("--size", size, "Term size bound");
    meta->add_option("--first-seed", first_seed, "Seed of the first sample");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (*check) return run_check(files, f);
    if (*eval) return run_eval(expr, f);
    if (*repl) return run_repl(f);
    if (*meta) {
        MetacheckReport r = run_metacheck(seeds, size, first_seed);
        std::cout << r.summary();
        return r.all_passed() ? 0 : 1;
    }
    return 0;
}
