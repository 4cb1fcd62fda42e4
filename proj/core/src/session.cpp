#include "deltalf/session.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "deltalf/essence.hpp"
#include "deltalf/printer.hpp"
#include "deltalf/reduction.hpp"
#include "deltalf/subtyping.hpp"

namespace deltalf {

namespace {

Outcome success(std::string text) {
    Outcome o;
    o.output = std::move(text);
    return o;
}

Outcome failure(Outcome::Status s, std::string rule, std::string message, std::optional<SourceSpan> span) {
    Outcome o;
    o.status = s;
    o.rule = std::move(rule);
    o.message = std::move(message);
    o.span = std::move(span);
    return o;
}

Outcome from_kernel(const KernelError& e, const SourceSpan& span) {
    bool fuel = e.verdict && e.verdict->kind == EssenceVerdict::BudgetExhausted;
    Outcome o = failure(fuel ? Outcome::Status::Fuel : Outcome::Status::Kernel, e.rule, e.message, span);
    if (!e.path.empty()) o.message += " at " + print_path(e.path);
    if (e.verdict) o.message += std::string(" (essences ") + to_string(e.verdict->kind) + ")";
    o.expected = e.expected;
    o.actual = e.actual;
    return o;
}

}  // namespace

int exit_code(Outcome::Status s) { return static_cast<int>(s); }

std::string to_json(const Outcome& o) {
    nlohmann::json j;
    j["rule"] = o.rule;
    if (o.span) {
        j["span"] = {{"file", o.span->file},   {"begin", o.span->begin}, {"end", o.span->end},
                     {"line", o.span->line},   {"column", o.span->column}};
    } else {
        j["span"] = nullptr;
    }
    j["message"] = o.message;
    j["expected"] = o.expected;
    j["actual"] = o.actual;
    if (o.ok()) j["output"] = o.output;
    return j.dump();
}

std::string render(const Outcome& o) {
    if (o.ok()) return o.output;
    std::string s = o.span ? to_string(*o.span) + ": " : std::string();
    s += "error";
    if (!o.rule.empty()) s += " (" + o.rule + ")";
    s += ": " + o.message;
    if (!o.expected.empty()) s += "\n  expected: " + o.expected;
    if (!o.actual.empty()) s += "\n  actual:   " + o.actual;
    return s;
}

std::vector<Outcome> Session::step(const Command& c) {
    if (c.kind != Command::Kind::Load) return {run(c)};
    std::filesystem::path p = c.name;
    if (p.is_relative() && !c.span.file.empty() && c.span.file != "<input>")
        p = std::filesystem::path(c.span.file).parent_path() / p;
    std::string key = p.lexically_normal().string();
    if (std::find(loading_.begin(), loading_.end(), key) != loading_.end())
        return {failure(Outcome::Status::Parse, "Load", "cyclic Load of " + key, c.span)};
    loading_.push_back(key);
    std::vector<Outcome> out = run_file(key);
    loading_.pop_back();
    return out;
}

std::vector<Outcome> Session::run_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return {failure(Outcome::Status::Parse, "Load", "cannot open " + path, std::nullopt)};
    std::ostringstream buf;
    buf << in.rdbuf();
    return run_source(buf.str(), path);
}

std::vector<Outcome> Session::run_source(std::string_view src, const std::string& file) {
    std::vector<Outcome> out;
    std::optional<Parser> parser;
    try {
        parser.emplace(src, file, ParseOptions{opts_.permissive});
    } catch (const ParseError& e) {
        out.push_back(failure(Outcome::Status::Parse, "Parse", e.message, e.span));
        return out;
    }
    SymbolLookup symbols = lookup_in(sig);
    while (!parser->done()) {
        Command c;
        try {
            c = parser->next(symbols);
        } catch (const ParseError& e) {
            out.push_back(failure(Outcome::Status::Parse, "Parse", e.message, e.span));
            return out;
        }
        for (auto& o : step(c)) {
            bool quit = o.quit;
            out.push_back(std::move(o));
            if (quit) return out;
        }
    }
    return out;
}

Outcome Session::run(const Command& c) {
    // Untyped evaluation is only sound when every name was declared.
    bool typed = c.implicit.empty();
    try {
        switch (c.kind) {
        case Command::Kind::Axiom:
        case Command::Kind::Definition: {
            Entry e{c.name, c.classifier, false, std::nullopt, std::nullopt};
            if (c.kind == Command::Kind::Definition) e.body = c.body;
            add_checked(sig, std::move(e), settings);
            const Entry& added = sig.entries().back();
            return success(added.name + " : " + print(added.classifier));
        }
        case Command::Kind::Check: {
            TypedResult r = judge(sig, {}, c.body, settings);
            return success(r.classifier ? print(r.classifier) : "kind");
        }
        case Command::Kind::Eval: {
            if (typed) judge(sig, {}, c.body, settings);
            TraceFn trace;
            if (opts_.trace && trace_sink) {
                trace = [this](const Step& s) {
                    trace_sink(std::string(to_string(s.redex.rule)) + " at " + print_path(s.redex.path) + ": " +
                               print(s.term));
                };
            }
            return success(print(normalize(unfold(sig, c.body), settings.fuel, trace)));
        }
        case Command::Kind::Essence: {
            if (classify(c.body) != Category::Object)
                return failure(Outcome::Status::Kernel, "Category", "Essence expects an object", c.span);
            if (typed) judge(sig, {}, c.body, settings);
            return success(print_pure(essence(unfold(sig, c.body))));
        }
        case Command::Kind::Subtype: {
            auto s = simple_type_of(sig, c.body);
            auto t = simple_type_of(sig, c.rhs);
            if (!s || !t)
                return failure(Outcome::Status::Kernel, "Subtype",
                               "both sides must be built from atoms of kind Type with ->, & and |", c.span);
            auto d = decide_sub(sig, *s, *t);
            if (!d) return success("not derivable");
            Term term = inhabit_relevant(*d);
            Term ty = mk_rel_arrow(c.body, c.rhs);
            check_type(sig, {}, term, ty, settings);
            if (!opts_.emit_coercion) return success(print(term));
            std::string name;
            do {
                name = "coerce_" + std::to_string(++coercions_);
            } while (sig.contains(name));
            return success("Definition " + name + " : " + print(ty) + " := " + print(term) + ".");
        }
        case Command::Kind::Set: {
            if (c.value <= 0)
                return failure(Outcome::Status::Kernel, "Set", "fuel must be positive", c.span);
            if (c.name == "fuel") settings.fuel = c.value;
            else if (c.name == "essence_fuel") settings.essence_fuel = c.value;
            else return failure(Outcome::Status::Kernel, "Set", "unknown setting " + c.name, c.span);
            return success(c.name + " = " + std::to_string(c.value));
        }
        case Command::Kind::Quit: {
            Outcome o = success("");
            o.quit = true;
            return o;
        }
        case Command::Kind::Load: break;
        }
    } catch (const KernelError& e) {
        return from_kernel(e, c.span);
    } catch (const OutOfFuel& e) {
        return failure(Outcome::Status::Fuel, "Fuel", e.what(), c.span);
    } catch (const SyntaxError& e) {
        return failure(Outcome::Status::Kernel, "Category", e.what(), c.span);
    }
    return failure(Outcome::Status::Kernel, "", "unsupported command", c.span);
}

}  // namespace deltalf
