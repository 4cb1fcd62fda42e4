#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "deltalf/lexer.hpp"
#include "deltalf/parser.hpp"
#include "deltalf/signature.hpp"
#include "deltalf/typing.hpp"

namespace deltalf {

/// Result of one command. `status` orders failures for exit codes.
struct Outcome {
    enum class Status { Ok = 0, Kernel = 1, Parse = 2, Fuel = 3 };
    Status status = Status::Ok;
    std::string output;
    std::string rule;
    std::string message;
    std::optional<SourceSpan> span;
    std::string expected;
    std::string actual;
    bool quit = false;

    bool ok() const { return status == Status::Ok; }
};

int exit_code(Outcome::Status s);

/// One line of {rule, span, message, expected, actual}.
std::string to_json(const Outcome& o);
/// Human-readable rendering; empty for a silent success.
std::string render(const Outcome& o);

struct SessionOptions {
    bool trace = false;
    bool emit_coercion = false;
    bool permissive = false;
};

class Session {
public:
    explicit Session(SessionOptions opts = {}) : opts_(opts) {}

    Signature sig;
    Settings settings;
    // Receives one line per reduction step when tracing.
    std::function<void(const std::string&)> trace_sink;

    /// Executes one command; the signature is unchanged on failure. Load
    /// yields the outcomes of the loaded file.
    std::vector<Outcome> step(const Command& c);

    /// Parses and runs `src` command by command; stops at a parse error or Quit.
    std::vector<Outcome> run_source(std::string_view src, const std::string& file);
    std::vector<Outcome> run_file(const std::string& path);

private:
    Outcome run(const Command& c);

    SessionOptions opts_;
    std::vector<std::string> loading_;
    int coercions_ = 0;
};

}  // namespace deltalf
