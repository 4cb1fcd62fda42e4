#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "deltalf/lexer.hpp"
#include "deltalf/signature.hpp"
#include "deltalf/term.hpp"

namespace deltalf {

struct Command {
    enum class Kind { Axiom, Definition, Check, Eval, Essence, Subtype, Load, Set, Quit };
    Kind kind = Kind::Quit;
    // Axiom/Definition name, Set key or Load path
    std::string name;
    Term classifier;
    // Definition body, the subject of Check/Eval/Essence, or the left side of Subtype
    Term body;
    Term rhs;
    std::int64_t value = 0;
    SourceSpan span;
    // Names that permissive parsing invented, with is_family
    std::map<std::string, bool> implicit;
};

const char* to_string(Command::Kind k);

/// is_family for a declared constant, nullopt for an unknown name.
using SymbolLookup = std::function<std::optional<bool>(const std::string&)>;

SymbolLookup lookup_in(const Signature& sig);

struct ParseOptions {
    // Unknown identifiers become constants, family or object by position.
    bool permissive = false;
};

/// Command-at-a-time parser. Each command is resolved against the symbols
/// current when it is parsed, so a driver can interleave checking.
class Parser {
public:
    Parser(std::string_view src, std::string file = "<input>", ParseOptions opts = {});

    bool done() const;
    Command next(const SymbolLookup& symbols);

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    ParseOptions opts_;
};

/// Parse a whole file, tracking declarations as they appear. `base` seeds
/// the symbol table.
std::vector<Command> parse_program(std::string_view src, const std::string& file = "<input>",
                                   const Signature* base = nullptr);

/// A single term; `ctx` names the free variables, outermost first.
Term parse_term(std::string_view src, const SymbolLookup& symbols, const std::vector<std::string>& ctx = {},
                ParseOptions opts = {});
Term parse_term(std::string_view src, const Signature& sig, const std::vector<std::string>& ctx = {});

}  // namespace deltalf
