#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace deltalf {

struct SourceSpan {
    std::string file;
    std::size_t begin = 0;
    std::size_t end = 0;
    int line = 1;
    int column = 1;
};

std::string to_string(const SourceSpan& s);

enum class Tok {
    Ident,
    Number,
    String,
    LParen,
    RParen,
    LAngle,
    RAngle,
    LBrack,
    RBrack,
    Comma,
    Colon,
    Assign,  // :=
    Dot,
    Arrow,     // ->
    RelArrow,  // >->
    FatArrow,  // =>
    Amp,
    Bar,
    Dollar,
    Leq,  // <=
    End,
};

const char* to_string(Tok t);

struct Token {
    Tok kind;
    std::string text;
    SourceSpan span;
};

struct ParseError : std::runtime_error {
    ParseError(const std::string& message, SourceSpan span, std::vector<std::string> expected = {});
    std::string message;
    SourceSpan span;
    std::vector<std::string> expected;
};

/// Keywords of the term language and the command language.
bool is_reserved(const std::string& s);
bool is_identifier(const std::string& s);

/// Whole-input tokenization; the last token is always Tok::End.
std::vector<Token> tokenize(std::string_view src, const std::string& file = "<input>");

}  // namespace deltalf
