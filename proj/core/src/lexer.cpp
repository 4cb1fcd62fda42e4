#include "deltalf/lexer.hpp"

#include <array>
#include <cctype>

namespace deltalf {

namespace {

constexpr std::array kReserved = {
    "Type",   "fun",   "sfun",   "proj_l",  "proj_r", "inj_l", "inj_r",       "Axiom",
    "Definition", "Check", "Eval", "Essence", "Subtype", "Load", "Set", "Quit",
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

class Lexer {
public:
    Lexer(std::string_view src, std::string file) : src_(src), file_(std::move(file)) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip();
            SourceSpan at = here();
            if (pos_ >= src_.size()) {
                out.push_back({Tok::End, "", at});
                return out;
            }
            out.push_back(next(at));
        }
    }

private:
    SourceSpan here() const { return {file_, pos_, pos_, line_, col_}; }

    void bump() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    bool at(std::string_view s) const { return src_.substr(pos_, s.size()) == s; }

    void skip() {
        for (;;) {
            while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) bump();
            if (!at("(*")) return;
            SourceSpan open = here();
            int depth = 0;
            do {
                if (pos_ >= src_.size()) throw ParseError("unterminated comment", open);
                if (at("(*")) {
                    ++depth;
                    bump();
                    bump();
                } else if (at("*)")) {
                    --depth;
                    bump();
                    bump();
                } else {
                    bump();
                }
            } while (depth > 0);
        }
    }

    Token finish(Tok kind, SourceSpan span, std::size_t len) {
        for (std::size_t i = 0; i < len; ++i) bump();
        span.end = pos_;
        return {kind, std::string(src_.substr(span.begin, len)), span};
    }

    Token next(SourceSpan span) {
        char c = src_[pos_];
        if (ident_start(c)) {
            std::size_t n = 1;
            while (pos_ + n < src_.size() && ident_char(src_[pos_ + n])) ++n;
            return finish(Tok::Ident, span, n);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t n = 1;
            while (pos_ + n < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_ + n]))) ++n;
            return finish(Tok::Number, span, n);
        }
        if (c == '"') {
            std::size_t n = 1;
            while (pos_ + n < src_.size() && src_[pos_ + n] != '"' && src_[pos_ + n] != '\n') ++n;
            if (pos_ + n >= src_.size() || src_[pos_ + n] != '"') throw ParseError("unterminated string", span);
            Token t = finish(Tok::String, span, n + 1);
            t.text = t.text.substr(1, t.text.size() - 2);
            return t;
        }
        if (at(">->")) return finish(Tok::RelArrow, span, 3);
        if (at("->")) return finish(Tok::Arrow, span, 2);
        if (at("=>")) return finish(Tok::FatArrow, span, 2);
        if (at(":=")) return finish(Tok::Assign, span, 2);
        if (at("<=")) return finish(Tok::Leq, span, 2);
        switch (c) {
        case '(': return finish(Tok::LParen, span, 1);
        case ')': return finish(Tok::RParen, span, 1);
        case '<': return finish(Tok::LAngle, span, 1);
        case '>': return finish(Tok::RAngle, span, 1);
        case '[': return finish(Tok::LBrack, span, 1);
        case ']': return finish(Tok::RBrack, span, 1);
        case ',': return finish(Tok::Comma, span, 1);
        case ':': return finish(Tok::Colon, span, 1);
        case '.': return finish(Tok::Dot, span, 1);
        case '&': return finish(Tok::Amp, span, 1);
        case '|': return finish(Tok::Bar, span, 1);
        case '$': return finish(Tok::Dollar, span, 1);
        default: break;
        }
        span.end = pos_ + 1;
        throw ParseError(std::string("unexpected character '") + c + "'", span);
    }

    std::string_view src_;
    std::string file_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

}  // namespace

std::string to_string(const SourceSpan& s) {
    return s.file + ":" + std::to_string(s.line) + ":" + std::to_string(s.column);
}

const char* to_string(Tok t) {
    switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Number: return "number";
    case Tok::String: return "string";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LAngle: return "'<'";
    case Tok::RAngle: return "'>'";
    case Tok::LBrack: return "'['";
    case Tok::RBrack: return "']'";
    case Tok::Comma: return "','";
    case Tok::Colon: return "':'";
    case Tok::Assign: return "':='";
    case Tok::Dot: return "'.'";
    case Tok::Arrow: return "'->'";
    case Tok::RelArrow: return "'>->'";
    case Tok::FatArrow: return "'=>'";
    case Tok::Amp: return "'&'";
    case Tok::Bar: return "'|'";
    case Tok::Dollar: return "'$'";
    case Tok::Leq: return "'<='";
    case Tok::End: return "end of input";
    }
    return "?";
}

ParseError::ParseError(const std::string& message_, SourceSpan span_, std::vector<std::string> expected_)
    : std::runtime_error(to_string(span_) + ": " + message_),
      message(message_),
      span(std::move(span_)),
      expected(std::move(expected_)) {}

bool is_reserved(const std::string& s) {
    for (const char* k : kReserved)
        if (s == k) return true;
    return false;
}

bool is_identifier(const std::string& s) {
    if (s.empty() || !ident_start(s[0])) return false;
    for (char c : s)
        if (!ident_char(c)) return false;
    return true;
}

std::vector<Token> tokenize(std::string_view src, const std::string& file) { return Lexer(src, file).run(); }

}  // namespace deltalf
