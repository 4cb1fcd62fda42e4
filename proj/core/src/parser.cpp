#include "deltalf/parser.hpp"

namespace deltalf {

namespace {

enum class Hint { Family, Object };

class TermParser {
public:
    TermParser(const std::vector<Token>& toks, std::size_t& pos, const SymbolLookup& symbols, ParseOptions opts,
               std::map<std::string, bool>& implicit)
        : toks_(toks), pos_(pos), symbols_(symbols), opts_(opts), implicit_(implicit) {}

    std::vector<std::string> scope;

    Term term(Hint h) {
        const Token& t = peek();
        if (is_kw(t, "fun") || is_kw(t, "sfun")) {
            bool rel = t.text == "sfun";
            advance();
            std::string name = binder();
            expect(Tok::Colon);
            Term dom = term(Hint::Family);
            expect(Tok::FatArrow);
            Term body = under(name, [&] { return term(Hint::Object); });
            return rel ? mk_rel_lam(name, dom, body) : mk_lam(name, dom, body);
        }
        if (t.kind == Tok::LParen && peek(1).kind == Tok::Ident && !is_reserved(peek(1).text) &&
            peek(2).kind == Tok::Colon) {
            advance();
            std::string name = binder();
            expect(Tok::Colon);
            Term dom = term(Hint::Family);
            expect(Tok::RParen);
            expect(Tok::Arrow);
            Term body = under(name, [&] { return term(h); });
            return mk_pi(name, dom, body);
        }
        Term lhs = union_level(h);
        if (accept(Tok::Arrow)) return mk_arrow(lhs, term(h));
        if (accept(Tok::RelArrow)) return mk_rel_arrow(lhs, term(Hint::Family));
        return lhs;
    }

    const Token& peek(std::size_t k = 0) const {
        std::size_t i = std::min(pos_ + k, toks_.size() - 1);
        return toks_[i];
    }
    void advance() {
        if (pos_ + 1 < toks_.size()) ++pos_;
    }
    bool accept(Tok k) {
        if (peek().kind != k) return false;
        advance();
        return true;
    }
    const Token& expect(Tok k) {
        if (peek().kind != k)
            throw ParseError(std::string("expected ") + to_string(k) + ", found " + describe(peek()), peek().span,
                             {to_string(k)});
        const Token& t = peek();
        advance();
        return t;
    }
    static bool is_kw(const Token& t, const char* kw) { return t.kind == Tok::Ident && t.text == kw; }
    static std::string describe(const Token& t) {
        if (t.kind == Tok::End) return "end of input";
        return "'" + t.text + "'";
    }

private:
    template <class F>
    Term under(const std::string& name, F f) {
        scope.push_back(name);
        Term r = f();
        scope.pop_back();
        return r;
    }

    std::string binder() {
        const Token& t = peek();
        if (t.kind != Tok::Ident || is_reserved(t.text))
            throw ParseError("expected a binder name, found " + describe(t), t.span, {"identifier"});
        if (symbols_ && symbols_(t.text))
            throw ParseError("binder '" + t.text + "' shadows a declared constant", t.span);
        advance();
        return t.text;
    }

    Term union_level(Hint h) {
        Term lhs = inter_level(h);
        while (accept(Tok::Bar)) lhs = mk_union(lhs, inter_level(Hint::Family));
        return lhs;
    }

    Term inter_level(Hint h) {
        Term lhs = app_level(h);
        while (accept(Tok::Amp)) lhs = mk_inter(lhs, app_level(Hint::Family));
        return lhs;
    }

    bool starts_argument(const Token& t) const {
        switch (t.kind) {
        case Tok::LParen:
        case Tok::LAngle:
        case Tok::LBrack: return true;
        case Tok::Ident:
            if (!is_reserved(t.text)) return true;
            return t.text == "proj_l" || t.text == "proj_r" || t.text == "inj_l" || t.text == "inj_r";
        default: return false;
        }
    }

    Term app_level(Hint h) {
        Term head = prefix_level(h);
        for (;;) {
            if (accept(Tok::Dollar)) {
                head = mk_rel_app(head, prefix_level(Hint::Object));
            } else if (starts_argument(peek())) {
                head = mk_app(head, prefix_level(Hint::Object));
            } else {
                return head;
            }
        }
    }

    Term prefix_level(Hint h) {
        const Token& t = peek();
        if (is_kw(t, "proj_l") || is_kw(t, "proj_r")) {
            bool left = t.text == "proj_l";
            advance();
            Term s = prefix_level(Hint::Object);
            return left ? mk_proj_l(s) : mk_proj_r(s);
        }
        if (is_kw(t, "inj_l") || is_kw(t, "inj_r")) {
            bool left = t.text == "inj_l";
            advance();
            expect(Tok::LBrack);
            Term other = term(Hint::Family);
            expect(Tok::RBrack);
            Term s = prefix_level(Hint::Object);
            return left ? mk_inj_l(other, s) : mk_inj_r(other, s);
        }
        return atom(h);
    }

    Term atom(Hint h) {
        const Token& t = peek();
        switch (t.kind) {
        case Tok::Ident: {
            if (t.text == "Type") {
                advance();
                return mk_type();
            }
            if (is_reserved(t.text)) break;
            advance();
            return resolve(t, h);
        }
        case Tok::LParen: {
            advance();
            Term inner = term(h);
            expect(Tok::RParen);
            return inner;
        }
        case Tok::LAngle:
        case Tok::LBrack: {
            bool pair = t.kind == Tok::LAngle;
            advance();
            Term l = term(Hint::Object);
            expect(Tok::Comma);
            Term r = term(Hint::Object);
            expect(pair ? Tok::RAngle : Tok::RBrack);
            return pair ? mk_pair(l, r) : mk_copair(l, r);
        }
        default: break;
        }
        throw ParseError("expected a term, found " + describe(t), t.span, {"identifier", "'('", "'<'", "'['"});
    }

    Term resolve(const Token& t, Hint h) {
        int n = static_cast<int>(scope.size());
        for (int i = n - 1; i >= 0; --i)
            if (scope[i] == t.text) return mk_var(n - 1 - i);
        std::optional<bool> fam = symbols_ ? symbols_(t.text) : std::nullopt;
        if (!fam) {
            if (auto it = implicit_.find(t.text); it != implicit_.end()) fam = it->second;
        }
        if (!fam && opts_.permissive) {
            fam = h == Hint::Family;
            implicit_[t.text] = *fam;
        }
        if (!fam) throw ParseError("unknown identifier '" + t.text + "'", t.span);
        return *fam ? mk_fam_const(t.text) : mk_obj_const(t.text);
    }

    const std::vector<Token>& toks_;
    std::size_t& pos_;
    const SymbolLookup& symbols_;
    ParseOptions opts_;
    std::map<std::string, bool>& implicit_;
};

SourceSpan join(SourceSpan a, const SourceSpan& b) {
    a.end = b.end;
    return a;
}

bool declares_family(const Term& classifier_or_body, bool is_body) {
    try {
        Category c = classify(classifier_or_body);
        return is_body ? c == Category::Family : c == Category::Kind;
    } catch (const SyntaxError&) {
        return false;
    }
}

}  // namespace

const char* to_string(Command::Kind k) {
    switch (k) {
    case Command::Kind::Axiom: return "Axiom";
    case Command::Kind::Definition: return "Definition";
    case Command::Kind::Check: return "Check";
    case Command::Kind::Eval: return "Eval";
    case Command::Kind::Essence: return "Essence";
    case Command::Kind::Subtype: return "Subtype";
    case Command::Kind::Load: return "Load";
    case Command::Kind::Set: return "Set";
    case Command::Kind::Quit: return "Quit";
    }
    return "?";
}

SymbolLookup lookup_in(const Signature& sig) {
    return [&sig](const std::string& name) -> std::optional<bool> {
        if (const Entry* e = sig.find(name)) return e->is_family;
        return std::nullopt;
    };
}

Parser::Parser(std::string_view src, std::string file, ParseOptions opts) : toks_(tokenize(src, file)), opts_(opts) {}

bool Parser::done() const { return toks_[pos_].kind == Tok::End; }

Command Parser::next(const SymbolLookup& symbols) {
    Command c;
    TermParser p(toks_, pos_, symbols, opts_, c.implicit);
    const Token& head = p.peek();
    c.span = head.span;
    if (head.kind != Tok::Ident)
        throw ParseError("expected a command, found " + TermParser::describe(head), head.span, {"command"});
    std::string kw = head.text;
    p.advance();
    auto name = [&] {
        const Token& t = p.peek();
        if (t.kind != Tok::Ident || is_reserved(t.text))
            throw ParseError("expected a name, found " + TermParser::describe(t), t.span, {"identifier"});
        p.advance();
        return t.text;
    };
    if (kw == "Axiom") {
        c.kind = Command::Kind::Axiom;
        c.name = name();
        p.expect(Tok::Colon);
        c.classifier = p.term(Hint::Family);
    } else if (kw == "Definition") {
        c.kind = Command::Kind::Definition;
        c.name = name();
        if (p.accept(Tok::Colon)) c.classifier = p.term(Hint::Family);
        p.expect(Tok::Assign);
        c.body = p.term(Hint::Object);
    } else if (kw == "Check" || kw == "Eval" || kw == "Essence") {
        c.kind = kw == "Check" ? Command::Kind::Check : kw == "Eval" ? Command::Kind::Eval : Command::Kind::Essence;
        c.body = p.term(Hint::Object);
    } else if (kw == "Subtype") {
        c.kind = Command::Kind::Subtype;
        c.body = p.term(Hint::Family);
        p.expect(Tok::Leq);
        c.rhs = p.term(Hint::Family);
    } else if (kw == "Load") {
        c.kind = Command::Kind::Load;
        c.name = p.expect(Tok::String).text;
    } else if (kw == "Set") {
        c.kind = Command::Kind::Set;
        c.name = name();
        const Token& n = p.expect(Tok::Number);
        try {
            c.value = std::stoll(n.text);
        } catch (const std::out_of_range&) {
            throw ParseError("number out of range", n.span);
        }
    } else if (kw == "Quit") {
        c.kind = Command::Kind::Quit;
    } else {
        throw ParseError("unknown command '" + kw + "'", head.span,
                         {"Axiom", "Definition", "Check", "Eval", "Essence", "Subtype", "Load", "Set", "Quit"});
    }
    c.span = join(c.span, p.expect(Tok::Dot).span);
    return c;
}

std::vector<Command> parse_program(std::string_view src, const std::string& file, const Signature* base) {
    std::map<std::string, bool> declared;
    SymbolLookup symbols = [&](const std::string& name) -> std::optional<bool> {
        if (auto it = declared.find(name); it != declared.end()) return it->second;
        if (base)
            if (const Entry* e = base->find(name)) return e->is_family;
        return std::nullopt;
    };
    Parser parser(src, file);
    std::vector<Command> out;
    while (!parser.done()) {
        Command c = parser.next(symbols);
        if (c.kind == Command::Kind::Axiom) declared[c.name] = declares_family(c.classifier, false);
        if (c.kind == Command::Kind::Definition) declared[c.name] = declares_family(c.body, true);
        out.push_back(std::move(c));
    }
    return out;
}

Term parse_term(std::string_view src, const SymbolLookup& symbols, const std::vector<std::string>& ctx,
                ParseOptions opts) {
    std::vector<Token> toks = tokenize(src);
    std::size_t pos = 0;
    std::map<std::string, bool> implicit;
    TermParser p(toks, pos, symbols, opts, implicit);
    p.scope = ctx;
    Term t = p.term(Hint::Object);
    if (p.peek().kind != Tok::End)
        throw ParseError("unexpected " + TermParser::describe(p.peek()) + " after term", p.peek().span);
    return t;
}

Term parse_term(std::string_view src, const Signature& sig, const std::vector<std::string>& ctx) {
    return parse_term(src, lookup_in(sig), ctx);
}

}  // namespace deltalf
