#include <gtest/gtest.h>

#include <json.hpp>

#include "deltalf/lexer.hpp"
#include "deltalf/metacheck.hpp"
#include "deltalf/parser.hpp"
#include "deltalf/printer.hpp"
#include "deltalf/session.hpp"
#include "support.hpp"

using namespace deltalf;
using namespace testing_support;

namespace {

std::vector<Outcome> run(Session& s, const std::string& src) { return s.run_source(src, "<test>"); }

Signature letters() {
    return load("Axiom a : Type. Axiom b : Type. Axiom c : Type. Axiom d : Type."
                "Axiom f : a -> a -> a. Axiom e : a.");
}

TEST(Parse, Commands) {
    auto cmds = parse_program("Axiom sigma : Type.");
    ASSERT_EQ(cmds.size(), 1U);
    EXPECT_EQ(cmds[0].kind, Command::Kind::Axiom);
    EXPECT_EQ(cmds[0].name, "sigma");
    EXPECT_TRUE(alpha_eq(cmds[0].classifier, mk_type()));

    Signature sig = load("Axiom sigma : Type. Axiom tau : Type.");
    cmds = parse_program("Check fun x : sigma & (sigma -> tau) => (proj_r x) (proj_l x).", "<t>", &sig);
    ASSERT_EQ(cmds.size(), 1U);
    EXPECT_EQ(cmds[0].kind, Command::Kind::Check);
    Term sigma = mk_fam_const("sigma"), tau = mk_fam_const("tau");
    Term expected = mk_lam("x", mk_inter(sigma, mk_arrow(sigma, tau)),
                           mk_app(mk_proj_r(mk_var(0)), mk_proj_l(mk_var(0))));
    EXPECT_TRUE(alpha_eq(cmds[0].body, expected));

    cmds = parse_program("Check <fun x : sigma => x, fun x : tau => x>.", "<t>", &sig);
    EXPECT_TRUE(alpha_eq(cmds[0].body, mk_pair(mk_lam("x", sigma, mk_var(0)), mk_lam("x", tau, mk_var(0)))));

    cmds = parse_program("Subtype sigma | tau <= tau | sigma. Set fuel 7. Load \"x.dlf\". Quit.", "<t>", &sig);
    ASSERT_EQ(cmds.size(), 4U);
    EXPECT_EQ(cmds[0].kind, Command::Kind::Subtype);
    EXPECT_EQ(cmds[1].kind, Command::Kind::Set);
    EXPECT_EQ(cmds[1].name, "fuel");
    EXPECT_EQ(cmds[1].value, 7);
    EXPECT_EQ(cmds[2].kind, Command::Kind::Load);
    EXPECT_EQ(cmds[2].name, "x.dlf");
    EXPECT_EQ(cmds[3].kind, Command::Kind::Quit);
}

TEST(Parse, Precedence) {
    Signature sig = letters();
    Term a = mk_fam_const("a"), b = mk_fam_const("b"), c = mk_fam_const("c"), d = mk_fam_const("d");
    EXPECT_TRUE(alpha_eq(term(sig, "a -> b | c & d"), mk_arrow(a, mk_union(b, mk_inter(c, d)))));
    EXPECT_TRUE(alpha_eq(term(sig, "a & b | c"), mk_union(mk_inter(a, b), c)));
    EXPECT_TRUE(alpha_eq(term(sig, "a >-> b -> c"), mk_rel_arrow(a, mk_arrow(b, c))));
    EXPECT_TRUE(alpha_eq(term(sig, "a -> b >-> c"), mk_arrow(a, mk_rel_arrow(b, c))));
    EXPECT_TRUE(alpha_eq(term(sig, "(x : a) -> b"), mk_pi("x", a, b)));
    Term f = mk_obj_const("f"), e = mk_obj_const("e");
    EXPECT_TRUE(alpha_eq(term(sig, "f e e"), mk_app(mk_app(f, e), e)));
    EXPECT_TRUE(alpha_eq(term(sig, "f $ e $ e"), mk_rel_app(mk_rel_app(f, e), e)));
    EXPECT_TRUE(alpha_eq(term(sig, "f e $ e"), mk_rel_app(mk_app(f, e), e)));
    EXPECT_TRUE(alpha_eq(term(sig, "proj_l f e"), mk_app(mk_proj_l(f), e)));
    EXPECT_TRUE(alpha_eq(term(sig, "inj_l [b] f e"), mk_app(mk_inj_l(b, f), e)));
    EXPECT_TRUE(alpha_eq(term(sig, "proj_r proj_l f"), mk_proj_r(mk_proj_l(f))));
    EXPECT_TRUE(alpha_eq(term(sig, "fun x : a => f x x"),
                         mk_lam("x", a, mk_app(mk_app(f, mk_var(0)), mk_var(0)))));
}

TEST(Parse, Errors) {
    Signature sig = letters();
    EXPECT_THROW(term(sig, "unknown"), ParseError);
    EXPECT_THROW(term(sig, "fun e : a => e"), ParseError);  // binder shadows a constant
    EXPECT_THROW(term(sig, "(x : a, b) -> c"), ParseError);
    EXPECT_THROW(parse_program("Axiom s : Type"), ParseError);
    EXPECT_THROW(parse_program("(* unterminated"), ParseError);
    try {
        parse_program("Axiom s : Type.\nAxiom t : .");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.span.line, 2);
        EXPECT_FALSE(e.expected.empty());
    }
}

TEST(Lexer, NestedComments) {
    auto toks = tokenize("(* a (* b *) c *) Type (**) .");
    ASSERT_EQ(toks.size(), 3U);
    EXPECT_EQ(toks[0].kind, Tok::Ident);
    EXPECT_EQ(toks[1].kind, Tok::Dot);
    EXPECT_EQ(toks[2].kind, Tok::End);
}

TEST(Print, Tokens) {
    Signature sig = letters();
    EXPECT_EQ(print(mk_type()), "Type");
    EXPECT_EQ(print(mk_rel_arrow(mk_fam_const("sigma"), mk_fam_const("tau"))), "sigma >-> tau");
    EXPECT_EQ(print(term(sig, "a & (b | c) -> d")), "a & (b | c) -> d");
    EXPECT_EQ(print(term(sig, "(a -> b) -> c")), "(a -> b) -> c");
    EXPECT_EQ(print(term(sig, "<fun x : a => x, fun y : b => y>")), "<fun x : a => x, fun y : b => y>");
    EXPECT_EQ(print(term(sig, "(f e) $ (proj_l e)")), "f e $ (proj_l e)");
    EXPECT_EQ(print_path({0, 1}), "0.1");
}

void expect_round_trip(const Signature& sig, const Term& t, const std::vector<std::string>& ctx = {}) {
    std::string text = print(t, ctx);
    Term back;
    try {
        back = parse_term(text, sig, ctx);
    } catch (const ParseError& e) {
        FAIL() << text << ": " << e.what();
    }
    EXPECT_TRUE(alpha_eq(back, t)) << text << " reparsed as " << print(back, ctx);
    // binder hints survive too, so a second print is stable
    EXPECT_EQ(print(back, ctx), text);
}

TEST(RoundTrip, Corpus) {
    int n = 0;
    for (auto& f : corpus_files()) {
        Signature full = load_file(corpus(f));
        Signature prefix;
        for (auto& e : full.entries()) {
            expect_round_trip(prefix, e.classifier);
            if (e.body) expect_round_trip(prefix, *e.body);
            prefix.push(e);
            ++n;
        }
    }
    EXPECT_GT(n, 50);
}

TEST(RoundTrip, FuzzedTerms) {
    int n = 0;
    for (std::uint64_t seed = 1; n < 1000; ++seed) {
        auto f = fuzz_well_typed(seed, 30);
        if (!f) continue;
        ++n;
        expect_round_trip(f->sig, f->term, f->ctx.names());
        expect_round_trip(f->sig, f->classifier, f->ctx.names());
    }
}

TEST(RoundTrip, RawTermsWithCapturePressure) {
    // RawGen names every binder x or y, which forces renaming on print
    Signature sig = raw_signature();
    RawGen gen(77);
    for (int i = 0; i < 1000; ++i) {
        expect_round_trip(sig, gen.object(5, 2), {"x", "y"});
        expect_round_trip(sig, gen.family(4));
    }
}

TEST(Repl, Examples) {
    Session s;
    auto out = run(s, "Axiom sigma : Type. Axiom tau : Type. Essence <fun x:sigma=>x, fun x:tau=>x>.");
    ASSERT_EQ(out.size(), 3U);
    EXPECT_EQ(out[2].output, "fun x => x");

    out = run(s, "Axiom c : sigma. Axiom d : tau. Eval proj_l <c, d>.");
    ASSERT_EQ(out.size(), 3U);
    EXPECT_EQ(out[2].status, Outcome::Status::Kernel);
    EXPECT_EQ(out[2].rule, "InterI");

    out = run(s, "Check c. Eval (fun x : sigma => x) c.");
    EXPECT_EQ(out[0].output, "sigma");
    EXPECT_EQ(out[1].output, "c");

    out = run(s, "Subtype sigma & tau <= tau. Subtype sigma <= tau.");
    EXPECT_TRUE(out[0].ok());
    EXPECT_EQ(out[0].output, "sfun x : sigma & tau => proj_r x");
    EXPECT_TRUE(out[1].ok());
    EXPECT_EQ(out[1].output, "not derivable");
}

TEST(Repl, StateUnchangedOnFailure) {
    Session s;
    run(s, "Axiom s : Type. Axiom c : s.");
    std::size_t before = s.sig.size();
    auto out = run(s, "Definition bad : s := <c, fun x : s => x>.");
    EXPECT_FALSE(out[0].ok());
    EXPECT_EQ(s.sig.size(), before);
    out = run(s, "Axiom c : s.");
    EXPECT_FALSE(out[0].ok());
    EXPECT_EQ(s.sig.size(), before);
}

TEST(Repl, SetFuel) {
    Session s;
    auto out = run(s, "Axiom s : Type. Axiom c : s. Set fuel 1. Eval (fun x : s => x) ((fun x : s => x) c).");
    EXPECT_EQ(out.back().status, Outcome::Status::Fuel);
    EXPECT_EQ(s.settings.fuel, 1);
}

TEST(Repl, LoadHarrop) {
    Session s;
    auto out = run(s, "Load \"" + corpus("harrop.dlf") + "\".");
    for (auto& o : out) EXPECT_TRUE(o.ok()) << render(o);
    EXPECT_TRUE(s.sig.contains("bchain_impl_and2"));
}

TEST(Repl, LoadEqualsInlineCommands) {
    for (auto& f : corpus_files()) {
        Session loaded;
        auto lo = run(loaded, "Load \"" + corpus(f) + "\".");
        Session inline_;
        auto io = inline_.run_source(slurp(corpus(f)), corpus(f));
        ASSERT_EQ(loaded.sig.size(), inline_.sig.size()) << f;
        for (std::size_t i = 0; i < loaded.sig.size(); ++i) {
            auto& x = loaded.sig.entries()[i];
            auto& y = inline_.sig.entries()[i];
            EXPECT_EQ(x.name, y.name);
            EXPECT_TRUE(alpha_eq(x.classifier, y.classifier));
            EXPECT_EQ(x.body.has_value(), y.body.has_value());
        }
        ASSERT_EQ(lo.size(), io.size()) << f;
        for (std::size_t i = 0; i < lo.size(); ++i) EXPECT_EQ(lo[i].output, io[i].output);
    }
}

TEST(Outcome, JsonKeys) {
    Session s;
    auto out = run(s, "Axiom s : Type. Axiom t : Type. Axiom c : s. Check (fun x : t => x) c.");
    const Outcome& o = out.back();
    ASSERT_EQ(o.status, Outcome::Status::Kernel);
    auto j = nlohmann::json::parse(to_json(o));
    for (auto key : {"rule", "span", "message", "expected", "actual"}) EXPECT_TRUE(j.contains(key)) << key;
    EXPECT_EQ(j["rule"], o.rule);
    EXPECT_EQ(j["span"]["line"], 1);
    EXPECT_EQ(exit_code(o.status), 1);
    EXPECT_EQ(exit_code(Outcome::Status::Parse), 2);
    EXPECT_EQ(exit_code(Outcome::Status::Fuel), 3);
}

}  // namespace
