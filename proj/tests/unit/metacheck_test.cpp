#include <gtest/gtest.h>

#include "deltalf/essence.hpp"
#include "deltalf/metacheck.hpp"
#include "support.hpp"

using namespace deltalf;
using namespace testing_support;

namespace {

TEST(EraseType, Examples) {
    Signature sig = load_file(corpus("harrop.dlf"));
    EXPECT_EQ(to_string(erase_type(mk_type())), "⊤");
    EXPECT_EQ(to_string(erase_type(term(sig, "(p : pi) -> gamma"))), to_string(erase_type(term(sig, "pi -> gamma"))));
    EXPECT_EQ(to_string(erase_type(term(sig, "alpha >-> gamma0"))), "alpha -> gamma0");
    Context ctx = context(sig, {{"p", "pi"}, {"g", "gamma"}});
    EXPECT_EQ(to_string(erase_type(term(sig, "solve p g", ctx))), "solve");
    EXPECT_EQ(to_string(erase_type(term(sig, "solve"))), "solve");
    EXPECT_EQ(to_string(erase_type(term(sig, "pi -> gamma -> Type"))), "pi -> gamma -> ⊤");
    EXPECT_EQ(to_string(erase_type(term(sig, "alpha & pi0 | gamma0"))), "alpha & pi0 | gamma0");
}

TEST(EraseObj, Examples) {
    Signature sig = raw_signature();
    Context ctx = context(sig, {{"z", "s & t"}});
    EXPECT_TRUE(pure_eq(erase_obj(term(sig, "proj_l z", ctx)), erase_obj(term(sig, "z", ctx))));
    EXPECT_TRUE(pure_eq(erase_obj(mk_obj_const("c")), p_const("c")));
    // (fun y => fun x => x) s, with y fresh for the body
    PureTerm lam = erase_obj(term(sig, "fun x : s => x"));
    EXPECT_TRUE(pure_eq(lam, p_app(p_lam("y", p_lam("x", p_var(0))), p_const("s"))));
    PureTerm lam_free = erase_obj(term(sig, "fun x : s => z", ctx));
    EXPECT_TRUE(pure_eq(lam_free, p_app(p_lam("y", p_lam("x", p_var(2))), p_const("s"))));
    // injections wrap in a vacuous redex over the other branch
    EXPECT_TRUE(pure_eq(erase_obj(term(sig, "inj_l [t] c")), p_app(p_lam("x", p_const("c")), p_const("t"))));
    EXPECT_TRUE(pure_eq(erase_obj(term(sig, "s & t")),
                        p_app(p_app(p_const(kProductConstant), p_const("s")), p_const("t"))));
    EXPECT_TRUE(pure_eq(erase_obj(term(sig, "s -> t")),
                        p_app(p_app(p_const("c_{s}"), p_const("s")), p_lam("x", p_const("t")))));
    EXPECT_EQ(erased_pi_constant(s_arrow(s_atom("s"), s_atom("t"))), "c_{s -> t}");
}

TEST(Simulation, StepCounts) {
    Signature sig = raw_signature();
    auto steps = [&](const char* src) {
        Term d = term(sig, src);
        auto r = one_step(d);
        EXPECT_EQ(r.size(), 1U) << src;
        return simulation_steps(d, r.at(0).term);
    };
    EXPECT_EQ(steps("(fun x : s => x) c"), 2);
    EXPECT_EQ(steps("(sfun x : s => x) $ c"), 2);
    EXPECT_EQ(steps("proj_l <c, c>"), 0);
    EXPECT_EQ(steps("proj_r <c, c>"), 0);
    EXPECT_EQ(steps("[fun y : s => y, fun y : s => y] (inj_l [s] c)"), 1);
    EXPECT_TRUE(simulation_check(term(sig, "(fun x : s => x) c"), mk_obj_const("c")));
    EXPECT_FALSE(simulation_check(term(sig, "proj_l <c, c>"), mk_obj_const("c")));
    EXPECT_FALSE(simulation_steps(mk_obj_const("c"), mk_obj_const("d")).has_value());
}

TEST(Simulation, PureReductsMatchEnumeration) {
    PureTerm I = p_lam("x", p_var(0));
    PureTerm m = p_app(I, p_app(I, p_const("c")));
    auto r = pure_beta_reducts(m);
    // the outer and the inner redex both yield I c
    ASSERT_EQ(r.size(), 1U);
    EXPECT_TRUE(pure_eq(r[0], p_app(I, p_const("c"))));
    PureTerm two = p_app(p_app(I, p_const("c")), p_app(I, p_const("d")));
    EXPECT_EQ(pure_beta_reducts(two).size(), 2U);
}

TEST(Fuzzer, SizeZeroIsALookup) {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        auto f = fuzz_well_typed(seed, 0);
        if (!f) continue;
        EXPECT_TRUE(f->term->tag == Tag::Var || f->term->tag == Tag::ObjConst) << show(f->term, f->ctx);
    }
}

TEST(Fuzzer, Deterministic) {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        auto x = fuzz_well_typed(seed, 30);
        auto y = fuzz_well_typed(seed, 30);
        ASSERT_EQ(x.has_value(), y.has_value());
        if (x) {
            EXPECT_TRUE(alpha_eq(x->term, y->term));
        }
    }
}

TEST(Fuzzer, SamplesAreWellTypedAndVaried) {
    int accepted = 0, with_pairs = 0, with_copairs = 0, with_relevant = 0, reducible = 0;
    std::function<bool(const Term&, Tag)> has = [&](const Term& t, Tag tag) {
        return t->tag == tag || (t->a && has(t->a, tag)) || (t->b && has(t->b, tag));
    };
    for (std::uint64_t seed = 1; accepted < 1000; ++seed) {
        auto f = fuzz_well_typed(seed, 30);
        ASSERT_LT(seed, 2000U);
        if (!f) continue;
        ++accepted;
        EXPECT_LE(f->term->size, 30);
        EXPECT_NO_THROW(check_context(f->sig, f->ctx));
        EXPECT_NO_THROW(check_type(f->sig, f->ctx, f->term, f->classifier)) << show(f->term, f->ctx);
        with_pairs += has(f->term, Tag::Pair);
        with_copairs += has(f->term, Tag::CoPair);
        with_relevant += has(f->term, Tag::RelLam);
        reducible += !one_step(f->term).empty();
    }
    EXPECT_GT(with_pairs, 100);
    EXPECT_GT(with_copairs, 50);
    EXPECT_GT(with_relevant, 50);
    EXPECT_GT(reducible, 300);
}

TEST(Shrink, KeepsPredicateAndShrinks) {
    Signature sig = raw_signature();
    Term big = term(sig, "(fun x : s => <proj_l <x, x>, x>) ((fun y : s => y) c)");
    auto has_proj = [](const Term& t) {
        std::function<bool(const Term&)> go = [&](const Term& u) {
            return u->tag == Tag::ProjL || (u->a && go(u->a)) || (u->b && go(u->b));
        };
        return go(t);
    };
    Term small = shrink(big, has_proj);
    EXPECT_TRUE(has_proj(small));
    EXPECT_LT(small->size, big->size);
    // the projection mentions x, so its binder has to stay
    EXPECT_TRUE(alpha_eq(small, term(sig, "fun x : s => proj_l x"))) << show(small);
}

TEST(Metacheck, SmallRun) {
    MetacheckReport r = run_metacheck(60, 30, 1);
    EXPECT_EQ(r.generated, 60);
    EXPECT_EQ(r.accepted + r.skipped, r.generated);
    EXPECT_GT(r.accepted, 50);
    EXPECT_EQ(r.subject_reduction.failed, 0);
    EXPECT_EQ(r.normalization.failed, 0);
    EXPECT_EQ(r.unicity.failed, 0);
    EXPECT_EQ(r.simulation.failed, 0);
    EXPECT_EQ(r.unicity.passed, r.accepted);
    EXPECT_NE(r.summary().find("subject reduction"), std::string::npos);
    EXPECT_FALSE(r.simulation_steps.empty());
}

}  // namespace
