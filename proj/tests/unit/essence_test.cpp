#include <gtest/gtest.h>

#include <functional>

#include "deltalf/essence.hpp"
#include "deltalf/metacheck.hpp"
#include "support.hpp"

using namespace deltalf;
using namespace testing_support;

namespace {

// Independent pure-term reduction oracle: plain recursive substitution and
// exhaustive enumeration of one-step reducts.
PureTerm o_shift(const PureTerm& m, int d, int c) {
    switch (m->tag) {
    case PTag::Var: return p_var(m->index >= c ? m->index + d : m->index);
    case PTag::Const: return m;
    case PTag::Lam: return p_lam(m->name, o_shift(m->a, d, c + 1));
    case PTag::App: return p_app(o_shift(m->a, d, c), o_shift(m->b, d, c));
    }
    return m;
}

PureTerm o_open(const PureTerm& m, const PureTerm& u, int depth) {
    switch (m->tag) {
    case PTag::Var:
        if (m->index == depth) return o_shift(u, depth, 0);
        return p_var(m->index > depth ? m->index - 1 : m->index);
    case PTag::Const: return m;
    case PTag::Lam: return p_lam(m->name, o_open(m->a, u, depth + 1));
    case PTag::App: return p_app(o_open(m->a, u, depth), o_open(m->b, u, depth));
    }
    return m;
}

bool o_free(const PureTerm& m, int i) {
    switch (m->tag) {
    case PTag::Var: return m->index == i;
    case PTag::Const: return false;
    case PTag::Lam: return o_free(m->a, i + 1);
    case PTag::App: return o_free(m->a, i) || o_free(m->b, i);
    }
    return false;
}

std::vector<PureTerm> o_steps(const PureTerm& m, bool eta) {
    std::vector<PureTerm> out;
    if (!eta && m->tag == PTag::App && m->a->tag == PTag::Lam) out.push_back(o_open(m->a->a, m->b, 0));
    if (eta && m->tag == PTag::Lam && m->a->tag == PTag::App && m->a->b->tag == PTag::Var &&
        m->a->b->index == 0 && !o_free(m->a->a, 0))
        out.push_back(o_shift(m->a->a, -1, 0));
    if (m->tag == PTag::Lam)
        for (auto& r : o_steps(m->a, eta)) out.push_back(p_lam(m->name, r));
    if (m->tag == PTag::App) {
        for (auto& r : o_steps(m->a, eta)) out.push_back(p_app(r, m->b));
        for (auto& r : o_steps(m->b, eta)) out.push_back(p_app(m->a, r));
    }
    return out;
}

/// Normal forms reachable by any sequence of steps (terminating inputs only).
std::vector<PureTerm> o_normal_forms(const PureTerm& m, bool eta) {
    auto next = o_steps(m, eta);
    if (next.empty()) return {m};
    std::vector<PureTerm> out;
    for (auto& r : next)
        for (auto& n : o_normal_forms(r, eta)) {
            bool seen = false;
            for (auto& o : out) seen = seen || pure_eq(o, n);
            if (!seen) out.push_back(n);
        }
    return out;
}

const PureTerm I = p_lam("x", p_var(0));
const PureTerm omega_half = p_lam("x", p_app(p_var(0), p_var(0)));
const PureTerm Omega = p_app(omega_half, omega_half);

TEST(Essence, PolymorphicIdentity) {
    Signature sig = load_file(corpus("polymorphic_identity.dlf"));
    PureTerm e = essence(term(sig, "<fun x : sigma => x, fun x : tau => x>"));
    EXPECT_TRUE(pure_eq(e, I));
    EXPECT_EQ(print_pure(e), "fun x => x");
}

TEST(Essence, ProjectionErases) {
    Signature sig = raw_signature();
    Context ctx = context(sig, {{"x", "s & t"}});
    EXPECT_TRUE(pure_eq(essence(term(sig, "proj_l x", ctx)), p_var(0)));
    EXPECT_TRUE(pure_eq(essence(term(sig, "inj_r [t] c", ctx)), p_const("c")));
}

TEST(Essence, RelevantApplicationErasesHead) {
    Signature sig = load_file(corpus("delta_omega.dlf"));
    EXPECT_TRUE(pure_eq(essence(term(sig, "c1 $ c2 $ delta_omega")), essence(term(sig, "delta_omega"))));
}

TEST(Essence, DeltaOmegaIsOmega) {
    Signature sig = load_file(corpus("delta_omega.dlf"));
    Term d = term(sig, "(fun x : sigma => c1 $ x x) (c2 $ (fun x : sigma => c1 $ x x))");
    EXPECT_TRUE(pure_eq(essence(d), Omega));
    EXPECT_EQ(print_pure(essence(d)), "(fun x => x x) (fun x => x x)");
}

TEST(Essence, RejectsFamilies) {
    EXPECT_THROW(essence(mk_inter(mk_fam_const("s"), mk_fam_const("t"))), SyntaxError);
}

TEST(Eta, Examples) {
    PureTerm f = p_const("f");
    EXPECT_TRUE(pure_eq(eta_normalize(p_lam("x", p_app(f, p_var(0)))), f));
    EXPECT_TRUE(pure_eq(eta_normalize(omega_half), omega_half));
    PureTerm m = p_lam("x", p_app(I, p_var(0)));
    auto oracle = o_normal_forms(m, true);
    ASSERT_EQ(oracle.size(), 1U);
    EXPECT_TRUE(pure_eq(oracle[0], I));
    EXPECT_TRUE(pure_eq(eta_normalize(m), oracle[0]));
}

TEST(Beta, Examples) {
    auto r = beta_normalize_bounded(p_app(I, p_const("c")), 10);
    EXPECT_TRUE(r.normal);
    EXPECT_TRUE(pure_eq(r.term, p_const("c")));

    EXPECT_FALSE(beta_normalize_bounded(Omega, 1000).normal);

    PureTerm m = p_app(omega_half, p_lam("y", p_var(0)));
    auto nfs = o_normal_forms(m, false);
    ASSERT_EQ(nfs.size(), 1U);
    r = beta_normalize_bounded(m, 10);
    ASSERT_TRUE(r.normal);
    EXPECT_TRUE(pure_eq(r.term, nfs[0]));
    EXPECT_TRUE(pure_eq(r.term, p_lam("y", p_var(0))));
    EXPECT_EQ(r.steps, 2);
}

TEST(EssenceEq, Examples) {
    EXPECT_EQ(essence_eq(I, p_lam("y", p_var(0))).kind, EssenceVerdict::Equal);
    // (fun x => x) y vs y, with y free
    PureTerm y = p_var(0);
    auto nfs = o_normal_forms(p_app(I, y), false);
    ASSERT_EQ(nfs.size(), 1U);
    ASSERT_TRUE(pure_eq(nfs[0], y));
    EXPECT_EQ(essence_eq(p_app(I, y), y).kind, EssenceVerdict::Equal);
    EXPECT_EQ(essence_eq(I, p_const("c")).kind, EssenceVerdict::Unequal);
    EXPECT_EQ(essence_eq(Omega, p_const("c"), 100).kind, EssenceVerdict::BudgetExhausted);
    EXPECT_EQ(essence_eq(Omega, Omega, 100).kind, EssenceVerdict::Equal);
}

TEST(EssenceEq, PierceBranches) {
    Signature sig = load_file(corpus("pierce.dlf"));
    PureTerm l = essence(term(sig, "fun x1 : sigma1 => (proj_l x) x1 x1"));
    PureTerm r = essence(term(sig, "fun x2 : sigma2 => (proj_r x) x2 x2"));
    EXPECT_EQ(essence_eq(l, r).kind, EssenceVerdict::Equal);
}

PureTerm random_pure(std::mt19937_64& rng, int depth, int bound) {
    auto pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
    if (depth <= 0 || pick(4) == 0)
        return bound > 0 && pick(2) ? p_var(pick(bound)) : p_const(pick(2) ? "c" : "f");
    switch (pick(3)) {
    case 0: return p_lam("x", random_pure(rng, depth - 1, bound + 1));
    default: return p_app(random_pure(rng, depth - 1, bound), random_pure(rng, depth - 1, bound));
    }
}

TEST(EtaProperty, IdempotentAndMatchesOracle) {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 500; ++i) {
        PureTerm m = random_pure(rng, 5, 1);
        PureTerm n = eta_normalize(m);
        EXPECT_TRUE(pure_eq(eta_normalize(n), n));
        auto oracle = o_normal_forms(m, true);
        ASSERT_EQ(oracle.size(), 1U);
        EXPECT_TRUE(pure_eq(n, oracle[0]));
    }
}

TEST(BetaProperty, MoreFuelAgrees) {
    std::mt19937_64 rng(23);
    int normal = 0;
    for (int i = 0; i < 500; ++i) {
        PureTerm m = random_pure(rng, 6, 0);
        for (std::int64_t f : {1, 3, 10, 50}) {
            auto r = beta_normalize_bounded(m, f);
            if (!r.normal) continue;
            ++normal;
            auto r2 = beta_normalize_bounded(m, f + 1);
            ASSERT_TRUE(r2.normal);
            EXPECT_TRUE(pure_eq(r.term, r2.term));
            EXPECT_TRUE(beta_step(r.term) == nullptr);
        }
    }
    EXPECT_GT(normal, 100);
}

TEST(EssenceProperty, CommutesWithSubstitution) {
    RawGen gen(29);
    for (int i = 0; i < 500; ++i) {
        Term body = gen.object(4, 1);
        Term u = gen.object(3, 0);
        PureTerm lhs = essence(instantiate(body, u));
        PureTerm rhs = p_instantiate(essence(body), essence(u));
        EXPECT_TRUE(pure_eq(lhs, rhs));
        EXPECT_TRUE(pure_eq(rhs, o_open(essence(body), essence(u), 0)));
    }
}

void collect_pairs(const Term& t, std::vector<Term>& out) {
    if (t->tag == Tag::Pair || t->tag == Tag::CoPair) out.push_back(t);
    if (t->a) collect_pairs(t->a, out);
    if (t->b) collect_pairs(t->b, out);
}

TEST(EssenceProperty, AcceptedPairsHaveEqualEssences) {
    int pairs = 0;
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        auto f = fuzz_well_typed(seed, 30);
        if (!f) continue;
        std::vector<Term> ps;
        collect_pairs(f->term, ps);
        for (auto& p : ps) {
            ++pairs;
            EXPECT_TRUE(essence_eq(essence(p->a), essence(p->b)).equal()) << show(f->term, f->ctx);
        }
    }
    EXPECT_GT(pairs, 50);
}

}  // namespace
