#include "deltalf/metacheck.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "deltalf/printer.hpp"

namespace deltalf {

SimpleType erase_type(const Term& t) {
    switch (t->tag) {
    case Tag::Type: return s_atom("⊤");
    case Tag::FamConst: return s_atom(t->name);
    case Tag::Pi:
    case Tag::RelArrow: return s_arrow(erase_type(t->a), erase_type(t->b));
    case Tag::App: return erase_type(t->a);
    case Tag::Inter: return s_inter(erase_type(t->a), erase_type(t->b));
    case Tag::Union: return s_union(erase_type(t->a), erase_type(t->b));
    default: throw std::invalid_argument(std::string("erase_type: not a kind or family: ") + to_string(t->tag));
    }
}

std::string erased_pi_constant(const SimpleType& dom) { return "c_{" + to_string(dom) + "}"; }

PureTerm erase_obj(const Term& t) {
    switch (t->tag) {
    case Tag::FamConst:
    case Tag::ObjConst: return p_const(t->name);
    case Tag::Var: return p_var(t->index);
    case Tag::App:
    case Tag::RelApp: return p_app(erase_obj(t->a), erase_obj(t->b));
    case Tag::Lam:
    case Tag::RelLam:
        return p_app(p_lam("y", p_lam(t->name, p_shift(erase_obj(t->b), 1, 1))), erase_obj(t->a));
    case Tag::Pi:
        return p_app(p_app(p_const(erased_pi_constant(erase_type(t->a))), erase_obj(t->a)),
                     p_lam(t->name, erase_obj(t->b)));
    case Tag::RelArrow:
    case Tag::Inter:
    case Tag::Union: return p_app(p_app(p_const(kProductConstant), erase_obj(t->a)), erase_obj(t->b));
    case Tag::Pair:
    case Tag::CoPair:
    case Tag::ProjL:
    case Tag::ProjR: return erase_obj(t->a);
    case Tag::InjL:
    case Tag::InjR: return p_app(p_lam("x", p_shift(erase_obj(t->b), 1)), erase_obj(t->a));
    case Tag::Type: break;
    }
    throw std::invalid_argument("erase_obj: kinds have no erasure");
}

namespace {

void beta_reducts(const PureTerm& m, std::vector<PureTerm>& out) {
    switch (m->tag) {
    case PTag::Var:
    case PTag::Const: return;
    case PTag::Lam: {
        std::vector<PureTerm> sub;
        beta_reducts(m->a, sub);
        for (auto& s : sub) out.push_back(p_lam(m->name, s));
        return;
    }
    case PTag::App: {
        if (m->a->tag == PTag::Lam) out.push_back(p_instantiate(m->a->a, m->b));
        std::vector<PureTerm> sub;
        beta_reducts(m->a, sub);
        for (auto& s : sub) out.push_back(p_app(s, m->b));
        sub.clear();
        beta_reducts(m->b, sub);
        for (auto& s : sub) out.push_back(p_app(m->a, s));
        return;
    }
    }
}

struct PureHash {
    std::size_t operator()(const PureTerm& m) const { return m->hash; }
};
struct PureEq {
    bool operator()(const PureTerm& x, const PureTerm& y) const { return pure_eq(x, y); }
};

}  // namespace

std::vector<PureTerm> pure_beta_reducts(const PureTerm& m) {
    std::vector<PureTerm> all;
    beta_reducts(m, all);
    std::unordered_set<PureTerm, PureHash, PureEq> seen;
    std::vector<PureTerm> out;
    for (auto& r : all)
        if (seen.insert(r).second) out.push_back(r);
    return out;
}

std::optional<int> simulation_steps(const Term& d, const Term& d2, int max_depth, std::size_t node_cap) {
    PureTerm from = erase_obj(d);
    PureTerm to = erase_obj(d2);
    if (pure_eq(from, to)) return 0;
    std::unordered_set<PureTerm, PureHash, PureEq> seen{from};
    std::vector<PureTerm> frontier{from};
    for (int depth = 1; depth <= max_depth && !frontier.empty(); ++depth) {
        std::vector<PureTerm> next;
        for (auto& m : frontier) {
            for (auto& r : pure_beta_reducts(m)) {
                if (pure_eq(r, to)) return depth;
                if (seen.size() < node_cap && seen.insert(r).second) next.push_back(r);
            }
        }
        frontier = std::move(next);
    }
    return std::nullopt;
}

bool simulation_check(const Term& d, const Term& d2) {
    auto n = simulation_steps(d, d2);
    return n && *n >= 1;
}

Signature fuzz_signature() {
    Signature sig;
    Term o1 = mk_fam_const("o1"), o2 = mk_fam_const("o2"), o3 = mk_fam_const("o3");
    auto fam = [&](const char* n, Term k) { add_checked(sig, Entry{n, std::move(k), true, {}, {}}); };
    auto obj = [&](const char* n, Term t) { add_checked(sig, Entry{n, std::move(t), false, {}, {}}); };
    fam("o1", mk_type());
    fam("o2", mk_type());
    fam("o3", mk_type());
    fam("p", mk_arrow(o1, mk_type()));
    obj("c1", o1);
    obj("c2", o2);
    obj("c3", o3);
    obj("f", mk_arrow(o1, o2));
    obj("g", mk_arrow(o2, o3));
    obj("h", mk_arrow(o1, o1));
    obj("k", mk_pi("x", o1, mk_app(mk_fam_const("p"), mk_var(0))));
    obj("d", mk_app(mk_fam_const("p"), mk_obj_const("c1")));
    obj("r12", mk_rel_arrow(o1, o2));
    return sig;
}

namespace {

// Builds objects against a goal type by running introduction rules
// backwards and eliminations forwards. Components of pairs and co-pairs
// are derived from one another by essence-preserving decorations.
class Generator {
public:
    Generator(const Signature& sig, std::uint64_t seed) : sig_(sig), rng_(seed), decider_(axioms_from(sig)) {}

    int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
    bool coin(int percent) { return pick(100) < percent; }

    Term atom() {
        static const char* names[] = {"o1", "o2", "o3"};
        return mk_fam_const(names[pick(3)]);
    }

    // A closed type, biased towards shapes the generator can inhabit.
    Term type(int depth) {
        if (depth <= 0) return coin(85) ? atom() : mk_app(mk_fam_const("p"), mk_obj_const("c1"));
        switch (pick(9)) {
        case 0:
        case 1: return mk_arrow(type(depth - 1), type(depth - 1));
        case 2: {
            Term x = type(depth - 1);
            return mk_inter(x, x);
        }
        case 3: {
            Term x = atom(), y = atom();
            return mk_inter(mk_arrow(x, x), mk_arrow(y, y));
        }
        case 4: return mk_inter(mk_fam_const("o1"), mk_fam_const("o2"));
        case 5: return mk_union(type(depth - 1), type(depth - 1));
        case 6: return mk_pi("x", mk_fam_const("o1"), mk_app(mk_fam_const("p"), mk_var(0)));
        case 7: {
            Term x = type(depth - 1);
            return coin(50) ? mk_rel_arrow(x, x) : mk_rel_arrow(mk_fam_const("o1"), mk_fam_const("o2"));
        }
        default: return atom();
        }
    }

    std::optional<Term> at(Context& ctx, const Term& goal, int budget) {
        Term ty = normalize(goal);
        if (budget <= 0) return lookup(ctx, ty);
        std::vector<int> order{0, 1, 2, 3};
        std::shuffle(order.begin(), order.end(), rng_);
        if (budget <= 1) order = {0, 1, 2};
        else if (budget > 4 && coin(80)) std::stable_partition(order.begin(), order.end(), [](int s) { return s != 0; });
        for (int s : order) {
            std::optional<Term> r;
            switch (s) {
            case 0: r = lookup(ctx, ty); break;
            case 1: r = intro(ctx, ty, budget); break;
            case 2: r = elim(ctx, ty, budget); break;
            default: r = redex(ctx, ty, budget); break;
            }
            if (r) return r;
        }
        return std::nullopt;
    }

private:
    std::optional<Term> lookup(const Context& ctx, const Term& ty) {
        std::vector<Term> hits;
        for (int i = 0; i < static_cast<int>(ctx.size()); ++i)
            if (alpha_eq(normalize(ctx.type_of(i)), ty)) hits.push_back(mk_var(i));
        for (auto& e : sig_.entries())
            if (!e.is_family && !e.body && alpha_eq(e.classifier, ty)) hits.push_back(mk_obj_const(e.name));
        if (hits.empty()) return std::nullopt;
        return hits[pick(static_cast<int>(hits.size()))];
    }

    std::optional<Term> intro(Context& ctx, const Term& ty, int budget) {
        switch (ty->tag) {
        case Tag::Pi: {
            ctx.push(ty->name.empty() ? "x" : ty->name, ty->a);
            auto body = at(ctx, ty->b, budget - 1);
            ctx.pop();
            if (!body) return std::nullopt;
            return mk_lam(ty->name, ty->a, *body);
        }
        case Tag::RelArrow: {
            ctx.push("x", ty->a);
            auto body = relevant_body(ctx, ty->a, shift(ty->b, 1), budget - 1);
            ctx.pop();
            if (!body) return std::nullopt;
            return mk_rel_lam("x", ty->a, *body);
        }
        case Tag::Inter: return pair(ctx, ty->a, ty->b, budget);
        case Tag::Union: {
            bool left = coin(50);
            auto t = at(ctx, left ? ty->a : ty->b, budget - 1);
            if (!t) return std::nullopt;
            return left ? mk_inj_l(ty->b, *t) : mk_inj_r(ty->a, *t);
        }
        default: return std::nullopt;
        }
    }

    // Body of sfun x:from. _ at type `to`, with essence x (Var 0).
    std::optional<Term> relevant_body(Context& ctx, const Term& from, const Term& to, int budget) {
        Term x = mk_var(0);
        Term from1 = shift(from, 1);
        if (alpha_eq(normalize(from1), normalize(to))) return decorate(ctx, x, from1, budget);
        return coercion(from1, to, x);
    }

    std::optional<Term> coercion(const Term& from, const Term& to, const Term& subject) {
        auto s = simple_type_of(sig_, from);
        auto t = simple_type_of(sig_, to);
        if (!s || !t) return std::nullopt;
        auto d = decider_.derive(*s, *t);
        if (!d) return std::nullopt;
        return coerce(*d, subject);
    }

    std::optional<Term> pair(Context& ctx, const Term& x, const Term& y, int budget) {
        if (alpha_eq(x, y)) {
            auto l = at(ctx, x, budget / 2);
            if (!l) return std::nullopt;
            auto r = decorate(ctx, *l, x, budget / 2);
            if (!r) return std::nullopt;
            return coin(50) ? mk_pair(*l, *r) : mk_pair(*r, *l);
        }
        if (x->tag == Tag::Pi && y->tag == Tag::Pi && alpha_eq(shift(x->a, 1), x->b) &&
            alpha_eq(shift(y->a, 1), y->b))
            return mk_pair(mk_lam("x", x->a, mk_var(0)), mk_lam("x", y->a, mk_var(0)));
        if (auto l = at(ctx, x, budget / 2)) {
            if (auto r = coercion(x, y, *l)) return mk_pair(*l, *r);
        }
        if (auto r = at(ctx, y, budget / 2)) {
            if (auto l = coercion(y, x, *r)) return mk_pair(*l, *r);
        }
        return std::nullopt;
    }

    std::optional<Term> elim(Context& ctx, const Term& ty, int budget) {
        // p t is produced by k applied to t, possibly behind a redex.
        if (ty->tag == Tag::App && ty->a->tag == Tag::FamConst && ty->a->name == "p") {
            Term arg = ty->b;
            if (budget > 3 && coin(50)) {
                if (auto w = wrap(ctx, arg, mk_fam_const("o1"), budget - 2)) arg = *w;
            }
            return mk_app(mk_obj_const("k"), arg);
        }
        std::vector<std::pair<Term, Term>> heads;  // head, its type
        for (int i = 0; i < static_cast<int>(ctx.size()); ++i) heads.emplace_back(mk_var(i), normalize(ctx.type_of(i)));
        for (auto& e : sig_.entries())
            if (!e.is_family && !e.body) heads.emplace_back(mk_obj_const(e.name), e.classifier);
        std::shuffle(heads.begin(), heads.end(), rng_);
        for (auto& [h, ht] : heads) {
            if (ht->tag == Tag::Pi && !occurs_free(ht->b, 0) && alpha_eq(shift(ty, 1), ht->b)) {
                if (auto a = at(ctx, ht->a, budget - 1)) return mk_app(h, *a);
            }
            if (ht->tag == Tag::RelArrow && alpha_eq(ht->b, ty)) {
                if (auto a = at(ctx, ht->a, budget - 1)) return mk_rel_app(h, *a);
            }
            if (ht->tag == Tag::Inter && alpha_eq(ht->a, ty)) return mk_proj_l(h);
            if (ht->tag == Tag::Inter && alpha_eq(ht->b, ty)) return mk_proj_r(h);
        }
        if (budget > 4 && coin(50)) return case_split(ctx, ty, budget);
        return std::nullopt;
    }

    // [λx:A. M, λx:B. M] scrutinee, with M not mentioning x.
    std::optional<Term> case_split(Context& ctx, const Term& ty, int budget) {
        Term a = atom(), b = atom();
        auto m = at(ctx, ty, budget / 2);
        if (!m) return std::nullopt;
        auto s = at(ctx, mk_union(a, b), budget / 2);
        if (!s) return std::nullopt;
        Term m1 = shift(*m, 1);
        return mk_app(mk_copair(mk_lam("x", a, m1), mk_lam("x", b, m1)), *s);
    }

    std::optional<Term> redex(Context& ctx, const Term& ty, int budget) {
        auto base = at(ctx, ty, budget / 2);
        if (!base) return std::nullopt;
        return wrap(ctx, *base, ty, budget / 2);
    }

    // Same type and essence as `t`, usually with a redex on top.
    std::optional<Term> decorate(Context& ctx, const Term& t, const Term& ty, int budget) {
        if (budget <= 1 || coin(25)) return t;
        return wrap(ctx, t, ty, budget);
    }

    std::optional<Term> wrap(Context& ctx, const Term& t, const Term& ty, int budget) {
        Term y0 = mk_var(0);
        switch (pick(7)) {
        case 0: {
            Term b = atom();
            auto w = at(ctx, b, std::max(1, budget - 2));
            if (!w) return std::nullopt;
            return mk_app(mk_lam("y", b, shift(t, 1)), *w);
        }
        case 1: return mk_app(mk_lam("y", ty, y0), t);
        case 2: return mk_rel_app(mk_rel_lam("y", ty, y0), t);
        case 3: {
            auto r = decorate(ctx, t, ty, budget / 2);
            if (!r) return std::nullopt;
            return coin(50) ? mk_proj_l(mk_pair(t, *r)) : mk_proj_r(mk_pair(*r, t));
        }
        case 4: {
            Term id = mk_lam("y", ty, y0);
            return mk_app(mk_copair(id, id), coin(50) ? mk_inj_l(ty, t) : mk_inj_r(ty, t));
        }
        case 5: {
            // commuting a union twice
            if (ty->tag != Tag::Union) return std::nullopt;
            Term a = ty->a, b = ty->b;
            Term a1 = shift(a, 1), b1 = shift(b, 1);
            Term swap = mk_copair(mk_lam("y", a, mk_inj_r(b1, y0)), mk_lam("y", b, mk_inj_l(a1, y0)));
            Term back = mk_copair(mk_lam("y", b, mk_inj_r(a1, y0)), mk_lam("y", a, mk_inj_l(b1, y0)));
            return mk_app(back, mk_app(swap, t));
        }
        default: {
            if (ty->tag != Tag::FamConst || ty->name != "o1") return std::nullopt;
            return mk_proj_l(mk_pair(t, mk_rel_app(mk_obj_const("r12"), t)));
        }
        }
    }

    const Signature& sig_;
    std::mt19937_64 rng_;
    Decider decider_;
};

}  // namespace

std::optional<Fuzzed> fuzz_well_typed(std::uint64_t seed, int size) {
    static const Signature base = fuzz_signature();
    Generator gen(base, seed);
    constexpr int kRetries = 40;
    for (int attempt = 0; attempt < kRetries; ++attempt) {
        Context ctx;
        int nctx = gen.pick(3);
        static const char* names[] = {"z", "w"};
        for (int i = 0; i < nctx; ++i) ctx.push(names[i], gen.type(gen.pick(2)));
        Term goal;
        std::optional<Term> t;
        if (size <= 1) {
            // a bare lookup
            int n = static_cast<int>(ctx.size()) + static_cast<int>(base.size());
            int i = gen.pick(n);
            if (i < static_cast<int>(ctx.size())) {
                t = mk_var(i);
                goal = ctx.type_of(i);
            } else {
                const Entry& e = base.entries()[i - ctx.size()];
                if (e.is_family) continue;
                t = mk_obj_const(e.name);
                goal = e.classifier;
            }
        } else {
            goal = gen.type(gen.pick(3));
            t = gen.at(ctx, goal, size);
        }
        if (!t || (*t)->size > std::max(size, 1)) continue;
        try {
            check_context(base, ctx);
            check_type(base, ctx, *t, goal);
        } catch (const KernelError&) {
            continue;
        }
        return Fuzzed{base, ctx, *t, goal};
    }
    return std::nullopt;
}

Term shrink(const Term& t, const std::function<bool(const Term&)>& still_failing) {
    Term cur = t;
    bool progress = true;
    while (progress) {
        progress = false;
        std::vector<std::pair<Path, int>> positions;  // path, binders above
        std::function<void(const Term&, Path&, int)> walk = [&](const Term& u, Path& p, int binders) {
            positions.emplace_back(p, binders);
            for (int i = 0; i < arity(u->tag); ++i) {
                p.push_back(i);
                walk(child(u, i), p, binders + (i == 1 && is_binder(u->tag) ? 1 : 0));
                p.pop_back();
            }
        };
        Path root;
        walk(cur, root, 0);
        for (auto& [p, binders] : positions) {
            const Term& sub = subterm_at(cur, p);
            for (int i = 0; i < arity(sub->tag) && !progress; ++i) {
                Term c = child(sub, i);
                if (i == 1 && is_binder(sub->tag)) {
                    if (occurs_free(c, 0)) continue;
                    c = shift(c, -1);
                }
                Term cand = replace_at(cur, p, 0, c);
                if (cand->size < cur->size && still_failing(cand)) {
                    cur = cand;
                    progress = true;
                }
            }
            if (progress) break;
        }
    }
    return cur;
}

bool MetacheckReport::all_passed() const {
    return subject_reduction.failed == 0 && local_confluence.failed == 0 && normalization.failed == 0 &&
           unicity.failed == 0 && simulation.failed == 0;
}

std::string MetacheckReport::summary() const {
    std::ostringstream out;
    out << "generated " << generated << ", accepted " << accepted << ", skipped " << skipped << "\n";
    auto line = [&](const char* name, const SuiteStats& s) {
        out << name << ": " << s.passed << " passed, " << s.failed << " failed\n";
        for (auto& c : s.counterexamples) out << "  counterexample: " << c << "\n";
    };
    line("subject reduction", subject_reduction);
    line("local confluence", local_confluence);
    line("normalization", normalization);
    line("unicity", unicity);
    line("simulation", simulation);
    for (auto& [rule, hist] : simulation_steps) {
        out << "  " << rule << " target steps:";
        for (auto& [n, count] : hist) out << " " << (n < 0 ? std::string("none") : std::to_string(n)) << "x" << count;
        out << "\n";
    }
    return out.str();
}

namespace {

bool subject_reduction_ok(const Fuzzed& f, const Term& t) {
    try {
        for (auto& r : one_step_reducts(t)) check_type(f.sig, f.ctx, r, f.classifier);
        return true;
    } catch (const KernelError&) {
        return false;
    }
}

bool confluence_ok(const Term& t) {
    try {
        return check_local_confluence(t);
    } catch (const OutOfFuel&) {
        return false;
    }
}

bool normalizes(const Term& t) {
    try {
        normalize(t);
        return true;
    } catch (const OutOfFuel&) {
        return false;
    }
}

bool unique_type(const Fuzzed& f, const Term& t, const Term& ty) {
    try {
        return def_eq(infer_type(f.sig, f.ctx, t), ty);
    } catch (const KernelError&) {
        return false;
    } catch (const OutOfFuel&) {
        return false;
    }
}

bool beta_like(Rule r) { return r == Rule::Beta || r == Rule::BetaR || r == Rule::InjL || r == Rule::InjR; }

// The erasure of the source reaches, in at least one step, a term
// β-convertible with the erasure of the reduct.
bool simulated_up_to_conversion(const Term& d, const Term& d2) {
    PureTerm from = erase_obj(d);
    PureTerm next = beta_step(from);
    if (!next) return false;
    auto a = beta_normalize_bounded(next, kDefaultEssenceFuel);
    auto b = beta_normalize_bounded(erase_obj(d2), kDefaultEssenceFuel);
    return a.normal && b.normal && pure_eq(a.term, b.term);
}

struct SampleResult {
    bool accepted = false;
    bool sr = true, lc = true, sn = true, un = true, sim = true;
    std::vector<std::pair<std::string, int>> steps;
    std::string sr_cx, lc_cx, sn_cx, un_cx, sim_cx;
};

std::string describe(const Fuzzed& f, const Term& t) { return print(t, f.ctx.names()); }

SampleResult run_sample(std::uint64_t seed, int size) {
    SampleResult out;
    auto f = fuzz_well_typed(seed, size);
    if (!f) return out;
    out.accepted = true;
    const Term& t = f->term;
    auto shrunk = [&](const std::function<bool(const Term&)>& fails) {
        auto typed_and_failing = [&](const Term& c) {
            try {
                infer_type(f->sig, f->ctx, c);
            } catch (const std::exception&) {
                return false;
            }
            return fails(c);
        };
        return describe(*f, shrink(t, typed_and_failing));
    };
    if (!subject_reduction_ok(*f, t)) {
        out.sr = false;
        out.sr_cx = shrunk([&](const Term& c) {
            try {
                Term ty = infer_type(f->sig, f->ctx, c);
                Fuzzed g{f->sig, f->ctx, c, ty};
                return !subject_reduction_ok(g, c);
            } catch (const std::exception&) {
                return false;
            }
        });
    }
    if (!confluence_ok(t)) {
        out.lc = false;
        out.lc_cx = shrunk([](const Term& c) { return !confluence_ok(c); });
    }
    if (!normalizes(t)) {
        out.sn = false;
        out.sn_cx = describe(*f, t);
    }
    if (!unique_type(*f, t, f->classifier)) {
        out.un = false;
        out.un_cx = describe(*f, t);
    }
    for (auto& s : one_step(t)) {
        // the contracted redex and its contractum, not the whole term
        Term before = subterm_at(t, s.redex.path);
        Term after = subterm_at(s.term, s.redex.path);
        auto n = simulation_steps(before, after);
        int count = n ? *n : -1;
        out.steps.emplace_back(to_string(s.redex.rule), count);
        if (beta_like(s.redex.rule) && !(count >= 1 || simulated_up_to_conversion(before, after))) {
            out.sim = false;
            if (out.sim_cx.empty()) out.sim_cx = describe(*f, before);
        }
    }
    return out;
}

void tally(SuiteStats& s, bool ok, const std::string& cx) {
    if (ok) {
        ++s.passed;
        return;
    }
    ++s.failed;
    if (s.counterexamples.size() < 5) s.counterexamples.push_back(cx);
}

}  // namespace

MetacheckReport run_metacheck(int seeds, int size, std::uint64_t first_seed) {
    MetacheckReport report;
    std::mutex mu;
    std::atomic<int> next{0};
    unsigned workers = std::max(1U, std::min(8U, std::thread::hardware_concurrency()));
    auto work = [&] {
        for (int i = next++; i < seeds; i = next++) {
            SampleResult r = run_sample(first_seed + static_cast<std::uint64_t>(i), size);
            std::lock_guard<std::mutex> lock(mu);
            ++report.generated;
            if (!r.accepted) {
                ++report.skipped;
                continue;
            }
            ++report.accepted;
            tally(report.subject_reduction, r.sr, r.sr_cx);
            tally(report.local_confluence, r.lc, r.lc_cx);
            tally(report.normalization, r.sn, r.sn_cx);
            tally(report.unicity, r.un, r.un_cx);
            tally(report.simulation, r.sim, r.sim_cx);
            for (auto& [rule, n] : r.steps) ++report.simulation_steps[rule][n];
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
    return report;
}

}  // namespace deltalf
