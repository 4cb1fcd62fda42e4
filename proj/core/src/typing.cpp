#include "deltalf/typing.hpp"

#include <set>

#include "deltalf/printer.hpp"

namespace deltalf {

namespace {

std::string render(const std::string& rule, const std::string& message, const Path& path,
                   const std::string& expected, const std::string& actual,
                   const std::optional<EssenceVerdict>& verdict) {
    std::string out = "(" + rule + ") " + message;
    if (!path.empty()) out += " at " + print_path(path);
    if (!expected.empty()) out += "\n  expected: " + expected;
    if (!actual.empty()) out += "\n  actual:   " + actual;
    if (verdict) out += std::string("\n  essence:  ") + to_string(verdict->kind);
    return out;
}

class Checker {
public:
    Checker(const Signature& sig, const Settings& s) : sig_(sig), s_(s) {}

    Term infer(Context& ctx, const Term& d);
    void check(Context& ctx, const Term& d, const Term& ty);
    Term kind_of(Context& ctx, const Term& f);
    void is_type(Context& ctx, const Term& f, const char* rule);
    void kind_ok(Context& ctx, const Term& k);

    Term nf(const Term& t) const { return normalize(unfold(sig_, t), s_.fuel); }
    bool conv(const Term& a, const Term& b) const {
        return alpha_eq(a, b) || def_eq(unfold(sig_, a), unfold(sig_, b), s_.fuel);
    }

    [[noreturn]] void fail(const std::string& rule, const std::string& message, const Context& ctx,
                           const Term& expected = nullptr, const Term& actual = nullptr,
                           std::optional<EssenceVerdict> verdict = std::nullopt) const {
        auto names = ctx.names();
        throw KernelError(rule, message, path_, expected ? print(expected, names) : "",
                          actual ? print(actual, names) : "", verdict);
    }

private:
    struct Descend {
        Descend(Checker& c, int i) : c(c) { c.path_.push_back(i); }
        ~Descend() { c.path_.pop_back(); }
        Checker& c;
    };
    struct Bind {
        Bind(Context& ctx, const std::string& name, const Term& ty) : ctx(ctx) { ctx.push(name, ty); }
        ~Bind() { ctx.pop(); }
        Context& ctx;
    };

    EssenceVerdict essences(const Term& x, const Term& y) const {
        return essence_eq(essence(unfold(sig_, x)), essence(unfold(sig_, y)), s_.essence_fuel);
    }
    void relevant_body(Context& ctx, const Term& body);
    Term strengthen(Context& ctx, const Term& cod);
    void check_copair(Context& ctx, const Term& d, const Term& ty);
    Term infer_copair(Context& ctx, const Term& d);
    std::optional<Term> motive(const Term& r1, const Term& r2, const Term& sigma, const Term& tau, int depth) const;

    const Signature& sig_;
    const Settings& s_;
    Path path_;
};

Term Checker::infer(Context& ctx, const Term& d) {
    switch (d->tag) {
    case Tag::ObjConst: {
        const Entry* e = sig_.find(d->name);
        if (!e || e->is_family) fail("Const", "unknown object constant " + d->name, ctx);
        return e->classifier;
    }
    case Tag::Var:
        if (d->index >= static_cast<int>(ctx.size())) fail("Var", "unbound variable", ctx);
        return ctx.type_of(d->index);
    case Tag::Lam: {
        {
            Descend g(*this, 0);
            is_type(ctx, d->a, "PiI");
        }
        Bind b(ctx, d->name, d->a);
        Descend g(*this, 1);
        return mk_pi(d->name, d->a, infer(ctx, d->b));
    }
    case Tag::RelLam: {
        {
            Descend g(*this, 0);
            is_type(ctx, d->a, "RelI");
        }
        Bind b(ctx, d->name, d->a);
        Descend g(*this, 1);
        Term cod = infer(ctx, d->b);
        relevant_body(ctx, d->b);
        return mk_rel_arrow(d->a, strengthen(ctx, cod));
    }
    case Tag::App: {
        Term ft;
        {
            Descend g(*this, 0);
            if (d->a->tag == Tag::CoPair) ft = infer_copair(ctx, d->a);
            else ft = infer(ctx, d->a);
        }
        Term fn = nf(ft);
        if (fn->tag != Tag::Pi) fail("PiE", "applied object is not a function", ctx, nullptr, ft);
        {
            Descend g(*this, 1);
            check(ctx, d->b, fn->a);
        }
        return instantiate(fn->b, d->b);
    }
    case Tag::RelApp: {
        Term ft;
        {
            Descend g(*this, 0);
            ft = infer(ctx, d->a);
        }
        Term fn = nf(ft);
        if (fn->tag != Tag::RelArrow) fail("RelE", "head of $ is not a relevant function", ctx, nullptr, ft);
        {
            Descend g(*this, 1);
            check(ctx, d->b, fn->a);
        }
        return fn->b;
    }
    case Tag::Pair: {
        Term l, r;
        {
            Descend g(*this, 0);
            l = infer(ctx, d->a);
        }
        {
            Descend g(*this, 1);
            r = infer(ctx, d->b);
        }
        auto v = essences(d->a, d->b);
        if (!v.equal()) fail("InterI", "pair components have different essences", ctx, nullptr, nullptr, v);
        return mk_inter(l, r);
    }
    case Tag::CoPair: return infer_copair(ctx, d);
    case Tag::ProjL:
    case Tag::ProjR: {
        const char* rule = d->tag == Tag::ProjL ? "InterE_l" : "InterE_r";
        Term t;
        {
            Descend g(*this, 0);
            t = infer(ctx, d->a);
        }
        Term n = nf(t);
        if (n->tag != Tag::Inter) fail(rule, "projection from a non-intersection", ctx, nullptr, t);
        return d->tag == Tag::ProjL ? n->a : n->b;
    }
    case Tag::InjL:
    case Tag::InjR: {
        bool left = d->tag == Tag::InjL;
        Term t;
        {
            Descend g(*this, 1);
            t = infer(ctx, d->b);
        }
        Term u = left ? mk_union(t, d->a) : mk_union(d->a, t);
        Descend g(*this, 0);
        is_type(ctx, u, left ? "UnionI_l" : "UnionI_r");
        return u;
    }
    default: fail("Category", std::string("expected an object, found ") + to_string(d->tag), ctx);
    }
}

void Checker::check(Context& ctx, const Term& d, const Term& ty) {
    switch (d->tag) {
    case Tag::CoPair: check_copair(ctx, d, ty); return;
    case Tag::Lam:
    case Tag::RelLam: {
        Term e = nf(ty);
        bool rel = d->tag == Tag::RelLam;
        if (e->tag != (rel ? Tag::RelArrow : Tag::Pi)) break;
        {
            Descend g(*this, 0);
            is_type(ctx, d->a, rel ? "RelI" : "PiI");
        }
        if (!conv(d->a, e->a)) break;
        Bind b(ctx, d->name, d->a);
        Descend g(*this, 1);
        check(ctx, d->b, rel ? shift(e->b, 1) : e->b);
        if (rel) relevant_body(ctx, d->b);
        return;
    }
    case Tag::Pair: {
        Term e = nf(ty);
        if (e->tag != Tag::Inter) break;
        {
            Descend g(*this, 0);
            check(ctx, d->a, e->a);
        }
        {
            Descend g(*this, 1);
            check(ctx, d->b, e->b);
        }
        auto v = essences(d->a, d->b);
        if (!v.equal()) fail("InterI", "pair components have different essences", ctx, nullptr, nullptr, v);
        return;
    }
    case Tag::InjL:
    case Tag::InjR: {
        Term e = nf(ty);
        bool left = d->tag == Tag::InjL;
        if (e->tag != Tag::Union || !conv(d->a, left ? e->b : e->a)) break;
        {
            Descend g(*this, 0);
            is_type(ctx, e, left ? "UnionI_l" : "UnionI_r");
        }
        Descend g(*this, 1);
        check(ctx, d->b, left ? e->a : e->b);
        return;
    }
    default: break;
    }
    Term actual = infer(ctx, d);
    if (!conv(actual, ty)) fail("Conv", "type mismatch", ctx, ty, actual);
}

void Checker::relevant_body(Context& ctx, const Term& body) {
    auto v = essence_eq(essence(unfold(sig_, body)), p_var(0), s_.essence_fuel);
    if (!v.equal()) fail("RelI", "essence of the body is not the bound variable", ctx, nullptr, nullptr, v);
}

Term Checker::strengthen(Context& ctx, const Term& cod) {
    Term t = cod;
    if (occurs_free(t, 0)) {
        t = nf(t);
        if (occurs_free(t, 0)) fail("RelI", "codomain of a relevant function depends on its argument", ctx, nullptr, cod);
    }
    return shift(t, -1);
}

void Checker::check_copair(Context& ctx, const Term& d, const Term& ty) {
    Term e = nf(ty);
    if (e->tag != Tag::Pi) fail("UnionE", "co-pair checked against a non-function type", ctx, nullptr, ty);
    const Term& u = e->a;
    if (u->tag != Tag::Union) fail("UnionE", "co-pair domain is not a union", ctx, nullptr, ty);
    const Term& rho = e->b;
    {
        Bind b(ctx, "x", u);
        is_type(ctx, rho, "UnionE");
    }
    Term left = mk_pi("y", u->a, subst(rho, 0, mk_inj_l(shift(u->b, 1), mk_var(0))));
    Term right = mk_pi("y", u->b, subst(rho, 0, mk_inj_r(shift(u->a, 1), mk_var(0))));
    {
        Descend g(*this, 0);
        check(ctx, d->a, left);
    }
    {
        Descend g(*this, 1);
        check(ctx, d->b, right);
    }
    auto v = essences(d->a, d->b);
    if (!v.equal()) fail("UnionE", "co-pair branches have different essences", ctx, nullptr, nullptr, v);
}

std::optional<Term> Checker::motive(const Term& r1, const Term& r2, const Term& sigma, const Term& tau,
                                    int depth) const {
    if (r1->tag == Tag::InjL && r2->tag == Tag::InjR && r1->b->tag == Tag::Var && r1->b->index == depth &&
        r2->b->tag == Tag::Var && r2->b->index == depth && alpha_eq(r1->a, shift(tau, depth + 1)) &&
        alpha_eq(r2->a, shift(sigma, depth + 1)))
        return mk_var(depth);
    if (r1->tag != r2->tag) return std::nullopt;
    switch (r1->tag) {
    case Tag::Type: return r1;
    case Tag::FamConst:
    case Tag::ObjConst:
        if (r1->name != r2->name) return std::nullopt;
        return r1;
    case Tag::Var:
        if (r1->index != r2->index || r1->index == depth) return std::nullopt;
        return r1;
    default: break;
    }
    auto a = motive(r1->a, r2->a, sigma, tau, depth);
    if (!a) return std::nullopt;
    if (arity(r1->tag) == 1) return rebuild(r1, *a, nullptr);
    auto b = motive(r1->b, r2->b, sigma, tau, is_binder(r1->tag) ? depth + 1 : depth);
    if (!b) return std::nullopt;
    return rebuild(r1, *a, *b);
}

// Synthesizes Πx:σ∪τ.ρ for a co-pair by recovering ρ from the branch types.
Term Checker::infer_copair(Context& ctx, const Term& d) {
    Term t1, t2;
    {
        Descend g(*this, 0);
        t1 = nf(infer(ctx, d->a));
    }
    {
        Descend g(*this, 1);
        t2 = nf(infer(ctx, d->b));
    }
    if (t1->tag != Tag::Pi || t2->tag != Tag::Pi)
        fail("UnionE", "co-pair branches must be functions", ctx, nullptr, t1->tag != Tag::Pi ? t1 : t2);
    auto rho = motive(t1->b, t2->b, t1->a, t2->a, 0);
    if (!rho)
        fail("UnionE", "cannot recover a common result type for the co-pair branches", ctx, t1, t2);
    Term ty = mk_pi("x", mk_union(t1->a, t2->a), *rho);
    check_copair(ctx, d, ty);
    return ty;
}

Term Checker::kind_of(Context& ctx, const Term& f) {
    switch (f->tag) {
    case Tag::FamConst: {
        const Entry* e = sig_.find(f->name);
        if (!e || !e->is_family) fail("Const", "unknown family constant " + f->name, ctx);
        return e->classifier;
    }
    case Tag::Pi: {
        {
            Descend g(*this, 0);
            is_type(ctx, f->a, "PiI");
        }
        Bind b(ctx, f->name, f->a);
        Descend g(*this, 1);
        is_type(ctx, f->b, "PiI");
        return mk_type();
    }
    case Tag::App: {
        Term k;
        {
            Descend g(*this, 0);
            k = kind_of(ctx, f->a);
        }
        Term kn = nf(k);
        if (kn->tag != Tag::Pi) fail("PiE", "family applied beyond its arity", ctx, nullptr, k);
        {
            Descend g(*this, 1);
            check(ctx, f->b, kn->a);
        }
        return instantiate(kn->b, f->b);
    }
    case Tag::RelArrow:
    case Tag::Inter:
    case Tag::Union: {
        const char* rule = f->tag == Tag::RelArrow ? "RelI" : f->tag == Tag::Inter ? "InterI" : "UnionI";
        {
            Descend g(*this, 0);
            is_type(ctx, f->a, rule);
        }
        Descend g(*this, 1);
        is_type(ctx, f->b, rule);
        return mk_type();
    }
    default: fail("Category", std::string("expected a family, found ") + to_string(f->tag), ctx);
    }
}

void Checker::is_type(Context& ctx, const Term& f, const char* rule) {
    Term k = kind_of(ctx, f);
    if (!conv(k, mk_type())) fail(rule, "expected a family of kind Type", ctx, mk_type(), k);
}

void Checker::kind_ok(Context& ctx, const Term& k) {
    if (k->tag == Tag::Type) return;
    if (k->tag != Tag::Pi) fail("PiK", std::string("expected a kind, found ") + to_string(k->tag), ctx);
    {
        Descend g(*this, 0);
        is_type(ctx, k->a, "PiK");
    }
    Bind b(ctx, k->name, k->a);
    Descend g(*this, 1);
    kind_ok(ctx, k->b);
}

Category category_or_fail(const Term& t) {
    try {
        return classify(t);
    } catch (const SyntaxError& e) {
        throw KernelError("Category", e.what());
    }
}

}  // namespace

KernelError::KernelError(std::string rule_, std::string message_, Path path_, std::string expected_,
                         std::string actual_, std::optional<EssenceVerdict> verdict_)
    : std::runtime_error(render(rule_, message_, path_, expected_, actual_, verdict_)),
      rule(std::move(rule_)),
      message(std::move(message_)),
      path(std::move(path_)),
      expected(std::move(expected_)),
      actual(std::move(actual_)),
      verdict(verdict_) {}

void check_signature(const Signature& sig, const Settings& s) {
    Signature prefix;
    for (const Entry& e : sig.entries()) {
        Entry copy{e.name, e.classifier, e.is_family, e.body, std::nullopt};
        add_checked(prefix, std::move(copy), s);
    }
}

void check_context(const Signature& sig, const Context& ctx, const Settings& s) {
    Context prefix;
    std::set<std::string> seen;
    Checker c(sig, s);
    for (const Binding& b : ctx.bindings()) {
        if (!seen.insert(b.name).second) c.fail("CtxVar", "duplicate variable " + b.name, prefix);
        if (category_or_fail(b.type) != Category::Family)
            c.fail("CtxVar", "variable " + b.name + " must be typed by a family", prefix);
        c.is_type(prefix, b.type, "CtxVar");
        prefix.push(b.name, b.type);
    }
}

void check_kind(const Signature& sig, const Context& ctx, const Term& k, const Settings& s) {
    Context local = ctx;
    Checker(sig, s).kind_ok(local, k);
}

Term infer_kind(const Signature& sig, const Context& ctx, const Term& fam, const Settings& s) {
    Context local = ctx;
    return Checker(sig, s).kind_of(local, fam);
}

Term infer_type(const Signature& sig, const Context& ctx, const Term& obj, const Settings& s) {
    Context local = ctx;
    return Checker(sig, s).infer(local, obj);
}

void check_type(const Signature& sig, const Context& ctx, const Term& obj, const Term& ty, const Settings& s) {
    Context local = ctx;
    Checker(sig, s).check(local, obj, ty);
}

TypedResult judge(const Signature& sig, const Context& ctx, const Term& t, const Settings& s) {
    Context local = ctx;
    Checker c(sig, s);
    switch (category_or_fail(t)) {
    case Category::Kind: c.kind_ok(local, t); return {nullptr, c.nf(t)};
    case Category::Family: return {c.kind_of(local, t), c.nf(t)};
    case Category::Object: return {c.infer(local, t), c.nf(t)};
    }
    return {};
}

void add_checked(Signature& sig, Entry e, const Settings& s) {
    Context ctx;
    Checker c(sig, s);
    if (sig.contains(e.name)) c.fail("Sigma", "constant " + e.name + " is already declared", ctx);
    if (e.body) {
        Category cat = category_or_fail(*e.body);
        if (cat == Category::Kind) c.fail("Sigma", "kinds cannot be given names", ctx);
        e.is_family = cat == Category::Family;
        if (e.is_family) {
            Term k = c.kind_of(ctx, *e.body);
            if (e.classifier) {
                c.kind_ok(ctx, e.classifier);
                if (!c.conv(k, e.classifier)) c.fail("Conv", "kind mismatch in definition of " + e.name, ctx, e.classifier, k);
            } else {
                e.classifier = k;
            }
        } else if (e.classifier) {
            c.is_type(ctx, e.classifier, "Sigma");
            c.check(ctx, *e.body, e.classifier);
        } else {
            e.classifier = c.infer(ctx, *e.body);
        }
        e.unfolded = unfold(sig, *e.body);
    } else {
        if (!e.classifier) c.fail("Sigma", "axiom " + e.name + " has no classifier", ctx);
        Category cat = category_or_fail(e.classifier);
        if (cat == Category::Object) c.fail("Sigma", "classifier of " + e.name + " is an object", ctx);
        e.is_family = cat == Category::Kind;
        if (e.is_family) c.kind_ok(ctx, e.classifier);
        else c.is_type(ctx, e.classifier, "Sigma");
    }
    sig.push(std::move(e));
}

}  // namespace deltalf
