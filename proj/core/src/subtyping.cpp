#include "deltalf/subtyping.hpp"

#include <functional>
#include <stdexcept>
#include <unordered_set>

namespace deltalf {

namespace {

std::size_t mix(std::size_t h, std::size_t v) { return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)); }

SimpleType make(SKind kind, std::string name, SimpleType a, SimpleType b) {
    auto n = std::make_shared<SNode>();
    n->kind = kind;
    std::size_t h = mix(0x5eed, static_cast<std::size_t>(kind));
    if (kind == SKind::Atom) {
        h = mix(h, std::hash<std::string>{}(name));
    } else {
        h = mix(mix(h, a->hash), b->hash);
        n->connectives = 1 + a->connectives + b->connectives;
    }
    n->hash = h;
    n->name = std::move(name);
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

std::string show(const SimpleType& t, int level) {
    // 0 arrow, 1 union, 2 intersection, 3 atom
    int own = t->kind == SKind::Arrow ? 0 : t->kind == SKind::Union ? 1 : t->kind == SKind::Inter ? 2 : 3;
    std::string s;
    switch (t->kind) {
    case SKind::Atom: s = t->name; break;
    case SKind::Arrow: s = show(t->a, 1) + " -> " + show(t->b, 0); break;
    case SKind::Union: s = show(t->a, 1) + " | " + show(t->b, 2); break;
    case SKind::Inter: s = show(t->a, 2) + " & " + show(t->b, 3); break;
    }
    return own < level ? "(" + s + ")" : s;
}

std::optional<SimpleType> from_term(const Signature& sig, const Term& t, int depth) {
    switch (t->tag) {
    case Tag::FamConst: {
        const Entry* e = sig.find(t->name);
        if (!e || !e->is_family || e->classifier->tag != Tag::Type) return std::nullopt;
        return s_atom(t->name);
    }
    case Tag::Pi: {
        if (occurs_free(t->b, 0)) return std::nullopt;
        auto d = from_term(sig, t->a, depth);
        auto c = from_term(sig, t->b, depth + 1);
        if (!d || !c) return std::nullopt;
        return s_arrow(*d, *c);
    }
    case Tag::Inter:
    case Tag::Union: {
        auto l = from_term(sig, t->a, depth);
        auto r = from_term(sig, t->b, depth);
        if (!l || !r) return std::nullopt;
        return t->tag == Tag::Inter ? s_inter(*l, *r) : s_union(*l, *r);
    }
    default: return std::nullopt;
    }
}

using Rule = SubDeriv::Rule;

Deriv node(Rule r, SimpleType lhs, SimpleType rhs, std::vector<Deriv> premises = {}, std::string axiom = {}) {
    auto d = std::make_shared<SubDeriv>();
    d->rule = r;
    d->lhs = std::move(lhs);
    d->rhs = std::move(rhs);
    for (const auto& p : premises) d->size += p->size;
    d->premises = std::move(premises);
    d->axiom = std::move(axiom);
    return d;
}

Deriv refl(const SimpleType& t) { return node(Rule::Refl, t, t); }

Deriv trans(const Deriv& x, const Deriv& y) {
    if (x->rule == Rule::Refl) return y;
    if (y->rule == Rule::Refl) return x;
    return node(Rule::Trans, x->lhs, y->rhs, {x, y});
}

// s <= t1 and s <= t2 give s <= t1 & t2 through s <= s & s.
Deriv meet_intro(const Deriv& x, const Deriv& y) {
    const SimpleType& s = x->lhs;
    Deriv dup = node(Rule::PairSelf, s, s_inter(s, s));
    Deriv mono = node(Rule::MonoInter, s_inter(s, s), s_inter(x->rhs, y->rhs), {x, y});
    return trans(dup, mono);
}

// s1 <= t and s2 <= t give s1 | s2 <= t through t | t <= t.
Deriv join_elim(const Deriv& x, const Deriv& y) {
    const SimpleType& t = x->rhs;
    Deriv mono = node(Rule::MonoUnion, s_union(x->lhs, y->lhs), s_union(t, t), {x, y});
    return trans(mono, node(Rule::UnionIdem, s_union(t, t), t));
}

Deriv arrow_mono(const Deriv& dom, const Deriv& cod) {
    return node(Rule::ArrowMono, s_arrow(dom->rhs, cod->lhs), s_arrow(dom->lhs, cod->rhs), {dom, cod});
}

// Both premises conclude s <= c -> o_i; the result concludes s <= c -> o1 & o2.
Deriv combine_outputs(const Deriv& x, const Deriv& y) {
    Deriv both = meet_intro(x, y);
    const SimpleType& c = x->rhs->a;
    Deriv dist = node(Rule::ArrowInterDist, both->rhs, s_arrow(c, s_inter(x->rhs->b, y->rhs->b)));
    return trans(both, dist);
}

// x concludes s <= c -> o; widen the output to o | p or p | o.
Deriv widen_left(const Deriv& x, const SimpleType& p) {
    const SimpleType& c = x->rhs->a;
    const SimpleType& o = x->rhs->b;
    return trans(x, arrow_mono(refl(c), node(Rule::InjL, o, s_union(o, p))));
}
Deriv widen_right(const Deriv& x, const SimpleType& p) {
    const SimpleType& c = x->rhs->a;
    const SimpleType& o = x->rhs->b;
    return trans(x, arrow_mono(refl(c), node(Rule::InjR, o, s_union(p, o))));
}

}  // namespace

SimpleType s_atom(std::string name) { return make(SKind::Atom, std::move(name), nullptr, nullptr); }
SimpleType s_arrow(SimpleType dom, SimpleType cod) { return make(SKind::Arrow, "", std::move(dom), std::move(cod)); }
SimpleType s_inter(SimpleType l, SimpleType r) { return make(SKind::Inter, "", std::move(l), std::move(r)); }
SimpleType s_union(SimpleType l, SimpleType r) { return make(SKind::Union, "", std::move(l), std::move(r)); }

bool s_eq(const SimpleType& x, const SimpleType& y) {
    if (x == y) return true;
    if (x->hash != y->hash || x->kind != y->kind || x->connectives != y->connectives) return false;
    if (x->kind == SKind::Atom) return x->name == y->name;
    return s_eq(x->a, y->a) && s_eq(x->b, y->b);
}

std::string to_string(const SimpleType& t) { return show(t, 0); }

Term to_term(const SimpleType& t) {
    switch (t->kind) {
    case SKind::Atom: return mk_fam_const(t->name);
    case SKind::Arrow: return mk_arrow(to_term(t->a), to_term(t->b));
    case SKind::Inter: return mk_inter(to_term(t->a), to_term(t->b));
    case SKind::Union: return mk_union(to_term(t->a), to_term(t->b));
    }
    return nullptr;
}

std::optional<SimpleType> simple_type_of(const Signature& sig, const Term& t) { return from_term(sig, unfold(sig, t), 0); }

std::vector<SimpleType> types_up_to(const std::vector<std::string>& atoms, int max_connectives) {
    std::vector<std::vector<SimpleType>> by_count(static_cast<std::size_t>(max_connectives) + 1);
    for (const auto& a : atoms) by_count[0].push_back(s_atom(a));
    for (int n = 1; n <= max_connectives; ++n)
        for (SKind k : {SKind::Arrow, SKind::Inter, SKind::Union})
            for (int i = 0; i < n; ++i)
                for (const auto& l : by_count[i])
                    for (const auto& r : by_count[n - 1 - i]) by_count[n].push_back(make(k, "", l, r));
    std::vector<SimpleType> out;
    for (auto& v : by_count) out.insert(out.end(), v.begin(), v.end());
    return out;
}

std::vector<SubAxiom> axioms_from(const Signature& sig) {
    std::vector<SubAxiom> out;
    for (const Entry& e : sig.entries()) {
        if (e.is_family) continue;
        Term ty = unfold(sig, e.classifier);
        if (ty->tag != Tag::RelArrow) continue;
        auto l = simple_type_of(sig, ty->a);
        auto r = simple_type_of(sig, ty->b);
        if (l && r) out.push_back({e.name, *l, *r});
    }
    return out;
}

const char* to_string(SubDeriv::Rule r) {
    switch (r) {
    case Rule::Refl: return "(6)";
    case Rule::PairSelf: return "(1)";
    case Rule::UnionIdem: return "(2)";
    case Rule::ProjL: return "(3l)";
    case Rule::ProjR: return "(3r)";
    case Rule::InjL: return "(4l)";
    case Rule::InjR: return "(4r)";
    case Rule::MonoInter: return "(7)";
    case Rule::MonoUnion: return "(8)";
    case Rule::Trans: return "(9)";
    case Rule::ArrowInterDist: return "(11)";
    case Rule::ArrowUnionDist: return "(12)";
    case Rule::ArrowMono: return "(14)";
    case Rule::Axiom: return "axiom";
    }
    return "?";
}

bool check_deriv(const Deriv& d, const std::vector<SubAxiom>& axioms) {
    const SimpleType& l = d->lhs;
    const SimpleType& r = d->rhs;
    const auto& p = d->premises;
    auto arity = [&](std::size_t n) { return p.size() == n; };
    auto is = [](const SimpleType& t, SKind k) { return t->kind == k; };
    bool ok = false;
    switch (d->rule) {
    case Rule::Refl: ok = arity(0) && s_eq(l, r); break;
    case Rule::PairSelf: ok = arity(0) && is(r, SKind::Inter) && s_eq(r->a, l) && s_eq(r->b, l); break;
    case Rule::UnionIdem: ok = arity(0) && is(l, SKind::Union) && s_eq(l->a, r) && s_eq(l->b, r); break;
    case Rule::ProjL: ok = arity(0) && is(l, SKind::Inter) && s_eq(l->a, r); break;
    case Rule::ProjR: ok = arity(0) && is(l, SKind::Inter) && s_eq(l->b, r); break;
    case Rule::InjL: ok = arity(0) && is(r, SKind::Union) && s_eq(r->a, l); break;
    case Rule::InjR: ok = arity(0) && is(r, SKind::Union) && s_eq(r->b, l); break;
    case Rule::MonoInter:
    case Rule::MonoUnion: {
        SKind k = d->rule == Rule::MonoInter ? SKind::Inter : SKind::Union;
        ok = arity(2) && is(l, k) && is(r, k) && s_eq(p[0]->lhs, l->a) && s_eq(p[0]->rhs, r->a) &&
             s_eq(p[1]->lhs, l->b) && s_eq(p[1]->rhs, r->b);
        break;
    }
    case Rule::Trans:
        ok = arity(2) && s_eq(p[0]->lhs, l) && s_eq(p[0]->rhs, p[1]->lhs) && s_eq(p[1]->rhs, r);
        break;
    case Rule::ArrowInterDist:
        ok = arity(0) && is(l, SKind::Inter) && is(l->a, SKind::Arrow) && is(l->b, SKind::Arrow) &&
             is(r, SKind::Arrow) && is(r->b, SKind::Inter) && s_eq(l->a->a, l->b->a) && s_eq(r->a, l->a->a) &&
             s_eq(r->b->a, l->a->b) && s_eq(r->b->b, l->b->b);
        break;
    case Rule::ArrowUnionDist:
        ok = arity(0) && is(l, SKind::Inter) && is(l->a, SKind::Arrow) && is(l->b, SKind::Arrow) &&
             is(r, SKind::Arrow) && is(r->a, SKind::Union) && s_eq(l->a->b, l->b->b) && s_eq(r->b, l->a->b) &&
             s_eq(r->a->a, l->a->a) && s_eq(r->a->b, l->b->a);
        break;
    case Rule::ArrowMono:
        ok = arity(2) && is(l, SKind::Arrow) && is(r, SKind::Arrow) && s_eq(p[0]->lhs, r->a) &&
             s_eq(p[0]->rhs, l->a) && s_eq(p[1]->lhs, l->b) && s_eq(p[1]->rhs, r->b);
        break;
    case Rule::Axiom:
        ok = arity(0);
        if (ok) {
            ok = false;
            for (const auto& ax : axioms)
                if (ax.name == d->axiom && s_eq(ax.lhs, l) && s_eq(ax.rhs, r)) ok = true;
        }
        break;
    }
    if (!ok) return false;
    for (const auto& q : p)
        if (!check_deriv(q, axioms)) return false;
    return true;
}

bool uses_rule(const Deriv& d, SubDeriv::Rule r) {
    if (d->rule == r) return true;
    for (const auto& p : d->premises)
        if (uses_rule(p, r)) return true;
    return false;
}

// The search follows a lattice sequent calculus: unions on the left and
// intersections on the right split, the remaining cases choose a side, and
// an arrow goal s <= c -> d is settled by computing the best output o with
// s <= c -> o and asking o <= d.
struct Decider::Impl {
    using Id = Decider::Id;
    static constexpr Id kNone = -1;

    explicit Impl(const std::vector<SubAxiom>& axioms) {
        for (const auto& ax : axioms) {
            Id p = intern(ax.lhs);
            Id q = intern(ax.rhs);
            if (kinds[p] == SKind::Atom) atom_axioms.emplace(p, Ax{q, ax.name, ax.lhs, ax.rhs});
            else general_axioms.push_back({p, q, ax.name, ax.lhs, ax.rhs});
        }
    }

    struct Ax {
        Id q;
        std::string name;
        SimpleType lhs, rhs;
    };
    struct GenAx {
        Id p, q;
        std::string name;
        SimpleType lhs, rhs;
    };

    std::vector<SimpleType> types;
    std::vector<SKind> kinds;
    std::vector<Id> left, right;
    std::unordered_map<SimpleType, Id, SimpleHash, SimpleEq> ids;
    std::unordered_multimap<Id, Ax> atom_axioms;
    std::vector<GenAx> general_axioms;

    std::unordered_map<std::uint64_t, bool> holds_memo;
    std::unordered_map<std::uint64_t, Id> out_memo, direct_memo;
    std::unordered_map<std::uint64_t, Deriv> deriv_memo, out_deriv_memo, direct_deriv_memo;
    std::unordered_set<std::uint64_t> active_holds, active_out, active_direct, active_deriv, active_out_deriv,
        active_direct_deriv;
    long cuts = 0;

    static std::uint64_t key(Id a, Id b) { return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b); }

    Id intern(const SimpleType& t) {
        if (auto it = ids.find(t); it != ids.end()) return it->second;
        Id l = kNone, r = kNone;
        if (t->kind != SKind::Atom) {
            l = intern(t->a);
            r = intern(t->b);
        }
        Id id = static_cast<Id>(types.size());
        types.push_back(t);
        kinds.push_back(t->kind);
        left.push_back(l);
        right.push_back(r);
        ids.emplace(t, id);
        return id;
    }

    Id meet(Id a, Id b) {
        if (a == kNone) return b;
        if (b == kNone) return a;
        return intern(s_inter(types[a], types[b]));
    }
    Id join(Id a, Id b) {
        if (a == kNone || b == kNone) return kNone;
        return intern(s_union(types[a], types[b]));
    }

    // Memoized evaluation with a cycle guard: a goal re-entered while in
    // progress fails, and failures that depended on such a cut are not cached.
    template <class T, class F>
    T guarded(std::unordered_map<std::uint64_t, T>& memo, std::unordered_set<std::uint64_t>& active, std::uint64_t k,
              T failure, F compute) {
        if (auto it = memo.find(k); it != memo.end()) return it->second;
        if (!active.insert(k).second) {
            ++cuts;
            return failure;
        }
        long before = cuts;
        T r = compute();
        active.erase(k);
        if (r != failure || cuts == before) memo.emplace(k, r);
        return r;
    }

    bool holds(Id s, Id t) {
        if (s == t) return true;
        return guarded(holds_memo, active_holds, key(s, t), false, [&] { return compute_holds(s, t); });
    }

    bool compute_holds(Id s, Id t) {
        if (kinds[s] == SKind::Union) return holds(left[s], t) && holds(right[s], t);
        if (kinds[t] == SKind::Inter) return holds(s, left[t]) && holds(s, right[t]);
        if (kinds[s] == SKind::Inter && (holds(left[s], t) || holds(right[s], t))) return true;
        if (kinds[t] == SKind::Union && (holds(s, left[t]) || holds(s, right[t]))) return true;
        if (kinds[t] == SKind::Arrow) {
            Id o = out(s, left[t]);
            if (o != kNone && holds(o, right[t])) return true;
        }
        if (kinds[s] == SKind::Atom) {
            auto range = atom_axioms.equal_range(s);
            for (auto it = range.first; it != range.second; ++it)
                if (holds(it->second.q, t)) return true;
        }
        for (const auto& ax : general_axioms)
            if (holds(s, ax.p) && holds(ax.q, t)) return true;
        return false;
    }

    // Least o with s <= c -> o, or kNone.
    Id out(Id s, Id c) {
        return guarded(out_memo, active_out, key(s, c), kNone, [&] {
            if (kinds[c] == SKind::Union) return join(out(s, left[c]), out(s, right[c]));
            Id o = direct(s, c);
            if (kinds[c] == SKind::Inter) {
                o = meet(o, out(s, left[c]));
                o = meet(o, out(s, right[c]));
            }
            return o;
        });
    }

    // Output contributed by the structure of s for a non-union domain c.
    Id direct(Id s, Id c) {
        return guarded(direct_memo, active_direct, key(s, c), kNone, [&] {
            switch (kinds[s]) {
            case SKind::Arrow: return holds(c, left[s]) ? right[s] : kNone;
            case SKind::Inter: return meet(direct(left[s], c), direct(right[s], c));
            case SKind::Union: return join(out(left[s], c), out(right[s], c));
            case SKind::Atom: {
                Id o = kNone;
                auto range = atom_axioms.equal_range(s);
                for (auto it = range.first; it != range.second; ++it) o = meet(o, out(it->second.q, c));
                return o;
            }
            }
            return kNone;
        });
    }

    static Deriv smaller(Deriv a, Deriv b) {
        if (!a) return b;
        if (!b) return a;
        return b->size < a->size ? b : a;
    }

    Deriv deriv(Id s, Id t) {
        if (s == t) return refl(types[s]);
        if (!holds(s, t)) return nullptr;
        return guarded(deriv_memo, active_deriv, key(s, t), Deriv{}, [&] { return compute_deriv(s, t); });
    }

    Deriv compute_deriv(Id s, Id t) {
        const SimpleType& S = types[s];
        const SimpleType& T = types[t];
        if (kinds[s] == SKind::Union) {
            Deriv a = deriv(left[s], t), b = deriv(right[s], t);
            return a && b ? join_elim(a, b) : nullptr;
        }
        if (kinds[t] == SKind::Inter) {
            Deriv a = deriv(s, left[t]), b = deriv(s, right[t]);
            return a && b ? meet_intro(a, b) : nullptr;
        }
        Deriv best;
        if (kinds[s] == SKind::Inter) {
            if (holds(left[s], t))
                if (Deriv d = deriv(left[s], t)) best = smaller(best, trans(node(Rule::ProjL, S, S->a), d));
            if (holds(right[s], t))
                if (Deriv d = deriv(right[s], t)) best = smaller(best, trans(node(Rule::ProjR, S, S->b), d));
        }
        if (kinds[t] == SKind::Union) {
            if (holds(s, left[t]))
                if (Deriv d = deriv(s, left[t])) best = smaller(best, trans(d, node(Rule::InjL, T->a, T)));
            if (holds(s, right[t]))
                if (Deriv d = deriv(s, right[t])) best = smaller(best, trans(d, node(Rule::InjR, T->b, T)));
        }
        if (kinds[t] == SKind::Arrow) {
            Id o = out(s, left[t]);
            if (o != kNone && holds(o, right[t])) {
                Deriv a = out_deriv(s, left[t]);
                Deriv b = deriv(o, right[t]);
                if (a && b) best = smaller(best, trans(a, arrow_mono(refl(T->a), b)));
            }
        }
        if (kinds[s] == SKind::Atom) {
            auto range = atom_axioms.equal_range(s);
            for (auto it = range.first; it != range.second; ++it) {
                const Ax& ax = it->second;
                if (!holds(ax.q, t)) continue;
                if (Deriv d = deriv(ax.q, t))
                    best = smaller(best, trans(node(Rule::Axiom, ax.lhs, ax.rhs, {}, ax.name), d));
            }
        }
        for (const auto& ax : general_axioms) {
            if (!holds(s, ax.p) || !holds(ax.q, t)) continue;
            Deriv a = deriv(s, ax.p), b = deriv(ax.q, t);
            if (a && b) best = smaller(best, trans(a, trans(node(Rule::Axiom, ax.lhs, ax.rhs, {}, ax.name), b)));
        }
        return best;
    }

    // Concludes s <= c -> out(s, c), built in the same order as out().
    Deriv out_deriv(Id s, Id c) {
        return guarded(out_deriv_memo, active_out_deriv, key(s, c), Deriv{}, [&]() -> Deriv {
            const SimpleType& C = types[c];
            if (kinds[c] == SKind::Union) {
                Deriv a = out_deriv(s, left[c]), b = out_deriv(s, right[c]);
                if (!a || !b) return nullptr;
                const SimpleType& oa = a->rhs->b;
                const SimpleType& ob = b->rhs->b;
                SimpleType o = s_union(oa, ob);
                Deriv both = meet_intro(widen_left(a, ob), widen_right(b, oa));
                return trans(both, node(Rule::ArrowUnionDist, both->rhs, s_arrow(C, o)));
            }
            Deriv d = direct(s, c) == kNone ? nullptr : direct_deriv(s, c);
            if (kinds[c] == SKind::Inter) {
                for (int side = 0; side < 2; ++side) {
                    Id part = side == 0 ? left[c] : right[c];
                    if (out(s, part) == kNone) continue;
                    Deriv p = out_deriv(s, part);
                    if (!p) return nullptr;
                    Rule pr = side == 0 ? Rule::ProjL : Rule::ProjR;
                    Deriv narrow = node(pr, C, types[part]);
                    Deriv lifted = trans(p, arrow_mono(narrow, refl(p->rhs->b)));
                    d = d ? combine_outputs(d, lifted) : lifted;
                }
            }
            return d;
        });
    }

    // Concludes s <= c -> direct(s, c).
    Deriv direct_deriv(Id s, Id c) {
        return guarded(direct_deriv_memo, active_direct_deriv, key(s, c), Deriv{}, [&]() -> Deriv {
            const SimpleType& S = types[s];
            const SimpleType& C = types[c];
            switch (kinds[s]) {
            case SKind::Arrow: {
                Deriv dom = deriv(c, left[s]);
                if (!dom) return nullptr;
                return arrow_mono(dom, refl(S->b));
            }
            case SKind::Inter: {
                Deriv d;
                for (int side = 0; side < 2; ++side) {
                    Id part = side == 0 ? left[s] : right[s];
                    if (direct(part, c) == kNone) continue;
                    Deriv p = direct_deriv(part, c);
                    if (!p) return nullptr;
                    Deriv lifted = trans(node(side == 0 ? Rule::ProjL : Rule::ProjR, S, types[part]), p);
                    d = d ? combine_outputs(d, lifted) : lifted;
                }
                return d;
            }
            case SKind::Union: {
                Deriv a = out_deriv(left[s], c), b = out_deriv(right[s], c);
                if (!a || !b) return nullptr;
                const SimpleType& oa = a->rhs->b;
                const SimpleType& ob = b->rhs->b;
                return join_elim(widen_left(a, ob), widen_right(b, oa));
            }
            case SKind::Atom: {
                Deriv d;
                auto range = atom_axioms.equal_range(s);
                for (auto it = range.first; it != range.second; ++it) {
                    const Ax& ax = it->second;
                    if (out(ax.q, c) == kNone) continue;
                    Deriv p = out_deriv(ax.q, c);
                    if (!p) return nullptr;
                    Deriv lifted = trans(node(Rule::Axiom, ax.lhs, ax.rhs, {}, ax.name), p);
                    d = d ? combine_outputs(d, lifted) : lifted;
                }
                (void)C;
                return d;
            }
            }
            return nullptr;
        });
    }
};

Decider::Decider(std::vector<SubAxiom> axioms) : axioms_(std::move(axioms)), impl_(std::make_unique<Impl>(axioms_)) {}
Decider::~Decider() = default;

Decider::Id Decider::intern(const SimpleType& t) { return impl_->intern(t); }
const SimpleType& Decider::type(Id id) const { return impl_->types.at(static_cast<std::size_t>(id)); }
bool Decider::holds(Id s, Id t) { return impl_->holds(s, t); }

std::optional<Deriv> Decider::derive(const SimpleType& s, const SimpleType& t) {
    Id a = intern(s), b = intern(t);
    if (!impl_->holds(a, b)) return std::nullopt;
    Deriv d = impl_->deriv(a, b);
    if (!d) return std::nullopt;
    return d;
}

std::optional<Deriv> decide_sub(const std::vector<SubAxiom>& axioms, const SimpleType& s, const SimpleType& t) {
    Decider d(axioms);
    return d.derive(s, t);
}

std::optional<Deriv> decide_sub(const Signature& sig, const SimpleType& s, const SimpleType& t) {
    return decide_sub(axioms_from(sig), s, t);
}

Term coerce(const Deriv& d, const Term& subject) {
    const SimpleType& l = d->lhs;
    const SimpleType& r = d->rhs;
    const auto& p = d->premises;
    Term x = mk_var(0);
    switch (d->rule) {
    case Rule::Refl: return subject;
    case Rule::PairSelf: return mk_pair(subject, subject);
    case Rule::UnionIdem: {
        Term ty = to_term(r);
        return mk_app(mk_copair(mk_lam("x", ty, x), mk_lam("x", ty, x)), subject);
    }
    case Rule::ProjL: return mk_proj_l(subject);
    case Rule::ProjR: return mk_proj_r(subject);
    case Rule::InjL: return mk_inj_l(to_term(r->b), subject);
    case Rule::InjR: return mk_inj_r(to_term(r->a), subject);
    case Rule::MonoInter: return mk_pair(coerce(p[0], mk_proj_l(subject)), coerce(p[1], mk_proj_r(subject)));
    case Rule::MonoUnion: {
        Term left = mk_lam("x", to_term(l->a), mk_inj_l(to_term(r->b), coerce(p[0], x)));
        Term right = mk_lam("x", to_term(l->b), mk_inj_r(to_term(r->a), coerce(p[1], x)));
        return mk_app(mk_copair(left, right), subject);
    }
    case Rule::Trans: return coerce(p[1], coerce(p[0], subject));
    case Rule::ArrowInterDist: {
        Term s1 = shift(subject, 1);
        return mk_lam("x", to_term(r->a), mk_pair(mk_app(mk_proj_l(s1), x), mk_app(mk_proj_r(s1), x)));
    }
    case Rule::ArrowUnionDist: {
        Term s2 = shift(subject, 2);
        Term left = mk_lam("y", to_term(r->a->a), mk_app(mk_proj_l(s2), x));
        Term right = mk_lam("y", to_term(r->a->b), mk_app(mk_proj_r(s2), x));
        return mk_lam("x", to_term(r->a), mk_app(mk_copair(left, right), x));
    }
    case Rule::ArrowMono: {
        Term arg = coerce(p[0], x);
        return mk_lam("x", to_term(r->a), coerce(p[1], mk_app(shift(subject, 1), arg)));
    }
    case Rule::Axiom: return mk_rel_app(mk_obj_const(d->axiom), subject);
    }
    return subject;
}

Term inhabit_relevant(const Deriv& d) { return mk_rel_lam("x", to_term(d->lhs), coerce(d, mk_var(0))); }

std::optional<Term> inhabit_relevant(const Signature& sig, const SimpleType& s, const SimpleType& t) {
    auto d = decide_sub(sig, s, t);
    if (!d) return std::nullopt;
    return inhabit_relevant(*d);
}

ClosureRelation::ClosureRelation(std::vector<SimpleType> universe, const std::vector<SubAxiom>& axioms)
    : types_(std::move(universe)) {
    for (std::size_t i = 0; i < types_.size(); ++i) index_.emplace(types_[i], i);
    std::size_t n = types_.size();
    rows_.assign(n, std::vector<std::uint64_t>((n + 63) / 64, 0));
    struct Parts {
        std::size_t l, r;
    };
    std::vector<std::optional<Parts>> parts(n);
    for (std::size_t i = 0; i < n; ++i) {
        const SimpleType& t = types_[i];
        if (t->kind == SKind::Atom) continue;
        auto l = index_of(t->a);
        auto r = index_of(t->b);
        if (!l || !r) throw std::invalid_argument("universe is not closed under subterms: " + to_string(t));
        parts[i] = Parts{*l, *r};
    }
    auto lookup = [&](const SimpleType& t) { return index_of(t); };
    for (std::size_t i = 0; i < n; ++i) {
        const SimpleType& t = types_[i];
        set(i, i);
        if (!parts[i]) continue;
        auto [l, r] = *parts[i];
        if (t->kind == SKind::Inter) {
            set(i, l);
            set(i, r);
            if (l == r) set(l, i);
            if (t->a->kind == SKind::Arrow && t->b->kind == SKind::Arrow) {
                const SimpleType& f = t->a;
                const SimpleType& g = t->b;
                if (s_eq(f->a, g->a))
                    if (auto j = lookup(s_arrow(f->a, s_inter(f->b, g->b)))) set(i, *j);
                if (s_eq(f->b, g->b))
                    if (auto j = lookup(s_arrow(s_union(f->a, g->a), f->b))) set(i, *j);
            }
        } else if (t->kind == SKind::Union) {
            set(l, i);
            set(r, i);
            if (l == r) set(i, l);
        }
    }
    for (const auto& ax : axioms) {
        auto p = lookup(ax.lhs);
        auto q = lookup(ax.rhs);
        if (p && q) set(*p, *q);
    }
    std::vector<std::size_t> inters, unions, arrows;
    for (std::size_t i = 0; i < n; ++i) {
        if (types_[i]->kind == SKind::Inter) inters.push_back(i);
        if (types_[i]->kind == SKind::Union) unions.push_back(i);
        if (types_[i]->kind == SKind::Arrow) arrows.push_back(i);
    }
    for (;;) {
        bool changed = close_transitively();
        for (const auto* group : {&inters, &unions})
            for (std::size_t i : *group)
                for (std::size_t j : *group)
                    if (holds(parts[i]->l, parts[j]->l) && holds(parts[i]->r, parts[j]->r)) changed |= set(i, j);
        for (std::size_t i : arrows)
            for (std::size_t j : arrows)
                if (holds(parts[j]->l, parts[i]->l) && holds(parts[i]->r, parts[j]->r)) changed |= set(i, j);
        if (!changed) break;
    }
}

std::optional<std::size_t> ClosureRelation::index_of(const SimpleType& t) const {
    if (auto it = index_.find(t); it != index_.end()) return it->second;
    return std::nullopt;
}

bool ClosureRelation::holds(const SimpleType& s, const SimpleType& t) const {
    auto i = index_of(s);
    auto j = index_of(t);
    return i && j && holds(*i, *j);
}

std::size_t ClosureRelation::count() const {
    std::size_t c = 0;
    for (const auto& row : rows_)
        for (std::uint64_t w : row) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
}

bool ClosureRelation::set(std::size_t i, std::size_t j) {
    std::uint64_t bit = std::uint64_t{1} << (j % 64);
    std::uint64_t& w = rows_[i][j / 64];
    if (w & bit) return false;
    w |= bit;
    return true;
}

bool ClosureRelation::close_transitively() {
    bool changed = false;
    std::size_t n = types_.size();
    for (std::size_t k = 0; k < n; ++k) {
        const auto& rk = rows_[k];
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || !holds(i, k)) continue;
            auto& ri = rows_[i];
            for (std::size_t w = 0; w < ri.size(); ++w) {
                std::uint64_t merged = ri[w] | rk[w];
                if (merged != ri[w]) {
                    ri[w] = merged;
                    changed = true;
                }
            }
        }
    }
    return changed;
}

ClosureRelation closure_oracle(const std::vector<SimpleType>& universe, const std::vector<SubAxiom>& axioms) {
    return ClosureRelation(universe, axioms);
}

Signature encode_refinement_signature(const std::vector<RefinementDecl>& decls, const Signature& base) {
    Signature sig = base;
    for (const auto& d : decls) {
        if (d.kind == RefinementDecl::Kind::Ordinary) {
            sig.push(d.entry);
            continue;
        }
        for (const auto* atom : {&d.lower, &d.upper}) {
            const Entry* e = sig.find(*atom);
            if (!e || !e->is_family || e->classifier->tag != Tag::Type)
                throw std::invalid_argument("undeclared atom " + *atom);
        }
        std::string name = "sub_" + d.lower + "_" + d.upper;
        for (int i = 1; sig.contains(name); ++i) name = "sub_" + d.lower + "_" + d.upper + "_" + std::to_string(i);
        sig.push(Entry{name, mk_rel_arrow(mk_fam_const(d.lower), mk_fam_const(d.upper)), false, std::nullopt, std::nullopt});
    }
    return sig;
}

}  // namespace deltalf
