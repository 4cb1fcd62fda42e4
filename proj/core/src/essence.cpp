#include "deltalf/essence.hpp"

#include <functional>

namespace deltalf {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

PureTerm pmake(PTag tag, std::string name, int index, PureTerm a, PureTerm b) {
    auto n = std::make_shared<PNode>();
    n->tag = tag;
    n->index = index;
    std::size_t h = mix(0xe55e, static_cast<std::size_t>(tag));
    switch (tag) {
    case PTag::Var:
        h = mix(h, static_cast<std::size_t>(index));
        n->loose = index + 1;
        break;
    case PTag::Const: h = mix(h, std::hash<std::string>{}(name)); break;
    case PTag::Lam:
        h = mix(h, a->hash);
        n->size += a->size;
        n->loose = std::max(0, a->loose - 1);
        break;
    case PTag::App:
        h = mix(mix(h, a->hash), b->hash);
        n->size += a->size + b->size;
        n->loose = std::max(a->loose, b->loose);
        break;
    }
    n->hash = h;
    n->name = std::move(name);
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

PureTerm prebuild(const PureTerm& m, PureTerm a, PureTerm b) {
    if (a == m->a && b == m->b) return m;
    return pmake(m->tag, m->name, m->index, std::move(a), std::move(b));
}

PureTerm subst_at(const PureTerm& m, int target, const PureTerm& u, int depth) {
    if (m->loose <= target + depth) return m;
    switch (m->tag) {
    case PTag::Var: return m->index == target + depth ? p_shift(u, depth) : m;
    case PTag::Const: return m;
    case PTag::Lam: return prebuild(m, subst_at(m->a, target, u, depth + 1), nullptr);
    case PTag::App: return prebuild(m, subst_at(m->a, target, u, depth), subst_at(m->b, target, u, depth));
    }
    return m;
}

PureTerm open_at(const PureTerm& m, const PureTerm& arg, int depth) {
    if (m->loose <= depth) return m;
    switch (m->tag) {
    case PTag::Var: return m->index == depth ? p_shift(arg, depth) : p_var(m->index - 1);
    case PTag::Const: return m;
    case PTag::Lam: return prebuild(m, open_at(m->a, arg, depth + 1), nullptr);
    case PTag::App: return prebuild(m, open_at(m->a, arg, depth), open_at(m->b, arg, depth));
    }
    return m;
}

[[noreturn]] void not_object(const Term& d) {
    throw SyntaxError(std::string("essence of a non-object ") + to_string(d->tag));
}

}  // namespace

PureTerm p_var(int index) { return pmake(PTag::Var, "", index, nullptr, nullptr); }
PureTerm p_const(std::string name) { return pmake(PTag::Const, std::move(name), 0, nullptr, nullptr); }
PureTerm p_lam(std::string hint, PureTerm body) { return pmake(PTag::Lam, std::move(hint), 0, std::move(body), nullptr); }
PureTerm p_app(PureTerm f, PureTerm x) { return pmake(PTag::App, "", 0, std::move(f), std::move(x)); }

bool pure_eq(const PureTerm& x, const PureTerm& y) {
    if (x == y) return true;
    if (x->hash != y->hash || x->tag != y->tag || x->size != y->size) return false;
    switch (x->tag) {
    case PTag::Var: return x->index == y->index;
    case PTag::Const: return x->name == y->name;
    case PTag::Lam: return pure_eq(x->a, y->a);
    case PTag::App: return pure_eq(x->a, y->a) && pure_eq(x->b, y->b);
    }
    return false;
}

PureTerm p_shift(const PureTerm& m, int d, int cutoff) {
    if (d == 0 || m->loose <= cutoff) return m;
    switch (m->tag) {
    case PTag::Var: return p_var(m->index + d);
    case PTag::Const: return m;
    case PTag::Lam: return prebuild(m, p_shift(m->a, d, cutoff + 1), nullptr);
    case PTag::App: return prebuild(m, p_shift(m->a, d, cutoff), p_shift(m->b, d, cutoff));
    }
    return m;
}

PureTerm p_subst(const PureTerm& m, int target, const PureTerm& u) { return subst_at(m, target, u, 0); }

PureTerm p_instantiate(const PureTerm& body, const PureTerm& arg) { return open_at(body, arg, 0); }

bool p_occurs(const PureTerm& m, int index) {
    if (m->loose <= index) return false;
    switch (m->tag) {
    case PTag::Var: return m->index == index;
    case PTag::Const: return false;
    case PTag::Lam: return p_occurs(m->a, index + 1);
    case PTag::App: return p_occurs(m->a, index) || p_occurs(m->b, index);
    }
    return false;
}

PureTerm essence(const Term& d) {
    switch (d->tag) {
    case Tag::ObjConst: return p_const(d->name);
    case Tag::Var: return p_var(d->index);
    case Tag::Lam:
    case Tag::RelLam: return p_lam(d->name, essence(d->b));
    case Tag::App: return p_app(essence(d->a), essence(d->b));
    case Tag::RelApp: return essence(d->b);
    case Tag::Pair:
    case Tag::CoPair: return essence(d->a);
    case Tag::ProjL:
    case Tag::ProjR: return essence(d->a);
    case Tag::InjL:
    case Tag::InjR: return essence(d->b);
    default: not_object(d);
    }
}

PureTerm eta_normalize(const PureTerm& m) {
    switch (m->tag) {
    case PTag::Var:
    case PTag::Const: return m;
    case PTag::App: return prebuild(m, eta_normalize(m->a), eta_normalize(m->b));
    case PTag::Lam: {
        PureTerm body = eta_normalize(m->a);
        if (body->tag == PTag::App && body->b->tag == PTag::Var && body->b->index == 0 && !p_occurs(body->a, 0))
            return p_shift(body->a, -1);
        return prebuild(m, body, nullptr);
    }
    }
    return m;
}

PureTerm beta_step(const PureTerm& m) {
    switch (m->tag) {
    case PTag::Var:
    case PTag::Const: return nullptr;
    case PTag::Lam: {
        PureTerm body = beta_step(m->a);
        return body ? prebuild(m, body, nullptr) : nullptr;
    }
    case PTag::App: {
        if (m->a->tag == PTag::Lam) return p_instantiate(m->a->a, m->b);
        if (PureTerm f = beta_step(m->a)) return prebuild(m, f, m->b);
        if (PureTerm x = beta_step(m->b)) return prebuild(m, m->a, x);
        return nullptr;
    }
    }
    return nullptr;
}

BetaResult beta_normalize_bounded(const PureTerm& m, std::int64_t fuel) {
    BetaResult r;
    r.term = m;
    while (true) {
        PureTerm next = beta_step(r.term);
        if (!next) {
            r.normal = true;
            return r;
        }
        if (r.steps >= fuel || next->size > kPureSizeLimit) return r;
        r.term = next;
        ++r.steps;
    }
}

const char* to_string(EssenceVerdict::Kind k) {
    switch (k) {
    case EssenceVerdict::Equal: return "Equal";
    case EssenceVerdict::Unequal: return "Unequal";
    case EssenceVerdict::BudgetExhausted: return "BudgetExhausted";
    }
    return "?";
}

EssenceVerdict essence_eq(const PureTerm& p, const PureTerm& q, std::int64_t fuel) {
    if (pure_eq(p, q)) return {EssenceVerdict::Equal, 0};
    BetaResult rp = beta_normalize_bounded(p, fuel);
    BetaResult rq = beta_normalize_bounded(q, fuel);
    std::int64_t steps = rp.steps + rq.steps;
    if (rp.normal && rq.normal) {
        bool same = pure_eq(eta_normalize(rp.term), eta_normalize(rq.term));
        return {same ? EssenceVerdict::Equal : EssenceVerdict::Unequal, steps};
    }
    if (pure_eq(eta_normalize(p), eta_normalize(q)) || pure_eq(eta_normalize(rp.term), eta_normalize(rq.term)))
        return {EssenceVerdict::Equal, steps};
    return {EssenceVerdict::BudgetExhausted, steps};
}

}  // namespace deltalf
