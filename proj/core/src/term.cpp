#include "deltalf/term.hpp"

#include <functional>
#include <utility>

namespace deltalf {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

Term make(Tag tag, std::string name, int index, Term a, Term b) {
    auto n = std::make_shared<Node>();
    n->tag = tag;
    n->index = index;
    std::size_t h = mix(0x51ed27, static_cast<std::size_t>(tag));
    if (tag == Tag::FamConst || tag == Tag::ObjConst) h = mix(h, std::hash<std::string>{}(name));
    if (tag == Tag::Var) {
        h = mix(h, static_cast<std::size_t>(index));
        n->loose = index + 1;
    }
    int ar = arity(tag);
    if (ar >= 1) {
        h = mix(h, a->hash);
        n->size += a->size;
        n->loose = a->loose;
    }
    if (ar == 2) {
        h = mix(h, b->hash);
        n->size += b->size;
        int lb = is_binder(tag) ? std::max(0, b->loose - 1) : b->loose;
        n->loose = std::max(n->loose, lb);
    }
    n->hash = h;
    n->name = std::move(name);
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

}  // namespace

const char* to_string(Category c) {
    switch (c) {
    case Category::Kind: return "kind";
    case Category::Family: return "family";
    case Category::Object: return "object";
    }
    return "?";
}

const char* to_string(Tag t) {
    switch (t) {
    case Tag::Type: return "Type";
    case Tag::Pi: return "Pi";
    case Tag::FamConst: return "FamConst";
    case Tag::ObjConst: return "ObjConst";
    case Tag::RelArrow: return "RelArrow";
    case Tag::Inter: return "Inter";
    case Tag::Union: return "Union";
    case Tag::Var: return "Var";
    case Tag::Lam: return "Lam";
    case Tag::RelLam: return "RelLam";
    case Tag::App: return "App";
    case Tag::RelApp: return "RelApp";
    case Tag::Pair: return "Pair";
    case Tag::CoPair: return "CoPair";
    case Tag::ProjL: return "ProjL";
    case Tag::ProjR: return "ProjR";
    case Tag::InjL: return "InjL";
    case Tag::InjR: return "InjR";
    }
    return "?";
}

bool is_binder(Tag t) { return t == Tag::Pi || t == Tag::Lam || t == Tag::RelLam; }

int arity(Tag t) {
    switch (t) {
    case Tag::Type:
    case Tag::FamConst:
    case Tag::ObjConst:
    case Tag::Var: return 0;
    case Tag::ProjL:
    case Tag::ProjR: return 1;
    default: return 2;
    }
}

Term mk_type() {
    static const Term type = make(Tag::Type, "", 0, nullptr, nullptr);
    return type;
}
Term mk_pi(std::string hint, Term dom, Term body) { return make(Tag::Pi, std::move(hint), 0, std::move(dom), std::move(body)); }
Term mk_arrow(Term dom, Term cod) { return mk_pi("", std::move(dom), shift(cod, 1)); }
Term mk_fam_const(std::string name) { return make(Tag::FamConst, std::move(name), 0, nullptr, nullptr); }
Term mk_obj_const(std::string name) { return make(Tag::ObjConst, std::move(name), 0, nullptr, nullptr); }
Term mk_rel_arrow(Term dom, Term cod) { return make(Tag::RelArrow, "", 0, std::move(dom), std::move(cod)); }
Term mk_inter(Term l, Term r) { return make(Tag::Inter, "", 0, std::move(l), std::move(r)); }
Term mk_union(Term l, Term r) { return make(Tag::Union, "", 0, std::move(l), std::move(r)); }
Term mk_var(int index) { return make(Tag::Var, "", index, nullptr, nullptr); }
Term mk_lam(std::string hint, Term dom, Term body) { return make(Tag::Lam, std::move(hint), 0, std::move(dom), std::move(body)); }
Term mk_rel_lam(std::string hint, Term dom, Term body) { return make(Tag::RelLam, std::move(hint), 0, std::move(dom), std::move(body)); }
Term mk_app(Term f, Term x) { return make(Tag::App, "", 0, std::move(f), std::move(x)); }
Term mk_rel_app(Term f, Term x) { return make(Tag::RelApp, "", 0, std::move(f), std::move(x)); }
Term mk_pair(Term l, Term r) { return make(Tag::Pair, "", 0, std::move(l), std::move(r)); }
Term mk_copair(Term l, Term r) { return make(Tag::CoPair, "", 0, std::move(l), std::move(r)); }
Term mk_proj_l(Term t) { return make(Tag::ProjL, "", 0, std::move(t), nullptr); }
Term mk_proj_r(Term t) { return make(Tag::ProjR, "", 0, std::move(t), nullptr); }
Term mk_inj_l(Term other, Term t) { return make(Tag::InjL, "", 0, std::move(other), std::move(t)); }
Term mk_inj_r(Term other, Term t) { return make(Tag::InjR, "", 0, std::move(other), std::move(t)); }

Term rebuild(const Term& t, Term a, Term b) {
    if (a == t->a && b == t->b) return t;
    return make(t->tag, t->name, t->index, std::move(a), std::move(b));
}

bool alpha_eq(const Term& x, const Term& y) {
    if (x == y) return true;
    if (x->hash != y->hash || x->tag != y->tag || x->size != y->size) return false;
    switch (x->tag) {
    case Tag::Type: return true;
    case Tag::FamConst:
    case Tag::ObjConst: return x->name == y->name;
    case Tag::Var: return x->index == y->index;
    default: break;
    }
    if (!alpha_eq(x->a, y->a)) return false;
    return arity(x->tag) == 1 || alpha_eq(x->b, y->b);
}

Term shift(const Term& t, int d, int cutoff) {
    if (d == 0 || t->loose <= cutoff) return t;
    if (t->tag == Tag::Var) return mk_var(t->index + d);
    Term a = shift(t->a, d, cutoff);
    Term b = arity(t->tag) == 2 ? shift(t->b, d, is_binder(t->tag) ? cutoff + 1 : cutoff) : nullptr;
    return rebuild(t, std::move(a), std::move(b));
}

namespace {

Term subst_at(const Term& t, int target, const Term& u, int depth) {
    if (t->loose <= target + depth) return t;
    if (t->tag == Tag::Var) return t->index == target + depth ? shift(u, depth) : t;
    Term a = subst_at(t->a, target, u, depth);
    Term b = arity(t->tag) == 2 ? subst_at(t->b, target, u, is_binder(t->tag) ? depth + 1 : depth) : nullptr;
    return rebuild(t, std::move(a), std::move(b));
}

Term open_at(const Term& t, const Term& arg, int depth) {
    if (t->loose <= depth) return t;
    if (t->tag == Tag::Var) {
        if (t->index == depth) return shift(arg, depth);
        return mk_var(t->index - 1);
    }
    Term a = open_at(t->a, arg, depth);
    Term b = arity(t->tag) == 2 ? open_at(t->b, arg, is_binder(t->tag) ? depth + 1 : depth) : nullptr;
    return rebuild(t, std::move(a), std::move(b));
}

bool occurs_at(const Term& t, int index) {
    if (t->loose <= index) return false;
    if (t->tag == Tag::Var) return t->index == index;
    if (occurs_at(t->a, index)) return true;
    return arity(t->tag) == 2 && occurs_at(t->b, is_binder(t->tag) ? index + 1 : index);
}

void collect_free(const Term& t, int depth, std::set<int>& out) {
    if (t->loose <= depth) return;
    if (t->tag == Tag::Var) {
        out.insert(t->index - depth);
        return;
    }
    collect_free(t->a, depth, out);
    if (arity(t->tag) == 2) collect_free(t->b, is_binder(t->tag) ? depth + 1 : depth, out);
}

[[noreturn]] void mixed(const Term& t, const std::string& why) {
    throw SyntaxError(std::string("ill-formed ") + to_string(t->tag) + ": " + why);
}

}  // namespace

Term subst(const Term& t, int target, const Term& u) { return subst_at(t, target, u, 0); }

Term instantiate(const Term& body, const Term& arg) { return open_at(body, arg, 0); }

bool occurs_free(const Term& t, int index) { return occurs_at(t, index); }

std::set<int> free_vars(const Term& t) {
    std::set<int> out;
    collect_free(t, 0, out);
    return out;
}

Category classify(const Term& t) {
    auto expect = [&](const Term& c, Category want, const char* what) {
        Category got = classify(c);
        if (got != want) mixed(t, std::string(what) + " is a " + to_string(got) + ", expected a " + to_string(want));
    };
    switch (t->tag) {
    case Tag::Type: return Category::Kind;
    case Tag::FamConst: return Category::Family;
    case Tag::ObjConst:
    case Tag::Var: return Category::Object;
    case Tag::Pi: {
        expect(t->a, Category::Family, "domain");
        Category body = classify(t->b);
        if (body == Category::Object) mixed(t, "body is an object");
        return body;
    }
    case Tag::RelArrow:
    case Tag::Inter:
    case Tag::Union:
        expect(t->a, Category::Family, "left operand");
        expect(t->b, Category::Family, "right operand");
        return Category::Family;
    case Tag::App: {
        expect(t->b, Category::Object, "argument");
        Category head = classify(t->a);
        if (head == Category::Kind) mixed(t, "head is a kind");
        return head;
    }
    case Tag::Lam:
    case Tag::RelLam:
        expect(t->a, Category::Family, "domain");
        expect(t->b, Category::Object, "body");
        return Category::Object;
    case Tag::RelApp:
    case Tag::Pair:
    case Tag::CoPair:
        expect(t->a, Category::Object, "left component");
        expect(t->b, Category::Object, "right component");
        return Category::Object;
    case Tag::ProjL:
    case Tag::ProjR:
        expect(t->a, Category::Object, "subject");
        return Category::Object;
    case Tag::InjL:
    case Tag::InjR:
        expect(t->a, Category::Family, "annotation");
        expect(t->b, Category::Object, "subject");
        return Category::Object;
    }
    mixed(t, "unknown tag");
}

const Term& subterm_at(const Term& t, const Path& p) {
    const Term* cur = &t;
    for (int i : p) cur = &child(*cur, i);
    return *cur;
}

Term replace_at(const Term& t, const Path& p, std::size_t depth, const Term& u) {
    if (depth == p.size()) return u;
    if (p[depth] == 0) return rebuild(t, replace_at(t->a, p, depth + 1, u), t->b);
    return rebuild(t, t->a, replace_at(t->b, p, depth + 1, u));
}

}  // namespace deltalf
