// Shared helpers for the unit and acceptance tests.
#pragma once

#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "deltalf/parser.hpp"
#include "deltalf/printer.hpp"
#include "deltalf/session.hpp"
#include "deltalf/term.hpp"
#include "deltalf/typing.hpp"

namespace testing_support {

using namespace deltalf;

inline std::string source_dir() { return DELTALF_SOURCE_DIR; }
inline std::string corpus(const std::string& name) { return source_dir() + "/corpus/" + name; }
inline std::string fixture(const std::string& name) { return source_dir() + "/tests/fixtures/" + name; }

inline std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Signature built by replaying `src`; every command must succeed.
inline Signature load(const std::string& src) {
    Session s;
    for (auto& o : s.run_source(src, "<test>"))
        if (!o.ok()) throw std::runtime_error(render(o));
    return s.sig;
}

inline Signature load_file(const std::string& path) {
    Session s;
    for (auto& o : s.run_file(path))
        if (!o.ok()) throw std::runtime_error(render(o));
    return s.sig;
}

/// Context from (name, type source) pairs, each type parsed in the prefix.
inline Context context(const Signature& sig, const std::vector<std::pair<std::string, std::string>>& bindings) {
    Context ctx;
    for (auto& [n, ty] : bindings) ctx.push(n, parse_term(ty, sig, ctx.names()));
    return ctx;
}

inline Term term(const Signature& sig, const std::string& src, const Context& ctx = {}) {
    return parse_term(src, sig, ctx.names());
}

inline std::string show(const Term& t, const Context& ctx = {}) { return print(t, ctx.names()); }

struct CorpusDef {
    std::string file;
    Signature sig;  // prefix before the definition
    std::string name;
    Term body;
    Term classifier;
};

inline const std::vector<std::string>& corpus_files() {
    static const std::vector<std::string> files{
        "auto_application.dlf", "polymorphic_identity.dlf", "union_commutativity.dlf", "is0_test.dlf",
        "pierce.dlf",           "delta_omega.dlf",          "harrop.dlf",              "harrop_refinement.dlf",
        "natural_deductions.dlf"};
    return files;
}

/// Every object definition of the corpus with the signature it was checked in.
inline std::vector<CorpusDef> corpus_definitions() {
    std::vector<CorpusDef> out;
    for (auto& f : corpus_files()) {
        Signature full = load_file(corpus(f));
        Signature prefix;
        for (auto& e : full.entries()) {
            if (e.body && !e.is_family) out.push_back({f, prefix, e.name, *e.body, e.classifier});
            prefix.push(e);
        }
    }
    return out;
}

// Named first-order terms: an oracle for de Bruijn substitution.
struct Named {
    Tag tag;
    std::string name;  // constant, variable or binder name
    std::shared_ptr<Named> a, b;
};
using NamedPtr = std::shared_ptr<Named>;

inline NamedPtr to_named(const Term& t, std::vector<std::string>& scope, int& fresh) {
    auto n = std::make_shared<Named>();
    n->tag = t->tag;
    switch (t->tag) {
    case Tag::Type: return n;
    case Tag::FamConst:
    case Tag::ObjConst: n->name = t->name; return n;
    case Tag::Var: {
        int k = static_cast<int>(scope.size()) - 1 - t->index;
        n->name = k >= 0 ? scope[k] : "free" + std::to_string(-k - 1);
        return n;
    }
    default: break;
    }
    n->a = to_named(t->a, scope, fresh);
    if (arity(t->tag) == 2) {
        if (is_binder(t->tag)) {
            n->name = "v" + std::to_string(fresh++);
            scope.push_back(n->name);
            n->b = to_named(t->b, scope, fresh);
            scope.pop_back();
        } else {
            n->b = to_named(t->b, scope, fresh);
        }
    }
    return n;
}

inline Term from_named(const NamedPtr& n, std::vector<std::string>& scope) {
    switch (n->tag) {
    case Tag::Type: return mk_type();
    case Tag::FamConst: return mk_fam_const(n->name);
    case Tag::ObjConst: return mk_obj_const(n->name);
    case Tag::Var: {
        for (int i = static_cast<int>(scope.size()) - 1; i >= 0; --i)
            if (scope[i] == n->name) return mk_var(static_cast<int>(scope.size()) - 1 - i);
        int k = std::stoi(n->name.substr(4));
        return mk_var(static_cast<int>(scope.size()) + k);
    }
    default: break;
    }
    Term a = from_named(n->a, scope);
    Term b;
    if (n->b) {
        if (is_binder(n->tag)) scope.push_back(n->name);
        b = from_named(n->b, scope);
        if (is_binder(n->tag)) scope.pop_back();
    }
    return rebuild(std::make_shared<Node>(Node{n->tag, "", 0, nullptr, nullptr}), a, b);
}

// Binder names are globally fresh, so plain replacement cannot capture.
inline NamedPtr named_replace(const NamedPtr& n, const std::string& x, const NamedPtr& u) {
    if (n->tag == Tag::Var) return n->name == x ? u : n;
    if (!n->a) return n;
    auto m = std::make_shared<Named>(*n);
    m->a = named_replace(n->a, x, u);
    if (n->b) m->b = named_replace(n->b, x, u);
    return m;
}

/// Random raw object trees (not necessarily well typed) over constants and
/// variables below `free` outer binders.
class RawGen {
public:
    explicit RawGen(std::uint64_t seed) : rng_(seed) {}

    int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

    Term family(int depth) {
        if (depth <= 0 || pick(3) == 0) return mk_fam_const(pick(2) ? "s" : "t");
        switch (pick(4)) {
        case 0: return mk_inter(family(depth - 1), family(depth - 1));
        case 1: return mk_union(family(depth - 1), family(depth - 1));
        case 2: return mk_rel_arrow(family(depth - 1), family(depth - 1));
        default: return mk_arrow(family(depth - 1), family(depth - 1));
        }
    }

    Term object(int depth, int bound) {
        if (depth <= 0 || pick(4) == 0) {
            if (bound > 0 && pick(3) != 0) return mk_var(pick(bound));
            static const char* cs[] = {"c", "d", "f"};
            return mk_obj_const(cs[pick(3)]);
        }
        switch (pick(10)) {
        case 0: return mk_lam("x", family(1), object(depth - 1, bound + 1));
        case 1: return mk_rel_lam("y", family(1), object(depth - 1, bound + 1));
        case 2:
        case 3: return mk_app(object(depth - 1, bound), object(depth - 1, bound));
        case 4: return mk_rel_app(object(depth - 1, bound), object(depth - 1, bound));
        case 5: return mk_pair(object(depth - 1, bound), object(depth - 1, bound));
        case 6: return mk_copair(object(depth - 1, bound), object(depth - 1, bound));
        case 7: return pick(2) ? mk_proj_l(object(depth - 1, bound)) : mk_proj_r(object(depth - 1, bound));
        case 8: return mk_inj_l(family(1), object(depth - 1, bound));
        default: return mk_inj_r(family(1), object(depth - 1, bound));
        }
    }

private:
    std::mt19937_64 rng_;
};

/// Signature declaring the symbols RawGen uses.
inline Signature raw_signature() {
    return load("Axiom s : Type. Axiom t : Type. Axiom c : s. Axiom d : t. Axiom f : s -> t.");
}

}  // namespace testing_support
