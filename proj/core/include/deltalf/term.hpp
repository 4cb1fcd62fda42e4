#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace deltalf {

// One tree for kinds, families and objects. Pi serves both Πx:σ.K and
// Πx:σ.τ, App both σ@Δ and Δ@Δ; classify() tells them apart.
enum class Tag : std::uint8_t {
    Type,
    Pi,
    FamConst,
    ObjConst,
    RelArrow,
    Inter,
    Union,
    Var,
    Lam,
    RelLam,
    App,
    RelApp,
    Pair,
    CoPair,
    ProjL,
    ProjR,
    InjL,
    InjR,
};

struct Node;
using Term = std::shared_ptr<const Node>;

/// Immutable term node. `name` holds a constant name, or a display hint for
/// binders; hints never affect equality or hashing.
struct Node {
    Tag tag;
    std::string name;
    int index = 0;
    Term a, b;
    std::size_t hash = 0;
    int size = 1;
    // 1 + largest free de Bruijn index, 0 when closed
    int loose = 0;
};

enum class Category { Kind, Family, Object };

const char* to_string(Category c);
const char* to_string(Tag t);

struct SyntaxError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Path = std::vector<int>;

Term mk_type();
Term mk_pi(std::string hint, Term dom, Term body);
Term mk_arrow(Term dom, Term cod);  // non-dependent Π, shifts cod
Term mk_fam_const(std::string name);
Term mk_obj_const(std::string name);
Term mk_rel_arrow(Term dom, Term cod);
Term mk_inter(Term l, Term r);
Term mk_union(Term l, Term r);
Term mk_var(int index);
Term mk_lam(std::string hint, Term dom, Term body);
Term mk_rel_lam(std::string hint, Term dom, Term body);
Term mk_app(Term f, Term x);
Term mk_rel_app(Term f, Term x);
Term mk_pair(Term l, Term r);
Term mk_copair(Term l, Term r);
Term mk_proj_l(Term t);
Term mk_proj_r(Term t);
Term mk_inj_l(Term other, Term t);
Term mk_inj_r(Term other, Term t);

/// Rebuild `t` with new children, keeping tag, name and index.
Term rebuild(const Term& t, Term a, Term b);

bool is_binder(Tag t);
int arity(Tag t);
inline const Term& child(const Term& t, int i) { return i == 0 ? t->a : t->b; }

bool alpha_eq(const Term& x, const Term& y);

struct TermHash {
    std::size_t operator()(const Term& t) const { return t->hash; }
};
struct TermEq {
    bool operator()(const Term& x, const Term& y) const { return alpha_eq(x, y); }
};

/// Add `d` to every free index >= cutoff.
Term shift(const Term& t, int d, int cutoff = 0);

/// [target := u] t, with u shifted under binders; indices are not lowered.
Term subst(const Term& t, int target, const Term& u);

/// body[arg/0] for the body of a binder: substitutes and lowers the rest.
Term instantiate(const Term& body, const Term& arg);

bool occurs_free(const Term& t, int index);
std::set<int> free_vars(const Term& t);

/// Throws SyntaxError on a mixed-category tree.
Category classify(const Term& t);

const Term& subterm_at(const Term& t, const Path& p);
Term replace_at(const Term& t, const Path& p, std::size_t depth, const Term& u);

}  // namespace deltalf
