#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "deltalf/signature.hpp"
#include "deltalf/term.hpp"

namespace deltalf {

enum class SKind : std::uint8_t { Atom, Arrow, Inter, Union };

struct SNode;
using SimpleType = std::shared_ptr<const SNode>;

/// Atoms, arrows, intersections and unions: families without dependencies
/// or relevant arrows.
struct SNode {
    SKind kind;
    std::string name;
    SimpleType a, b;
    std::size_t hash = 0;
    int connectives = 0;
};

SimpleType s_atom(std::string name);
SimpleType s_arrow(SimpleType dom, SimpleType cod);
SimpleType s_inter(SimpleType l, SimpleType r);
SimpleType s_union(SimpleType l, SimpleType r);

bool s_eq(const SimpleType& x, const SimpleType& y);
struct SimpleHash {
    std::size_t operator()(const SimpleType& t) const { return t->hash; }
};
struct SimpleEq {
    bool operator()(const SimpleType& x, const SimpleType& y) const { return s_eq(x, y); }
};

/// Concrete syntax, e.g. "a & b -> a | b".
std::string to_string(const SimpleType& t);

Term to_term(const SimpleType& t);

/// nullopt unless `t` (after unfolding definitions) is built from family
/// constants of kind Type with ->, & and |.
std::optional<SimpleType> simple_type_of(const Signature& sig, const Term& t);

/// Every type over `atoms` with at most `max_connectives` connectives;
/// the result is closed under subterms.
std::vector<SimpleType> types_up_to(const std::vector<std::string>& atoms, int max_connectives);

/// Extra base inclusion contributed by a constant c : lhs >-> rhs.
struct SubAxiom {
    std::string name;
    SimpleType lhs, rhs;
};

std::vector<SubAxiom> axioms_from(const Signature& sig);

struct SubDeriv;
using Deriv = std::shared_ptr<const SubDeriv>;

struct SubDeriv {
    enum class Rule {
        Refl,            // (6)
        PairSelf,        // (1)
        UnionIdem,       // (2)
        ProjL,           // (3)
        ProjR,           // (3)
        InjL,            // (4)
        InjR,            // (4)
        MonoInter,       // (7)
        MonoUnion,       // (8)
        Trans,           // (9)
        ArrowInterDist,  // (11)
        ArrowUnionDist,  // (12)
        ArrowMono,       // (14)
        Axiom,
    };
    Rule rule;
    SimpleType lhs, rhs;
    std::vector<Deriv> premises;
    std::string axiom;
    int size = 1;
};

const char* to_string(SubDeriv::Rule r);

/// Each node matches its rule schema and Axiom nodes cite `axioms`.
bool check_deriv(const Deriv& d, const std::vector<SubAxiom>& axioms);

/// Whether some node of `d` uses rule `r`.
bool uses_rule(const Deriv& d, SubDeriv::Rule r);

/// Goal-directed decision procedure for the restricted theory plus axioms.
/// Memo tables live in the object, so one Decider answers many queries
/// cheaply; it is not thread-safe.
class Decider {
public:
    using Id = std::int32_t;

    explicit Decider(std::vector<SubAxiom> axioms = {});
    ~Decider();
    Decider(const Decider&) = delete;
    Decider& operator=(const Decider&) = delete;

    Id intern(const SimpleType& t);
    const SimpleType& type(Id id) const;

    bool holds(Id s, Id t);
    bool holds(const SimpleType& s, const SimpleType& t) { return holds(intern(s), intern(t)); }

    /// A smallest derivation among those the search considers.
    std::optional<Deriv> derive(const SimpleType& s, const SimpleType& t);

    const std::vector<SubAxiom>& axioms() const { return axioms_; }

private:
    struct Impl;
    std::vector<SubAxiom> axioms_;
    std::unique_ptr<Impl> impl_;
};

std::optional<Deriv> decide_sub(const std::vector<SubAxiom>& axioms, const SimpleType& s, const SimpleType& t);
std::optional<Deriv> decide_sub(const Signature& sig, const SimpleType& s, const SimpleType& t);

/// The coercion of `subject` along `d`. `subject` may have free variables;
/// the types in `d` are closed.
Term coerce(const Deriv& d, const Term& subject);

/// sfun x : s => coerce(d, x), or nullopt when s <= t is not derivable.
std::optional<Term> inhabit_relevant(const Signature& sig, const SimpleType& s, const SimpleType& t);
Term inhabit_relevant(const Deriv& d);

/// Least relation on a subterm-closed universe containing the axiom
/// instances inside it and closed under (7), (8), (9) and (14).
class ClosureRelation {
public:
    ClosureRelation(std::vector<SimpleType> universe, const std::vector<SubAxiom>& axioms = {});

    std::size_t size() const { return types_.size(); }
    const std::vector<SimpleType>& types() const { return types_; }
    std::optional<std::size_t> index_of(const SimpleType& t) const;
    bool holds(std::size_t i, std::size_t j) const { return (rows_[i][j / 64] >> (j % 64)) & 1U; }
    bool holds(const SimpleType& s, const SimpleType& t) const;
    std::size_t count() const;

private:
    bool set(std::size_t i, std::size_t j);
    bool close_transitively();

    std::vector<SimpleType> types_;
    std::unordered_map<SimpleType, std::size_t, SimpleHash, SimpleEq> index_;
    std::vector<std::vector<std::uint64_t>> rows_;
};

ClosureRelation closure_oracle(const std::vector<SimpleType>& universe, const std::vector<SubAxiom>& axioms = {});

/// `a1 :: a2` and `a1 <= a2` both become Sub.
struct RefinementDecl {
    enum class Kind { Ordinary, Sub } kind = Kind::Ordinary;
    Entry entry;
    std::string lower, upper;
};

/// Replaces each inclusion a1 <= a2 by a fresh constant sub_a1_a2 : a1 >-> a2.
/// Throws std::invalid_argument on an undeclared atom.
Signature encode_refinement_signature(const std::vector<RefinementDecl>& decls, const Signature& base = {});

}  // namespace deltalf
