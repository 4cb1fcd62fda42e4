#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "deltalf/term.hpp"

namespace deltalf {

enum class PTag : std::uint8_t { Var, Const, Lam, App };

struct PNode;
using PureTerm = std::shared_ptr<const PNode>;

/// Untyped λ-term with de Bruijn indices. Lam keeps a display hint.
struct PNode {
    PTag tag;
    std::string name;
    int index = 0;
    PureTerm a, b;
    std::size_t hash = 0;
    int size = 1;
    int loose = 0;
};

PureTerm p_var(int index);
PureTerm p_const(std::string name);
PureTerm p_lam(std::string hint, PureTerm body);
PureTerm p_app(PureTerm f, PureTerm x);

bool pure_eq(const PureTerm& x, const PureTerm& y);
PureTerm p_shift(const PureTerm& m, int d, int cutoff = 0);
PureTerm p_subst(const PureTerm& m, int target, const PureTerm& u);
PureTerm p_instantiate(const PureTerm& body, const PureTerm& arg);
bool p_occurs(const PureTerm& m, int index);

/// ⌊d⌋. Throws SyntaxError when d is not an object.
PureTerm essence(const Term& d);

PureTerm eta_normalize(const PureTerm& m);

/// Leftmost-outermost contraction of one β-redex, or nullptr if normal.
PureTerm beta_step(const PureTerm& m);

struct BetaResult {
    bool normal = false;
    PureTerm term;
    std::int64_t steps = 0;
};

/// Terms growing past this many nodes are treated as divergent.
inline constexpr int kPureSizeLimit = 1 << 20;

BetaResult beta_normalize_bounded(const PureTerm& m, std::int64_t fuel);

inline constexpr std::int64_t kDefaultEssenceFuel = 10'000;

struct EssenceVerdict {
    enum Kind { Equal, Unequal, BudgetExhausted } kind = Unequal;
    std::int64_t steps = 0;
    bool equal() const { return kind == Equal; }
};

const char* to_string(EssenceVerdict::Kind k);

EssenceVerdict essence_eq(const PureTerm& p, const PureTerm& q, std::int64_t fuel = kDefaultEssenceFuel);

}  // namespace deltalf
