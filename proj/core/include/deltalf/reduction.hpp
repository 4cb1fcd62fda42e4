#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "deltalf/term.hpp"

namespace deltalf {

enum class Rule { Beta, ProjL, ProjR, InjL, InjR, BetaR, CongrInter, CongrUnion };

const char* to_string(Rule r);

struct Redex {
    Path path;
    Rule rule;
};

struct Step {
    Term term;
    Redex redex;
};

struct OutOfFuel : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr std::int64_t kDefaultFuel = 100'000;

/// Every one-step reduct of t together with the contracted redex.
std::vector<Step> one_step(const Term& t);

/// Distinct (up to α) one-step reducts.
std::vector<Term> one_step_reducts(const Term& t);

/// Leftmost-outermost step; inside pairs and co-pairs the first pair of
/// component steps whose essences agree.
std::optional<Step> step_leftmost(const Term& t);

using TraceFn = std::function<void(const Step&)>;

/// Throws OutOfFuel when more than `fuel` steps are needed.
Term normalize(const Term& t, std::int64_t fuel = kDefaultFuel, const TraceFn& trace = nullptr);

bool def_eq(const Term& a, const Term& b, std::int64_t fuel = kDefaultFuel);

/// Every two distinct one-step reducts have a common reduct (bounded search).
bool check_local_confluence(const Term& t, std::int64_t fuel = kDefaultFuel);

}  // namespace deltalf
