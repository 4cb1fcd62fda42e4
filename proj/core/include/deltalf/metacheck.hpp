#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "deltalf/essence.hpp"
#include "deltalf/reduction.hpp"
#include "deltalf/signature.hpp"
#include "deltalf/subtyping.hpp"
#include "deltalf/term.hpp"
#include "deltalf/typing.hpp"

namespace deltalf {

/// |t| for kinds and families. Type erases to the atom "⊤".
SimpleType erase_type(const Term& t);

/// Name of the constant c_{|σ|}, and of c_×.
std::string erased_pi_constant(const SimpleType& dom);
inline constexpr const char* kProductConstant = "c_×";

/// ⌈t⌉ for families and objects.
PureTerm erase_obj(const Term& t);

/// Every term reachable from m by one β-step anywhere (deduplicated).
std::vector<PureTerm> pure_beta_reducts(const PureTerm& m);

/// Fewest β-steps (up to max_depth) from ⌈d⌉ to ⌈d2⌉, or nullopt.
std::optional<int> simulation_steps(const Term& d, const Term& d2, int max_depth = 4,
                                    std::size_t node_cap = 20000);

/// ⌈d⌉ reaches ⌈d2⌉ in at least one β-step.
bool simulation_check(const Term& d, const Term& d2);

struct Fuzzed {
    Signature sig;
    Context ctx;
    Term term;
    Term classifier;
};

/// Constants shared by every fuzzed term: atoms o1..o3, a family p over o1,
/// and object constants including relevant ones.
Signature fuzz_signature();

/// A term of at most `size` nodes built by running the typing rules
/// forwards. nullopt when the retry budget runs out.
std::optional<Fuzzed> fuzz_well_typed(std::uint64_t seed, int size);

/// Greedily replaces subterms by smaller subterms while `still_failing`
/// holds.
Term shrink(const Term& t, const std::function<bool(const Term&)>& still_failing);

struct SuiteStats {
    long passed = 0;
    long failed = 0;
    std::vector<std::string> counterexamples;
};

struct MetacheckReport {
    long generated = 0;
    long accepted = 0;
    long skipped = 0;
    SuiteStats subject_reduction, local_confluence, normalization, unicity, simulation;
    // rule name -> histogram of target β-step counts (-1 = not reached)
    std::map<std::string, std::map<int, long>> simulation_steps;

    bool all_passed() const;
    std::string summary() const;
};

MetacheckReport run_metacheck(int seeds, int size, std::uint64_t first_seed = 1);

}  // namespace deltalf
