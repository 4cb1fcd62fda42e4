#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "deltalf/essence.hpp"
#include "deltalf/reduction.hpp"
#include "deltalf/signature.hpp"
#include "deltalf/term.hpp"

namespace deltalf {

struct Settings {
    std::int64_t fuel = kDefaultFuel;
    std::int64_t essence_fuel = kDefaultEssenceFuel;
};

/// Failure of one premise of one typing rule. `rule` is the rule name
/// without parentheses, e.g. "InterI" or "Conv".
struct KernelError : std::runtime_error {
    KernelError(std::string rule, std::string message, Path path = {}, std::string expected = {},
                std::string actual = {}, std::optional<EssenceVerdict> verdict = std::nullopt);

    std::string rule;
    std::string message;
    Path path;
    std::string expected;
    std::string actual;
    std::optional<EssenceVerdict> verdict;
};

struct TypedResult {
    Term classifier;
    Term normal;
};

void check_signature(const Signature& sig, const Settings& s = {});
void check_context(const Signature& sig, const Context& ctx, const Settings& s = {});
void check_kind(const Signature& sig, const Context& ctx, const Term& k, const Settings& s = {});
Term infer_kind(const Signature& sig, const Context& ctx, const Term& fam, const Settings& s = {});
Term infer_type(const Signature& sig, const Context& ctx, const Term& obj, const Settings& s = {});
void check_type(const Signature& sig, const Context& ctx, const Term& obj, const Term& ty, const Settings& s = {});

/// Classifier of a kind-free term: the kind of a family or the type of an
/// object, paired with its normal form.
TypedResult judge(const Signature& sig, const Context& ctx, const Term& t, const Settings& s = {});

/// Validate `e` against `sig` and append it. Object definitions without a
/// classifier get the inferred one.
void add_checked(Signature& sig, Entry e, const Settings& s = {});

}  // namespace deltalf
