#pragma once

#include <set>
#include <string>
#include <vector>

#include "deltalf/essence.hpp"
#include "deltalf/term.hpp"

namespace deltalf {

/// Concrete syntax for `t`. `ctx` names the free variables, outermost
/// first. Binder names avoid every constant occurring in `t` and every name
/// in `reserved`, so the output re-parses to the same tree.
std::string print(const Term& t, const std::vector<std::string>& ctx = {},
                  const std::set<std::string>& reserved = {});

std::string print_pure(const PureTerm& m, const std::vector<std::string>& ctx = {});

std::string print_path(const Path& p);

}  // namespace deltalf
