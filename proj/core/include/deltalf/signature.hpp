#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "deltalf/term.hpp"

namespace deltalf {

/// A family constant (classifier is a kind) or an object constant
/// (classifier is a family). Definitions are transparent; `unfolded` is the
/// body with every defined constant already expanded.
struct Entry {
    std::string name;
    Term classifier;
    bool is_family = false;
    std::optional<Term> body;
    std::optional<Term> unfolded;
};

class Signature {
public:
    const Entry* find(const std::string& name) const;
    bool contains(const std::string& name) const { return find(name) != nullptr; }
    /// Appends without validation; see typing.hpp for checked extension.
    void push(Entry e);
    const std::vector<Entry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool has_definitions() const { return definitions_ > 0; }

private:
    std::vector<Entry> entries_;
    std::unordered_map<std::string, std::size_t> index_;
    std::size_t definitions_ = 0;
};

struct Binding {
    std::string name;
    Term type;
};

/// Innermost binding last; Var(i) refers to bindings[size-1-i].
class Context {
public:
    Context() = default;
    explicit Context(std::vector<Binding> b) : bindings_(std::move(b)) {}

    std::size_t size() const { return bindings_.size(); }
    bool empty() const { return bindings_.empty(); }
    /// Type of Var(i), shifted into the full context.
    Term type_of(int index) const;
    const std::string& name_of(int index) const;
    Context extend(std::string name, Term type) const;
    void push(std::string name, Term type) { bindings_.push_back({std::move(name), std::move(type)}); }
    void pop() { bindings_.pop_back(); }
    const std::vector<Binding>& bindings() const { return bindings_; }
    /// Display names, outermost first.
    std::vector<std::string> names() const;

private:
    std::vector<Binding> bindings_;
};

/// Expand every defined constant in `t`.
Term unfold(const Signature& sig, const Term& t);

bool well_scoped(const Signature& sig, const Context& ctx, const Term& t);

}  // namespace deltalf
