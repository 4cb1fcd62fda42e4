#include "deltalf/signature.hpp"

#include <stdexcept>

namespace deltalf {

const Entry* Signature::find(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? nullptr : &entries_[it->second];
}

void Signature::push(Entry e) {
    if (index_.count(e.name)) throw std::invalid_argument("duplicate signature entry " + e.name);
    if (e.body) ++definitions_;
    index_.emplace(e.name, entries_.size());
    entries_.push_back(std::move(e));
}

Term Context::type_of(int index) const {
    if (index < 0 || static_cast<std::size_t>(index) >= bindings_.size())
        throw std::out_of_range("unbound variable index " + std::to_string(index));
    return shift(bindings_[bindings_.size() - 1 - index].type, index + 1);
}

const std::string& Context::name_of(int index) const {
    return bindings_.at(bindings_.size() - 1 - index).name;
}

Context Context::extend(std::string name, Term type) const {
    Context c = *this;
    c.push(std::move(name), std::move(type));
    return c;
}

std::vector<std::string> Context::names() const {
    std::vector<std::string> out;
    out.reserve(bindings_.size());
    for (auto& b : bindings_) out.push_back(b.name);
    return out;
}

Term unfold(const Signature& sig, const Term& t) {
    if (!sig.has_definitions()) return t;
    switch (t->tag) {
    case Tag::FamConst:
    case Tag::ObjConst: {
        const Entry* e = sig.find(t->name);
        return e && e->unfolded ? *e->unfolded : t;
    }
    case Tag::Type:
    case Tag::Var: return t;
    default: break;
    }
    Term a = unfold(sig, t->a);
    Term b = arity(t->tag) == 2 ? unfold(sig, t->b) : nullptr;
    return rebuild(t, std::move(a), std::move(b));
}

namespace {

bool scoped(const Signature& sig, std::size_t ctx_size, const Term& t, int depth) {
    switch (t->tag) {
    case Tag::Type: return true;
    case Tag::FamConst: {
        const Entry* e = sig.find(t->name);
        return e && e->is_family;
    }
    case Tag::ObjConst: {
        const Entry* e = sig.find(t->name);
        return e && !e->is_family;
    }
    case Tag::Var: return t->index < depth + static_cast<int>(ctx_size);
    default: break;
    }
    if (!scoped(sig, ctx_size, t->a, depth)) return false;
    return arity(t->tag) == 1 || scoped(sig, ctx_size, t->b, is_binder(t->tag) ? depth + 1 : depth);
}

}  // namespace

bool well_scoped(const Signature& sig, const Context& ctx, const Term& t) {
    return scoped(sig, ctx.size(), t, 0);
}

}  // namespace deltalf
